#pragma once

#include "paltx/colorspace.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace paltx {

/// Decodes an 8-bit PNG or a baseline JPEG (chosen by file signature) to sRGB.
/// Gray and palette PNGs are expanded, alpha is dropped. Throws IoError.
RgbImage load_image(const std::filesystem::path& path);

void save_png(const std::filesystem::path& path, const RgbImage& img);

struct GrayImage {
    Dims dims;
    int bit_depth = 8;
    std::vector<std::uint16_t> values;
};

/// Single-channel PNG, 8 or 16 bit. Color PNGs are rejected.
GrayImage load_gray_png(const std::filesystem::path& path);

void save_gray_png(const std::filesystem::path& path, const GrayImage& img);

}  // namespace paltx
