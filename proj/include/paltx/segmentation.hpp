#pragma once

#include "paltx/colorspace.hpp"
#include "paltx/palette.hpp"

#include <filesystem>
#include <vector>

namespace paltx {

/// Binary foreground/background map aligned with an image.
class SegmentationMask {
public:
    SegmentationMask() = default;
    SegmentationMask(Dims dims, std::vector<Region> labels);

    /// Pixels with value >= 128 are foreground.
    static SegmentationMask from_gray(Dims dims, std::span<const std::uint8_t> gray);

    Dims dims() const noexcept { return dims_; }
    std::size_t size() const noexcept { return labels_.size(); }
    Region operator[](std::size_t i) const { return labels_[i]; }
    std::span<const Region> labels() const noexcept { return labels_; }
    std::size_t foreground_count() const noexcept;

private:
    Dims dims_;
    std::vector<Region> labels_;
};

inline constexpr std::uint8_t kMaskThreshold = 128;

/// Reads an 8-bit grayscale PNG mask. Throws UnreadableMask if the file cannot
/// be decoded and DimensionMismatch if its size differs from `expected`.
SegmentationMask load_mask(const std::filesystem::path& path, Dims expected);

SegmentationMask default_mask(Dims dims);

struct PaletteSplit {
    Palette foreground;
    Palette background;
};

/// Assigns each entry to the region holding the majority of its pixels
/// (ties go to the foreground). Region palettes record per-region pixel
/// counts and the index of each entry in the input palette.
PaletteSplit split_palette(const Palette& palette, const SegmentationMask& mask);

}  // namespace paltx
