#include "paltx/segmentation.hpp"

#include "paltx/error.hpp"
#include "paltx/image_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paltx {

SegmentationMask::SegmentationMask(Dims dims, std::vector<Region> labels)
    : dims_(dims), labels_(std::move(labels)) {
    if (labels_.size() != dims_.area()) throw std::invalid_argument("SegmentationMask: label count does not match dimensions");
}

SegmentationMask SegmentationMask::from_gray(Dims dims, std::span<const std::uint8_t> gray) {
    if (gray.size() != dims.area()) throw std::invalid_argument("SegmentationMask: gray plane does not match dimensions");
    std::vector<Region> labels(gray.size());
    std::transform(gray.begin(), gray.end(), labels.begin(),
                   [](std::uint8_t v) { return v >= kMaskThreshold ? Region::Foreground : Region::Background; });
    return SegmentationMask(dims, std::move(labels));
}

std::size_t SegmentationMask::foreground_count() const noexcept {
    return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), Region::Foreground));
}

SegmentationMask load_mask(const std::filesystem::path& path, Dims expected) {
    GrayImage gray;
    try {
        gray = load_gray_png(path);
    } catch (const IoError& e) {
        throw UnreadableMask(e.what());
    }
    if (gray.bit_depth != 8) throw UnreadableMask("mask must be an 8-bit grayscale PNG: " + path.string());
    if (gray.dims != expected) {
        std::ostringstream msg;
        msg << "mask " << path.string() << " is " << gray.dims.width << "x" << gray.dims.height << ", image is "
            << expected.width << "x" << expected.height;
        throw DimensionMismatch(msg.str());
    }
    std::vector<std::uint8_t> plane(gray.values.begin(), gray.values.end());
    return SegmentationMask::from_gray(gray.dims, plane);
}

SegmentationMask default_mask(Dims dims) {
    return SegmentationMask(dims, std::vector<Region>(dims.area(), Region::Foreground));
}

PaletteSplit split_palette(const Palette& palette, const SegmentationMask& mask) {
    if (palette.label_map.size() != mask.size() || palette.dims != mask.dims()) {
        throw DimensionMismatch("split_palette: label map and mask differ in size");
    }
    std::vector<std::size_t> fg(palette.size(), 0);
    std::vector<std::size_t> bg(palette.size(), 0);
    for (std::size_t i = 0; i < mask.size(); ++i) {
        const std::uint32_t label = palette.label_map[i];
        if (mask[i] == Region::Foreground) ++fg[label]; else ++bg[label];
    }

    PaletteSplit split;
    split.foreground.dims = split.background.dims = palette.dims;
    for (std::size_t e = 0; e < palette.size(); ++e) {
        const bool foreground = fg[e] >= bg[e];
        Palette& target = foreground ? split.foreground : split.background;
        const std::size_t count = foreground ? fg[e] : bg[e];
        if (count == 0) continue;
        PaletteEntry entry = palette.entries[e];
        entry.pixel_count = count;
        entry.region = foreground ? Region::Foreground : Region::Background;
        target.entries.push_back(entry);
        target.origin.push_back(e);
    }
    return split;
}

}  // namespace paltx
