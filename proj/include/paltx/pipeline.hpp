#pragma once

#include "paltx/colorspace.hpp"
#include "paltx/lighting.hpp"
#include "paltx/mapping.hpp"
#include "paltx/metrics.hpp"
#include "paltx/palette.hpp"
#include "paltx/segmentation.hpp"

#include <optional>

namespace paltx {

struct TransferConfig {
    std::size_t bins = 100;
    std::size_t radius = 3;
    std::uint64_t min_count = 30;
    std::size_t max_entries = 32;
    double alpha = kDefaultAlpha;
    std::size_t neighbors = kDefaultNeighbors;
    bool enhance = false;
    /// Overrides the built-in enhancer when set; implies enhancement.
    LightingEnhancer enhancer;

    PaletteParams palette_params() const;
    void validate() const;  // throws std::invalid_argument
};

struct PipelineResult {
    RgbImage image;
    MetricsReport report;
    Palette source_palette;
    Palette reference_palette;
    PeakMapping mapping;
};

/// sRGB in, sRGB out. Missing masks default to all-foreground; metrics are
/// measured between the source and the encoded result.
PipelineResult run_transfer(const RgbImage& source, const RgbImage& reference,
                            const std::optional<SegmentationMask>& source_mask,
                            const std::optional<SegmentationMask>& reference_mask,
                            const TransferConfig& cfg = {});

}  // namespace paltx
