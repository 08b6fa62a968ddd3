#include "paltx/pipeline.hpp"

#include "paltx/error.hpp"

#include <limits>
#include <stdexcept>

namespace paltx {

PaletteParams TransferConfig::palette_params() const {
    return {bins, radius, min_count, max_entries};
}

void TransferConfig::validate() const {
    palette_params().validate();
    if (max_entries > std::numeric_limits<std::uint16_t>::max()) throw std::invalid_argument("max palette size must fit in 16 bits");
    if (neighbors < 1) throw std::invalid_argument("neighbor count must be >= 1");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
}

PipelineResult run_transfer(const RgbImage& source, const RgbImage& reference,
                            const std::optional<SegmentationMask>& source_mask,
                            const std::optional<SegmentationMask>& reference_mask, const TransferConfig& cfg) {
    cfg.validate();
    if (source.empty() || reference.empty()) throw EmptyPeakSpace("input image has no pixels");

    const LabImage source_lab = rgb_to_lab(source);
    const LabImage reference_lab = rgb_to_lab(reference);
    const SegmentationMask src_mask = source_mask ? *source_mask : default_mask(source.dims());
    const SegmentationMask ref_mask = reference_mask ? *reference_mask : default_mask(reference.dims());

    TransferOutcome outcome = transfer(source_lab, reference_lab, src_mask, ref_mask,
                                       TransferParams{cfg.palette_params(), cfg.neighbors});

    LightingParams lighting{cfg.alpha, cfg.enhancer};
    if (!lighting.enhancer && cfg.enhance) lighting.enhancer = builtin_enhancer();
    optimize_lighting(outcome.mapped.image, outcome.mapped.mapped_l, lighting);

    PipelineResult result;
    result.image = lab_to_rgb(outcome.mapped.image);
    result.report = evaluate(source, source_lab, result.image, rgb_to_lab(result.image));
    result.source_palette = std::move(outcome.source_palette);
    result.reference_palette = std::move(outcome.reference_palette);
    result.mapping = std::move(outcome.mapping);
    return result;
}

}  // namespace paltx
