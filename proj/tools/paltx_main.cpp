// paltx: palette-based color transfer between two images.
//
//   paltx transfer --source in.png --reference ref.jpg --output out.png [options]
//   paltx palette  --input in.png --output palette.json [--labels labels.png]
//   paltx metrics  --source in.png --result out.png [--metrics-out m.json]
//
// Exit codes: 0 success, 2 bad arguments, 3 I/O error, 4 degenerate input.

#include "paltx/error.hpp"
#include "paltx/image_io.hpp"
#include "paltx/json_io.hpp"
#include "paltx/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitBadArgs = 2;
constexpr int kExitIo = 3;
constexpr int kExitDegenerate = 4;

struct PaletteOptions {
    std::size_t bins = 100;
    std::size_t radius = 3;
    std::uint64_t min_count = 30;
    std::size_t peaks = 32;
};

void add_palette_options(CLI::App* cmd, PaletteOptions& o) {
    cmd->add_option("--bins", o.bins, "Histogram bins per channel")->capture_default_str()->check(CLI::Range(2, 65535));
    cmd->add_option("--radius", o.radius, "Peak search radius in bins")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--min-count", o.min_count, "Minimum pixel count of a histogram peak")->capture_default_str();
    cmd->add_option("--peaks", o.peaks, "Upper bound on palette size")->capture_default_str()->check(CLI::Range(1, 65535));
}

std::vector<double> load_l_plane(const std::string& path, paltx::Dims expected) {
    const paltx::GrayImage gray = paltx::load_gray_png(path);
    if (gray.dims != expected) throw paltx::DimensionMismatch("enhanced L image does not match the source size");
    const double full = gray.bit_depth == 16 ? 65535.0 : 255.0;
    std::vector<double> l(gray.values.size());
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = gray.values[i] / full * paltx::kLMax;
    return l;
}

paltx::GrayImage label_image(const paltx::Palette& palette) {
    paltx::GrayImage out;
    out.dims = palette.dims;
    out.bit_depth = 16;
    out.values.assign(palette.label_map.begin(), palette.label_map.end());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Palette-based color transfer"};
    app.require_subcommand(1);

    PaletteOptions popts;
    std::string source, reference, output, source_mask, reference_mask, enhanced_l, dump_mapping, metrics_out;
    double alpha = paltx::kDefaultAlpha;
    std::size_t neighbors = paltx::kDefaultNeighbors;
    bool enhance = false;

    auto* transfer = app.add_subcommand("transfer", "Recolor --source after --reference");
    transfer->add_option("--source", source, "Source image (PNG or JPEG)")->required();
    transfer->add_option("--reference", reference, "Reference image (PNG or JPEG)")->required();
    transfer->add_option("--output", output, "Output PNG")->required();
    transfer->add_option("--source-mask", source_mask, "8-bit PNG foreground mask for the source");
    transfer->add_option("--reference-mask", reference_mask, "8-bit PNG foreground mask for the reference");
    transfer->add_option("--alpha", alpha, "Weight of the mapped L channel")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    transfer->add_option("--neighbors", neighbors, "Neighbors used to interpolate displaced entries")
        ->capture_default_str()->check(CLI::PositiveNumber);
    transfer->add_flag("--enhance", enhance, "Apply the built-in global lighting enhancement");
    transfer->add_option("--enhanced-l", enhanced_l, "Gray PNG holding an externally enhanced L channel");
    transfer->add_option("--dump-mapping", dump_mapping, "Write the palette mapping as JSON");
    transfer->add_option("--metrics-out", metrics_out, "Write the metrics report as JSON");
    add_palette_options(transfer, popts);

    std::string input, palette_out, labels_out;
    auto* palette = app.add_subcommand("palette", "Extract the palette of one image");
    palette->add_option("--input", input, "Image (PNG or JPEG)")->required();
    palette->add_option("--output", palette_out, "Palette JSON (stdout if omitted)");
    palette->add_option("--labels", labels_out, "16-bit gray PNG of per-pixel entry indices");
    add_palette_options(palette, popts);

    std::string result;
    auto* metrics = app.add_subcommand("metrics", "Score a source/result pair");
    metrics->add_option("--source", source, "Source image")->required();
    metrics->add_option("--result", result, "Transfer result")->required();
    metrics->add_option("--metrics-out", metrics_out, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadArgs;
    }

    try {
        if (*transfer) {
            const paltx::RgbImage src = paltx::load_image(source);
            const paltx::RgbImage ref = paltx::load_image(reference);
            std::optional<paltx::SegmentationMask> src_mask, ref_mask;
            if (!source_mask.empty()) src_mask = paltx::load_mask(source_mask, src.dims());
            if (!reference_mask.empty()) ref_mask = paltx::load_mask(reference_mask, ref.dims());

            paltx::TransferConfig cfg;
            cfg.bins = popts.bins;
            cfg.radius = popts.radius;
            cfg.min_count = popts.min_count;
            cfg.max_entries = popts.peaks;
            cfg.alpha = alpha;
            cfg.neighbors = neighbors;
            cfg.enhance = enhance;
            if (!enhanced_l.empty()) cfg.enhancer = paltx::precomputed_enhancer(load_l_plane(enhanced_l, src.dims()), src.dims());

            const paltx::PipelineResult res = paltx::run_transfer(src, ref, src_mask, ref_mask, cfg);
            paltx::save_png(output, res.image);
            if (!dump_mapping.empty()) paltx::write_text(dump_mapping, paltx::mapping_to_json(res.mapping, res.source_palette));
            if (!metrics_out.empty()) paltx::write_text(metrics_out, paltx::metrics_to_json(res.report));
        } else if (*palette) {
            const paltx::LabImage lab = paltx::rgb_to_lab(paltx::load_image(input));
            const paltx::Palette pal = paltx::build_palette(lab, {popts.bins, popts.radius, popts.min_count, popts.peaks});
            const std::string json = paltx::palette_to_json(pal);
            if (palette_out.empty()) std::cout << json << '\n'; else paltx::write_text(palette_out, json);
            if (!labels_out.empty()) paltx::save_gray_png(labels_out, label_image(pal));
        } else if (*metrics) {
            const paltx::RgbImage src = paltx::load_image(source);
            const paltx::RgbImage res = paltx::load_image(result);
            const std::string json = paltx::metrics_to_json(paltx::evaluate(src, res));
            if (metrics_out.empty()) std::cout << json << '\n'; else paltx::write_text(metrics_out, json);
        }
    } catch (const paltx::EmptyPeakSpace& e) {
        std::cerr << "paltx: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const paltx::IoError& e) {
        std::cerr << "paltx: " << e.what() << '\n';
        return kExitIo;
    } catch (const paltx::DimensionMismatch& e) {
        std::cerr << "paltx: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const std::invalid_argument& e) {
        std::cerr << "paltx: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "paltx: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
