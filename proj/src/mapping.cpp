#include "paltx/mapping.hpp"

#include "paltx/error.hpp"
#include "paltx/kdtree.hpp"
#include "paltx/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace paltx {

std::string_view to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::Direct: return "direct";
        case Provenance::ConflictWinner: return "conflict_winner";
        default: return "interpolated";
    }
}

ReferenceMatch nearest_target(const Lab& color, const Palette& reference) {
    if (reference.empty()) throw std::invalid_argument("nearest_target: empty reference palette");
    const std::vector<Lab> colors = reference.colors();
    const NearestHit hit = linear_nearest(colors, color);
    return {hit.index, colors[hit.index], std::sqrt(hit.squared_distance)};
}

ConflictResolution resolve_conflicts(std::span<const std::size_t> raw, const Palette& source) {
    if (raw.size() != source.size()) throw std::invalid_argument("resolve_conflicts: one assignment per source entry required");
    ConflictResolution res;
    res.winners.assign(raw.size(), std::nullopt);
    res.contested.assign(raw.size(), false);

    // Claimants of each reference entry, visited in ascending source order.
    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return raw[x] < raw[y]; });

    for (std::size_t g = 0; g < order.size();) {
        std::size_t end = g;
        while (end < order.size() && raw[order[end]] == raw[order[g]]) ++end;
        std::size_t best = order[g];
        for (std::size_t m = g + 1; m < end; ++m) {
            if (source.entries[order[m]].pixel_count > source.entries[best].pixel_count) best = order[m];
        }
        res.winners[best] = raw[best];
        res.contested[best] = end - g > 1;
        for (std::size_t m = g; m < end; ++m) {
            if (order[m] != best) res.pending.push_back(order[m]);
        }
        g = end;
    }
    std::sort(res.pending.begin(), res.pending.end());
    return res;
}

std::vector<Interpolation> interpolate_pending(std::span<const std::size_t> pending,
                                               const ConflictResolution& resolution,
                                               std::span<const Lab> targets,
                                               const Palette& source, std::size_t k) {
    if (k < 1) throw std::invalid_argument("interpolate_pending: neighbor count must be >= 1");
    std::vector<std::size_t> winners;
    for (std::size_t i = 0; i < resolution.winners.size(); ++i) {
        if (resolution.winners[i]) winners.push_back(i);
    }

    std::vector<Interpolation> out;
    out.reserve(pending.size());
    for (std::size_t q : pending) {
        const Lab& color = source.entries[q].color;
        if (winners.empty()) {
            out.push_back({color, {}});
            continue;
        }
        std::vector<std::pair<double, std::size_t>> by_distance;
        by_distance.reserve(winners.size());
        for (std::size_t w : winners) {
            by_distance.emplace_back(std::sqrt(squared_distance(source.entries[w].color, color)), w);
        }
        const std::size_t n = std::min(k, by_distance.size());
        std::partial_sort(by_distance.begin(), by_distance.begin() + static_cast<std::ptrdiff_t>(n), by_distance.end());

        Interpolation interp;
        if (by_distance.front().first == 0.0) {
            interp.target = targets[by_distance.front().second];
            interp.weights = {{by_distance.front().second, 1.0}};
            out.push_back(std::move(interp));
            continue;
        }
        double norm = 0.0;
        for (std::size_t m = 0; m < n; ++m) norm += 1.0 / by_distance[m].first;
        Lab acc{0.0, 0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m) {
            const auto [dist, w] = by_distance[m];
            const double weight = (1.0 / dist) / norm;
            acc.l += weight * targets[w].l;
            acc.a += weight * targets[w].a;
            acc.b += weight * targets[w].b;
            interp.weights.emplace_back(w, weight);
        }
        interp.target = acc;
        out.push_back(std::move(interp));
    }
    return out;
}

PeakMapping build_region_mapping(const Palette& source, const Palette& reference, std::size_t k) {
    PeakMapping mapping;
    mapping.entries.resize(source.size());
    if (reference.empty()) {
        for (std::size_t i = 0; i < source.size(); ++i) mapping.entries[i] = {source.entries[i].color, Provenance::Direct, std::nullopt};
        return mapping;
    }

    std::vector<std::size_t> raw(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) raw[i] = nearest_target(source.entries[i].color, reference).index;
    const ConflictResolution res = resolve_conflicts(raw, source);

    std::vector<Lab> targets(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (!res.winners[i]) continue;
        targets[i] = reference.entries[*res.winners[i]].color;
        mapping.entries[i] = {targets[i], res.contested[i] ? Provenance::ConflictWinner : Provenance::Direct, res.winners[i]};
    }
    const auto interps = interpolate_pending(res.pending, res, targets, source, k);
    for (std::size_t p = 0; p < res.pending.size(); ++p) {
        mapping.entries[res.pending[p]] = {interps[p].target, Provenance::Interpolated, std::nullopt};
    }
    return mapping;
}

MappedImage apply_mapping(const LabImage& img, std::span<const std::uint32_t> label_map,
                          const PeakMapping& mapping, const Palette& source) {
    if (label_map.size() != img.size()) throw DimensionMismatch("apply_mapping: label map does not match image");
    if (mapping.size() != source.size()) throw std::invalid_argument("apply_mapping: mapping must cover every palette entry");

    std::vector<Lab> out(img.size());
    std::vector<double> mapped_l(img.size());
    const auto pixels = img.pixels();
    parallel_for(out.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::uint32_t e = label_map[i];
            const Lab f = transfer_pixel(pixels[i], source.entries[e].color, mapping.entries[e].target);
            out[i] = {pixels[i].l, f.a, f.b};
            mapped_l[i] = f.l;
        }
    });
    return {LabImage(img.width(), img.height(), std::move(out)), std::move(mapped_l)};
}

TransferOutcome transfer(const LabImage& source, const LabImage& reference,
                         const SegmentationMask& source_mask,
                         const SegmentationMask& reference_mask, const TransferParams& params) {
    if (source_mask.dims() != source.dims()) throw DimensionMismatch("source mask does not match source image");
    if (reference_mask.dims() != reference.dims()) throw DimensionMismatch("reference mask does not match reference image");

    TransferOutcome result;
    result.source_palette = build_palette(source, params.palette);
    result.reference_palette = build_palette(reference, params.palette);
    const PaletteSplit src = split_palette(result.source_palette, source_mask);
    const PaletteSplit ref = split_palette(result.reference_palette, reference_mask);

    result.mapping.entries.resize(result.source_palette.size());
    const auto map_region = [&](const Palette& src_region, const Palette& ref_region) {
        if (src_region.empty()) return;
        const Palette& against = ref_region.empty() ? result.reference_palette : ref_region;
        PeakMapping region = build_region_mapping(src_region, against, params.neighbors);
        for (std::size_t i = 0; i < region.size(); ++i) {
            MappedEntry& entry = region.entries[i];
            // Report reference indices in whole-palette terms.
            if (entry.reference && !ref_region.empty()) entry.reference = ref_region.origin[*entry.reference];
            result.mapping.entries[src_region.origin[i]] = entry;
        }
    };
    map_region(src.foreground, ref.foreground);
    map_region(src.background, ref.background);

    result.mapped = apply_mapping(source, result.source_palette.label_map, result.mapping, result.source_palette);
    return result;
}

}  // namespace paltx
