#pragma once

#include "paltx/colorspace.hpp"
#include "paltx/palette.hpp"
#include "paltx/segmentation.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace paltx {

enum class Provenance : std::uint8_t { Direct, ConflictWinner, Interpolated };

std::string_view to_string(Provenance p) noexcept;

struct MappedEntry {
    Lab target;
    Provenance provenance = Provenance::Direct;
    /// Claimed reference entry for direct and conflict-winner entries.
    std::optional<std::size_t> reference;
};

/// Target color for every source palette entry.
struct PeakMapping {
    std::vector<MappedEntry> entries;

    std::size_t size() const noexcept { return entries.size(); }
};

struct ReferenceMatch {
    std::size_t index = 0;
    Lab color;
    double distance = 0.0;
};

/// Nearest reference entry to `color`, ties to the lowest index.
/// Precondition: reference is non-empty.
ReferenceMatch nearest_target(const Lab& color, const Palette& reference);

struct ConflictResolution {
    /// Per source entry: the reference index it keeps, or nullopt if pending.
    std::vector<std::optional<std::size_t>> winners;
    /// Per source entry: true if it had to beat other claimants.
    std::vector<bool> contested;
    /// Source entries that lost their claim, ascending.
    std::vector<std::size_t> pending;
};

/// Removes many-to-one claims: for each reference entry claimed by several
/// source entries, the claimant with most pixels keeps it (ties to the lowest
/// source index) and the others become pending.
ConflictResolution resolve_conflicts(std::span<const std::size_t> raw, const Palette& source);

struct Interpolation {
    Lab target;
    /// (winner source index, weight) pairs; weights sum to 1.
    std::vector<std::pair<std::size_t, double>> weights;
};

/// Targets for pending entries as an inverse-distance blend over the k
/// nearest winners (k truncated to the number of winners). A winner at zero
/// distance is copied outright. With no winners, pending entries map to
/// their own color.
///
/// `targets` is indexed by source entry and only read at winner positions.
std::vector<Interpolation> interpolate_pending(std::span<const std::size_t> pending,
                                               const ConflictResolution& resolution,
                                               std::span<const Lab> targets,
                                               const Palette& source, std::size_t k);

inline constexpr std::size_t kDefaultNeighbors = 3;

/// Full mapping from `source` entries into `reference`. An empty reference
/// yields the identity mapping.
PeakMapping build_region_mapping(const Palette& source, const Palette& reference,
                                 std::size_t k = kDefaultNeighbors);

/// Source image with mapped a, b and the untouched L, plus the mapped L
/// values kept aside for the lighting step.
struct MappedImage {
    LabImage image;
    std::vector<double> mapped_l;
};

/// Unclamped per-pixel transfer: target + (pixel - entry).
inline Lab transfer_pixel(const Lab& pixel, const Lab& entry, const Lab& target) noexcept {
    return {pixel.l + (target.l - entry.l), pixel.a + (target.a - entry.a), pixel.b + (target.b - entry.b)};
}

MappedImage apply_mapping(const LabImage& img, std::span<const std::uint32_t> label_map,
                          const PeakMapping& mapping, const Palette& source);

struct TransferParams {
    PaletteParams palette;
    std::size_t neighbors = kDefaultNeighbors;
};

struct TransferOutcome {
    MappedImage mapped;
    Palette source_palette;
    Palette reference_palette;
    PeakMapping mapping;
};

/// Palette-based transfer with split foreground/background correspondence.
/// A region whose palette is empty on either image maps its source entries
/// against the whole reference palette.
TransferOutcome transfer(const LabImage& source, const LabImage& reference,
                         const SegmentationMask& source_mask,
                         const SegmentationMask& reference_mask, const TransferParams& params = {});

}  // namespace paltx
