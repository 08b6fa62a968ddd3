#pragma once

#include "paltx/colorspace.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace paltx {

enum class Channel : std::uint8_t { L = 0, A = 1, B = 2 };

/// Value range covered by a channel's histogram.
struct ChannelRange {
    double min;
    double max;
    double span() const noexcept { return max - min; }
};

ChannelRange channel_range(Channel c) noexcept;
double channel_value(const Lab& c, Channel ch) noexcept;

/// Bin index of a value: floor((v - min) * bins / span), clamped to [0, bins-1].
std::size_t bin_of(double value, ChannelRange range, std::size_t bins) noexcept;

struct ChannelHistogram {
    Channel channel = Channel::L;
    std::vector<std::uint64_t> counts;
    std::vector<double> bin_centers;

    std::size_t bin_count() const noexcept { return counts.size(); }
    std::uint64_t total() const noexcept;
};

ChannelHistogram build_histogram(const LabImage& img, Channel channel, std::size_t bins);

/// One histogram per channel, in L, a, b order. Throws std::invalid_argument for bins < 2.
std::array<ChannelHistogram, 3> build_histograms(const LabImage& img, std::size_t bins);

struct ChannelPeaks {
    Channel channel = Channel::L;
    std::size_t bin_count = 0;
    std::vector<std::size_t> indices;
    std::vector<double> values;
};

using PeakSet = std::array<ChannelPeaks, 3>;

/// Local maxima of a histogram.
///
/// Bin i is a peak when counts[i] > min_count and no bin within `radius`
/// (window truncated at the array ends) holds a larger count. Within one
/// window, a run of equal maxima keeps only its lowest index: a bin is
/// rejected if an equal count appears to its left inside the window.
ChannelPeaks find_peaks(const ChannelHistogram& h, std::size_t radius, std::uint64_t min_count);

enum class Region : std::uint8_t { Foreground = 0, Background = 1 };

struct PaletteEntry {
    Lab color;
    std::size_t pixel_count = 0;
    Region region = Region::Foreground;
};

/// Palette plus a per-pixel label map. For the whole-image palette the label
/// map has one entry per pixel; region subsets produced by split_palette carry
/// an empty label map and list the originating entry index in `origin`.
struct Palette {
    std::vector<PaletteEntry> entries;
    std::vector<std::uint32_t> label_map;
    Dims dims;
    std::vector<std::size_t> origin;

    std::size_t size() const noexcept { return entries.size(); }
    bool empty() const noexcept { return entries.empty(); }
    std::vector<Lab> colors() const;
};

struct PaletteParams {
    std::size_t bins = 100;        // z
    std::size_t radius = 3;        // r
    std::uint64_t min_count = 30;  // b_min, absolute pixel count
    std::size_t max_entries = 32;  // t

    void validate() const;  // throws std::invalid_argument
};

/// Replaces every empty channel of `peaks` by the single highest bin of that
/// channel (lowest index on ties). Throws EmptyPeakSpace when the image has no pixels.
PeakSet with_fallback_peaks(PeakSet peaks, const LabImage& img);

/// Merges per-channel peaks into at most `max_entries` palette colors.
///
/// Candidates are the Cartesian product L x a x b of peak bin centers
/// (generation index (iL * nA + iA) * nB + iB). Pixels are counted against
/// their nearest candidate, the `max_entries` most populated candidates
/// survive (ties to the lower index; empty candidates never survive),
/// pixels are reassigned to the nearest survivor, and every entry's color
/// becomes the mean of its pixels. Entries left empty are dropped.
/// Empty channels fall back as in with_fallback_peaks.
Palette merge_peaks(const PeakSet& peaks, const LabImage& img, std::size_t max_entries);

/// argmin over entries of Lab distance per pixel; ties to the lowest entry index.
std::vector<std::uint32_t> classify_pixels(const LabImage& img, const Palette& palette);
std::vector<std::uint32_t> classify_pixels(const LabImage& img, std::span<const Lab> centers);

Palette build_palette(const LabImage& img, const PaletteParams& params = {});

}  // namespace paltx
