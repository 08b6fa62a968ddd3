#include "paltx/palette.hpp"

#include "paltx/error.hpp"
#include "paltx/kdtree.hpp"
#include "paltx/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace paltx {

namespace {

// Up to this many centers a linear scan beats building a tree.
constexpr std::size_t kLinearScanLimit = 16;

constexpr std::array<Channel, 3> kChannels = {Channel::L, Channel::A, Channel::B};

std::size_t highest_bin(const ChannelHistogram& h) {
    // max_element returns the first maximum, i.e. the lowest index on ties.
    return static_cast<std::size_t>(std::max_element(h.counts.begin(), h.counts.end()) - h.counts.begin());
}

}  // namespace

ChannelRange channel_range(Channel c) noexcept {
    return c == Channel::L ? ChannelRange{kLMin, kLMax} : ChannelRange{kAbMin, kAbMax};
}

double channel_value(const Lab& c, Channel ch) noexcept {
    switch (ch) {
        case Channel::L: return c.l;
        case Channel::A: return c.a;
        default: return c.b;
    }
}

std::size_t bin_of(double value, ChannelRange range, std::size_t bins) noexcept {
    const double pos = std::floor((value - range.min) * static_cast<double>(bins) / range.span());
    if (!(pos > 0.0)) return 0;
    return std::min(static_cast<std::size_t>(pos), bins - 1);
}

std::uint64_t ChannelHistogram::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

ChannelHistogram build_histogram(const LabImage& img, Channel channel, std::size_t bins) {
    if (bins < 2) throw std::invalid_argument("histogram needs at least 2 bins");
    const ChannelRange range = channel_range(channel);
    ChannelHistogram h;
    h.channel = channel;
    h.counts.assign(bins, 0);
    h.bin_centers.resize(bins);
    const double width = range.span() / static_cast<double>(bins);
    for (std::size_t i = 0; i < bins; ++i) h.bin_centers[i] = range.min + (static_cast<double>(i) + 0.5) * width;
    for (const Lab& p : img.pixels()) ++h.counts[bin_of(channel_value(p, channel), range, bins)];
    return h;
}

std::array<ChannelHistogram, 3> build_histograms(const LabImage& img, std::size_t bins) {
    return {build_histogram(img, Channel::L, bins), build_histogram(img, Channel::A, bins),
            build_histogram(img, Channel::B, bins)};
}

ChannelPeaks find_peaks(const ChannelHistogram& h, std::size_t radius, std::uint64_t min_count) {
    if (radius < 1) throw std::invalid_argument("peak search radius must be >= 1");
    ChannelPeaks peaks;
    peaks.channel = h.channel;
    peaks.bin_count = h.bin_count();
    const std::size_t n = h.counts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t c = h.counts[i];
        if (c <= min_count) continue;
        const std::size_t lo = i >= radius ? i - radius : 0;
        const std::size_t hi = std::min(n - 1, i + radius);
        bool keep = true;
        for (std::size_t j = lo; j <= hi && keep; ++j) {
            if (h.counts[j] > c || (j < i && h.counts[j] == c)) keep = false;
        }
        if (keep) {
            peaks.indices.push_back(i);
            peaks.values.push_back(h.bin_centers[i]);
        }
    }
    return peaks;
}

void PaletteParams::validate() const {
    if (bins < 2) throw std::invalid_argument("bins must be >= 2");
    if (radius < 1) throw std::invalid_argument("radius must be >= 1");
    if (max_entries < 1) throw std::invalid_argument("max palette size must be >= 1");
}

std::vector<Lab> Palette::colors() const {
    std::vector<Lab> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.color);
    return out;
}

PeakSet with_fallback_peaks(PeakSet peaks, const LabImage& img) {
    for (std::size_t c = 0; c < 3; ++c) {
        ChannelPeaks& cp = peaks[c];
        cp.channel = kChannels[c];
        if (!cp.indices.empty()) continue;
        if (img.empty()) throw EmptyPeakSpace("no peaks: image has no pixels");
        const std::size_t bins = cp.bin_count >= 2 ? cp.bin_count : 100;
        const ChannelHistogram h = build_histogram(img, kChannels[c], bins);
        const std::size_t top = highest_bin(h);
        cp.bin_count = bins;
        cp.indices = {top};
        cp.values = {h.bin_centers[top]};
    }
    return peaks;
}

std::vector<std::uint32_t> classify_pixels(const LabImage& img, std::span<const Lab> centers) {
    if (centers.empty()) throw std::invalid_argument("classify_pixels: empty palette");
    std::vector<std::uint32_t> labels(img.size());
    const auto pixels = img.pixels();
    if (centers.size() <= kLinearScanLimit) {
        parallel_for(labels.size(), [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                labels[i] = static_cast<std::uint32_t>(linear_nearest(centers, pixels[i]).index);
            }
        });
    } else {
        const KdTree tree(centers);
        parallel_for(labels.size(), [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                labels[i] = static_cast<std::uint32_t>(tree.nearest(pixels[i]).index);
            }
        });
    }
    return labels;
}

std::vector<std::uint32_t> classify_pixels(const LabImage& img, const Palette& palette) {
    const std::vector<Lab> centers = palette.colors();
    return classify_pixels(img, centers);
}

Palette merge_peaks(const PeakSet& input, const LabImage& img, std::size_t max_entries) {
    if (max_entries < 1) throw std::invalid_argument("max palette size must be >= 1");
    if (img.empty()) throw EmptyPeakSpace("no peaks: image has no pixels");
    const PeakSet peaks = with_fallback_peaks(input, img);

    std::vector<Lab> candidates;
    candidates.reserve(peaks[0].values.size() * peaks[1].values.size() * peaks[2].values.size());
    for (double l : peaks[0].values)
        for (double a : peaks[1].values)
            for (double b : peaks[2].values) candidates.push_back({l, a, b});

    std::vector<std::size_t> counts(candidates.size(), 0);
    for (std::uint32_t label : classify_pixels(img, candidates)) ++counts[label];

    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return counts[x] > counts[y]; });
    std::vector<std::size_t> survivors;
    for (std::size_t idx : order) {
        if (survivors.size() == max_entries || counts[idx] == 0) break;
        survivors.push_back(idx);
    }
    // Keep generation order among survivors.
    std::sort(survivors.begin(), survivors.end());

    std::vector<Lab> centers;
    centers.reserve(survivors.size());
    for (std::size_t idx : survivors) centers.push_back(candidates[idx]);
    std::vector<std::uint32_t> labels = classify_pixels(img, centers);

    std::vector<std::array<double, 3>> sums(centers.size(), {0.0, 0.0, 0.0});
    std::vector<std::size_t> members(centers.size(), 0);
    const auto pixels = img.pixels();
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        auto& s = sums[labels[i]];
        s[0] += pixels[i].l;
        s[1] += pixels[i].a;
        s[2] += pixels[i].b;
        ++members[labels[i]];
    }

    Palette palette;
    palette.dims = img.dims();
    std::vector<std::uint32_t> remap(centers.size(), 0);
    for (std::size_t e = 0; e < centers.size(); ++e) {
        if (members[e] == 0) continue;
        remap[e] = static_cast<std::uint32_t>(palette.entries.size());
        const auto n = static_cast<double>(members[e]);
        palette.entries.push_back({{sums[e][0] / n, sums[e][1] / n, sums[e][2] / n}, members[e], Region::Foreground});
    }
    for (auto& label : labels) label = remap[label];
    palette.label_map = std::move(labels);
    return palette;
}

Palette build_palette(const LabImage& img, const PaletteParams& params) {
    params.validate();
    if (img.empty()) throw EmptyPeakSpace("no peaks: image has no pixels");
    const auto hists = build_histograms(img, params.bins);
    PeakSet peaks;
    for (std::size_t c = 0; c < 3; ++c) peaks[c] = find_peaks(hists[c], params.radius, params.min_count);
    return merge_peaks(peaks, img, params.max_entries);
}

}  // namespace paltx
