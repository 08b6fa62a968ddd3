#include "paltx/metrics.hpp"

#include "paltx/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace paltx {

namespace {

// Per-bin population variance of `value(i)` over pixels grouped by
// `bin(i)`, averaged over non-empty bins. Two-pass and fixed-order, so the
// result only depends on the pixel order.
double mean_bin_variance(std::size_t n, std::size_t bins, const std::function<std::size_t(std::size_t)>& bin,
                         const std::function<double(std::size_t)>& value) {
    std::vector<std::size_t> count(bins, 0);
    std::vector<double> sum(bins, 0.0);
    std::vector<std::size_t> index(n);
    for (std::size_t i = 0; i < n; ++i) {
        index[i] = bin(i);
        ++count[index[i]];
        sum[index[i]] += value(i);
    }
    std::vector<double> mean(bins, 0.0);
    for (std::size_t k = 0; k < bins; ++k) {
        if (count[k] != 0) mean[k] = sum[k] / static_cast<double>(count[k]);
    }
    std::vector<double> sq(bins, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = value(i) - mean[index[i]];
        sq[index[i]] += d * d;
    }
    double total = 0.0;
    std::size_t used = 0;
    for (std::size_t k = 0; k < bins; ++k) {
        if (count[k] == 0) continue;
        total += sq[k] / static_cast<double>(count[k]);
        ++used;
    }
    return used == 0 ? 0.0 : total / static_cast<double>(used);
}

std::size_t equal_bin(double v, double max, std::size_t bins) {
    const double pos = std::floor(v * static_cast<double>(bins) / max);
    if (!(pos > 0.0)) return 0;
    return std::min(static_cast<std::size_t>(pos), bins - 1);
}

template <typename Image>
void require_same_dims(const Image& source, const Image& result, const char* what) {
    if (source.dims() != result.dims()) throw DimensionMismatch(std::string(what) + ": source and result differ in size");
}

}  // namespace

double consistency_l(const LabImage& source, const LabImage& result) {
    require_same_dims(source, result, "consistency_l");
    return mean_bin_variance(
        source.size(), kConsistencyLBins,
        [&](std::size_t i) { return equal_bin(source[i].l, kLMax, kConsistencyLBins); },
        [&](std::size_t i) { return result[i].l / kLMax; });
}

double consistency_rgb(const RgbImage& source, const RgbImage& result) {
    require_same_dims(source, result, "consistency_rgb");
    double total = 0.0;
    for (int c = 0; c < 3; ++c) {
        const auto channel = [c](const Rgb8& p) { return c == 0 ? p.r : c == 1 ? p.g : p.b; };
        total += mean_bin_variance(
            source.size(), kConsistencyRgbBins,
            [&](std::size_t i) { return equal_bin(channel(source[i]), 255.0, kConsistencyRgbBins); },
            [&](std::size_t i) { return static_cast<double>(channel(result[i])); });
    }
    return total / 3.0;
}

FadingRate fading_rate(const LabImage& source, const LabImage& result) {
    require_same_dims(source, result, "fading_rate");
    if (source.empty()) return {};
    double loss_a = 0.0;
    double loss_b = 0.0;
    for (std::size_t i = 0; i < source.size(); ++i) {
        loss_a += std::max(0.0, std::abs(source[i].a) - std::abs(result[i].a));
        loss_b += std::max(0.0, std::abs(source[i].b) - std::abs(result[i].b));
    }
    const double n = static_cast<double>(source.size());
    return {loss_a / n / 128.0, loss_b / n / 128.0};
}

MetricsReport evaluate(const RgbImage& source_rgb, const LabImage& source_lab, const RgbImage& result_rgb,
                       const LabImage& result_lab) {
    const FadingRate fading = fading_rate(source_lab, result_lab);
    return {consistency_l(source_lab, result_lab), consistency_rgb(source_rgb, result_rgb), fading.a, fading.b};
}

MetricsReport evaluate(const RgbImage& source, const RgbImage& result) {
    return evaluate(source, rgb_to_lab(source), result, rgb_to_lab(result));
}

}  // namespace paltx
