#include "oracles.hpp"

#include <cmath>
#include <map>

namespace paltx::oracle {

namespace {

double population_variance(const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return acc / static_cast<double>(v.size());
}

double mean_of_bins(const std::map<int, std::vector<double>>& bins) {
    if (bins.empty()) return 0.0;
    double total = 0.0;
    for (const auto& [bin, values] : bins) total += population_variance(values);
    return total / static_cast<double>(bins.size());
}

// Largest k in [0, bins) with lo + k * width <= v.
int bin_by_scan(double v, double width, int bins) {
    int k = 0;
    while (k + 1 < bins && (k + 1) * width <= v) ++k;
    return k;
}

}  // namespace

std::size_t argmin_scan(const Lab& p, const std::vector<Lab>& centers) {
    std::size_t best = 0;
    double best_d = INFINITY;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const double dl = p.l - centers[i].l;
        const double da = p.a - centers[i].a;
        const double db = p.b - centers[i].b;
        const double d = dl * dl + da * da + db * db;
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

std::vector<std::size_t> window_peaks(const std::vector<std::uint64_t>& counts, std::size_t radius, std::uint64_t min_count) {
    std::vector<std::size_t> out;
    const auto n = static_cast<long>(counts.size());
    const auto r = static_cast<long>(radius);
    for (long i = 0; i < n; ++i) {
        if (counts[i] <= min_count) continue;
        bool is_max = true;
        long first_equal = i;
        for (long j = std::max(0L, i - r); j <= std::min(n - 1, i + r); ++j) {
            if (counts[j] > counts[i]) is_max = false;
            if (counts[j] == counts[i] && j < first_equal) first_equal = j;
        }
        if (is_max && first_equal == i) out.push_back(static_cast<std::size_t>(i));
    }
    return out;
}

double consistency_l(const LabImage& source, const LabImage& result) {
    std::map<int, std::vector<double>> bins;
    for (std::size_t i = 0; i < source.size(); ++i) bins[bin_by_scan(source[i].l, 5.0, 20)].push_back(result[i].l / 100.0);
    return mean_of_bins(bins);
}

double consistency_rgb(const RgbImage& source, const RgbImage& result) {
    double total = 0.0;
    for (int c = 0; c < 3; ++c) {
        std::map<int, std::vector<double>> bins;
        for (std::size_t i = 0; i < source.size(); ++i) {
            const auto pick = [c](const Rgb8& p) { return c == 0 ? p.r : c == 1 ? p.g : p.b; };
            bins[std::min(9, pick(source[i]) * 10 / 255)].push_back(pick(result[i]));
        }
        total += mean_of_bins(bins);
    }
    return total / 3.0;
}

double fading_a(const LabImage& source, const LabImage& result) {
    double loss = 0.0;
    for (std::size_t i = 0; i < source.size(); ++i) {
        const double d = std::fabs(source[i].a) - std::fabs(result[i].a);
        if (d > 0) loss += d / 128.0;
    }
    return loss / static_cast<double>(source.size());
}

double fading_b(const LabImage& source, const LabImage& result) {
    double loss = 0.0;
    for (std::size_t i = 0; i < source.size(); ++i) {
        const double d = std::fabs(source[i].b) - std::fabs(result[i].b);
        if (d > 0) loss += d / 128.0;
    }
    return loss / static_cast<double>(source.size());
}

}  // namespace paltx::oracle
