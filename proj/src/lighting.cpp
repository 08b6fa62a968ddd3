#include "paltx/lighting.hpp"

#include "paltx/error.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paltx {

namespace {

constexpr double kGammaMin = 0.5;
constexpr double kGammaMax = 2.0;
constexpr double kTargetMedian = 50.0;

double median(std::span<const double> values) {
    std::vector<double> v(values.begin(), values.end());
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (v.size() % 2 == 1) return upper;
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

}  // namespace

std::vector<double> blend_l(std::span<const double> original, std::span<const double> mapped, double alpha) {
    if (original.size() != mapped.size()) throw DimensionMismatch("blend_l: planes differ in size");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
    std::vector<double> out(original.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        // Endpoints are returned untouched so alpha in {0, 1} is an exact identity.
        const double v = alpha == 0.0 ? original[i]
                       : alpha == 1.0 ? mapped[i]
                                      : (1.0 - alpha) * original[i] + alpha * mapped[i];
        out[i] = std::clamp(v, kLMin, kLMax);
    }
    return out;
}

double enhancement_gamma(std::span<const double> l) {
    if (l.empty()) return 1.0;
    const double m = median(l) / kLMax;
    if (m <= 0.0) return kGammaMin;
    if (m >= 1.0) return kGammaMax;
    return std::clamp(std::log(kTargetMedian / kLMax) / std::log(m), kGammaMin, kGammaMax);
}

std::vector<double> enhance_l(std::span<const double> l) {
    const double gamma = enhancement_gamma(l);
    std::vector<double> out(l.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double x = std::clamp(l[i], kLMin, kLMax) / kLMax;
        out[i] = gamma == 1.0 ? x * kLMax : kLMax * std::pow(x, gamma);
    }
    return out;
}

LightingEnhancer builtin_enhancer() {
    return [](std::span<const double> l, Dims) { return enhance_l(l); };
}

LightingEnhancer precomputed_enhancer(std::vector<double> l, Dims dims) {
    return [plane = std::move(l), dims](std::span<const double>, Dims target) {
        if (target != dims) throw DimensionMismatch("enhanced L plane does not match the source image");
        return plane;
    };
}

void LightingParams::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
}

void optimize_lighting(LabImage& image, std::span<const double> mapped_l, const LightingParams& params) {
    params.validate();
    const std::vector<double> original = image.l_channel();
    std::vector<double> l = blend_l(original, mapped_l, params.alpha);
    if (params.enhancer) {
        l = params.enhancer(l, image.dims());
        if (l.size() != image.size()) throw DimensionMismatch("enhancer returned a plane of the wrong size");
    }
    for (std::size_t i = 0; i < image.size(); ++i) {
        Lab c = image[i];
        c.l = l[i];
        image.set(i, c);
    }
}

}  // namespace paltx
