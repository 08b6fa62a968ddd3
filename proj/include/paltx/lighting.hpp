#pragma once

#include "paltx/colorspace.hpp"

#include <functional>
#include <span>
#include <vector>

namespace paltx {

inline constexpr double kDefaultAlpha = 0.3;

/// (1 - alpha) * original + alpha * mapped, clamped to [0, 100].
std::vector<double> blend_l(std::span<const double> original, std::span<const double> mapped,
                            double alpha);

/// Gamma exponent that sends the median of `l` to 50, clamped to [0.5, 2].
double enhancement_gamma(std::span<const double> l);

/// Built-in global enhancement: 100 * (L / 100)^gamma with enhancement_gamma.
std::vector<double> enhance_l(std::span<const double> l);

/// Replacement for the L channel after blending. Receives the blended L and
/// the image size; must return one value per pixel.
using LightingEnhancer = std::function<std::vector<double>(std::span<const double>, Dims)>;

LightingEnhancer builtin_enhancer();

/// Enhancer that ignores its input and returns a fixed, externally computed L plane.
LightingEnhancer precomputed_enhancer(std::vector<double> l, Dims dims);

struct LightingParams {
    double alpha = kDefaultAlpha;
    LightingEnhancer enhancer;  // empty: no enhancement

    void validate() const;
};

/// Blends the L plane of `image` with `mapped_l`, runs the enhancer if set,
/// and writes the result back into the L channel.
void optimize_lighting(LabImage& image, std::span<const double> mapped_l, const LightingParams& params);

}  // namespace paltx
