#pragma once

#include "paltx/colorspace.hpp"

namespace paltx {

struct MetricsReport {
    double consistency_l = 0.0;
    double consistency_rgb = 0.0;
    double fading_a = 0.0;
    double fading_b = 0.0;
};

inline constexpr std::size_t kConsistencyLBins = 20;
inline constexpr std::size_t kConsistencyRgbBins = 10;

/// Mean over non-empty source L bins (20 over [0,100]) of the population
/// variance of the result's L / 100 inside the bin.
double consistency_l(const LabImage& source, const LabImage& result);

/// Same analysis per R, G, B channel (10 bins over [0,255], raw 0..255
/// values), averaged over the three channels.
double consistency_rgb(const RgbImage& source, const RgbImage& result);

struct FadingRate {
    double a = 0.0;
    double b = 0.0;
};

/// Mean of max(0, |src| - |res|) / 128 per chroma channel.
FadingRate fading_rate(const LabImage& source, const LabImage& result);

MetricsReport evaluate(const RgbImage& source, const RgbImage& result);
MetricsReport evaluate(const RgbImage& source_rgb, const LabImage& source_lab,
                       const RgbImage& result_rgb, const LabImage& result_lab);

}  // namespace paltx
