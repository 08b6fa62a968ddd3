#include "paltx/colorspace.hpp"

#include "paltx/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace paltx {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

// Linear sRGB -> XYZ, D65.
constexpr Mat3 kRgbToXyz = {{
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
}};

constexpr Mat3 invert(const Mat3& m) {
    const double c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    const double c01 = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    const double c02 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    const double det = m[0][0] * c00 + m[0][1] * c01 + m[0][2] * c02;
    return {{
        {c00 / det, (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det, (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det},
        {c01 / det, (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det, (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det},
        {c02 / det, (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det, (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det},
    }};
}

constexpr Mat3 kXyzToRgb = invert(kRgbToXyz);

// White point as the image of RGB (1,1,1) so the gray axis lands on a = b = 0.
constexpr std::array<double, 3> kWhite = {
    kRgbToXyz[0][0] + kRgbToXyz[0][1] + kRgbToXyz[0][2],
    kRgbToXyz[1][0] + kRgbToXyz[1][1] + kRgbToXyz[1][2],
    kRgbToXyz[2][0] + kRgbToXyz[2][1] + kRgbToXyz[2][2],
};

constexpr double kEpsilon = 216.0 / 24389.0;
constexpr double kKappa = 24389.0 / 27.0;

double srgb_decode(double v) {
    return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

double srgb_encode(double v) {
    return v <= 0.0031308 ? v * 12.92 : 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
}

double lab_f(double t) {
    return t > kEpsilon ? std::cbrt(t) : (kKappa * t + 16.0) / 116.0;
}

double lab_f_inv(double f) {
    const double f3 = f * f * f;
    return f3 > kEpsilon ? f3 : (116.0 * f - 16.0) / kKappa;
}

// 8-bit decode is shared by every pixel, so precompute it once.
const std::array<double, 256>& decode_table() {
    static const std::array<double, 256> table = [] {
        std::array<double, 256> t{};
        for (int i = 0; i < 256; ++i) t[i] = srgb_decode(i / 255.0);
        return t;
    }();
    return table;
}

std::uint8_t quantize(double encoded) {
    const double v = std::clamp(encoded * 255.0, 0.0, 255.0);
    return static_cast<std::uint8_t>(std::floor(v + 0.5));
}

}  // namespace

Lab clamp_lab(const Lab& c) noexcept {
    return {std::clamp(c.l, kLMin, kLMax), std::clamp(c.a, kAbMin, kAbMax), std::clamp(c.b, kAbMin, kAbMax)};
}

Lab srgb_to_lab(Rgb8 c) noexcept {
    const auto& dec = decode_table();
    const double r = dec[c.r];
    const double g = dec[c.g];
    const double b = dec[c.b];
    std::array<double, 3> f{};
    for (int i = 0; i < 3; ++i) {
        const double xyz = kRgbToXyz[i][0] * r + kRgbToXyz[i][1] * g + kRgbToXyz[i][2] * b;
        f[i] = lab_f(xyz / kWhite[i]);
    }
    return clamp_lab({116.0 * f[1] - 16.0, 500.0 * (f[0] - f[1]), 200.0 * (f[1] - f[2])});
}

Rgb8 lab_to_srgb(const Lab& c) noexcept {
    const double fy = (c.l + 16.0) / 116.0;
    const double fx = fy + c.a / 500.0;
    const double fz = fy - c.b / 200.0;
    const std::array<double, 3> xyz = {
        lab_f_inv(fx) * kWhite[0],
        // L below kappa*epsilon follows the linear segment exactly.
        (c.l > kKappa * kEpsilon ? fy * fy * fy : c.l / kKappa) * kWhite[1],
        lab_f_inv(fz) * kWhite[2],
    };
    std::array<std::uint8_t, 3> out{};
    for (int i = 0; i < 3; ++i) {
        const double lin = kXyzToRgb[i][0] * xyz[0] + kXyzToRgb[i][1] * xyz[1] + kXyzToRgb[i][2] * xyz[2];
        out[i] = quantize(srgb_encode(std::clamp(lin, 0.0, 1.0)));
    }
    return {out[0], out[1], out[2]};
}

RgbImage::RgbImage(std::size_t width, std::size_t height, Rgb8 fill)
    : dims_{width, height}, pixels_(width * height, fill) {}

RgbImage::RgbImage(std::size_t width, std::size_t height, std::vector<Rgb8> pixels)
    : dims_{width, height}, pixels_(std::move(pixels)) {
    if (pixels_.size() != width * height) throw std::invalid_argument("RgbImage: pixel count does not match dimensions");
}

LabImage::LabImage(std::size_t width, std::size_t height, Lab fill)
    : dims_{width, height}, pixels_(width * height, clamp_lab(fill)) {}

LabImage::LabImage(std::size_t width, std::size_t height, std::vector<Lab> pixels)
    : dims_{width, height}, pixels_(std::move(pixels)) {
    if (pixels_.size() != width * height) throw std::invalid_argument("LabImage: pixel count does not match dimensions");
    for (auto& p : pixels_) p = clamp_lab(p);
}

std::vector<double> LabImage::l_channel() const {
    std::vector<double> out(pixels_.size());
    std::transform(pixels_.begin(), pixels_.end(), out.begin(), [](const Lab& c) { return c.l; });
    return out;
}

LabImage rgb_to_lab(const RgbImage& img) {
    std::vector<Lab> out(img.size());
    const auto src = img.pixels();
    parallel_for(out.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = srgb_to_lab(src[i]);
    });
    return LabImage(img.width(), img.height(), std::move(out));
}

RgbImage lab_to_rgb(const LabImage& img) {
    std::vector<Rgb8> out(img.size());
    const auto src = img.pixels();
    parallel_for(out.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = lab_to_srgb(src[i]);
    });
    return RgbImage(img.width(), img.height(), std::move(out));
}

}  // namespace paltx
