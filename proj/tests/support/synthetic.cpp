#include "synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace paltx::testing {

namespace {

Rgb8 rgb(double r, double g, double b) {
    const auto q = [](double v) { return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L)); };
    return {q(r), q(g), q(b)};
}

Rgb8 jitter(Rgb8 c, double amount, std::mt19937_64& rng) {
    return rgb(c.r + (unit(rng) - 0.5) * amount, c.g + (unit(rng) - 0.5) * amount, c.b + (unit(rng) - 0.5) * amount);
}

Rgb8 random_color(std::mt19937_64& rng) {
    return {static_cast<std::uint8_t>(uniform_int(rng, 0, 255)), static_cast<std::uint8_t>(uniform_int(rng, 0, 255)),
            static_cast<std::uint8_t>(uniform_int(rng, 0, 255))};
}

struct Blob {
    double cx, cy, radius;
    Rgb8 color;
};

// Regions with soft shading: a background color and a few disks.
RgbImage scene(std::size_t w, std::size_t h, Rgb8 background, const std::vector<Blob>& blobs, double noise,
               double shading, std::mt19937_64& rng) {
    RgbImage img(w, h);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            const double u = static_cast<double>(x) / static_cast<double>(w);
            const double v = static_cast<double>(y) / static_cast<double>(h);
            Rgb8 c = background;
            for (const Blob& b : blobs) {
                const double dx = u - b.cx;
                const double dy = v - b.cy;
                if (dx * dx + dy * dy < b.radius * b.radius) c = b.color;
            }
            const double s = 1.0 + shading * (v - 0.5);
            c = rgb(c.r * s, c.g * s, c.b * s);
            img.at(x, y) = noise > 0 ? jitter(c, noise, rng) : c;
        }
    }
    return img;
}

}  // namespace

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

RgbImage random_rgb(std::size_t w, std::size_t h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RgbImage img(w, h);
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = random_color(rng);
    return img;
}

LabImage random_lab(std::size_t w, std::size_t h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Lab> px(w * h);
    for (auto& p : px) p = {100.0 * unit(rng), -128.0 + 255.0 * unit(rng), -128.0 + 255.0 * unit(rng)};
    return LabImage(w, h, std::move(px));
}

RgbImage solid(std::size_t w, std::size_t h, Rgb8 color) { return RgbImage(w, h, color); }

std::string corpus_name(std::size_t index) {
    static const std::array<const char*, kCorpusRecipes> names = {
        "horizontal-gradient", "vertical-gradient", "radial-gradient", "two-blobs",      "sky-and-ground",
        "stripes",             "checkerboard",      "uniform-noise",   "low-contrast",   "three-region-noisy",
        "dark-scene",          "bright-scene",      "hue-wheel",       "portrait-like",  "many-blobs",
        "gray-ramp",           "saturated-blocks",  "pastel-blobs",    "sunset",         "forest",
        "two-tone-noise",      "diagonal-bands",    "spotlight",       "single-color",
    };
    return names[index % kCorpusRecipes];
}

RgbImage corpus_image(std::size_t index, std::size_t w, std::size_t h) {
    std::mt19937_64 rng(0x5eed0000 + index);
    RgbImage img(w, h);
    const auto fill = [&](auto&& f) {
        for (std::size_t y = 0; y < h; ++y)
            for (std::size_t x = 0; x < w; ++x)
                img.at(x, y) = f(static_cast<double>(x) / static_cast<double>(w), static_cast<double>(y) / static_cast<double>(h));
    };
    switch (index % kCorpusRecipes) {
        case 0: fill([](double u, double) { return rgb(255 * u, 80, 255 * (1 - u)); }); break;
        case 1: fill([](double, double v) { return rgb(40, 255 * v, 120 + 100 * v); }); break;
        case 2:
            fill([](double u, double v) {
                const double r = std::hypot(u - 0.5, v - 0.5) * 1.4;
                return rgb(250 * (1 - r), 200 * r, 90);
            });
            break;
        case 3:
            img = scene(w, h, {30, 90, 160}, {{0.3, 0.4, 0.2, {220, 60, 40}}, {0.7, 0.6, 0.15, {240, 220, 80}}}, 12, 0.2, rng);
            break;
        case 4:
            fill([&](double, double v) {
                return v < 0.55 ? jitter(rgb(110 + 80 * v, 170 + 60 * v, 245), 10, rng) : jitter(rgb(70, 130 - 40 * v, 50), 16, rng);
            });
            break;
        case 5: fill([](double u, double) { return (static_cast<int>(u * 12) % 2) ? rgb(200, 40, 90) : rgb(30, 160, 140); }); break;
        case 6:
            fill([](double u, double v) {
                return ((static_cast<int>(u * 8) + static_cast<int>(v * 8)) % 2) ? rgb(250, 250, 250) : rgb(20, 20, 60);
            });
            break;
        case 7: img = random_rgb(w, h, 0xabc + index); break;
        case 8: fill([&](double u, double) { return jitter(rgb(120 + 6 * u, 118, 122), 3, rng); }); break;
        case 9:
            img = scene(w, h, {180, 170, 150},
                        {{0.25, 0.3, 0.18, {60, 120, 200}}, {0.7, 0.7, 0.22, {150, 60, 40}}}, 30, 0.3, rng);
            break;
        case 10: img = scene(w, h, {20, 22, 35}, {{0.5, 0.5, 0.25, {70, 40, 30}}}, 8, 0.4, rng); break;
        case 11: img = scene(w, h, {245, 240, 225}, {{0.4, 0.5, 0.3, {250, 200, 190}}}, 6, 0.1, rng); break;
        case 12:
            fill([](double u, double v) {
                const double angle = std::atan2(v - 0.5, u - 0.5);
                return rgb(128 + 120 * std::cos(angle), 128 + 120 * std::cos(angle - 2.094), 128 + 120 * std::cos(angle + 2.094));
            });
            break;
        case 13:
            img = scene(w, h, {90, 110, 100},
                        {{0.5, 0.45, 0.22, {225, 180, 150}}, {0.5, 0.2, 0.16, {60, 40, 30}}, {0.5, 0.95, 0.35, {40, 50, 110}}},
                        10, 0.25, rng);
            break;
        case 14: {
            std::vector<Blob> blobs;
            for (int i = 0; i < 12; ++i) blobs.push_back({unit(rng), unit(rng), 0.05 + 0.1 * unit(rng), random_color(rng)});
            img = scene(w, h, random_color(rng), blobs, 14, 0.2, rng);
            break;
        }
        case 15: fill([](double u, double) { return rgb(255 * u, 255 * u, 255 * u); }); break;
        case 16:
            fill([](double u, double v) {
                static constexpr std::array<Rgb8, 4> c = {{{255, 0, 0}, {0, 255, 0}, {0, 0, 255}, {255, 255, 0}}};
                return c[(u < 0.5 ? 0 : 1) + (v < 0.5 ? 0 : 2)];
            });
            break;
        case 17:
            img = scene(w, h, {230, 220, 240},
                        {{0.3, 0.3, 0.2, {200, 230, 210}}, {0.65, 0.65, 0.25, {250, 210, 220}}}, 8, 0.1, rng);
            break;
        case 18:
            fill([&](double u, double v) { return jitter(rgb(250 - 60 * v, 120 + 100 * (1 - v) * u, 60 + 120 * v), 8, rng); });
            break;
        case 19:
            img = scene(w, h, {40, 80, 40},
                        {{0.2, 0.2, 0.15, {90, 140, 50}}, {0.6, 0.4, 0.2, {30, 60, 30}}, {0.8, 0.8, 0.15, {120, 90, 40}}}, 20,
                        0.3, rng);
            break;
        case 20: fill([&](double u, double) { return jitter(u < 0.5 ? rgb(200, 100, 50) : rgb(50, 100, 200), 40, rng); }); break;
        case 21: fill([](double u, double v) { return (static_cast<int>((u + v) * 6) % 3) == 0 ? rgb(240, 200, 40) : (static_cast<int>((u + v) * 6) % 3) == 1 ? rgb(20, 120, 200) : rgb(200, 40, 120); }); break;
        case 22:
            fill([&](double u, double v) {
                const double r = std::hypot(u - 0.6, v - 0.4);
                const double s = std::exp(-r * r * 12);
                return jitter(rgb(30 + 220 * s, 25 + 200 * s, 40 + 150 * s), 6, rng);
            });
            break;
        default: img = solid(w, h, {150, 90, 200}); break;
    }
    return img;
}

Palette random_palette(std::mt19937_64& rng, std::size_t max_entries) {
    Palette p;
    const std::size_t n = 1 + rng() % max_entries;
    while (p.entries.size() < n) {
        // Quantized coordinates make exact distance ties reachable.
        const Lab c{std::round(100.0 * unit(rng)), std::round(-100.0 + 200.0 * unit(rng)), std::round(-100.0 + 200.0 * unit(rng))};
        const bool dup = std::any_of(p.entries.begin(), p.entries.end(), [&](const PaletteEntry& e) { return e.color == c; });
        if (!dup) p.entries.push_back({c, 1 + rng() % 500, Region::Foreground});
    }
    return p;
}

RecolorPair recolor_pair(std::size_t index, std::size_t w, std::size_t h) {
    std::mt19937_64 rng(0xc0105 + index);
    const std::size_t regions = 2 + index % 4;
    std::vector<Rgb8> src_colors, ref_colors;
    for (std::size_t i = 0; i <= regions; ++i) {
        const Rgb8 c = random_color(rng);
        src_colors.push_back(c);
        // Ground-truth recoloring: a channel permutation plus a brightness offset.
        const int shift = uniform_int(rng, -40, 40);
        ref_colors.push_back(index % 2 ? rgb(c.g + shift, c.b + shift, c.r + shift) : rgb(c.b + shift, c.r + shift, c.g + shift));
    }
    std::vector<Blob> src_blobs, ref_blobs;
    for (std::size_t i = 1; i <= regions; ++i) {
        const double cx = 0.15 + 0.7 * unit(rng);
        const double cy = 0.15 + 0.7 * unit(rng);
        const double r = 0.1 + 0.15 * unit(rng);
        src_blobs.push_back({cx, cy, r, src_colors[i]});
        ref_blobs.push_back({1.0 - cx, cy, r, ref_colors[i]});
    }
    const double noise = 6.0 + static_cast<double>(index % 5) * 4.0;
    RecolorPair pair;
    pair.source = scene(w, h, src_colors[0], src_blobs, noise, 0.25, rng);
    pair.reference = scene(w, h, ref_colors[0], ref_blobs, noise, 0.25, rng);
    return pair;
}

RgbImage mean_shift_baseline(const RgbImage& source, const RgbImage& reference) {
    const LabImage s = rgb_to_lab(source);
    const LabImage r = rgb_to_lab(reference);
    const auto stats = [](const LabImage& img, double Lab::*ch) {
        double sum = 0.0;
        for (const Lab& p : img.pixels()) sum += p.*ch;
        const double mean = sum / static_cast<double>(img.size());
        double var = 0.0;
        for (const Lab& p : img.pixels()) var += (p.*ch - mean) * (p.*ch - mean);
        return std::pair{mean, std::sqrt(var / static_cast<double>(img.size()))};
    };
    LabImage out = s;
    for (double Lab::*ch : {&Lab::l, &Lab::a, &Lab::b}) {
        const auto [ms, ss] = stats(s, ch);
        const auto [mr, sr] = stats(r, ch);
        const double scale = ss > 0 ? sr / ss : 1.0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            Lab c = out[i];
            c.*ch = (s[i].*ch - ms) * scale + mr;
            out.set(i, c);
        }
    }
    return lab_to_rgb(out);
}

}  // namespace paltx::testing
