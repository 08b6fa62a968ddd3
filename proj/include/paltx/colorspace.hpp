#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace paltx {

struct Rgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb8&, const Rgb8&) = default;
};

/// CIELAB triple. L in [0,100], a and b in [-128,127] once stored in a LabImage.
struct Lab {
    double l = 0.0;
    double a = 0.0;
    double b = 0.0;

    friend bool operator==(const Lab&, const Lab&) = default;
};

inline constexpr double kLMin = 0.0;
inline constexpr double kLMax = 100.0;
inline constexpr double kAbMin = -128.0;
inline constexpr double kAbMax = 127.0;

/// Squared Euclidean (CIE76) distance. Every nearest-neighbour routine in the
/// library goes through this one expression so exact-equality oracles hold.
inline double squared_distance(const Lab& p, const Lab& q) noexcept {
    const double dl = p.l - q.l;
    const double da = p.a - q.a;
    const double db = p.b - q.b;
    return dl * dl + da * da + db * db;
}

Lab clamp_lab(const Lab& c) noexcept;

/// Dimensions shared by images, masks and label maps.
struct Dims {
    std::size_t width = 0;
    std::size_t height = 0;

    std::size_t area() const noexcept { return width * height; }
    friend bool operator==(const Dims&, const Dims&) = default;
};

/// Row-major 8-bit sRGB image.
class RgbImage {
public:
    RgbImage() = default;
    RgbImage(std::size_t width, std::size_t height, Rgb8 fill = {});
    RgbImage(std::size_t width, std::size_t height, std::vector<Rgb8> pixels);

    std::size_t width() const noexcept { return dims_.width; }
    std::size_t height() const noexcept { return dims_.height; }
    Dims dims() const noexcept { return dims_; }
    std::size_t size() const noexcept { return pixels_.size(); }
    bool empty() const noexcept { return pixels_.empty(); }

    Rgb8& at(std::size_t x, std::size_t y) { return pixels_[y * dims_.width + x]; }
    const Rgb8& at(std::size_t x, std::size_t y) const { return pixels_[y * dims_.width + x]; }
    Rgb8& operator[](std::size_t i) { return pixels_[i]; }
    const Rgb8& operator[](std::size_t i) const { return pixels_[i]; }

    std::span<const Rgb8> pixels() const noexcept { return pixels_; }
    std::span<Rgb8> pixels() noexcept { return pixels_; }

    friend bool operator==(const RgbImage&, const RgbImage&) = default;

private:
    Dims dims_;
    std::vector<Rgb8> pixels_;
};

/// Row-major CIELAB image. Values are clamped to the Lab box on every write.
class LabImage {
public:
    LabImage() = default;
    LabImage(std::size_t width, std::size_t height, Lab fill = {});
    LabImage(std::size_t width, std::size_t height, std::vector<Lab> pixels);

    std::size_t width() const noexcept { return dims_.width; }
    std::size_t height() const noexcept { return dims_.height; }
    Dims dims() const noexcept { return dims_; }
    std::size_t size() const noexcept { return pixels_.size(); }
    bool empty() const noexcept { return pixels_.empty(); }

    const Lab& operator[](std::size_t i) const { return pixels_[i]; }
    const Lab& at(std::size_t x, std::size_t y) const { return pixels_[y * dims_.width + x]; }
    void set(std::size_t i, const Lab& c) { pixels_[i] = clamp_lab(c); }
    void set(std::size_t x, std::size_t y, const Lab& c) { set(y * dims_.width + x, c); }

    std::span<const Lab> pixels() const noexcept { return pixels_; }

    /// Copies of the single channels, in pixel order.
    std::vector<double> l_channel() const;

    friend bool operator==(const LabImage&, const LabImage&) = default;

private:
    Dims dims_;
    std::vector<Lab> pixels_;
};

Lab srgb_to_lab(Rgb8 c) noexcept;
Rgb8 lab_to_srgb(const Lab& c) noexcept;

LabImage rgb_to_lab(const RgbImage& img);
RgbImage lab_to_rgb(const LabImage& img);

}  // namespace paltx
