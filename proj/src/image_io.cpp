#include "paltx/image_io.hpp"

#include "paltx/error.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <jpeglib.h>
#include <memory>
#include <string>

namespace paltx {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const noexcept { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) throw IoError("cannot open " + path.string() + ": " + std::strerror(errno));
    return f;
}

enum class Kind { Png, Jpeg, Unknown };

Kind sniff(std::FILE* f) {
    unsigned char sig[8] = {};
    const std::size_t n = std::fread(sig, 1, sizeof sig, f);
    std::rewind(f);
    if (n == 8 && png_sig_cmp(sig, 0, 8) == 0) return Kind::Png;
    if (n >= 3 && sig[0] == 0xFF && sig[1] == 0xD8 && sig[2] == 0xFF) return Kind::Jpeg;
    return Kind::Unknown;
}

// Decoded PNG rows after the requested transforms. `channels` and `depth`
// describe the layout of `data`.
struct PngRaster {
    std::size_t width = 0;
    std::size_t height = 0;
    int channels = 0;
    int depth = 0;
    int color_type = 0;
    std::vector<unsigned char> data;
};

enum class PngMode { Rgb8, Gray };

// Returns an empty string on success, otherwise the decoder's message.
std::string decode_png(std::FILE* f, PngMode mode, PngRaster& out) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) return "out of memory";
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        return "out of memory";
    }
    std::vector<png_bytep> rows;
    const char* failure = nullptr;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        return "corrupt PNG data";
    }
    png_init_io(png, f);
    png_read_info(png, info);
    const int color_type = png_get_color_type(png, info);
    out.color_type = color_type;
    if (mode == PngMode::Rgb8) {
        png_set_palette_to_rgb(png);
        png_set_expand_gray_1_2_4_to_8(png);
        png_set_strip_16(png);
        png_set_strip_alpha(png);
        png_set_gray_to_rgb(png);
    } else if ((color_type & PNG_COLOR_MASK_COLOR) != 0) {
        failure = "PNG is not single-channel grayscale";
    } else {
        png_set_expand_gray_1_2_4_to_8(png);
        png_set_strip_alpha(png);
    }
    if (failure) {
        png_destroy_read_struct(&png, &info, nullptr);
        return failure;
    }
    png_read_update_info(png, info);
    out.width = png_get_image_width(png, info);
    out.height = png_get_image_height(png, info);
    out.channels = png_get_channels(png, info);
    out.depth = png_get_bit_depth(png, info);
    const std::size_t stride = png_get_rowbytes(png, info);
    out.data.resize(stride * out.height);
    rows.resize(out.height);
    for (std::size_t y = 0; y < out.height; ++y) rows[y] = out.data.data() + y * stride;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return {};
}

struct JpegErrorManager {
    jpeg_error_mgr base;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    std::longjmp(err->jump, 1);
}

std::string decode_jpeg(std::FILE* f, std::size_t& width, std::size_t& height, std::vector<unsigned char>& data) {
    jpeg_decompress_struct cinfo{};
    JpegErrorManager err{};
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        return err.message;
    }
    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, f);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);
    width = cinfo.output_width;
    height = cinfo.output_height;
    data.resize(width * height * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = data.data() + static_cast<std::size_t>(cinfo.output_scanline) * width * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return {};
}

std::string encode_png(std::FILE* f, std::size_t width, std::size_t height, int color_type, int depth,
                       std::size_t stride, const unsigned char* data) {
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) return "out of memory";
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        return "out of memory";
    }
    std::vector<png_const_bytep> rows(height);
    for (std::size_t y = 0; y < height; ++y) rows[y] = data + y * stride;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        return "PNG encoding failed";
    }
    png_init_io(png, f);
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), depth, color_type,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_rows(png, const_cast<png_bytepp>(rows.data()), static_cast<png_uint_32>(height));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return {};
}

}  // namespace

RgbImage load_image(const std::filesystem::path& path) {
    FilePtr f = open_file(path, "rb");
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<unsigned char> data;
    std::string error;
    switch (sniff(f.get())) {
        case Kind::Png: {
            PngRaster raster;
            error = decode_png(f.get(), PngMode::Rgb8, raster);
            width = raster.width;
            height = raster.height;
            data = std::move(raster.data);
            break;
        }
        case Kind::Jpeg: error = decode_jpeg(f.get(), width, height, data); break;
        case Kind::Unknown: error = "unsupported image format (expected PNG or JPEG)"; break;
    }
    if (!error.empty()) throw IoError(path.string() + ": " + error);
    if (width == 0 || height == 0) throw IoError(path.string() + ": image has no pixels");

    std::vector<Rgb8> pixels(width * height);
    for (std::size_t i = 0; i < pixels.size(); ++i) pixels[i] = {data[3 * i], data[3 * i + 1], data[3 * i + 2]};
    return RgbImage(width, height, std::move(pixels));
}

void save_png(const std::filesystem::path& path, const RgbImage& img) {
    FilePtr f = open_file(path, "wb");
    std::vector<unsigned char> data(img.size() * 3);
    for (std::size_t i = 0; i < img.size(); ++i) {
        data[3 * i] = img[i].r;
        data[3 * i + 1] = img[i].g;
        data[3 * i + 2] = img[i].b;
    }
    const std::string error = encode_png(f.get(), img.width(), img.height(), PNG_COLOR_TYPE_RGB, 8, img.width() * 3, data.data());
    if (!error.empty()) throw IoError(path.string() + ": " + error);
    if (std::fflush(f.get()) != 0) throw IoError(path.string() + ": write failed");
}

GrayImage load_gray_png(const std::filesystem::path& path) {
    FilePtr f = open_file(path, "rb");
    if (sniff(f.get()) != Kind::Png) throw IoError(path.string() + ": not a PNG file");
    PngRaster raster;
    const std::string error = decode_png(f.get(), PngMode::Gray, raster);
    if (!error.empty()) throw IoError(path.string() + ": " + error);

    GrayImage out;
    out.dims = {raster.width, raster.height};
    out.bit_depth = raster.depth;
    out.values.resize(out.dims.area());
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = raster.depth == 16
                            ? static_cast<std::uint16_t>((raster.data[2 * i] << 8) | raster.data[2 * i + 1])
                            : raster.data[i];
    }
    return out;
}

void save_gray_png(const std::filesystem::path& path, const GrayImage& img) {
    if (img.bit_depth != 8 && img.bit_depth != 16) throw std::invalid_argument("gray PNG depth must be 8 or 16");
    if (img.values.size() != img.dims.area()) throw std::invalid_argument("gray PNG plane does not match dimensions");
    FilePtr f = open_file(path, "wb");
    const std::size_t bytes = img.bit_depth == 16 ? 2 : 1;
    std::vector<unsigned char> data(img.values.size() * bytes);
    for (std::size_t i = 0; i < img.values.size(); ++i) {
        if (bytes == 2) {
            data[2 * i] = static_cast<unsigned char>(img.values[i] >> 8);
            data[2 * i + 1] = static_cast<unsigned char>(img.values[i] & 0xFF);
        } else {
            data[i] = static_cast<unsigned char>(std::min<std::uint16_t>(img.values[i], 255));
        }
    }
    const std::string error = encode_png(f.get(), img.dims.width, img.dims.height, PNG_COLOR_TYPE_GRAY, img.bit_depth,
                                         img.dims.width * bytes, data.data());
    if (!error.empty()) throw IoError(path.string() + ": " + error);
    if (std::fflush(f.get()) != 0) throw IoError(path.string() + ": write failed");
}

}  // namespace paltx
