#include "spritemesh/raster.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <numeric>

#include "spritemesh/error.hpp"

namespace spritemesh {

size_t BinaryMask::foreground_count() const {
    return std::accumulate(bits.begin(), bits.end(), size_t(0));
}

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

void png_error_fn(png_structp png, png_const_charp msg) {
    // libpng longjmps after this returns; stash the message for the catch site.
    auto* err = static_cast<std::string*>(png_get_error_ptr(png));
    if (err) *err = msg ? msg : "unknown libpng error";
    png_longjmp(png, 1);
}

void png_warning_fn(png_structp, png_const_charp) {}

}  // namespace

RasterImage load_image(const std::filesystem::path& path) {
    FilePtr file(fopen(path.string().c_str(), "rb"));
    if (!file) fail(strf("unreadable file: %s", path.string().c_str()));

    unsigned char sig[8];
    if (fread(sig, 1, 8, file.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0)
        fail(strf("unsupported format (not a PNG): %s", path.string().c_str()));

    std::string pngerr;
    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, &pngerr, png_error_fn, png_warning_fn);
    if (!png) fail("libpng allocation failure");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        fail("libpng allocation failure");
    }

    RasterImage img;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(strf("unreadable file: %s (%s)", path.string().c_str(), pngerr.c_str()));
    }

    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int color_type = png_get_color_type(png, info);
    const int bit_depth = png_get_bit_depth(png, info);

    if (w == 0 || h == 0) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(strf("zero-dimension image: %s", path.string().c_str()));
    }
    if (w > kMaxImageSide || h > kMaxImageSide) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(strf("image too large (%ux%u, limit %d per side): %s", unsigned(w), unsigned(h),
                  kMaxImageSide, path.string().c_str()));
    }

    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    const int out_channels = int(png_get_channels(png, info));
    if (out_channels != 3 && out_channels != 4) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(strf("unsupported channel layout (%d) in %s", out_channels, path.string().c_str()));
    }

    img.width = int(w);
    img.height = int(h);
    img.channels = out_channels;
    img.data.resize(size_t(w) * h * out_channels);
    rows.resize(h);
    for (png_uint_32 y = 0; y < h; ++y)
        rows[y] = img.data.data() + size_t(y) * w * out_channels;

    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

namespace {

void save_png_impl(const uint8_t* data, int width, int height, int channels,
                   const std::filesystem::path& path) {
    if (width <= 0 || height <= 0) fail("cannot encode zero-dimension image");
    int color_type;
    switch (channels) {
        case 1: color_type = PNG_COLOR_TYPE_GRAY; break;
        case 3: color_type = PNG_COLOR_TYPE_RGB; break;
        case 4: color_type = PNG_COLOR_TYPE_RGBA; break;
        default: fail(strf("cannot encode %d-channel image as PNG", channels));
    }

    FilePtr file(fopen(path.string().c_str(), "wb"));
    if (!file) fail(strf("cannot open for writing: %s", path.string().c_str()));

    std::string pngerr;
    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, &pngerr, png_error_fn, png_warning_fn);
    if (!png) fail("libpng allocation failure");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        fail("libpng allocation failure");
    }

    std::vector<png_bytep> rows(height);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(strf("PNG write failed: %s (%s)", path.string().c_str(), pngerr.c_str()));
    }

    png_init_io(png, file.get());
    png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_set_compression_level(png, 6);
    png_write_info(png, info);
    for (int y = 0; y < height; ++y)
        rows[y] = const_cast<png_bytep>(data + size_t(y) * width * channels);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

}  // namespace

void save_png(const RasterImage& img, const std::filesystem::path& path) {
    save_png_impl(img.data.data(), img.width, img.height, img.channels, path);
}

void save_png(const GrayImage& img, const std::filesystem::path& path) {
    save_png_impl(img.pixels.data(), img.width, img.height, 1, path);
}

bool has_meaningful_alpha(const RasterImage& img, int tau_alpha) {
    if (img.channels != 4) return false;
    const size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i)
        if (img.data[i * 4 + 3] <= tau_alpha) return true;
    return false;
}

GrayImage to_grayscale(const RasterImage& img) {
    GrayImage out;
    out.width = img.width;
    out.height = img.height;
    out.pixels.resize(img.pixel_count());
    const size_t n = img.pixel_count();
    const int ch = img.channels;
    for (size_t i = 0; i < n; ++i) {
        const uint8_t* p = img.data.data() + i * ch;
        const double luma = 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2];
        long v = std::lround(luma);
        if (v < 0) v = 0;
        if (v > 255) v = 255;
        out.pixels[i] = uint8_t(v);
    }
    return out;
}

GrayImage extract_channel(const RasterImage& img, int channel) {
    if (channel < 0 || channel >= img.channels)
        fail(strf("channel %d out of range for %d-channel image", channel, img.channels));
    GrayImage out;
    out.width = img.width;
    out.height = img.height;
    out.pixels.resize(img.pixel_count());
    const size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i) out.pixels[i] = img.data[i * img.channels + channel];
    return out;
}

}  // namespace spritemesh
