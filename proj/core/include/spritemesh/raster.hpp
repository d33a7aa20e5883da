#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace spritemesh {

// 8-bit interleaved image, 3 (RGB) or 4 (RGBA) channels, row major.
// Immutable in pipeline use; all operations return new images.
struct RasterImage {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<uint8_t> data;

    uint8_t at(int x, int y, int c) const {
        return data[(size_t(y) * width + x) * channels + c];
    }
    uint8_t& at(int x, int y, int c) {
        return data[(size_t(y) * width + x) * channels + c];
    }
    size_t pixel_count() const { return size_t(width) * height; }
};

// Single-channel 8-bit raster.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;

    uint8_t at(int x, int y) const { return pixels[size_t(y) * width + x]; }
    uint8_t& at(int x, int y) { return pixels[size_t(y) * width + x]; }
};

// Foreground mask, one byte per pixel holding 0 or 1.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> bits;

    uint8_t at(int x, int y) const { return bits[size_t(y) * width + x]; }
    uint8_t& at(int x, int y) { return bits[size_t(y) * width + x]; }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }
    size_t foreground_count() const;
};

// Largest accepted image side. Bounds worst-case memory for the pipeline.
inline constexpr int kMaxImageSide = 8192;

// Decodes a PNG file into an RGB or RGBA image. Grayscale and palette images
// are expanded to RGB, 16-bit samples are reduced to 8-bit, and a tRNS chunk
// becomes an alpha channel. Throws Error for unreadable files, non-PNG input,
// zero-dimension images, and images larger than kMaxImageSide.
RasterImage load_image(const std::filesystem::path& path);

// Encodes 1-, 3-, or 4-channel data as PNG. Output bytes are deterministic
// for identical input.
void save_png(const RasterImage& img, const std::filesystem::path& path);
void save_png(const GrayImage& img, const std::filesystem::path& path);

// True iff the image has an alpha channel that actually cuts anything out:
// at least one sample <= tau_alpha.
bool has_meaningful_alpha(const RasterImage& img, int tau_alpha = 128);

// BT.601 luma: round(0.299 R + 0.587 G + 0.114 B).
GrayImage to_grayscale(const RasterImage& img);

// Extracts one channel as a grayscale image.
GrayImage extract_channel(const RasterImage& img, int channel);

}  // namespace spritemesh
