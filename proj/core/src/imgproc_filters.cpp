#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>

#include "spritemesh/error.hpp"
#include "spritemesh/imgproc.hpp"
#include "spritemesh/parallel.hpp"

namespace spritemesh {

BinaryMask alpha_threshold(const RasterImage& img, int tau_alpha) {
    if (img.channels != 4) fail("alpha_threshold: image has no alpha channel");
    BinaryMask mask;
    mask.width = img.width;
    mask.height = img.height;
    mask.bits.resize(img.pixel_count());
    const size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i) mask.bits[i] = img.data[i * 4 + 3] > tau_alpha ? 1 : 0;
    return mask;
}

BinaryMask gray_threshold(const GrayImage& img, int threshold) {
    BinaryMask mask;
    mask.width = img.width;
    mask.height = img.height;
    mask.bits.resize(img.pixels.size());
    for (size_t i = 0; i < img.pixels.size(); ++i)
        mask.bits[i] = img.pixels[i] > threshold ? 1 : 0;
    return mask;
}

GrayImage gaussian_blur(const GrayImage& src, double sigma) {
    if (sigma <= 0) fail("gaussian_blur: sigma must be > 0");
    const int radius = int(std::ceil(3.0 * sigma));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        kernel[i + radius] = std::exp(-(double(i) * i) / (2.0 * sigma * sigma));
        sum += kernel[i + radius];
    }
    for (double& k : kernel) k /= sum;

    const int w = src.width, h = src.height;
    auto clampx = [w](int x) { return std::clamp(x, 0, w - 1); };
    auto clampy = [h](int y) { return std::clamp(y, 0, h - 1); };

    std::vector<double> tmp(size_t(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += kernel[i + radius] * src.at(clampx(x + i), y);
            tmp[size_t(y) * w + x] = acc;
        }

    GrayImage out;
    out.width = w;
    out.height = h;
    out.pixels.resize(size_t(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += kernel[i + radius] * tmp[size_t(clampy(y + i)) * w + x];
            long v = std::lround(acc);
            out.pixels[size_t(y) * w + x] = uint8_t(std::clamp(v, 0L, 255L));
        }
    return out;
}

RasterImage bilateral_filter(const RasterImage& src, int d, double sigma_color,
                             double sigma_space) {
    if (d <= 0 || d % 2 == 0) fail("bilateral_filter: window diameter must be odd and > 0");
    if (sigma_color <= 0 || sigma_space <= 0) fail("bilateral_filter: sigmas must be > 0");
    if (src.channels < 3) fail("bilateral_filter: needs an RGB(A) image");

    const int r = (d - 1) / 2;
    const int w = src.width, h = src.height, ch = src.channels;

    // Range weights indexed by the integer L1 RGB difference, spatial weights
    // by window offset. The window is clipped at the image borders, which
    // keeps the normalization exact.
    std::vector<double> range_lut(3 * 255 + 1);
    for (int c = 0; c < int(range_lut.size()); ++c)
        range_lut[c] = std::exp(-(double(c) * c) / (2.0 * sigma_color * sigma_color));
    std::vector<double> space_lut(size_t(d) * d);
    for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx)
            space_lut[size_t(dy + r) * d + (dx + r)] =
                std::exp(-double(dx * dx + dy * dy) / (2.0 * sigma_space * sigma_space));

    RasterImage out;
    out.width = w;
    out.height = h;
    out.channels = ch;
    out.data.resize(src.data.size());

    parallel_for_rows(0, h, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            for (int x = 0; x < w; ++x) {
                const uint8_t* p = &src.data[(size_t(y) * w + x) * ch];
                double acc[3] = {0, 0, 0};
                double wsum = 0.0;
                const int ylo = std::max(0, y - r), yhi = std::min(h - 1, y + r);
                const int xlo = std::max(0, x - r), xhi = std::min(w - 1, x + r);
                for (int qy = ylo; qy <= yhi; ++qy) {
                    for (int qx = xlo; qx <= xhi; ++qx) {
                        const uint8_t* q = &src.data[(size_t(qy) * w + qx) * ch];
                        const int dc = std::abs(int(p[0]) - q[0]) + std::abs(int(p[1]) - q[1]) +
                                       std::abs(int(p[2]) - q[2]);
                        const double wgt =
                            space_lut[size_t(qy - y + r) * d + (qx - x + r)] * range_lut[dc];
                        acc[0] += wgt * q[0];
                        acc[1] += wgt * q[1];
                        acc[2] += wgt * q[2];
                        wsum += wgt;
                    }
                }
                uint8_t* o = &out.data[(size_t(y) * w + x) * ch];
                for (int c = 0; c < 3; ++c) {
                    long v = std::lround(acc[c] / wsum);
                    o[c] = uint8_t(std::clamp(v, 0L, 255L));
                }
                if (ch == 4) o[3] = p[3];
            }
        }
    });
    return out;
}

namespace {

// Sobel gradients with replicated borders; magnitudes kept squared so all
// comparisons stay in exact integer arithmetic.
struct Gradients {
    std::vector<int32_t> gx, gy;
    std::vector<int64_t> mag2;
};

Gradients sobel(const GrayImage& src) {
    const int w = src.width, h = src.height;
    Gradients g;
    g.gx.resize(size_t(w) * h);
    g.gy.resize(size_t(w) * h);
    g.mag2.resize(size_t(w) * h);
    auto pix = [&](int x, int y) -> int {
        return src.at(std::clamp(x, 0, w - 1), std::clamp(y, 0, h - 1));
    };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int a = pix(x - 1, y - 1), b = pix(x, y - 1), c = pix(x + 1, y - 1);
            const int d = pix(x - 1, y), f = pix(x + 1, y);
            const int p = pix(x - 1, y + 1), q = pix(x, y + 1), s = pix(x + 1, y + 1);
            const int gx = (c + 2 * f + s) - (a + 2 * d + p);
            const int gy = (p + 2 * q + s) - (a + 2 * b + c);
            const size_t i = size_t(y) * w + x;
            g.gx[i] = gx;
            g.gy[i] = gy;
            g.mag2[i] = int64_t(gx) * gx + int64_t(gy) * gy;
        }
    }
    return g;
}

}  // namespace

EdgeMap canny(const GrayImage& src, double t_low, double t_high) {
    if (!(t_low < t_high)) fail("canny: t_low must be < t_high");
    const int w = src.width, h = src.height;
    const Gradients g = sobel(src);
    const double low2 = t_low * t_low;
    const double high2 = t_high * t_high;

    auto mag2_at = [&](int x, int y) -> int64_t {
        if (x < 0 || x >= w || y < 0 || y >= h) return 0;
        return g.mag2[size_t(y) * w + x];
    };

    // Non-maximum suppression. The strict/non-strict neighbor pair thins
    // two-pixel plateaus (a perfect step produces equal magnitudes on both
    // sides) down to one pixel.
    std::vector<uint8_t> nms(size_t(w) * h, 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const size_t i = size_t(y) * w + x;
            const int64_t m = g.mag2[i];
            if (double(m) < low2) continue;
            double ang = std::atan2(double(g.gy[i]), double(g.gx[i])) * 180.0 / M_PI;
            if (ang < 0) ang += 180.0;
            int npx, npy, nnx, nny;
            if (ang < 22.5 || ang >= 157.5) {
                npx = x + 1; npy = y; nnx = x - 1; nny = y;
            } else if (ang < 67.5) {
                npx = x + 1; npy = y + 1; nnx = x - 1; nny = y - 1;
            } else if (ang < 112.5) {
                npx = x; npy = y + 1; nnx = x; nny = y - 1;
            } else {
                npx = x - 1; npy = y + 1; nnx = x + 1; nny = y - 1;
            }
            if (m >= mag2_at(npx, npy) && m > mag2_at(nnx, nny)) nms[i] = 1;
        }
    }

    // Hysteresis: grow from strong seeds across weak survivors, 8-connected.
    EdgeMap out;
    out.width = w;
    out.height = h;
    out.bits.assign(size_t(w) * h, 0);
    std::deque<PixelCoord> queue;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const size_t i = size_t(y) * w + x;
            if (nms[i] && double(g.mag2[i]) >= high2 && !out.bits[i]) {
                out.bits[i] = 1;
                queue.push_back({x, y});
                while (!queue.empty()) {
                    const PixelCoord p = queue.front();
                    queue.pop_front();
                    for (int dy = -1; dy <= 1; ++dy)
                        for (int dx = -1; dx <= 1; ++dx) {
                            const int nx = p.x + dx, ny = p.y + dy;
                            if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                            const size_t j = size_t(ny) * w + nx;
                            if (!out.bits[j] && nms[j] && double(g.mag2[j]) >= low2) {
                                out.bits[j] = 1;
                                queue.push_back({nx, ny});
                            }
                        }
                }
            }
        }
    return out;
}

EdgeMap multi_channel_canny(const RasterImage& src, double t_low, double t_high) {
    if (src.channels < 3) fail("multi_channel_canny: needs an RGB(A) image");
    EdgeMap combined = canny(to_grayscale(src), t_low, t_high);
    for (int c = 0; c < 3; ++c) {
        const EdgeMap e = canny(extract_channel(src, c), t_low, t_high);
        for (size_t i = 0; i < combined.bits.size(); ++i) combined.bits[i] |= e.bits[i];
    }
    return combined;
}

}  // namespace spritemesh
