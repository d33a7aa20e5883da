#include <algorithm>
#include <cmath>
#include <limits>

#include "spritemesh/error.hpp"
#include "spritemesh/imgproc.hpp"

namespace spritemesh {

namespace {

// One erosion/dilation pass with a k x k square element, separable into a
// horizontal and a vertical min/max pass. Out-of-bounds is background, so the
// erosion pads with 0 and the dilation pads with nothing.
std::vector<uint8_t> morph_pass(const std::vector<uint8_t>& bits, int w, int h, int r,
                                bool is_erode) {
    std::vector<uint8_t> row(size_t(w) * h);
    for (int y = 0; y < h; ++y) {
        const uint8_t* src = &bits[size_t(y) * w];
        uint8_t* dst = &row[size_t(y) * w];
        for (int x = 0; x < w; ++x) {
            uint8_t v = is_erode ? 1 : 0;
            for (int i = x - r; i <= x + r; ++i) {
                const uint8_t s = (i < 0 || i >= w) ? 0 : src[i];
                if (is_erode)
                    v &= s;
                else
                    v |= s;
            }
            dst[x] = v;
        }
    }
    std::vector<uint8_t> out(size_t(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            uint8_t v = is_erode ? 1 : 0;
            for (int j = y - r; j <= y + r; ++j) {
                const uint8_t s = (j < 0 || j >= h) ? 0 : row[size_t(j) * w + x];
                if (is_erode)
                    v &= s;
                else
                    v |= s;
            }
            out[size_t(y) * w + x] = v;
        }
    return out;
}

}  // namespace

BinaryMask erode(const BinaryMask& mask, int kernel, int iterations) {
    if (kernel <= 0 || kernel % 2 == 0) fail("erode: kernel must be odd and > 0");
    BinaryMask out = mask;
    const int r = kernel / 2;
    for (int it = 0; it < iterations; ++it)
        out.bits = morph_pass(out.bits, out.width, out.height, r, true);
    return out;
}

EdgeMap close_edges(const EdgeMap& edges, int kernel) {
    if (kernel <= 0 || kernel % 2 == 0) fail("close_edges: kernel must be odd and > 0");
    const int r = kernel / 2;
    EdgeMap out = edges;
    out.bits = morph_pass(out.bits, out.width, out.height, r, false);
    out.bits = morph_pass(out.bits, out.width, out.height, r, true);
    return out;
}

namespace {

constexpr double kInf = 1e30;

// Lower-envelope-of-parabolas pass for the squared distance transform.
// Exact for integer-valued f: envelope breakpoints are rationals, and any
// rounding in their computation can only swap parabolas at points where both
// attain the same integer minimum.
void dt_1d(const double* f, double* d, int n, int* v, double* z) {
    int k = 0;
    v[0] = 0;
    z[0] = -kInf;
    z[1] = kInf;
    for (int q = 1; q < n; ++q) {
        double s = ((f[q] + double(q) * q) - (f[v[k]] + double(v[k]) * v[k])) /
                   (2.0 * q - 2.0 * v[k]);
        while (s <= z[k]) {
            --k;
            s = ((f[q] + double(q) * q) - (f[v[k]] + double(v[k]) * v[k])) /
                (2.0 * q - 2.0 * v[k]);
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kInf;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        d[q] = double(q - v[k]) * (q - v[k]) + f[v[k]];
    }
}

}  // namespace

DistField distance_transform(const BinaryMask& mask) {
    const int w = mask.width, h = mask.height;
    DistField out;
    out.width = w;
    out.height = h;
    out.values.resize(size_t(w) * h);

    bool any_background = false;
    for (uint8_t b : mask.bits)
        if (!b) {
            any_background = true;
            break;
        }
    if (!any_background) {
        std::fill(out.values.begin(), out.values.end(), float(w + h));
        return out;
    }

    std::vector<double> d2(size_t(w) * h);
    for (size_t i = 0; i < d2.size(); ++i) d2[i] = mask.bits[i] ? kInf : 0.0;

    const int n = std::max(w, h);
    std::vector<double> f(n), d(n);
    std::vector<int> v(n);
    std::vector<double> z(n + 1);

    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) f[y] = d2[size_t(y) * w + x];
        dt_1d(f.data(), d.data(), h, v.data(), z.data());
        for (int y = 0; y < h; ++y) d2[size_t(y) * w + x] = d[y];
    }
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) f[x] = d2[size_t(y) * w + x];
        dt_1d(f.data(), d.data(), w, v.data(), z.data());
        for (int x = 0; x < w; ++x) out.values[size_t(y) * w + x] = float(std::sqrt(d[x]));
    }
    return out;
}

}  // namespace spritemesh
