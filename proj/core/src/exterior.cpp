#include "spritemesh/exterior.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spritemesh/error.hpp"

namespace spritemesh {

namespace {

// Recursive DP over points[lo..hi] (inclusive endpoints already kept).
void dp_recurse(const std::vector<PixelCoord>& points, size_t lo, size_t hi, double eps,
                std::vector<size_t>& keep) {
    if (hi <= lo + 1) return;
    const Vec2 a = to_vec2(points[lo]);
    const Vec2 b = to_vec2(points[hi]);
    double worst = -1.0;
    size_t worst_i = lo;
    for (size_t i = lo + 1; i < hi; ++i) {
        const double d = point_segment_dist(to_vec2(points[i]), a, b);
        if (d > worst) {
            worst = d;
            worst_i = i;
        }
    }
    if (worst > eps) {
        keep.push_back(worst_i);
        dp_recurse(points, lo, worst_i, eps, keep);
        dp_recurse(points, worst_i, hi, eps, keep);
    }
}

// DP over the wrap-around arc points[lo..n-1],points[0..hi]. Indices are
// reported in original chain positions.
void dp_recurse_wrap(const std::vector<PixelCoord>& points, size_t lo, size_t hi,
                     double eps, std::vector<size_t>& keep) {
    const size_t n = points.size();
    const size_t span = (hi + n - lo) % n;
    if (span <= 1) return;
    const Vec2 a = to_vec2(points[lo]);
    const Vec2 b = to_vec2(points[hi]);
    double worst = -1.0;
    size_t worst_i = lo;
    for (size_t s = 1; s < span; ++s) {
        const size_t i = (lo + s) % n;
        const double d = point_segment_dist(to_vec2(points[i]), a, b);
        if (d > worst) {
            worst = d;
            worst_i = i;
        }
    }
    if (worst > eps) {
        keep.push_back(worst_i);
        dp_recurse_wrap(points, lo, worst_i, eps, keep);
        dp_recurse_wrap(points, worst_i, hi, eps, keep);
    }
}

// Mutually farthest pair of chain points, by exhaustive scan over the convex
// hull (monotone chain) with original indices carried along. Ties resolve to
// the lexicographically smallest index pair.
std::pair<size_t, size_t> diameter_pair(const std::vector<PixelCoord>& points) {
    const size_t n = points.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (points[a].x != points[b].x) return points[a].x < points[b].x;
        if (points[a].y != points[b].y) return points[a].y < points[b].y;
        return a < b;
    });
    auto cross = [&](size_t o, size_t a, size_t b) {
        return (int64_t(points[a].x) - points[o].x) * (int64_t(points[b].y) - points[o].y) -
               (int64_t(points[a].y) - points[o].y) * (int64_t(points[b].x) - points[o].x);
    };
    std::vector<size_t> hull;
    for (size_t k = 0; k < n; ++k) {
        const size_t i = order[k];
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), i) <= 0)
            hull.pop_back();
        hull.push_back(i);
    }
    const size_t lower = hull.size() + 1;
    for (size_t k = n; k-- > 0;) {
        const size_t i = order[k];
        while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), i) <= 0)
            hull.pop_back();
        hull.push_back(i);
    }
    hull.pop_back();

    int64_t best = -1;
    std::pair<size_t, size_t> pair{0, 0};
    for (size_t a = 0; a < hull.size(); ++a)
        for (size_t b = a + 1; b < hull.size(); ++b) {
            const int64_t dx = points[hull[a]].x - points[hull[b]].x;
            const int64_t dy = points[hull[a]].y - points[hull[b]].y;
            const int64_t d2 = dx * dx + dy * dy;
            size_t lo = std::min(hull[a], hull[b]), hi = std::max(hull[a], hull[b]);
            if (d2 > best || (d2 == best && std::pair(lo, hi) < pair)) {
                best = d2;
                pair = {lo, hi};
            }
        }
    return pair;
}

}  // namespace

std::vector<size_t> simplify_dp(const Contour& chain, double eps) {
    const size_t n = chain.points.size();
    if (n < 2) fail("simplify_dp: chain needs at least 2 points");
    if (eps < 0) fail("simplify_dp: eps must be >= 0");

    std::vector<size_t> keep;
    if (chain.closed && n >= 3) {
        auto [i0, i1] = diameter_pair(chain.points);
        keep.push_back(i0);
        keep.push_back(i1);
        dp_recurse_wrap(chain.points, i0, i1, eps, keep);
        dp_recurse_wrap(chain.points, i1, i0, eps, keep);
    } else {
        keep.push_back(0);
        keep.push_back(n - 1);
        dp_recurse(chain.points, 0, n - 1, eps, keep);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    return keep;
}

std::vector<Vec2> subdivide_arcs(const Contour& chain, const std::vector<size_t>& keypoints,
                                 double max_arc) {
    if (keypoints.empty()) return {};
    if (max_arc <= 0) fail("subdivide_arcs: max_arc must be > 0");
    const size_t n = chain.points.size();
    static const double kDiag = std::sqrt(2.0);

    auto step_len = [&](size_t i) {
        const PixelCoord& a = chain.points[i];
        const PixelCoord& b = chain.points[(i + 1) % n];
        return (a.x != b.x && a.y != b.y) ? kDiag : 1.0;
    };

    std::vector<Vec2> out;
    const size_t arcs = chain.closed ? keypoints.size() : keypoints.size() - 1;
    for (size_t k = 0; k < arcs; ++k) {
        const size_t i0 = keypoints[k];
        const size_t i1 = keypoints[(k + 1) % keypoints.size()];
        out.push_back(to_vec2(chain.points[i0]));

        // Arc length from i0 forward to i1 along the pixel chain.
        size_t span = (i1 + n - i0) % n;
        if (!chain.closed && i1 > i0) span = i1 - i0;
        if (span == 0) continue;
        double arc_len = 0.0;
        for (size_t s = 0; s < span; ++s) arc_len += step_len((i0 + s) % n);
        if (arc_len <= max_arc) continue;

        const int pieces = int(std::ceil(arc_len / max_arc));
        // Walk the pixels once more, emitting a point at every multiple of
        // the piece length; interpolation stays on the pixel polyline.
        double walked = 0.0;
        size_t s = 0;
        for (int e = 1; e < pieces; ++e) {
            const double target = arc_len * e / pieces;
            while (s + 1 < span && walked + step_len((i0 + s) % n) < target) {
                walked += step_len((i0 + s) % n);
                ++s;
            }
            const double len = step_len((i0 + s) % n);
            const double t = std::clamp((target - walked) / len, 0.0, 1.0);
            const Vec2 a = to_vec2(chain.points[(i0 + s) % n]);
            const Vec2 b = to_vec2(chain.points[(i0 + s + 1) % n]);
            out.push_back({float(a.x + t * (b.x - a.x)), float(a.y + t * (b.y - a.y))});
        }
    }
    if (!chain.closed) out.push_back(to_vec2(chain.points[keypoints.back()]));
    return out;
}

std::vector<int> proportional_allocation(const std::vector<double>& weights, int total,
                                         int minimum) {
    const double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
    const size_t n = weights.size();
    std::vector<int> alloc(n, 0);
    std::vector<double> frac(n, 0.0);
    int used = 0;
    for (size_t i = 0; i < n; ++i) {
        const double quota = wsum > 0 ? total * weights[i] / wsum : double(total) / n;
        alloc[i] = int(std::floor(quota));
        frac[i] = quota - alloc[i];
        used += alloc[i];
    }
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (frac[a] != frac[b]) return frac[a] > frac[b];
        if (alloc[a] != alloc[b]) return alloc[a] < alloc[b];
        return a < b;
    });
    for (size_t k = 0; used < total && k < n; ++k, ++used) ++alloc[order[k]];
    for (int& a : alloc) a = std::max(a, minimum);
    return alloc;
}

BinaryMask smooth_mask(const BinaryMask& mask, double sigma) {
    GrayImage img;
    img.width = mask.width;
    img.height = mask.height;
    img.pixels.resize(mask.bits.size());
    for (size_t i = 0; i < mask.bits.size(); ++i) img.pixels[i] = mask.bits[i] ? 255 : 0;
    // Back to binary at the midpoint of the value range.
    return gray_threshold(gaussian_blur(img, sigma), 127);
}

std::vector<std::vector<Vec2>> place_exterior(const BinaryMask& mask,
                                              const PipelineConfig& cfg) {
    const BinaryMask smoothed = smooth_mask(mask, cfg.mask_sigma);
    if (smoothed.foreground_count() == 0) fail("place_exterior: empty mask after smoothing");

    const std::vector<Contour> contours =
        trace_outer_contours(smoothed, cfg.min_component_area);
    if (contours.empty()) fail("place_exterior: all components below area threshold");

    std::vector<double> perimeters;
    perimeters.reserve(contours.size());
    for (const Contour& c : contours) perimeters.push_back(c.perimeter);
    const std::vector<int> budget = proportional_allocation(perimeters, cfg.n_target, 4);

    std::vector<std::vector<Vec2>> rings;
    rings.reserve(contours.size());
    for (size_t i = 0; i < contours.size(); ++i) {
        const double eps = cfg.dp_eps_frac * contours[i].perimeter;
        const double max_arc = contours[i].perimeter / budget[i];
        const std::vector<size_t> keys = simplify_dp(contours[i], eps);
        rings.push_back(subdivide_arcs(contours[i], keys, max_arc));
    }
    return rings;
}

}  // namespace spritemesh
