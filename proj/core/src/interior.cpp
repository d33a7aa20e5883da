#include "spritemesh/interior.hpp"

#include <cmath>

#include "spritemesh/error.hpp"
#include "spritemesh/exterior.hpp"

namespace spritemesh {

EdgeMap detect_interior_edges(const RasterImage& rgb, const BinaryMask& mask,
                              const PipelineConfig& cfg) {
    if (rgb.width != mask.width || rgb.height != mask.height)
        fail("detect_interior_edges: image and mask dimensions differ");

    const RasterImage filtered =
        bilateral_filter(rgb, cfg.bilateral_d, cfg.bilateral_sigma_color,
                         cfg.bilateral_sigma_space);
    EdgeMap edges = multi_channel_canny(filtered, cfg.canny_low, cfg.canny_high);

    const BinaryMask eroded = erode(mask, cfg.erode_kernel, cfg.erode_iters);
    for (size_t i = 0; i < edges.bits.size(); ++i) edges.bits[i] &= eroded.bits[i];

    return close_edges(edges, cfg.close_kernel);
}

std::vector<Vec2> place_interior(const RasterImage& rgb, const BinaryMask& mask,
                                 const PipelineConfig& cfg) {
    const EdgeMap edges = detect_interior_edges(rgb, mask, cfg);
    const std::vector<Contour> chains = extract_edge_chains(edges);
    const DistField dt = distance_transform(mask);

    std::vector<Vec2> kept;
    for (const Contour& chain : chains) {
        if (chain.perimeter < cfg.interior_min_len) continue;
        const double eps = cfg.interior_dp_frac * chain.perimeter;
        const std::vector<size_t> keys = simplify_dp(chain, eps);
        const std::vector<Vec2> candidates = subdivide_arcs(chain, keys, cfg.interior_seg_len);

        for (const Vec2& p : candidates) {
            const int px = int(std::lround(p.x));
            const int py = int(std::lround(p.y));
            if (!mask.in_bounds(px, py)) continue;
            if (dt.at(px, py) < cfg.interior_min_boundary_dist) continue;
            bool clear = true;
            for (const Vec2& q : kept)
                if (dist(p, q) < cfg.dedup_radius) {
                    clear = false;
                    break;
                }
            if (clear) kept.push_back(p);
        }
    }
    return kept;
}

}  // namespace spritemesh
