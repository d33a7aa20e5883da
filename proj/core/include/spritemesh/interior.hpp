#pragma once

#include <vector>

#include "spritemesh/config.hpp"
#include "spritemesh/geometry.hpp"
#include "spritemesh/imgproc.hpp"

namespace spritemesh {

// Internal-boundary edge map: bilateral filter, multi-channel canny, AND with
// the eroded mask, then a morphological close. Edges near the silhouette are
// excluded by construction.
EdgeMap detect_interior_edges(const RasterImage& rgb, const BinaryMask& mask,
                              const PipelineConfig& cfg);

// Interior vertices along detected boundaries: chains shorter than
// interior_min_len are dropped; per chain DP keypoints plus arc subdivision;
// candidates gated by boundary distance, then greedily deduplicated with
// radius dedup_radius (longest chains first, points in chain order).
std::vector<Vec2> place_interior(const RasterImage& rgb, const BinaryMask& mask,
                                 const PipelineConfig& cfg);

}  // namespace spritemesh
