#pragma once

#include <vector>

#include "spritemesh/config.hpp"
#include "spritemesh/geometry.hpp"
#include "spritemesh/imgproc.hpp"

namespace spritemesh {

// Douglas-Peucker keypoint selection. Returns sorted indices into the chain,
// always containing the recursion seeds; every dropped point deviates at most
// eps from the segment covering it. Closed chains are seeded with the two
// mutually farthest points, open chains with their endpoints.
std::vector<size_t> simplify_dp(const Contour& chain, double eps);

// Inserts ceil(L / max_arc) - 1 evenly spaced vertices along the contour
// pixels of every inter-keypoint arc longer than max_arc. Keypoints are kept
// verbatim, in chain order.
std::vector<Vec2> subdivide_arcs(const Contour& chain, const std::vector<size_t>& keypoints,
                                 double max_arc);

// Full exterior placement: smooth + rethreshold the mask, trace component
// contours, drop small components, split the vertex budget proportionally to
// perimeter (largest remainder, at least 4 each), then DP + arc subdivision
// per component. One ordered ring of points per kept component.
std::vector<std::vector<Vec2>> place_exterior(const BinaryMask& mask,
                                              const PipelineConfig& cfg);

// The smoothing applied to the mask before tracing: gaussian blur of the 0/255
// mask image, rethresholded at the midpoint of the value range.
BinaryMask smooth_mask(const BinaryMask& mask, double sigma);

// Largest-remainder split of `total` proportionally to `weights`, with a
// floor of `minimum` per entry. Deterministic: remainder ties go to the entry
// with the smaller integer share, then to the earlier entry.
std::vector<int> proportional_allocation(const std::vector<double>& weights, int total,
                                         int minimum);

}  // namespace spritemesh
