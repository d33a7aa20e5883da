#pragma once

#include <vector>

#include "spritemesh/geometry.hpp"
#include "spritemesh/raster.hpp"

namespace spritemesh {

// Edge pixels, one byte per pixel holding 0 or 1.
struct EdgeMap {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> bits;

    uint8_t at(int x, int y) const { return bits[size_t(y) * width + x]; }
    uint8_t& at(int x, int y) { return bits[size_t(y) * width + x]; }
};

// Ordered 8-connected pixel chain. Closed chains wrap around (last point is
// 8-connected to the first); perimeter is the arc length with axial steps
// counting 1 and diagonal steps sqrt(2), including the wrap step when closed.
struct Contour {
    std::vector<PixelCoord> points;
    bool closed = false;
    double perimeter = 0.0;
};

// Euclidean distance to the nearest background pixel; 0 on background.
// Masks with no background at all get the width+height sentinel everywhere.
struct DistField {
    int width = 0;
    int height = 0;
    std::vector<float> values;

    float at(int x, int y) const { return values[size_t(y) * width + x]; }
};

// --- thresholding ---------------------------------------------------------

// bit = 1 iff alpha > tau_alpha (strict). Requires a 4-channel image.
BinaryMask alpha_threshold(const RasterImage& img, int tau_alpha);

// Thresholds a grayscale image: bit = 1 iff value > threshold.
BinaryMask gray_threshold(const GrayImage& img, int threshold);

// --- filters ---------------------------------------------------------------

// Separable gaussian, kernel radius ceil(3*sigma), normalized to sum 1,
// borders replicated.
GrayImage gaussian_blur(const GrayImage& src, double sigma);

// Joint bilateral filter over the RGB channels with window diameter d.
// Range distance is the L1 color difference summed over RGB; a 4th channel
// passes through untouched.
RasterImage bilateral_filter(const RasterImage& src, int d, double sigma_color,
                             double sigma_space);

// Canny on one channel: 3x3 Sobel, L2 magnitude, 4-bin non-maximum
// suppression, hysteresis with 8-connected linking. No internal blur.
EdgeMap canny(const GrayImage& src, double t_low, double t_high);

// Bitwise OR of canny over grayscale, R, G and B.
EdgeMap multi_channel_canny(const RasterImage& src, double t_low, double t_high);

// --- morphology and distance ------------------------------------------------

// Binary erosion with a full k x k square element, repeated `iterations`
// times. Out-of-bounds counts as background.
BinaryMask erode(const BinaryMask& mask, int kernel, int iterations);

// Morphological closing (dilate then erode) with a k x k square element.
EdgeMap close_edges(const EdgeMap& edges, int kernel);

// Exact Euclidean distance transform.
DistField distance_transform(const BinaryMask& mask);

// --- contours ----------------------------------------------------------------

// Traces the outer border of every 8-connected foreground component with
// filled pixel area >= min_area. Chains are closed, 8-connected and oriented
// counter-clockwise (positive shoelace in x-right/y-down coordinates),
// ordered by their topmost-leftmost pixel.
std::vector<Contour> trace_outer_contours(const BinaryMask& mask, int min_area = 100);

// Partitions the edge pixels of each 8-connected component into chains.
// A component with endpoints yields its longest endpoint-to-endpoint path
// first, then chains over the remainder; a component without endpoints
// yields a closed cycle. Every edge pixel lands in exactly one chain.
std::vector<Contour> extract_edge_chains(const EdgeMap& edges);

// Arc length of a pixel step sequence (1 per axial step, sqrt(2) per diagonal).
double chain_arc_length(const std::vector<PixelCoord>& points, bool closed);

}  // namespace spritemesh
