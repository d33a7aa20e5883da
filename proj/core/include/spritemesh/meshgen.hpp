#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spritemesh/config.hpp"
#include "spritemesh/geometry.hpp"
#include "spritemesh/imgproc.hpp"
#include "spritemesh/raster.hpp"

namespace spritemesh {

struct Tri {
    uint32_t a = 0, b = 0, c = 0;

    friend bool operator==(const Tri& x, const Tri& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

// Final pipeline output: vertices with the exterior ring(s) first, then
// interior points; triangles indexed into that array, counter-clockwise
// (positive shoelace in x-right/y-down coordinates).
struct TriangleMesh {
    std::vector<Vec2> vertices;
    size_t hull_count = 0;  // number of leading exterior vertices
    std::vector<Tri> triangles;
};

struct VertexSet {
    std::vector<Vec2> exterior;  // concatenated component rings, in order
    std::vector<Vec2> interior;
};

// Greedy merge keeping the earlier point whenever two fall within merge_dist.
// Exterior points always win over interior ones. Throws if fewer than 3
// points survive.
VertexSet merge_vertices(const std::vector<std::vector<Vec2>>& exterior,
                         const std::vector<Vec2>& interior, double merge_dist);

// Delaunay triangulation (Bowyer-Watson, robust predicates, lexicographic
// insertion order so cocircular ties are resolved by point order). Output
// triangles are CCW, canonically rotated and sorted. Throws for fewer than
// 3 points, duplicate points, or all-collinear input.
std::vector<Tri> delaunay(std::span<const Vec2> points);

// Keeps triangles whose centroid rounds to a foreground mask pixel.
std::vector<Tri> filter_by_centroid(const std::vector<Tri>& tris,
                                    std::span<const Vec2> points, const BinaryMask& mask);

// Wall-clock milliseconds per pipeline stage.
struct StageTimings {
    double exterior_ms = 0.0;
    double interior_ms = 0.0;
    double triangulation_ms = 0.0;
};

// Full pipeline behind the mask: exterior + interior placement, merge,
// Delaunay, centroid filter, reindex (unreferenced vertices dropped,
// exterior-first order preserved).
TriangleMesh build_mesh(const RasterImage& rgb, const BinaryMask& mask,
                        const PipelineConfig& cfg, StageTimings* timings = nullptr);

struct MeshSource {
    std::string image;
    int width = 0;
    int height = 0;
};

// Deterministic mesh JSON (stable key order, 3-decimal coordinates).
std::string export_mesh_json(const TriangleMesh& mesh, const MeshSource& source);

// Parses JSON produced by export_mesh_json (or equivalent).
TriangleMesh parse_mesh_json(const std::string& text, MeshSource* source = nullptr);

}  // namespace spritemesh
