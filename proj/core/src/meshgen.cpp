#include "spritemesh/meshgen.hpp"

#include <chrono>
#include <cmath>

#include <nlohmann/json.hpp>

#include "jsonfmt.hpp"
#include "spritemesh/error.hpp"
#include "spritemesh/exterior.hpp"
#include "spritemesh/interior.hpp"

namespace spritemesh {

VertexSet merge_vertices(const std::vector<std::vector<Vec2>>& exterior,
                         const std::vector<Vec2>& interior, double merge_dist) {
    VertexSet set;
    auto is_clear = [&](const Vec2& p) {
        for (const Vec2& q : set.exterior)
            if (dist(p, q) < merge_dist) return false;
        for (const Vec2& q : set.interior)
            if (dist(p, q) < merge_dist) return false;
        return true;
    };
    for (const auto& ring : exterior)
        for (const Vec2& p : ring)
            if (is_clear(p)) set.exterior.push_back(p);
    for (const Vec2& p : interior)
        if (is_clear(p)) set.interior.push_back(p);

    if (set.exterior.size() + set.interior.size() < 3)
        fail("merge_vertices: fewer than 3 points survive the merge");
    return set;
}

std::vector<Tri> filter_by_centroid(const std::vector<Tri>& tris,
                                    std::span<const Vec2> points, const BinaryMask& mask) {
    std::vector<Tri> kept;
    kept.reserve(tris.size());
    for (const Tri& t : tris) {
        const double cx = (double(points[t.a].x) + points[t.b].x + points[t.c].x) / 3.0;
        const double cy = (double(points[t.a].y) + points[t.b].y + points[t.c].y) / 3.0;
        const int px = int(std::lround(cx));
        const int py = int(std::lround(cy));
        if (!mask.in_bounds(px, py)) continue;
        if (mask.at(px, py)) kept.push_back(t);
    }
    return kept;
}

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

TriangleMesh build_mesh(const RasterImage& rgb, const BinaryMask& mask,
                        const PipelineConfig& cfg, StageTimings* timings) {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::vector<Vec2>> exterior = place_exterior(mask, cfg);
    if (timings) timings->exterior_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const std::vector<Vec2> interior = place_interior(rgb, mask, cfg);
    if (timings) timings->interior_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const VertexSet merged = merge_vertices(exterior, interior, cfg.vertex_merge_dist);

    std::vector<Vec2> points = merged.exterior;
    points.insert(points.end(), merged.interior.begin(), merged.interior.end());

    const std::vector<Tri> all = delaunay(points);
    const std::vector<Tri> kept = filter_by_centroid(all, points, mask);

    // Reindex: drop unreferenced vertices, keep exterior-first order.
    std::vector<uint32_t> remap(points.size(), UINT32_MAX);
    TriangleMesh mesh;
    for (const Tri& t : kept)
        for (const uint32_t v : {t.a, t.b, t.c}) remap[v] = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        if (remap[i] == UINT32_MAX) continue;
        remap[i] = uint32_t(mesh.vertices.size());
        mesh.vertices.push_back(points[i]);
        if (i < merged.exterior.size()) mesh.hull_count = mesh.vertices.size();
    }
    mesh.triangles.reserve(kept.size());
    for (const Tri& t : kept)
        mesh.triangles.push_back({remap[t.a], remap[t.b], remap[t.c]});
    if (timings) timings->triangulation_ms = ms_since(t0);
    return mesh;
}

std::string export_mesh_json(const TriangleMesh& mesh, const MeshSource& source) {
    std::string out;
    out.reserve(mesh.vertices.size() * 24 + mesh.triangles.size() * 16 + 256);
    out += "{\"version\":1,\"source\":{\"image\":\"";
    out += json_escape(source.image);
    out += "\",\"width\":" + std::to_string(source.width);
    out += ",\"height\":" + std::to_string(source.height);
    out += "},\"hullCount\":" + std::to_string(mesh.hull_count);
    out += ",\"vertices\":[";
    for (size_t i = 0; i < mesh.vertices.size(); ++i) {
        if (i) out += ',';
        out += '[';
        out += fmt_f3(mesh.vertices[i].x);
        out += ',';
        out += fmt_f3(mesh.vertices[i].y);
        out += ']';
    }
    out += "],\"triangles\":[";
    for (size_t i = 0; i < mesh.triangles.size(); ++i) {
        if (i) out += ',';
        const Tri& t = mesh.triangles[i];
        out += '[' + std::to_string(t.a) + ',' + std::to_string(t.b) + ',' +
               std::to_string(t.c) + ']';
    }
    out += "],\"stats\":{\"exterior\":" + std::to_string(mesh.hull_count);
    out += ",\"interior\":" + std::to_string(mesh.vertices.size() - mesh.hull_count);
    out += ",\"triangleCount\":" + std::to_string(mesh.triangles.size());
    out += "}}\n";
    return out;
}

TriangleMesh parse_mesh_json(const std::string& text, MeshSource* source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(strf("mesh JSON parse error: %s", e.what()));
    }
    TriangleMesh mesh;
    try {
        if (source) {
            source->image = j.at("source").at("image").get<std::string>();
            source->width = j.at("source").at("width").get<int>();
            source->height = j.at("source").at("height").get<int>();
        }
        mesh.hull_count = j.at("hullCount").get<size_t>();
        for (const auto& v : j.at("vertices"))
            mesh.vertices.push_back({v.at(0).get<float>(), v.at(1).get<float>()});
        for (const auto& t : j.at("triangles"))
            mesh.triangles.push_back(
                {t.at(0).get<uint32_t>(), t.at(1).get<uint32_t>(), t.at(2).get<uint32_t>()});
    } catch (const nlohmann::json::exception& e) {
        fail(strf("mesh JSON missing field: %s", e.what()));
    }
    if (mesh.hull_count > mesh.vertices.size()) fail("mesh JSON: hullCount exceeds vertex count");
    for (const Tri& t : mesh.triangles)
        if (t.a >= mesh.vertices.size() || t.b >= mesh.vertices.size() ||
            t.c >= mesh.vertices.size())
            fail("mesh JSON: triangle index out of range");
    return mesh;
}

}  // namespace spritemesh
