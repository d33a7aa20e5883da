#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "spritemesh/error.hpp"
#include "spritemesh/meshgen.hpp"
#include "spritemesh/predicates.hpp"

namespace spritemesh {

namespace {

// Bowyer-Watson over the input points plus a large enclosing triangle whose
// vertices are stripped at the end. With exact predicates the intermediate
// structure is the Delaunay triangulation of points + super vertices, so
// every surviving real triangle satisfies the empty-circumcircle property
// against all real points.
class BowyerWatson {
public:
    explicit BowyerWatson(std::span<const Vec2> points) {
        const int n = int(points.size());
        xs_.resize(n + 3);
        ys_.resize(n + 3);
        double minx = points[0].x, maxx = points[0].x;
        double miny = points[0].y, maxy = points[0].y;
        for (int i = 0; i < n; ++i) {
            xs_[i] = points[i].x;
            ys_[i] = points[i].y;
            minx = std::min(minx, xs_[i]);
            maxx = std::max(maxx, xs_[i]);
            miny = std::min(miny, ys_[i]);
            maxy = std::max(maxy, ys_[i]);
        }
        const double cx = (minx + maxx) / 2, cy = (miny + maxy) / 2;
        const double d = std::max({maxx - minx, maxy - miny, 1.0}) * 1024.0;
        xs_[n] = cx - 3 * d;
        ys_[n] = cy - d;
        xs_[n + 1] = cx + 3 * d;
        ys_[n + 1] = cy - d;
        xs_[n + 2] = cx;
        ys_[n + 2] = cy + 3 * d;
        n_ = n;

        tris_.push_back({{n, n + 1, n + 2}, {-1, -1, -1}});
        alive_.push_back(1);
    }

    void insert(int p) {
        const int t0 = locate(p);
        // Cavity: triangles whose circumcircle strictly contains p.
        cavity_.clear();
        stack_.assign(1, t0);
        in_cavity_.assign(tris_.size(), 0);
        in_cavity_[t0] = 1;
        while (!stack_.empty()) {
            const int t = stack_.back();
            stack_.pop_back();
            cavity_.push_back(t);
            for (int e = 0; e < 3; ++e) {
                const int nb = tris_[t].n[e];
                if (nb < 0 || in_cavity_[nb]) continue;
                if (in_circumcircle(nb, p)) {
                    in_cavity_[nb] = 1;
                    stack_.push_back(nb);
                }
            }
        }
        // Boundary edges, directed CCW with the cavity on the left.
        boundary_.clear();
        for (const int t : cavity_) {
            for (int e = 0; e < 3; ++e) {
                const int nb = tris_[t].n[e];
                if (nb >= 0 && in_cavity_[nb]) continue;
                boundary_.push_back({tris_[t].v[(e + 1) % 3], tris_[t].v[(e + 2) % 3], nb});
            }
        }
        for (const int t : cavity_) alive_[t] = 0;

        // Fan: one new CCW triangle (p, u, v) per boundary edge.
        const int base = int(tris_.size());
        start_of_.clear();
        for (size_t i = 0; i < boundary_.size(); ++i) {
            const auto& [u, v, outer] = boundary_[i];
            const int nt = base + int(i);
            tris_.push_back({{p, u, v}, {outer, -1, -1}});
            alive_.push_back(1);
            in_cavity_.push_back(0);
            if (outer >= 0) {
                // The outer triangle holds this edge reversed, as (v, u).
                for (int e = 0; e < 3; ++e)
                    if (tris_[outer].v[(e + 1) % 3] == v && tris_[outer].v[(e + 2) % 3] == u) {
                        tris_[outer].n[e] = nt;
                        break;
                    }
            }
            start_of_[u] = nt;
        }
        // Around p, triangle (p, u, v) meets the boundary edge starting at v
        // across its (v, p) edge (the one opposite u).
        for (size_t i = 0; i < boundary_.size(); ++i) {
            const int nt = base + int(i);
            const int next = start_of_.at(tris_[nt].v[2]);
            tris_[nt].n[1] = next;
            tris_[next].n[2] = nt;
        }
        last_ = base;
    }

    std::vector<Tri> finish() const {
        std::vector<Tri> out;
        for (size_t t = 0; t < tris_.size(); ++t) {
            if (!alive_[t]) continue;
            const auto& v = tris_[t].v;
            if (v[0] >= n_ || v[1] >= n_ || v[2] >= n_) continue;
            Tri tri{uint32_t(v[0]), uint32_t(v[1]), uint32_t(v[2])};
            // canonical rotation: smallest index first, orientation kept
            while (!(tri.a < tri.b && tri.a < tri.c)) tri = {tri.b, tri.c, tri.a};
            out.push_back(tri);
        }
        std::sort(out.begin(), out.end(), [](const Tri& x, const Tri& y) {
            if (x.a != y.a) return x.a < y.a;
            if (x.b != y.b) return x.b < y.b;
            return x.c < y.c;
        });
        return out;
    }

private:
    struct T {
        int v[3];
        int n[3];  // n[i]: neighbor across the edge opposite v[i]
    };

    int orient(int a, int b, int c) const {
        return orient2d(xs_[a], ys_[a], xs_[b], ys_[b], xs_[c], ys_[c]);
    }

    bool in_circumcircle(int t, int p) const {
        const auto& v = tris_[t].v;
        return incircle(xs_[v[0]], ys_[v[0]], xs_[v[1]], ys_[v[1]], xs_[v[2]], ys_[v[2]],
                        xs_[p], ys_[p]) > 0;
    }

    // Visibility walk from the last created triangle.
    int locate(int p) const {
        int t = last_;
        const size_t cap = tris_.size() * 4 + 16;
        for (size_t step = 0; step < cap; ++step) {
            if (!alive_[t]) fail("delaunay: walk entered a dead triangle");
            const auto& v = tris_[t].v;
            for (int e = 0; e < 3; ++e)
                if (v[e] < n_ && xs_[v[e]] == xs_[p] && ys_[v[e]] == ys_[p])
                    fail("delaunay: duplicate point");
            int next = -1;
            for (int e = 0; e < 3; ++e) {
                const int a = v[(e + 1) % 3], b = v[(e + 2) % 3];
                if (orient(a, b, p) < 0) {
                    next = tris_[t].n[e];
                    break;
                }
            }
            if (next < 0) return t;
            t = next;
        }
        fail("delaunay: point location did not terminate");
    }

    int n_ = 0;
    std::vector<double> xs_, ys_;
    std::vector<T> tris_;
    std::vector<uint8_t> alive_;
    int last_ = 0;

    // scratch
    std::vector<int> cavity_, stack_;
    std::vector<uint8_t> in_cavity_;
    struct BEdge {
        int u, v, outer;
    };
    std::vector<BEdge> boundary_;
    std::unordered_map<int, int> start_of_;
};

}  // namespace

std::vector<Tri> delaunay(std::span<const Vec2> points) {
    if (points.size() < 3) fail("delaunay: need at least 3 points");

    BowyerWatson bw(points);

    // Lexicographic insertion: cocircular ties resolve by point order and the
    // result is independent of the caller's ordering.
    std::vector<int> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (points[a].x != points[b].x) return points[a].x < points[b].x;
        if (points[a].y != points[b].y) return points[a].y < points[b].y;
        return a < b;
    });
    for (const int p : order) bw.insert(p);

    std::vector<Tri> tris = bw.finish();
    if (tris.empty()) fail("delaunay: all points collinear");
    return tris;
}

}  // namespace spritemesh
