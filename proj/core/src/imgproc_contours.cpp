#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>

#include "spritemesh/error.hpp"
#include "spritemesh/imgproc.hpp"

namespace spritemesh {

double chain_arc_length(const std::vector<PixelCoord>& points, bool closed) {
    static const double kDiag = std::sqrt(2.0);
    double len = 0.0;
    const size_t n = points.size();
    if (n < 2) return 0.0;
    const size_t steps = closed ? n : n - 1;
    for (size_t i = 0; i < steps; ++i) {
        const PixelCoord& a = points[i];
        const PixelCoord& b = points[(i + 1) % n];
        len += (a.x != b.x && a.y != b.y) ? kDiag : 1.0;
    }
    return len;
}

namespace {

// Clockwise Moore neighborhood starting west; border following with this
// order yields positive shoelace area in x-right/y-down coordinates.
constexpr int kCw8[8][2] = {{-1, 0}, {-1, -1}, {0, -1}, {1, -1},
                            {1, 0},  {1, 1},   {0, 1},  {-1, 1}};

struct Labels {
    std::vector<int32_t> ids;  // -1 = background
    int count = 0;
    std::vector<PixelCoord> first_pixel;  // raster-order first pixel per id
    std::vector<int64_t> area;
};

Labels label_components(const std::vector<uint8_t>& bits, int w, int h) {
    Labels lab;
    lab.ids.assign(size_t(w) * h, -1);
    std::deque<PixelCoord> queue;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const size_t i = size_t(y) * w + x;
            if (!bits[i] || lab.ids[i] >= 0) continue;
            const int id = lab.count++;
            lab.first_pixel.push_back({x, y});
            lab.area.push_back(0);
            lab.ids[i] = id;
            queue.push_back({x, y});
            while (!queue.empty()) {
                const PixelCoord p = queue.front();
                queue.pop_front();
                ++lab.area[id];
                for (const auto& d : kCw8) {
                    const int nx = p.x + d[0], ny = p.y + d[1];
                    if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                    const size_t j = size_t(ny) * w + nx;
                    if (bits[j] && lab.ids[j] < 0) {
                        lab.ids[j] = id;
                        queue.push_back({nx, ny});
                    }
                }
            }
        }
    return lab;
}

// Radial-sweep border following around one component, starting at its
// raster-order first pixel (whose west neighbor is guaranteed outside).
// Each step scans clockwise from just past the backtrack direction; the walk
// stops when it leaves the start pixel in its initial direction again.
std::vector<PixelCoord> trace_border(const Labels& lab, int w, int h, int id) {
    const PixelCoord start = lab.first_pixel[id];
    auto inside = [&](int x, int y) {
        return x >= 0 && x < w && y >= 0 && y < h && lab.ids[size_t(y) * w + x] == id;
    };

    std::vector<PixelCoord> path{start};
    PixelCoord current = start;
    int back_dir = 0;  // direction index of the backtrack pixel, west initially
    int start_dir = -1;
    const int64_t cap = 8 * lab.area[id] + 64;
    for (int64_t iter = 0; iter < cap; ++iter) {
        int found = -1;
        for (int s = 1; s <= 8; ++s) {
            const int dir = (back_dir + s) % 8;
            if (inside(current.x + kCw8[dir][0], current.y + kCw8[dir][1])) {
                found = dir;
                break;
            }
        }
        if (found < 0) break;  // isolated pixel
        if (current == start) {
            if (start_dir < 0)
                start_dir = found;
            else if (found == start_dir)
                break;
        }
        current = {current.x + kCw8[found][0], current.y + kCw8[found][1]};
        path.push_back(current);
        back_dir = (found + 4) % 8;
    }
    if (path.size() > 1 && path.back() == start) path.pop_back();
    return path;
}

}  // namespace

std::vector<Contour> trace_outer_contours(const BinaryMask& mask, int min_area) {
    const Labels lab = label_components(mask.bits, mask.width, mask.height);
    std::vector<Contour> out;
    for (int id = 0; id < lab.count; ++id) {
        if (lab.area[id] < min_area) continue;
        Contour c;
        c.points = trace_border(lab, mask.width, mask.height, id);
        c.closed = true;
        c.perimeter = chain_arc_length(c.points, true);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// One edge component with local indexing confined to its bounding box, so
// repeated path searches stay proportional to the component size.
struct CompGraph {
    int x0 = 0, y0 = 0, bw = 0, bh = 0;
    std::vector<int32_t> grid;     // bbox-local: -1 or pixel index
    std::vector<PixelCoord> pix;   // index -> absolute coord, raster order
    std::vector<uint8_t> alive;

    int32_t local(int ax, int ay) const {
        const int lx = ax - x0, ly = ay - y0;
        if (lx < 0 || lx >= bw || ly < 0 || ly >= bh) return -1;
        return grid[size_t(ly) * bw + lx];
    }
    bool live_at(int ax, int ay) const {
        const int32_t i = local(ax, ay);
        return i >= 0 && alive[i];
    }
    int degree(int32_t i) const {
        int deg = 0;
        for (const auto& d : kCw8)
            if (live_at(pix[i].x + d[0], pix[i].y + d[1])) ++deg;
        return deg;
    }
};

const double kStepDiag = std::sqrt(2.0);

// Dijkstra over live pixels from src; fills dist (-1 = unreached) and parent.
void shortest_paths(const CompGraph& g, int32_t src, std::vector<double>& dist,
                    std::vector<int32_t>& parent) {
    dist.assign(g.pix.size(), -1.0);
    parent.assign(g.pix.size(), -1);
    using Item = std::pair<double, int32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[src] = 0.0;
    pq.push({0.0, src});
    std::vector<uint8_t> done(g.pix.size(), 0);
    while (!pq.empty()) {
        const auto [d, i] = pq.top();
        pq.pop();
        if (done[i]) continue;
        done[i] = 1;
        for (const auto& dd : kCw8) {
            const int nx = g.pix[i].x + dd[0], ny = g.pix[i].y + dd[1];
            const int32_t j = g.local(nx, ny);
            if (j < 0 || !g.alive[j]) continue;
            const double nd = d + ((dd[0] != 0 && dd[1] != 0) ? kStepDiag : 1.0);
            if (dist[j] < 0.0 || nd < dist[j]) {
                dist[j] = nd;
                parent[j] = i;
                pq.push({nd, j});
            }
        }
    }
}

int32_t farthest_reached(const std::vector<double>& dist) {
    int32_t best = -1;
    double bd = -1.0;
    for (int32_t i = 0; i < int32_t(dist.size()); ++i)
        if (dist[i] > bd) {
            bd = dist[i];
            best = i;
        }
    return best;
}

}  // namespace

std::vector<Contour> extract_edge_chains(const EdgeMap& edges) {
    const int w = edges.width, h = edges.height;
    const Labels lab = label_components(edges.bits, w, h);

    // Gather per-component pixels in raster order and bounding boxes.
    std::vector<CompGraph> comps(lab.count);
    for (int id = 0; id < lab.count; ++id) {
        comps[id].x0 = w;
        comps[id].y0 = h;
    }
    std::vector<int> x1(lab.count, 0), y1(lab.count, 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const int32_t id = lab.ids[size_t(y) * w + x];
            if (id < 0) continue;
            comps[id].x0 = std::min(comps[id].x0, x);
            comps[id].y0 = std::min(comps[id].y0, y);
            x1[id] = std::max(x1[id], x);
            y1[id] = std::max(y1[id], y);
            comps[id].pix.push_back({x, y});
        }
    for (int id = 0; id < lab.count; ++id) {
        CompGraph& g = comps[id];
        g.bw = x1[id] - g.x0 + 1;
        g.bh = y1[id] - g.y0 + 1;
        g.grid.assign(size_t(g.bw) * g.bh, -1);
        g.alive.assign(g.pix.size(), 1);
        for (int32_t i = 0; i < int32_t(g.pix.size()); ++i)
            g.grid[size_t(g.pix[i].y - g.y0) * g.bw + (g.pix[i].x - g.x0)] = i;
    }

    std::vector<Contour> out;
    std::vector<double> dist;
    std::vector<int32_t> parent;

    for (int id = 0; id < lab.count; ++id) {
        CompGraph& g = comps[id];
        size_t remaining = g.pix.size();
        while (remaining > 0) {
            // First live endpoint (degree <= 1) in raster order, if any.
            int32_t endpoint = -1, first_live = -1;
            for (int32_t i = 0; i < int32_t(g.pix.size()); ++i) {
                if (!g.alive[i]) continue;
                if (first_live < 0) first_live = i;
                if (g.degree(i) <= 1) {
                    endpoint = i;
                    break;
                }
            }

            Contour chain;
            if (endpoint >= 0) {
                if (g.degree(endpoint) == 0) {
                    chain.points = {g.pix[endpoint]};
                } else {
                    // Double sweep: the farthest pixel from an endpoint, then
                    // the path to the pixel farthest from it. Exact diameter
                    // on tree-shaped components.
                    shortest_paths(g, endpoint, dist, parent);
                    const int32_t u = farthest_reached(dist);
                    shortest_paths(g, u, dist, parent);
                    const int32_t v = farthest_reached(dist);
                    std::vector<PixelCoord> pts;
                    for (int32_t i = v; i >= 0; i = parent[i]) pts.push_back(g.pix[i]);
                    std::reverse(pts.begin(), pts.end());
                    chain.points = std::move(pts);
                }
            } else {
                // No endpoints: walk a cycle from the raster-first live pixel,
                // extending over unvisited neighbors, closing when stuck next
                // to the start. Leftover pixels gain endpoints and are picked
                // up by later rounds.
                std::vector<PixelCoord> pts{g.pix[first_live]};
                std::vector<uint8_t> walked(g.pix.size(), 0);
                walked[first_live] = 1;
                int32_t cur = first_live, prev = -1;
                while (true) {
                    int32_t next = -1;
                    bool can_close = false;
                    for (const auto& d : kCw8) {
                        const int32_t j =
                            g.local(g.pix[cur].x + d[0], g.pix[cur].y + d[1]);
                        if (j < 0 || !g.alive[j] || j == prev) continue;
                        if (j == first_live) {
                            if (pts.size() >= 3) can_close = true;
                            continue;
                        }
                        if (!walked[j]) {
                            next = j;
                            break;
                        }
                    }
                    if (next < 0) {
                        chain.closed = can_close;
                        break;
                    }
                    pts.push_back(g.pix[next]);
                    walked[next] = 1;
                    prev = cur;
                    cur = next;
                }
                chain.points = std::move(pts);
            }

            chain.perimeter = chain_arc_length(chain.points, chain.closed);
            for (const PixelCoord& p : chain.points) {
                const int32_t i = g.local(p.x, p.y);
                if (i >= 0 && g.alive[i]) {
                    g.alive[i] = 0;
                    --remaining;
                }
            }
            out.push_back(std::move(chain));
        }
    }

    // Longest first: this is the candidate-generation order downstream.
    std::stable_sort(out.begin(), out.end(), [](const Contour& a, const Contour& b) {
        return a.perimeter > b.perimeter;
    });
    return out;
}

}  // namespace spritemesh
