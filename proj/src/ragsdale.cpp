#include "patchwork/ragsdale.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "patchwork/classify.hpp"
#include "patchwork/error.hpp"

namespace patchwork {

std::vector<Point> simplex(int d) { return {{0, 0}, {d, 0}, {0, d}}; }

namespace {

int orient(Point a, Point b, Point c) {
    long long v = cross(b - a, c - a);
    return (v > 0) - (v < 0);
}

// Proper crossing only; primitive lattice segments cannot touch elsewhere
// without sharing an endpoint.
bool crosses(Point a, Point b, Point c, Point d) {
    if (a == c || a == d || b == c || b == d) return false;
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool primitive(Point a, Point b) { return gcd_abs(b.x - a.x, b.y - a.y) == 1; }

std::string seg_str(const Segment& s) { return to_string(s.first) + "-" + to_string(s.second); }

}  // namespace

Triangulation triangulate_with_constraints(const std::vector<Point>& polygon,
                                           const std::vector<Segment>& required) {
    auto pts = lattice_points(polygon);
    std::set<Point> lattice(pts.begin(), pts.end());
    const int n = (int)pts.size();
    auto index = [&](Point p) {
        return (int)(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin());
    };
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<Segment> placed;
    auto place = [&](Point a, Point b) {
        int i = index(a), j = index(b);
        adj[i][j] = adj[j][i] = true;
        placed.emplace_back(a, b);
    };
    for (size_t i = 0; i < required.size(); ++i) {
        auto [a, b] = required[i];
        if (!lattice.count(a) || !lattice.count(b))
            throw Error(Code::OutsidePolygon, "required edge " + seg_str(required[i]) +
                                                  " leaves the polygon");
        if (a == b || !primitive(a, b))
            throw Error(Code::NonPrimitiveRequiredEdge,
                        "required edge " + seg_str(required[i]) + " is not primitive");
        for (size_t j = 0; j < i; ++j)
            if (crosses(a, b, required[j].first, required[j].second))
                throw Error(Code::CrossingRequiredEdges,
                            seg_str(required[i]) + " crosses " + seg_str(required[j]));
        if (!adj[index(a)][index(b)]) place(a, b);
    }

    struct Cand {
        long long len;
        int i, j;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!adj[i][j] && primitive(pts[i], pts[j])) {
                Point d = pts[j] - pts[i];
                cands.push_back({dot(d, d), i, j});
            }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return std::tie(a.len, a.i, a.j) < std::tie(b.len, b.i, b.j);
    });
    for (const auto& c : cands) {
        Point a = pts[c.i], b = pts[c.j];
        int x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
        int y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
        bool ok = true;
        for (const auto& [p, q] : placed) {
            if (std::max(p.x, q.x) < x0 || std::min(p.x, q.x) > x1 || std::max(p.y, q.y) < y0 ||
                std::min(p.y, q.y) > y1)
                continue;
            if (crosses(a, b, p, q)) {
                ok = false;
                break;
            }
        }
        if (ok) place(a, b);
    }

    std::vector<std::array<Point, 3>> tris;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!adj[i][j]) continue;
            for (int k = j + 1; k < n; ++k)
                if (adj[i][k] && adj[j][k]) {
                    long long ar = cross(pts[j] - pts[i], pts[k] - pts[i]);
                    if (ar == 1) tris.push_back({pts[i], pts[j], pts[k]});
                    if (ar == -1) tris.push_back({pts[i], pts[k], pts[j]});
                }
        }
    return validate_triangulation(polygon, tris);
}

long long ragsdale_r(int k) { return 3LL * k * (k - 1) / 2; }

int gain_offset(int k) {
    static const int s[6] = {0, 10, 8, 6, 4, 6};
    return s[((k % 6) + 6) % 6];
}

Rational closed_form_p(int k) {
    return Rational(ragsdale_r(k) + 1) + Rational((long long)k * k - 5LL * k + gain_offset(k), 6);
}

std::vector<Segment> RagsdaleBlock::segments() const {
    std::vector<Segment> out;
    for (Point b : side) {
        out.emplace_back(upper, b);
        out.emplace_back(lower, b);
    }
    return out;
}

RagsdaleBlock make_block(int k, int t, int m, const Placement& pl) {
    auto fail = [](const std::string& why) { throw Error(Code::ConstraintViolated, why); };
    if (t < 0 || t > (k - 5) / 2) fail("row index t=" + std::to_string(t) + " out of range");
    if (m < 1 || m > (2 * k - 1 - 4 * t) / 6) fail("block size m=" + std::to_string(m) + " out of range");
    RagsdaleBlock b;
    b.t = t;
    b.m = m;
    b.upper = {pl.a1, 4 * t + 6};
    b.lower = {pl.a2, 4 * t};
    int x = pl.b1;
    for (int i = 1; i <= 4 * m; ++i) {
        b.side.push_back({x, 4 * t + 3});
        x += (i % 2 == 1) ? 1 : 2;
    }
    const int d = 2 * k;
    auto inside = [d](Point p) { return p.x >= 0 && p.y >= 0 && p.x + p.y <= d; };
    auto on_same_side = [d](Point p, Point q) {
        return (p.x == 0 && q.x == 0) || (p.y == 0 && q.y == 0) || (p.x + p.y == d && q.x + q.y == d);
    };
    for (Point p : {b.upper, b.lower}) {
        if (!inside(p)) fail("apex " + to_string(p) + " lies outside the polygon");
        if (is_even(p)) fail("apex " + to_string(p) + " is an even point");
    }
    for (Point p : b.side) {
        if (!inside(p)) fail("vertex " + to_string(p) + " lies outside the polygon");
        if (is_even(p)) fail("vertex " + to_string(p) + " is an even point");
    }
    for (const auto& s : b.segments()) {
        if (!primitive(s.first, s.second)) fail("segment " + seg_str(s) + " is not primitive");
        if (on_same_side(s.first, s.second)) fail("segment " + seg_str(s) + " runs along the boundary");
    }
    return b;
}

namespace {

RagsdaleConfig assemble(int k, std::vector<RagsdaleBlock> blocks) {
    RagsdaleConfig cfg;
    cfg.k = k;
    cfg.blocks = std::move(blocks);
    std::vector<Segment> req;
    for (const auto& b : cfg.blocks)
        for (const auto& s : b.segments()) req.push_back(s);
    cfg.tri = triangulate_with_constraints(simplex(2 * k), req);
    cfg.curve = dual_curve(cfg.tri);
    cfg.twists = empty_set(cfg.curve);
    cfg.predicted_p = ragsdale_r(k) + 1;
    for (const auto& b : cfg.blocks) {
        EdgeSet bt = empty_set(cfg.curve);
        for (const auto& [p, q] : b.segments()) bt[cfg.tri.edge_index(p, q)] = true;
        cfg.twists = symmetric_difference(cfg.twists, bt);
        cfg.block_twists.push_back(std::move(bt));
        cfg.predicted_p += 2 * b.m - 1;
        if (!b.adjustment.empty()) cfg.adjustments.push_back(b.adjustment);
    }
    auto cls = classify(cfg.curve, cfg.twists);
    if (!cls.dividing || cls.rank != cfg.expected_rank())
        throw std::logic_error("generated configuration for k=" + std::to_string(k) +
                               " is not dividing of the expected rank");
    return cfg;
}

}  // namespace

RagsdaleConfig single_block(int k, int t, int m, std::optional<Placement> pl) {
    return assemble(k, {make_block(k, t, m, pl.value_or(Placement{}))});
}

RagsdaleConfig full_construction(int k) {
    if (k < 5) throw Error(Code::ConstraintViolated, "full construction needs k >= 5");
    std::vector<RagsdaleBlock> blocks;
    for (int t = 0; t <= (k - 5) / 2; ++t) {
        const int x = 2 * k - 3 - 4 * t, r = x % 3;
        const int last = r == 0 ? x - 4 : r == 1 ? x - 2 : x;
        const int m = (last + 1) / 6;
        std::vector<Point> side = make_block(k, t, m, Placement{}).side;
        auto apex_ok = [&](Point p) {
            if (p.x < 0 || p.y < 0 || p.x + p.y > 2 * k || is_even(p)) return false;
            for (Point s : side)
                if (!primitive(p, s) || (p.y == 0 && s.y == 0) || (p.x + p.y == 2 * k && s.x + s.y == 2 * k))
                    return false;
            for (const auto& o : blocks) {
                if (p == o.upper || p == o.lower) return false;
                for (const auto& [u, v] : o.segments())
                    for (Point s : side)
                        if (crosses(p, s, u, v)) return false;
            }
            return true;
        };
        Point upper{3, 4 * t + 6}, lower{3, 4 * t};
        if (t % 2 == 1) {
            upper.x = r == 0 ? x - 3 : r == 1 ? x - 4 : x - 5;
            lower.x = r == 0 ? x + 3 : r == 1 ? x + 2 : x + 1;
        }
        std::string note;
        for (Point* apex : {&upper, &lower}) {
            if (apex_ok(*apex)) continue;
            Point nominal = *apex;
            bool found = false;
            for (int off = 1; off <= 2 * k && !found; ++off)
                for (int dx : {-off, off})
                    if (!found && apex_ok({nominal.x + dx, nominal.y})) {
                        apex->x = nominal.x + dx;
                        found = true;
                    }
            if (!found) throw std::logic_error("no valid apex for row t=" + std::to_string(t));
            if (!note.empty()) note += "; ";
            note += "t=" + std::to_string(t) + ": " + (apex == &upper ? "P " : "P' ") +
                    to_string(nominal) + " -> " + to_string(*apex);
        }
        auto b = make_block(k, t, m, Placement{upper.x, lower.x, 1});
        b.adjustment = note;
        blocks.push_back(std::move(b));
    }
    auto cfg = assemble(k, std::move(blocks));
    cfg.closed_form = closed_form_p(k);
    return cfg;
}

}  // namespace patchwork
