#include "patchwork/phases.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "patchwork/error.hpp"
#include "patchwork/gf2.hpp"

namespace patchwork {

Signs harnack_signs(const Triangulation& tri) {
    Signs s(tri.points.size());
    for (size_t i = 0; i < s.size(); ++i) s[i] = is_even(tri.points[i]) ? -1 : 1;
    return s;
}

namespace {

bool twisted_by_signs(const Triangulation& tri, const Signs& s, int e) {
    auto [v1, v2] = tri.edges[e];
    int v3 = tri.edge_apex[e][0], v4 = tri.edge_apex[e][1];
    if (mod2(tri.points[v3]) != mod2(tri.points[v4])) return s[v1] * s[v2] * s[v3] * s[v4] == 1;
    return s[v3] * s[v4] == -1;
}

}  // namespace

EdgeSet twists_from_signs(const Triangulation& tri, const Curve& curve, const Signs& s) {
    EdgeSet t = empty_set(curve);
    for (int e : curve.bounded_edges) t[e] = twisted_by_signs(tri, s, e);
    if (!is_admissible(curve, t))
        throw std::logic_error("sign distribution produced an inadmissible twist set");
    return t;
}

Signs signs_from_twists(const Triangulation& tri, const Curve& curve, const EdgeSet& t) {
    for (int e = 0; e < (int)t.size(); ++e)
        if (t[e] && !curve.bounded[e])
            throw Error(Code::Inadmissible, "twist on an unbounded edge");
    const int np = (int)tri.points.size();
    Signs s(np, 0);
    Signs harnack = harnack_signs(tri);
    for (int v : tri.triangles[0]) s[v] = harnack[v];
    std::vector<bool> seen(tri.triangles.size(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        int tr = queue.front();
        queue.pop_front();
        for (int e : tri.triangle_edges(tr)) {
            if (tri.edge_on_boundary[e]) continue;
            int side = tri.edge_triangles[e][0] == tr ? 0 : 1;
            int other = tri.edge_triangles[e][1 - side];
            int v3 = tri.edge_apex[e][side], v4 = tri.edge_apex[e][1 - side];
            auto [v1, v2] = tri.edges[e];
            if (s[v4] == 0) {
                bool same = mod2(tri.points[v3]) == mod2(tri.points[v4]);
                if (same)
                    s[v4] = t[e] ? -s[v3] : s[v3];
                else
                    s[v4] = t[e] ? s[v1] * s[v2] * s[v3] : -s[v1] * s[v2] * s[v3];
            }
            if (!seen[other]) {
                seen[other] = true;
                queue.push_back(other);
            }
        }
    }
    for (int e : curve.bounded_edges)
        if (twisted_by_signs(tri, s, e) != (bool)t[e]) {
            auto bad = violated_cycle(curve, t);
            if (!bad) throw std::logic_error("sign propagation failed on an admissible set");
            Point p = tri.points[curve.cycle_point[*bad]];
            throw Error(Code::Inadmissible,
                        "twist directions around " + to_string(p) + " do not sum to zero", p);
        }
    return s;
}

std::optional<int> violated_cycle(const Curve& curve, const EdgeSet& t) {
    for (int c = 0; c < curve.genus; ++c) {
        int sum = 0;
        for (int e : curve.cycles[c])
            if (t[e]) sum ^= curve.direction[e];
        if (sum != 0) return c;
    }
    return std::nullopt;
}

bool is_admissible(const Curve& curve, const EdgeSet& t) { return !violated_cycle(curve, t); }

bool is_dividing(const Curve& curve, const EdgeSet& t) {
    if (!is_admissible(curve, t)) return false;
    for (const auto& cyc : curve.cycles) {
        int n = 0;
        for (int e : cyc) n += t[e];
        if (n % 2) return false;
    }
    return true;
}

bool all_non_exposed(const Curve& curve, const EdgeSet& t) {
    for (int e = 0; e < (int)t.size(); ++e)
        if (t[e] && curve.exposed[e]) return false;
    return true;
}

bool is_maximal(const Curve& curve, const EdgeSet& t) {
    if (!is_dividing(curve, t)) return false;
    for (int e = 0; e < (int)t.size(); ++e)
        if (t[e] && !curve.exposed[e]) return false;
    return true;
}

bool is_even_free(const Triangulation& tri, const EdgeSet& t) {
    for (int e = 0; e < (int)t.size(); ++e)
        if (t[e] && (is_even(tri.points[tri.edges[e][0]]) || is_even(tri.points[tri.edges[e][1]])))
            return false;
    return true;
}

EdgeSet empty_set(const Curve& curve) { return EdgeSet(curve.ends.size(), false); }

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] != b[i];
    return r;
}

std::vector<int> members(const EdgeSet& t) {
    std::vector<int> out;
    for (int i = 0; i < (int)t.size(); ++i)
        if (t[i]) out.push_back(i);
    return out;
}

EdgeSet from_members(const Curve& curve, const std::vector<int>& ids) {
    EdgeSet t = empty_set(curve);
    for (int e : ids) t[e] = true;
    return t;
}

namespace {

std::vector<EdgeSet> constraint_kernel(const Curve& curve, bool parity) {
    const int nb = (int)curve.bounded_edges.size();
    BitMatrix m(0, nb);
    for (const auto& cyc : curve.cycles) {
        std::vector<bool> r0(nb, false), r1(nb, false), r2(nb, false);
        for (int e : cyc) {
            int col = (int)(std::lower_bound(curve.bounded_edges.begin(), curve.bounded_edges.end(),
                                             e) -
                            curve.bounded_edges.begin());
            r0[col] = curve.direction[e] & 1;
            r1[col] = (curve.direction[e] >> 1) & 1;
            r2[col] = true;
        }
        m.append_row(r0);
        m.append_row(r1);
        if (parity) m.append_row(r2);
    }
    std::vector<EdgeSet> out;
    for (const auto& k : m.kernel()) {
        EdgeSet t = empty_set(curve);
        for (int i = 0; i < nb; ++i)
            if (k[i]) t[curve.bounded_edges[i]] = true;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

std::vector<EdgeSet> admissible_basis(const Curve& curve) { return constraint_kernel(curve, false); }
std::vector<EdgeSet> dividing_basis(const Curve& curve) { return constraint_kernel(curve, true); }

std::vector<MultiBridge> decompose_multibridges(const Triangulation& tri, const Curve& curve,
                                                const EdgeSet& t) {
    if (!is_dividing(curve, t)) throw Error(Code::NotDividing, "twist set is not dividing");
    // Planar dual of the curve: one vertex per interior point, plus one vertex
    // standing for the whole boundary.
    const int inf = curve.genus;
    auto qv = [&](int p) { return curve.point_cycle[p] >= 0 ? curve.point_cycle[p] : inf; };
    auto other = [&](int e, int q) {
        int a = qv(tri.edges[e][0]), b = qv(tri.edges[e][1]);
        return a == q ? b : a;
    };
    std::vector<bool> used(t.size(), false);
    auto next_edge = [&](int q, int dir) {
        for (int e : curve.cycles[q])
            if (t[e] && !used[e] && curve.direction[e] == dir) return e;
        throw Error(Code::NotDividing, "no parallel partner on the cycle around " +
                                           to_string(tri.points[curve.cycle_point[q]]));
    };

    std::vector<MultiBridge> parts;
    auto emit = [&](const std::vector<int>& es) {
        MultiBridge mb;
        mb.edges = from_members(curve, es);
        mb.direction = curve.direction[es.front()];
        mb.circuit = true;
        for (int e : es) {
            if (curve.exposed[e]) mb.circuit = false;
            if (is_even(tri.points[tri.edges[e][0]]) || is_even(tri.points[tri.edges[e][1]]))
                mb.even = true;
        }
        parts.push_back(std::move(mb));
    };

    for (int e : members(t)) {
        if (used[e]) continue;
        used[e] = true;
        const int dir = curve.direction[e];
        int a = qv(tri.edges[e][0]), b = qv(tri.edges[e][1]);
        if (a == inf && b == inf) {
            emit({e});
            continue;
        }
        if (b == inf) std::swap(a, b);
        std::deque<int> verts{a, b};
        std::deque<int> path{e};
        int cur = b;
        while (cur != a && cur != inf) {
            int f = next_edge(cur, dir);
            used[f] = true;
            cur = other(f, cur);
            path.push_back(f);
            verts.push_back(cur);
        }
        if (cur == inf && a != inf) {
            cur = a;
            while (cur != inf) {
                int f = next_edge(cur, dir);
                used[f] = true;
                cur = other(f, cur);
                path.push_front(f);
                verts.push_front(cur);
            }
        }
        // split the closed trail into simple cycles of the planar dual
        std::vector<int> pos(curve.genus + 1, -1);
        std::vector<int> sv{verts[0]};
        std::vector<int> se;
        pos[verts[0]] = 0;
        for (size_t i = 1; i < verts.size(); ++i) {
            int v = verts[i];
            if (pos[v] >= 0) {
                int j = pos[v];
                std::vector<int> cyc(se.begin() + j, se.end());
                cyc.push_back(path[i - 1]);
                std::sort(cyc.begin(), cyc.end());
                emit(cyc);
                for (size_t k = j + 1; k < sv.size(); ++k) pos[sv[k]] = -1;
                sv.resize(j + 1);
                se.resize(j);
            } else {
                pos[v] = (int)sv.size();
                sv.push_back(v);
                se.push_back(path[i - 1]);
            }
        }
        if (!se.empty()) throw std::logic_error("multi-bridge trail did not close");
    }
    return parts;
}

bool is_bond(const Curve& curve, const EdgeSet& cut) {
    const int n = curve.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < (int)curve.ends.size(); ++e)
        if (!cut[e]) parent[find(curve.ends[e][0])] = find(curve.ends[e][1]);
    int comps = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) ++comps;
    if (comps != 2) return false;
    for (int e = 0; e < (int)curve.ends.size(); ++e)
        if (cut[e] && find(curve.ends[e][0]) == find(curve.ends[e][1])) return false;
    return true;
}

}  // namespace patchwork
