#include "patchwork/zones.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "patchwork/classify.hpp"
#include "patchwork/error.hpp"

namespace patchwork {

ZoneDecomposition zone_decomposition(const Triangulation& tri, const Curve& curve, const EdgeSet& t) {
    if (auto bad = violated_cycle(curve, t))
        throw Error(Code::Inadmissible, "twist set is not admissible",
                    tri.points[curve.cycle_point[*bad]]);
    const int nt = (int)tri.triangles.size();
    std::vector<int> parent(nt);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < (int)tri.edges.size(); ++e)
        if (!tri.edge_on_boundary[e] && !t[e])
            parent[find(tri.edge_triangles[e][0])] = find(tri.edge_triangles[e][1]);

    ZoneDecomposition zd;
    zd.zone.assign(nt, -1);
    std::vector<int> id(nt, -1);
    for (int i = 0; i < nt; ++i) {
        int r = find(i);
        if (id[r] < 0) id[r] = zd.zone_count++;
        zd.zone[i] = id[r];
    }

    std::vector<int> boundary_edges(zd.zone_count, 0);
    for (int e = 0; e < (int)tri.edges.size(); ++e)
        if (tri.edge_on_boundary[e]) {
            int tr = tri.edge_triangles[e][0] >= 0 ? tri.edge_triangles[e][0] : tri.edge_triangles[e][1];
            ++boundary_edges[zd.zone[tr]];
        }
    for (int z = 0; z < zd.zone_count; ++z)
        if (boundary_edges[z] > 0) zd.boundary_zones.push_back(z);
    if (zd.boundary_zones.size() > 1 && all_non_exposed(curve, t))
        throw Error(Code::NoUniqueSpecialZone,
                    std::to_string(zd.boundary_zones.size()) + " zones meet the boundary");
    zd.special = zd.boundary_zones.front();
    for (int z : zd.boundary_zones)
        if (boundary_edges[z] > boundary_edges[zd.special]) zd.special = z;

    std::vector<std::vector<int>> adj(zd.zone_count);
    for (int e = 0; e < (int)tri.edges.size(); ++e)
        if (t[e]) {
            int a = zd.zone[tri.edge_triangles[e][0]], b = zd.zone[tri.edge_triangles[e][1]];
            if (a == b)
                throw Error(Code::NotTwoColorable,
                            "twisted segment " + to_string(tri.points[tri.edges[e][0]]) + "-" +
                                to_string(tri.points[tri.edges[e][1]]) + " has one zone on both sides");
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    zd.color.assign(zd.zone_count, -1);
    zd.color[zd.special] = 1;
    std::deque<int> q{zd.special};
    while (!q.empty()) {
        int z = q.front();
        q.pop_front();
        for (int w : adj[z]) {
            if (zd.color[w] < 0) {
                zd.color[w] = 1 - zd.color[z];
                q.push_back(w);
            } else if (zd.color[w] == zd.color[z]) {
                throw Error(Code::NotTwoColorable, "zone adjacency has an odd cycle");
            }
        }
    }

    std::vector<bool> on_t(tri.points.size(), false);
    for (int e : members(t)) on_t[tri.edges[e][0]] = on_t[tri.edges[e][1]] = true;
    zd.point_zone.assign(tri.points.size(), -1);
    for (int tr = 0; tr < nt; ++tr)
        for (int v : tri.triangles[tr])
            if (!on_t[v] && !tri.on_boundary[v]) zd.point_zone[v] = zd.zone[tr];
    for (int v = 0; v < (int)tri.points.size(); ++v) {
        int z = zd.point_zone[v];
        if (z < 0) continue;
        bool even = is_even(tri.points[v]);
        if (zd.color[z] == 1)
            (even ? zd.p1 : zd.n1)++;
        else
            (even ? zd.p0 : zd.n0)++;
    }
    return zd;
}

std::pair<int, int> even_free_lower_bound(const Triangulation& tri, const Curve& curve,
                                          const EdgeSet& t, const ZoneDecomposition& zd) {
    auto fail = [](const std::string& why) { throw Error(Code::PreconditionFailed, why); };
    if (!is_dividing(curve, t)) fail("twist set is not dividing");
    if (!is_even_free(tri, t)) fail("twist set touches an even point");
    if (!strict_even_degree(tri)) fail("polygon is not of strict even degree");
    if (!all_non_exposed(curve, t) && !lattice_transform_of_simplex(tri))
        fail("exposed twists on a polygon other than a simplex of even degree");
    for (int z : zd.boundary_zones)
        if (zd.color[z] != 1) fail("a zone meeting the boundary lies in Y0");
    return {zd.n1 + zd.p0 + 1, zd.p1 + zd.n0};
}

std::optional<BlockShape> block_shape(const Triangulation& tri, const EdgeSet& block) {
    std::map<int, std::set<int>> nb;
    int edges = 0;
    for (int e : members(block)) {
        auto [a, b] = tri.edges[e];
        nb[a].insert(b);
        nb[b].insert(a);
        ++edges;
    }
    std::vector<int> big, small;
    for (const auto& [v, s] : nb) (s.size() == 2 ? small : big).push_back(v);
    // K_{2,2}: every vertex has degree 2; split by adjacency instead
    if (big.empty() && nb.size() == 4) {
        int v = nb.begin()->first;
        big.push_back(v);
        for (const auto& [w, s] : nb)
            if (w != v && !nb[v].count(w)) big.push_back(w);
        small.clear();
        for (const auto& [w, s] : nb)
            if (std::find(big.begin(), big.end(), w) == big.end()) small.push_back(w);
    }
    if (big.size() != 2 || small.size() < 2 || small.size() % 2) return std::nullopt;
    if (edges != 2 * (int)small.size()) return std::nullopt;
    for (int a : big)
        if (nb[a].size() != small.size()) return std::nullopt;
    for (int b : small)
        if (!nb[b].count(big[0]) || !nb[b].count(big[1])) return std::nullopt;
    BlockShape sh;
    sh.l = (int)small.size() / 2;
    sh.pair = big;
    sh.side = small;
    for (const auto& [v, s] : nb)
        if (tri.on_boundary[v]) ++sh.boundary;
    return sh;
}

OvalCountPrediction bipartite_count(const Triangulation& tri, const Curve& curve, const EdgeSet& t,
                                    const ZoneDecomposition& zd, const std::vector<EdgeSet>& blocks) {
    auto fail = [](const std::string& why) { throw Error(Code::HypothesisViolated, why); };
    if (!strict_even_degree(tri)) fail("strict even degree");
    if (!is_dividing(curve, t)) fail("dividing twist set");
    try {
        auto comp = compose_cycle_disjoint(curve, blocks);
        if (comp.twists != t) fail("blocks do not sum to the twist set");
    } catch (const Error& e) {
        if (e.code() == Code::HypothesisViolated) throw;
        fail("cycle-disjoint blocks");
    }
    for (int z : zd.boundary_zones)
        if (zd.color[z] != 1) fail("zones meeting the boundary lie in Y1");
    OvalCountPrediction out;
    out.p = zd.n1 + zd.p0 + 1;
    out.n = zd.p1 + zd.n0;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (!is_even_free(tri, blocks[i])) fail("block " + std::to_string(i) + " is even-free");
        auto sh = block_shape(tri, blocks[i]);
        if (!sh) fail("block " + std::to_string(i) + " is a K_{2,2l}");
        if (tri.on_boundary[sh->pair[0]] && tri.on_boundary[sh->pair[1]])
            fail("block " + std::to_string(i) + " has an interior apex");
        int dp = sh->l + 1 - sh->boundary, dn = sh->l - 1;
        out.p += dp;
        out.n += dn;
        out.contributions.emplace_back(dp, dn);
        out.shapes.push_back(*sh);
    }
    return out;
}

}  // namespace patchwork
