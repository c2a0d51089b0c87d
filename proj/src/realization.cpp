#include "patchwork/realization.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "patchwork/error.hpp"

namespace patchwork {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

int shared_stratum(const Triangulation& tri, int a, int b) {
    for (int s : tri.point_strata[a])
        if (std::find(tri.point_strata[b].begin(), tri.point_strata[b].end(), s) !=
            tri.point_strata[b].end())
            return s;
    return -1;
}

}  // namespace

RealPart real_part(const Triangulation& tri, const Curve& curve, const Signs& s) {
    RealPart rp;
    const int ne = (int)tri.edges.size();
    rp.phases.resize(ne);
    for (int e = 0; e < ne; ++e) {
        auto [a, b] = tri.edges[e];
        int k = 0;
        for (int eps = 0; eps < 4; ++eps)
            if (sign_in_copy(tri, s, a, eps) != sign_in_copy(tri, s, b, eps)) {
                if (k == 2) throw std::logic_error("edge with more than two phases");
                rp.phases[e][k++] = eps;
            }
        if (k != 2) throw std::logic_error("edge without two phases");
        if ((rp.phases[e][0] ^ rp.phases[e][1]) != curve.direction[e])
            throw std::logic_error("phases of an edge must differ by its direction");
    }
    rp.adjacent.assign(2 * ne, {-1, -1});
    auto link = [&](int u, int v) {
        for (int x : {u, v}) {
            int y = x == u ? v : u;
            if (rp.adjacent[x][0] < 0)
                rp.adjacent[x][0] = y;
            else if (rp.adjacent[x][1] < 0)
                rp.adjacent[x][1] = y;
            else
                throw std::logic_error("real part node with three neighbours");
        }
    };
    auto node = [&](int e, int eps) {
        return 2 * e + (rp.phases[e][0] == eps ? 0 : 1);
    };
    auto has = [&](int e, int eps) { return rp.phases[e][0] == eps || rp.phases[e][1] == eps; };
    for (int t = 0; t < (int)tri.triangles.size(); ++t) {
        auto es = tri.triangle_edges(t);
        for (int eps = 0; eps < 4; ++eps) {
            std::vector<int> in;
            for (int e : es)
                if (has(e, eps)) in.push_back(e);
            if (in.size() == 1 || in.size() == 3)
                throw std::logic_error("pairing rule violated at a trivalent vertex");
            if (in.size() == 2) link(node(in[0], eps), node(in[1], eps));
        }
    }
    for (int e : curve.pendant_edge) link(2 * e, 2 * e + 1);

    rp.component.assign(2 * ne, -1);
    for (int start = 0; start < 2 * ne; ++start) {
        if (rp.component[start] >= 0) continue;
        int id = (int)rp.nodes_of.size();
        rp.nodes_of.emplace_back();
        int prev = -1, cur = start;
        do {
            rp.component[cur] = id;
            rp.nodes_of[id].push_back(cur);
            int nxt = rp.adjacent[cur][0] != prev ? rp.adjacent[cur][0] : rp.adjacent[cur][1];
            // a two-node cycle lists the same neighbour twice
            if (rp.adjacent[cur][0] == rp.adjacent[cur][1]) nxt = rp.adjacent[cur][0];
            prev = cur;
            cur = nxt;
        } while (cur != start && rp.component[cur] < 0);
    }
    return rp;
}

RegionComplex complement_regions(const Triangulation& tri, const Signs& s, const RealPart& rp) {
    RegionComplex rc;
    const int np = (int)tri.points.size();
    const int nc = 4 * np;
    if (tri.strata.size() > 64) throw std::length_error("polygon with more than 64 edges");
    for (int e = 0; e < (int)tri.edges.size(); ++e) {
        auto [a, b] = tri.edges[e];
        for (int eps = 0; eps < 4; ++eps)
            if (rp.phases[e][0] != eps && rp.phases[e][1] != eps)
                rc.gluings.push_back({4 * a + eps, 4 * b + eps, -1});
    }
    for (int v = 0; v < np; ++v)
        for (int st : tri.point_strata[v]) {
            int nb = mod2(tri.strata[st].normal);
            for (int eps = 0; eps < 4; ++eps)
                if (eps < (eps ^ nb)) rc.gluings.push_back({4 * v + eps, 4 * v + (eps ^ nb), st});
        }

    UnionFind uf(nc);
    for (const Gluing& g : rc.gluings) uf.unite(g.a, g.b);
    rc.region.assign(nc, -1);
    std::vector<int> root_region(nc, -1);
    for (int c = 0; c < nc; ++c) {
        int r = uf.find(c);
        if (root_region[r] < 0) root_region[r] = rc.region_count++;
        rc.region[c] = root_region[r];
    }

    auto cell_sign = [&](int c) { return sign_in_copy(tri, s, c / 4, c % 4); };
    bool even_strata = true;
    for (const Stratum& st : tri.strata)
        if (st.c % 2 != 0) even_strata = false;
    rc.region_sign.assign(rc.region_count, 0);
    std::vector<bool> mixed(rc.region_count, false);
    for (int c = 0; c < nc; ++c) {
        int r = rc.region[c];
        if (rc.region_sign[r] == 0 && !mixed[r])
            rc.region_sign[r] = cell_sign(c);
        else if (rc.region_sign[r] != cell_sign(c))
            mixed[r] = true;
    }
    for (int r = 0; r < rc.region_count; ++r)
        if (mixed[r]) {
            if (even_strata)
                throw Error(Code::SignConflict,
                            "region " + std::to_string(r) + " carries both signs");
            rc.region_sign[r] = 0;
        }
    // Type-b gluings always relate cell signs by (-1)^c_E; check the stored
    // gluings against that rule so a wrong gluing cannot go unnoticed.
    for (const Gluing& g : rc.gluings) {
        int expect = g.stratum < 0 ? 1 : (tri.strata[g.stratum].c % 2 ? -1 : 1);
        if (cell_sign(g.a) * expect != cell_sign(g.b))
            throw Error(Code::SignConflict, "gluing disagrees with the sign rule");
    }

    // essential regions: a loop crossing some stratum line an odd number of times
    std::vector<std::vector<std::pair<int, int>>> adj(nc);
    for (const Gluing& g : rc.gluings) {
        adj[g.a].push_back({g.b, g.stratum});
        adj[g.b].push_back({g.a, g.stratum});
    }
    rc.essential.assign(rc.region_count, false);
    std::vector<uint64_t> pot(nc, 0);
    std::vector<bool> seen(nc, false);
    for (int c0 = 0; c0 < nc; ++c0) {
        if (seen[c0]) continue;
        seen[c0] = true;
        std::deque<int> q{c0};
        while (!q.empty()) {
            int c = q.front();
            q.pop_front();
            for (auto [d, st] : adj[c]) {
                uint64_t want = pot[c] ^ (st < 0 ? 0 : (uint64_t)1 << st);
                if (!seen[d]) {
                    seen[d] = true;
                    pot[d] = want;
                    q.push_back(d);
                } else if (pot[d] != want) {
                    rc.essential[rc.region[c]] = true;
                }
            }
        }
    }

    rc.component_regions.resize(rp.count());
    for (int k = 0; k < rp.count(); ++k) {
        std::vector<int> rs;
        for (int nd : rp.nodes_of[k]) {
            int e = rp.edge_of(nd), eps = rp.phase_of(nd);
            for (int v : tri.edges[e]) {
                int r = rc.region[4 * v + eps];
                if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
            }
        }
        std::sort(rs.begin(), rs.end());
        if (rs.size() > 2) throw std::logic_error("component touches more than two regions");
        rc.component_regions[k] = rs;
    }
    return rc;
}

bool oval_test(const RegionComplex& rc, const RealPart& rp, int component) {
    const auto& own = rc.component_regions[component];
    if (own.size() != 2) return false;
    UnionFind uf(rc.region_count);
    for (int k = 0; k < rp.count(); ++k) {
        if (k == component) continue;
        const auto& rs = rc.component_regions[k];
        if (rs.size() == 2) uf.unite(rs[0], rs[1]);
    }
    return uf.find(own[0]) != uf.find(own[1]);
}

Nesting nesting(const RegionComplex& rc, const RealPart& rp) {
    const int nk = rp.count();
    for (int k = 0; k < nk; ++k)
        if (!oval_test(rc, rp, k))
            throw Error(Code::NotAllOvals, "component " + std::to_string(k) + " is not an oval");
    if (rc.region_count != nk + 1)
        throw Error(Code::NotATree, std::to_string(rc.region_count) + " regions for " +
                                        std::to_string(nk) + " ovals");
    std::vector<int> roots;
    for (int r = 0; r < rc.region_count; ++r)
        if (rc.essential[r]) roots.push_back(r);
    if (roots.size() != 1)
        throw Error(Code::MultipleEssentialRegions,
                    std::to_string(roots.size()) + " essential regions");

    std::vector<std::vector<std::pair<int, int>>> adj(rc.region_count);
    for (int k = 0; k < nk; ++k) {
        const auto& rs = rc.component_regions[k];
        adj[rs[0]].push_back({rs[1], k});
        adj[rs[1]].push_back({rs[0], k});
    }
    Nesting nt;
    nt.root = roots[0];
    nt.region_depth.assign(rc.region_count, -1);
    nt.region_parent_oval.assign(rc.region_count, -1);
    nt.region_depth[nt.root] = 0;
    std::deque<int> q{nt.root};
    while (!q.empty()) {
        int r = q.front();
        q.pop_front();
        for (auto [w, k] : adj[r])
            if (nt.region_depth[w] < 0) {
                nt.region_depth[w] = nt.region_depth[r] + 1;
                nt.region_parent_oval[w] = k;
                q.push_back(w);
            }
    }
    for (int d : nt.region_depth)
        if (d < 0) throw Error(Code::NotATree, "region graph is disconnected");

    nt.oval_depth.resize(nk);
    nt.oval_parent.resize(nk);
    nt.oval_inner_region.resize(nk);
    for (int k = 0; k < nk; ++k) {
        int r0 = rc.component_regions[k][0], r1 = rc.component_regions[k][1];
        int outer = nt.region_depth[r0] < nt.region_depth[r1] ? r0 : r1;
        int inner = outer == r0 ? r1 : r0;
        nt.oval_depth[k] = nt.region_depth[outer];
        nt.oval_parent[k] = nt.region_parent_oval[outer];
        nt.oval_inner_region[k] = inner;
        if (nt.oval_depth[k] % 2 == 0)
            ++nt.p;
        else
            ++nt.n;
    }
    nt.sign_parity_checked = true;
    for (int r = 0; r < rc.region_count; ++r)
        if (rc.region_sign[r] == 0) nt.sign_parity_checked = false;
    if (nt.sign_parity_checked)
        for (int r = 0; r < rc.region_count; ++r)
            if ((rc.region_sign[r] == rc.region_sign[nt.root]) != (nt.region_depth[r] % 2 == 0))
                nt.sign_parity_ok = false;
    return nt;
}

std::optional<int> special_component(const Curve& curve, const RealPart& rp, const EdgeSet& t) {
    // reported whenever it exists; with non-exposed twists it always does
    if (curve.pendant_edge.empty()) return std::nullopt;
    int k = rp.component[2 * curve.pendant_edge[0]];
    for (int e : curve.pendant_edge)
        if (rp.component[2 * e] != k || rp.component[2 * e + 1] != k) {
            if (all_non_exposed(curve, t)) throw std::logic_error("non-exposed twists without a special component");
            return std::nullopt;
        }
    return k;
}

std::vector<int> curve_class(const Triangulation& tri, const Curve& curve, const RealPart& rp) {
    std::vector<int> parity(tri.strata.size(), 0);
    for (int e : curve.pendant_edge) {
        // the two phases of a pendant edge meet in one real point of the stratum line
        if (rp.adjacent[2 * e][0] != 2 * e + 1 && rp.adjacent[2 * e][1] != 2 * e + 1)
            throw std::logic_error("pendant phases not joined");
        int st = shared_stratum(tri, tri.edges[e][0], tri.edges[e][1]);
        parity[st] ^= 1;
    }
    return parity;
}

Realization realize(const Triangulation& tri, const Curve& curve, const Signs& s,
                    const EdgeSet& t) {
    Realization out;
    out.real = real_part(tri, curve, s);
    out.regions = complement_regions(tri, s, out.real);
    out.all_ovals = true;
    for (int k = 0; k < out.real.count(); ++k) {
        out.oval.push_back(oval_test(out.regions, out.real, k));
        if (!out.oval.back()) out.all_ovals = false;
    }
    if (out.all_ovals) out.nest = nesting(out.regions, out.real);
    out.special = special_component(curve, out.real, t);
    return out;
}

}  // namespace patchwork
