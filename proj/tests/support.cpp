#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "patchwork/gf2.hpp"

namespace pwtest {

namespace {

std::vector<std::array<Point, 3>> staircase_cells(int a, int b, int d) {
    // d < 0: rectangle [0,a] x [0,b]; otherwise the simplex of degree d
    std::vector<std::array<Point, 3>> tris;
    int xa = d < 0 ? a : d, yb = d < 0 ? b : d;
    for (int i = 0; i < xa; ++i)
        for (int j = 0; j < yb; ++j) {
            if (d >= 0 && i + j > d - 1) continue;
            tris.push_back({Point{i, j}, Point{i + 1, j}, Point{i, j + 1}});
            if (d < 0 || i + j <= d - 2) tris.push_back({Point{i + 1, j}, Point{i + 1, j + 1}, Point{i, j + 1}});
        }
    return tris;
}

int orient(Point a, Point b, Point c) {
    long long v = cross(b - a, c - a);
    return (v > 0) - (v < 0);
}

bool proper_cross(Point a, Point b, Point c, Point d) {
    if (a == c || a == d || b == c || b == d) return false;
    return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

std::vector<EdgeSet> restricted_kernel(const Curve& curve, bool parity) {
    std::vector<int> cols;
    for (int e : curve.bounded_edges)
        if (!curve.exposed[e]) cols.push_back(e);
    const int nc = (int)cols.size();
    if (nc == 0) return {};
    BitMatrix m(0, nc);
    for (const auto& cyc : curve.cycles) {
        std::vector<bool> r0(nc), r1(nc), r2(nc);
        for (int c = 0; c < nc; ++c)
            if (std::binary_search(cyc.begin(), cyc.end(), cols[c])) {
                r0[c] = curve.direction[cols[c]] & 1;
                r1[c] = (curve.direction[cols[c]] >> 1) & 1;
                r2[c] = true;
            }
        m.append_row(r0);
        m.append_row(r1);
        if (parity) m.append_row(r2);
    }
    std::vector<EdgeSet> out;
    for (const auto& k : m.kernel()) {
        EdgeSet t = empty_set(curve);
        for (int c = 0; c < nc; ++c)
            if (k[c]) t[cols[c]] = true;
        out.push_back(t);
    }
    return out;
}

}  // namespace

Triangulation staircase(int d) { return validate_triangulation(simplex(d), staircase_cells(0, 0, d)); }

Triangulation staircase_rect(int a, int b) {
    return validate_triangulation({{0, 0}, {a, 0}, {a, b}, {0, b}}, staircase_cells(a, b, -1));
}

Triangulation conic() {
    return validate_triangulation(simplex(2), {{Point{0, 0}, Point{1, 0}, Point{0, 1}},
                                               {Point{1, 0}, Point{1, 1}, Point{0, 1}},
                                               {Point{1, 0}, Point{2, 0}, Point{1, 1}},
                                               {Point{0, 1}, Point{1, 1}, Point{0, 2}}});
}

Triangulation quartic() { return staircase(4); }

std::vector<Rational> staircase_heights(const Triangulation& tri) {
    std::vector<Rational> h;
    for (Point p : tri.points) h.push_back(Rational(-(long long)(p.x * p.x + p.y * p.y + (p.x + p.y) * (p.x + p.y))));
    return h;
}

Triangulation random_flips(const Triangulation& start, Rng& rng, int flips) {
    Triangulation tri = start;
    for (int done = 0, tries = 0; done < flips && tries < 20 * flips + 100; ++tries) {
        std::uniform_int_distribution<int> pick(0, (int)tri.edges.size() - 1);
        int e = pick(rng);
        if (tri.edge_on_boundary[e]) continue;
        Point a = tri.points[tri.edges[e][0]], b = tri.points[tri.edges[e][1]];
        Point c = tri.points[tri.edge_apex[e][0]], d = tri.points[tri.edge_apex[e][1]];
        if (orient(c, d, a) * orient(c, d, b) >= 0) continue;
        std::vector<std::array<Point, 3>> tris;
        for (int t = 0; t < (int)tri.triangles.size(); ++t) {
            if (t == tri.edge_triangles[e][0] || t == tri.edge_triangles[e][1]) continue;
            const auto& tr = tri.triangles[t];
            tris.push_back({tri.points[tr[0]], tri.points[tr[1]], tri.points[tr[2]]});
        }
        tris.push_back({c, d, a});
        tris.push_back({c, d, b});
        tri = validate_triangulation(tri.polygon, tris);
        ++done;
    }
    return tri;
}

EdgeSet random_combination(const Curve& curve, const std::vector<EdgeSet>& basis, Rng& rng, double q) {
    std::bernoulli_distribution keep(q);
    EdgeSet t = empty_set(curve);
    for (const auto& b : basis)
        if (keep(rng)) t = symmetric_difference(t, b);
    return t;
}

std::vector<EdgeSet> non_exposed_admissible_basis(const Curve& curve) { return restricted_kernel(curve, false); }
std::vector<EdgeSet> non_exposed_dividing_basis(const Curve& curve) { return restricted_kernel(curve, true); }

std::vector<Point> Parallelogram::corners() const { return {c + u, c + w, c - u, c - w}; }

std::vector<Segment> Parallelogram::sides() const {
    auto k = corners();
    std::vector<Segment> out;
    for (int i = 0; i < 4; ++i) out.emplace_back(k[i], k[(i + 1) % 4]);
    return out;
}

bool Parallelogram::even() const {
    for (Point p : corners())
        if (is_even(p)) return true;
    return false;
}

std::optional<Parallelogram> random_parallelogram(const std::vector<Point>& polygon,
                                                  const std::vector<Parallelogram>& avoid, Rng& rng,
                                                  std::optional<bool> want_even) {
    int x0 = polygon[0].x, x1 = x0, y0 = polygon[0].y, y1 = y0;
    for (Point p : polygon) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    const size_t n = polygon.size();
    auto strictly_inside = [&](Point p) {
        for (size_t i = 0; i < n; ++i)
            if (cross(polygon[(i + 1) % n] - polygon[i], p - polygon[i]) <= 0) return false;
        return true;
    };
    std::uniform_int_distribution<int> dx(x0, x1), dy(y0, y1), small(-2, 2);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        Parallelogram pg{{dx(rng), dy(rng)}, {small(rng), small(rng)}, {small(rng), small(rng)}};
        if (cross(pg.u, pg.w) <= 0) continue;
        if (gcd_abs(pg.w.x - pg.u.x, pg.w.y - pg.u.y) != 1 || gcd_abs(pg.w.x + pg.u.x, pg.w.y + pg.u.y) != 1)
            continue;
        auto ks = pg.corners();
        if (!std::all_of(ks.begin(), ks.end(), strictly_inside)) continue;
        if (want_even && pg.even() != *want_even) continue;
        bool clash = false;
        for (const auto& o : avoid) {
            for (Point p : o.corners())
                if (std::find(ks.begin(), ks.end(), p) != ks.end()) clash = true;
            for (const auto& [a, b] : o.sides())
                for (const auto& [c, d] : pg.sides())
                    if (proper_cross(a, b, c, d)) clash = true;
        }
        if (!clash) return pg;
    }
    return std::nullopt;
}

EdgeSet parallelogram_twists(const Triangulation& tri, const Curve& curve, const Parallelogram& p) {
    EdgeSet t = empty_set(curve);
    for (const auto& [a, b] : p.sides()) {
        int e = tri.edge_index(a, b);
        if (e < 0) throw std::logic_error("parallelogram side missing from the triangulation");
        t[e] = true;
    }
    return t;
}

int walk_components(const Triangulation& tri, const Curve& curve, const EdgeSet& t) {
    (void)curve;
    const int ne = (int)tri.edges.size();
    auto id = [](int e, int dir, int pv) { return 4 * e + 2 * dir + pv; };
    std::vector<int> next(4 * ne);
    for (int e = 0; e < ne; ++e)
        for (int dir = 0; dir < 2; ++dir)
            for (int pv = 0; pv < 2; ++pv) {
                int side = t[e] ? pv ^ 1 : pv;
                int tr = tri.edge_triangles[e][dir];
                if (tr < 0) {
                    next[id(e, dir, pv)] = id(e, 1 - dir, side ^ 1);
                    continue;
                }
                int p = tri.edges[e][side];
                int nxt = -1;
                for (int f : tri.triangle_edges(tr))
                    if (f != e && (tri.edges[f][0] == p || tri.edges[f][1] == p)) nxt = f;
                int ndir = tri.edge_triangles[nxt][0] == tr ? 1 : 0;
                next[id(e, dir, pv)] = id(nxt, ndir, tri.edges[nxt][0] == p ? 0 : 1);
            }
    std::vector<bool> seen(4 * ne, false);
    int orbits = 0;
    for (int s = 0; s < 4 * ne; ++s) {
        if (seen[s]) continue;
        ++orbits;
        for (int x = s; !seen[x]; x = next[x]) seen[x] = true;
    }
    return orbits / 2;
}

std::string ahu(const std::vector<std::vector<int>>& adj, int root) {
    std::function<std::string(int, int)> rec = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != parent) kids.push_back(rec(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        return s + ")";
    };
    return rec(root, -1);
}

std::vector<std::vector<int>> region_tree(const Realization& r) {
    std::vector<std::vector<int>> adj(r.regions.region_count);
    for (const auto& rs : r.regions.component_regions)
        if (rs.size() == 2) {
            adj[rs[0]].push_back(rs[1]);
            adj[rs[1]].push_back(rs[0]);
        }
    return adj;
}

OracleResult numeric_oracle(const Triangulation& tri, const std::vector<Rational>& heights, const Signs& s,
                            int grid, double t) {
    const int np = (int)tri.points.size();
    std::vector<double> nu(np);
    for (int i = 0; i < np; ++i) nu[i] = heights[i].to_double();
    const double big_l = -std::log(t);

    // tropical vertices by brute force over triples of monomials
    double bx0 = 1e300, bx1 = -1e300, by0 = 1e300, by1 = -1e300;
    for (int a = 0; a < np; ++a)
        for (int b = a + 1; b < np; ++b)
            for (int c = b + 1; c < np; ++c) {
                Point pa = tri.points[a], u = tri.points[b] - pa, w = tri.points[c] - pa;
                double det = (double)cross(u, w);
                if (det == 0) continue;
                double r1 = nu[a] - nu[b], r2 = nu[a] - nu[c];
                double X = (r1 * w.y - r2 * u.y) / det, Y = (u.x * r2 - w.x * r1) / det;
                double m = nu[a] + pa.x * X + pa.y * Y;
                bool top = true;
                for (int v = 0; v < np && top; ++v)
                    if (nu[v] + tri.points[v].x * X + tri.points[v].y * Y > m + 1e-9) top = false;
                if (!top) continue;
                bx0 = std::min(bx0, X);
                bx1 = std::max(bx1, X);
                by0 = std::min(by0, Y);
                by1 = std::max(by1, Y);
            }
    double margin = std::max(2.0, 0.25 * std::max(bx1 - bx0, by1 - by0));
    bx0 -= margin;
    bx1 += margin;
    by0 -= margin;
    by1 += margin;

    const int n = grid;
    auto cell = [n](int eps, int i, int j) { return (eps * n + i) * n + j; };
    std::vector<signed char> sign(4 * n * n);
    std::vector<double> hv(np);
    for (int eps = 0; eps < 4; ++eps) {
        std::vector<int> sv(np);
        for (int v = 0; v < np; ++v) sv[v] = sign_in_copy(tri, s, v, eps);
        for (int i = 0; i < n; ++i) {
            double X = bx0 + (i + 0.5) * (bx1 - bx0) / n;
            for (int j = 0; j < n; ++j) {
                double Y = by0 + (j + 0.5) * (by1 - by0) / n;
                double hmax = -1e300;
                for (int v = 0; v < np; ++v) {
                    hv[v] = nu[v] + tri.points[v].x * X + tri.points[v].y * Y;
                    hmax = std::max(hmax, hv[v]);
                }
                double sum = 0;
                for (int v = 0; v < np; ++v) sum += sv[v] * std::exp(big_l * (hv[v] - hmax));
                sign[cell(eps, i, j)] = sum > 0 ? 1 : -1;
            }
        }
    }

    // cell graph: same-sign neighbours inside a quadrant, plus the gluings
    // along the coordinate axes (left, bottom) and the line at infinity
    // (top, right), the latter labelled
    const int nc = 4 * n * n;
    std::vector<int> parent(nc);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    struct Link {
        int a, b;
        bool infinity;
    };
    std::vector<Link> links;
    for (int eps = 0; eps < 4; ++eps)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int c = cell(eps, i, j);
                if (i + 1 < n) links.push_back({c, cell(eps, i + 1, j), false});
                if (j + 1 < n) links.push_back({c, cell(eps, i, j + 1), false});
            }
    for (int eps = 0; eps < 4; ++eps)
        for (int k = 0; k < n; ++k) {
            if (eps < (eps ^ 1)) links.push_back({cell(eps, 0, k), cell(eps ^ 1, 0, k), false});
            if (eps < (eps ^ 2)) links.push_back({cell(eps, k, 0), cell(eps ^ 2, k, 0), false});
            if (eps < (eps ^ 3)) {
                links.push_back({cell(eps, k, n - 1), cell(eps ^ 3, k, n - 1), true});
                links.push_back({cell(eps, n - 1, k), cell(eps ^ 3, n - 1, k), true});
            }
        }
    std::vector<std::vector<std::pair<int, bool>>> adj(nc);
    for (const auto& l : links)
        if (sign[l.a] == sign[l.b]) {
            parent[find(l.a)] = find(l.b);
            adj[l.a].push_back({l.b, l.infinity});
            adj[l.b].push_back({l.a, l.infinity});
        }
    std::map<int, int> region_of_root;
    std::vector<int> region(nc);
    for (int c = 0; c < nc; ++c) {
        auto [it, fresh] = region_of_root.emplace(find(c), (int)region_of_root.size());
        region[c] = it->second;
    }
    OracleResult out;
    out.regions = (int)region_of_root.size();

    std::vector<bool> essential(out.regions, false);
    std::vector<signed char> pot(nc, -1);
    for (int c0 = 0; c0 < nc; ++c0) {
        if (pot[c0] >= 0) continue;
        pot[c0] = 0;
        std::deque<int> q{c0};
        while (!q.empty()) {
            int c = q.front();
            q.pop_front();
            for (auto [d, inf] : adj[c]) {
                int want = pot[c] ^ (inf ? 1 : 0);
                if (pot[d] < 0) {
                    pot[d] = (signed char)want;
                    q.push_back(d);
                } else if (pot[d] != want) {
                    essential[region[c]] = true;
                }
            }
        }
    }
    for (int r = 0; r < out.regions; ++r)
        if (essential[r]) {
            ++out.essential;
            out.root = r;
        }

    std::set<std::pair<int, int>> pairs;
    for (const auto& l : links)
        if (sign[l.a] != sign[l.b] && (l.a / (n * n)) == (l.b / (n * n))) {
            int a = region[l.a], b = region[l.b];
            pairs.insert({std::min(a, b), std::max(a, b)});
        }
    out.ovals = (int)pairs.size();
    std::vector<std::vector<int>> tree(out.regions);
    for (auto [a, b] : pairs) {
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    if (out.essential != 1 || out.regions != out.ovals + 1) return out;
    std::vector<int> depth(out.regions, -1);
    depth[out.root] = 0;
    std::deque<int> q{out.root};
    int reached = 1;
    while (!q.empty()) {
        int r = q.front();
        q.pop_front();
        for (int w : tree[r])
            if (depth[w] < 0) {
                depth[w] = depth[r] + 1;
                ++reached;
                q.push_back(w);
            }
    }
    if (reached != out.regions) return out;
    out.tree = true;
    for (auto [a, b] : pairs) (std::min(depth[a], depth[b]) % 2 == 0 ? out.p : out.n)++;
    out.shape = ahu(tree, out.root);
    return out;
}

}  // namespace pwtest
