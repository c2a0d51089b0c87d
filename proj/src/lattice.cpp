#include "patchwork/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "patchwork/error.hpp"

namespace patchwork {

int gcd_abs(int a, int b) { return std::gcd(std::abs(a), std::abs(b)); }

int Triangulation::point_index(Point p) const {
    auto it = point_lookup.find(p);
    return it == point_lookup.end() ? -1 : it->second;
}

int Triangulation::edge_index(int a, int b) const {
    if (a < 0 || b < 0) return -1;
    if (a > b) std::swap(a, b);
    auto it = edge_lookup.find({a, b});
    return it == edge_lookup.end() ? -1 : it->second;
}

int Triangulation::edge_index(Point a, Point b) const {
    return edge_index(point_index(a), point_index(b));
}

int Triangulation::interior_count() const {
    return (int)std::count(on_boundary.begin(), on_boundary.end(), false);
}

std::array<int, 3> Triangulation::triangle_edges(int t) const {
    const Triangle& tr = triangles[t];
    return {edge_index(tr[0], tr[1]), edge_index(tr[1], tr[2]), edge_index(tr[2], tr[0])};
}

std::vector<Point> lattice_points(const std::vector<Point>& polygon) {
    int x0 = polygon[0].x, x1 = x0, y0 = polygon[0].y, y1 = y0;
    for (Point p : polygon) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    std::vector<Point> out;
    const size_t n = polygon.size();
    for (int x = x0; x <= x1; ++x)
        for (int y = y0; y <= y1; ++y) {
            Point p{x, y};
            bool inside = true;
            for (size_t i = 0; i < n && inside; ++i)
                if (cross(polygon[(i + 1) % n] - polygon[i], p - polygon[i]) < 0) inside = false;
            if (inside) out.push_back(p);
        }
    return out;
}

namespace {

void check_polygon(const std::vector<Point>& poly) {
    const size_t n = poly.size();
    if (n < 3) throw Error(Code::NonConvexPolygon, "polygon needs at least 3 vertices");
    for (size_t i = 0; i < n; ++i) {
        Point a = poly[i], b = poly[(i + 1) % n], c = poly[(i + 2) % n];
        if (cross(b - a, c - b) <= 0)
            throw Error(Code::NonConvexPolygon,
                        "polygon is not strictly convex counterclockwise at " + to_string(b));
    }
    // rules out self-overlapping star shapes whose turns all have the same sign
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (cross(poly[(i + 1) % n] - poly[i], poly[j] - poly[i]) < 0)
                throw Error(Code::NonConvexPolygon, "polygon winds more than once");
}

}  // namespace

Triangulation validate_triangulation(const std::vector<Point>& polygon,
                                     const std::vector<std::array<Point, 3>>& raw) {
    check_polygon(polygon);
    Triangulation tri;
    tri.polygon = polygon;
    tri.points = lattice_points(polygon);
    for (int i = 0; i < (int)tri.points.size(); ++i) tri.point_lookup[tri.points[i]] = i;

    const int n = (int)polygon.size();
    for (int i = 0; i < n; ++i) {
        Stratum s;
        s.index = i;
        s.from = polygon[i];
        s.to = polygon[(i + 1) % n];
        Point d = s.to - s.from;
        s.length = gcd_abs(d.x, d.y);
        Point u{d.x / s.length, d.y / s.length};
        s.normal = {-u.y, u.x};
        s.c = dot(s.normal, s.from);
        tri.strata.push_back(s);
    }
    for (int i = 0; i < n; ++i) {
        long long det = cross(tri.strata[i].normal, tri.strata[(i + 1) % n].normal);
        if (det != 1 && det != -1) tri.normal_fan_unimodular = false;
    }

    const int np = (int)tri.points.size();
    tri.on_boundary.assign(np, false);
    tri.point_strata.assign(np, {});
    for (int i = 0; i < np; ++i)
        for (const Stratum& s : tri.strata)
            if (dot(s.normal, tri.points[i]) == s.c) {
                tri.on_boundary[i] = true;
                tri.point_strata[i].push_back(s.index);
            }

    std::vector<Triangle> tris;
    for (const auto& t : raw) {
        Triangle idx;
        for (int k = 0; k < 3; ++k) {
            idx[k] = tri.point_index(t[k]);
            if (idx[k] < 0)
                throw Error(Code::OutsidePolygon, "triangle vertex " + to_string(t[k]) +
                                                      " is not a lattice point of the polygon",
                            t[k]);
        }
        long long a2 = cross(t[1] - t[0], t[2] - t[0]);
        if (a2 != 1 && a2 != -1)
            throw Error(Code::NotUnimodular, "triangle " + to_string(t[0]) + to_string(t[1]) +
                                                 to_string(t[2]) + " has area " +
                                                 std::to_string(std::llabs(a2)) + "/2");
        if (a2 < 0) std::swap(idx[1], idx[2]);
        std::rotate(idx.begin(), std::min_element(idx.begin(), idx.end()), idx.end());
        tris.push_back(idx);
    }
    std::sort(tris.begin(), tris.end());
    if (std::adjacent_find(tris.begin(), tris.end()) != tris.end())
        throw Error(Code::BadIncidence, "duplicate triangle");

    std::vector<bool> used(np, false);
    for (const auto& t : tris)
        for (int v : t) used[v] = true;
    for (int i = 0; i < np; ++i)
        if (!used[i])
            throw Error(Code::MissingLatticePoint,
                        "lattice point " + to_string(tri.points[i]) + " is not a vertex",
                        tri.points[i]);

    struct Side {
        int tri, apex;
    };
    std::map<EdgeKey, std::vector<Side>> sides;
    for (int t = 0; t < (int)tris.size(); ++t)
        for (int k = 0; k < 3; ++k) {
            int a = tris[t][k], b = tris[t][(k + 1) % 3], c = tris[t][(k + 2) % 3];
            sides[{std::min(a, b), std::max(a, b)}].push_back({t, c});
        }

    auto on_same_stratum = [&](int a, int b) {
        for (int s : tri.point_strata[a])
            if (std::find(tri.point_strata[b].begin(), tri.point_strata[b].end(), s) !=
                tri.point_strata[b].end())
                return true;
        return false;
    };

    tri.triangles = tris;
    tri.point_edges.assign(np, {});
    for (auto& [key, list] : sides) {
        int id = (int)tri.edges.size();
        bool boundary = on_same_stratum(key[0], key[1]);
        Point pa = tri.points[key[0]], pb = tri.points[key[1]];
        if (boundary && list.size() != 1)
            throw Error(Code::BadIncidence, "boundary edge " + to_string(pa) + to_string(pb) +
                                                " lies in " + std::to_string(list.size()) +
                                                " triangles");
        if (!boundary) {
            if (list.size() != 2)
                throw Error(Code::BadIncidence, "interior edge " + to_string(pa) + to_string(pb) +
                                                    " lies in " + std::to_string(list.size()) +
                                                    " triangles");
            long long s0 = cross(pb - pa, tri.points[list[0].apex] - pa);
            long long s1 = cross(pb - pa, tri.points[list[1].apex] - pa);
            if ((s0 > 0) == (s1 > 0))
                throw Error(Code::BadIncidence,
                            "triangles overlap along " + to_string(pa) + to_string(pb));
        }
        tri.edges.push_back(key);
        tri.edge_on_boundary.push_back(boundary);
        std::array<int, 2> ts{-1, -1}, ap{-1, -1};
        for (size_t k = 0; k < list.size(); ++k) {
            ts[k] = list[k].tri;
            ap[k] = list[k].apex;
        }
        tri.edge_triangles.push_back(ts);
        tri.edge_apex.push_back(ap);
        tri.edge_lookup[key] = id;
        tri.point_edges[key[0]].push_back(id);
        tri.point_edges[key[1]].push_back(id);
    }

    long long twice_area = 0;
    for (int i = 0; i < n; ++i) twice_area += cross(polygon[i], polygon[(i + 1) % n]);
    if (twice_area != (long long)tris.size())
        throw Error(Code::BadIncidence, "triangles do not cover the polygon");
    return tri;
}

Curve dual_curve(const Triangulation& tri) {
    Curve c;
    c.trivalent = (int)tri.triangles.size();
    const int ne = (int)tri.edges.size();
    c.ends.resize(ne);
    c.bounded.resize(ne);
    c.direction.resize(ne);
    c.exposed.resize(ne);
    for (int e = 0; e < ne; ++e) {
        auto [a, b] = tri.edges[e];
        c.bounded[e] = !tri.edge_on_boundary[e];
        int m = mod2(tri.points[a] + tri.points[b]);
        c.direction[e] = ((m & 1) << 1) | (m >> 1);
        c.exposed[e] = tri.on_boundary[a] || tri.on_boundary[b];
        if (c.bounded[e]) {
            c.ends[e] = {tri.edge_triangles[e][0], tri.edge_triangles[e][1]};
            c.bounded_edges.push_back(e);
        } else {
            c.ends[e] = {tri.edge_triangles[e][0], c.trivalent + c.pendants};
            c.pendant_edge.push_back(e);
            ++c.pendants;
        }
    }
    c.point_cycle.assign(tri.points.size(), -1);
    for (int v = 0; v < (int)tri.points.size(); ++v) {
        if (tri.on_boundary[v]) continue;
        c.point_cycle[v] = (int)c.cycles.size();
        c.cycle_point.push_back(v);
        std::vector<int> es = tri.point_edges[v];
        std::sort(es.begin(), es.end());
        c.cycles.push_back(es);
    }
    c.genus = (int)c.cycles.size();
    return c;
}

bool strict_even_degree(const Triangulation& tri) {
    for (const Stratum& s : tri.strata)
        if (s.length % 2 != 0) return false;
    return true;
}

std::optional<int> lattice_transform_of_simplex(const Triangulation& tri) {
    if (tri.strata.size() != 3) return std::nullopt;
    int len = tri.strata[0].length;
    if (len % 2 != 0) return std::nullopt;
    for (const Stratum& s : tri.strata)
        if (s.length != len) return std::nullopt;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            long long d = cross(tri.strata[i].normal, tri.strata[j].normal);
            if (d != 1 && d != -1) return std::nullopt;
        }
    return len / 2;
}

PositionedCurve curve_geometry(const Triangulation& tri, const std::vector<Rational>& h) {
    if (h.size() != tri.points.size())
        throw Error(Code::NotInducing, "heights must cover every lattice point");
    struct Plane {
        Rational alpha, bx, by;
        Rational at(Point p) const { return alpha + bx * Rational(p.x) + by * Rational(p.y); }
    };
    std::vector<Plane> planes;
    PositionedCurve out;
    for (const Triangle& t : tri.triangles) {
        Point a = tri.points[t[0]], b = tri.points[t[1]], c = tri.points[t[2]];
        Point u = b - a, w = c - a;
        Rational ru = h[t[1]] - h[t[0]], rw = h[t[2]] - h[t[0]];
        long long det = cross(u, w);  // +1 for counterclockwise unimodular triangles
        Rational bx = (Rational(w.y) * ru - Rational(u.y) * rw) / Rational(det);
        Rational by = (Rational(u.x) * rw - Rational(w.x) * ru) / Rational(det);
        Rational alpha = h[t[0]] - bx * Rational(a.x) - by * Rational(a.y);
        planes.push_back({alpha, bx, by});
        out.vertex.push_back({-bx, -by});
    }
    for (int e = 0; e < (int)tri.edges.size(); ++e) {
        if (tri.edge_on_boundary[e]) continue;
        for (int s = 0; s < 2; ++s) {
            int t = tri.edge_triangles[e][s];
            int apex = tri.edge_apex[e][1 - s];
            if (!(h[apex] < planes[t].at(tri.points[apex])))
                throw Error(Code::NotInducing,
                            "heights are not strictly concave across edge " +
                                to_string(tri.points[tri.edges[e][0]]) +
                                to_string(tri.points[tri.edges[e][1]]),
                            tri.points[apex]);
        }
    }
    for (int e = 0; e < (int)tri.edges.size(); ++e) {
        if (!tri.edge_on_boundary[e]) continue;
        auto [a, b] = tri.edges[e];
        for (int s : tri.point_strata[a])
            if (std::find(tri.point_strata[b].begin(), tri.point_strata[b].end(), s) !=
                tri.point_strata[b].end()) {
                Point n = tri.strata[s].normal;
                out.ray.push_back({-n.x, -n.y});
                break;
            }
    }
    return out;
}

}  // namespace patchwork
