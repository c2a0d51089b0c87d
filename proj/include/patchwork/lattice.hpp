#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "patchwork/point.hpp"
#include "patchwork/rational.hpp"

namespace patchwork {

// One edge of the polygon, i.e. one toric stratum line.
struct Stratum {
    int index = 0;
    Point from, to;      // polygon vertices, counterclockwise
    Point normal;        // primitive inward normal n
    long long c = 0;     // min over the polygon of n.v, attained on this edge
    int length = 0;      // lattice length
};

using Triangle = std::array<int, 3>;
using EdgeKey = std::array<int, 2>;  // point indices, first < second

struct Triangulation {
    std::vector<Point> polygon;           // counterclockwise
    std::vector<Point> points;            // all lattice points, lexicographic
    std::vector<Triangle> triangles;      // counterclockwise, sorted
    std::vector<EdgeKey> edges;           // sorted
    std::vector<bool> edge_on_boundary;
    std::vector<std::array<int, 2>> edge_triangles;  // -1 where absent
    std::vector<std::array<int, 2>> edge_apex;       // opposite vertex per side, -1 where absent
    std::vector<std::vector<int>> point_edges;       // incident edge ids
    std::vector<bool> on_boundary;
    std::vector<std::vector<int>> point_strata;      // strata containing the point
    std::vector<Stratum> strata;
    bool normal_fan_unimodular = true;

    int point_index(Point p) const;       // -1 if not a lattice point of the polygon
    int edge_index(int a, int b) const;   // -1 if not an edge
    int edge_index(Point a, Point b) const;
    int interior_count() const;
    // triangle-edge index list for triangle t (three edge ids)
    std::array<int, 3> triangle_edges(int t) const;

    std::map<Point, int> point_lookup;
    std::map<EdgeKey, int> edge_lookup;
};

// Lattice points of a convex polygon (counterclockwise), lexicographic.
std::vector<Point> lattice_points(const std::vector<Point>& polygon);

Triangulation validate_triangulation(const std::vector<Point>& polygon,
                                     const std::vector<std::array<Point, 3>>& triangles);

// Vertices 0..F-1 are trivalent (one per triangle); F.. are the pendant
// vertices, one per boundary edge. Curve edge ids coincide with triangulation
// edge ids.
struct Curve {
    int genus = 0;
    int trivalent = 0;
    int pendants = 0;
    std::vector<std::array<int, 2>> ends;  // curve vertices joined by each edge
    std::vector<bool> bounded;
    std::vector<int> direction;            // e-> in Z2^2, packed as in mod2()
    std::vector<bool> exposed;
    std::vector<int> cycle_point;          // interior point index of each primitive cycle
    std::vector<std::vector<int>> cycles;  // sorted edge ids of each primitive cycle
    std::vector<int> point_cycle;          // inverse map, -1 for boundary points
    std::vector<int> bounded_edges;
    std::vector<int> pendant_edge;         // boundary edge of each pendant vertex

    int vertex_count() const { return trivalent + pendants; }
};

Curve dual_curve(const Triangulation& tri);

bool strict_even_degree(const Triangulation& tri);
std::optional<int> lattice_transform_of_simplex(const Triangulation& tri);

struct PositionedCurve {
    std::vector<std::array<Rational, 2>> vertex;  // per trivalent vertex
    std::vector<Point> ray;                        // outward direction per pendant
};

// Verifies that the upper hull of the lifted points induces `tri` and places
// the trivalent vertices. Throws NotInducing.
PositionedCurve curve_geometry(const Triangulation& tri, const std::vector<Rational>& heights);

int gcd_abs(int a, int b);

}  // namespace patchwork
