// Fixtures, random generators and independent re-implementations shared by
// the unit tests and the acceptance binary.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "patchwork/analysis.hpp"
#include "patchwork/ragsdale.hpp"

namespace pwtest {

using namespace patchwork;
using Rng = std::mt19937_64;

// Every unit square split along its anti-diagonal; cut to the polygon.
Triangulation staircase(int d);                 // degree-d simplex
Triangulation staircase_rect(int a, int b);     // [0,a] x [0,b]
Triangulation conic();                          
Triangulation quartic();                        
std::vector<Rational> staircase_heights(const Triangulation& tri);  // -(i^2 + j^2 + (i+j)^2)

// Random edge flips starting from `tri`.
Triangulation random_flips(const Triangulation& tri, Rng& rng, int flips);

// Random element of the span of `basis`, each vector kept with probability q.
EdgeSet random_combination(const Curve& curve, const std::vector<EdgeSet>& basis, Rng& rng, double q);
// Admissible sets using non-exposed bounded edges only.
std::vector<EdgeSet> non_exposed_admissible_basis(const Curve& curve);
std::vector<EdgeSet> non_exposed_dividing_basis(const Curve& curve);

// Closed lattice parallelogram c+u, c+w, c-u, c-w with constant side direction mod 2.
struct Parallelogram {
    Point c, u, w;
    std::vector<Point> corners() const;
    std::vector<Segment> sides() const;
    bool even() const;  // some corner is an even point
};
// Random parallelogram strictly inside `polygon`, disjoint from `avoid`.
std::optional<Parallelogram> random_parallelogram(const std::vector<Point>& polygon,
                                                  const std::vector<Parallelogram>& avoid, Rng& rng,
                                                  std::optional<bool> want_even = std::nullopt);
EdgeSet parallelogram_twists(const Triangulation& tri, const Curve& curve, const Parallelogram& p);

// Component count by walking along one side of the curve and switching
// sides at twisted edges and at the pendant vertices.
int walk_components(const Triangulation& tri, const Curve& curve, const EdgeSet& t);

// Canonical string of a rooted tree (children sorted), adjacency lists.
std::string ahu(const std::vector<std::vector<int>>& adj, int root);
// Region/oval tree of a combinatorial realization, as adjacency over regions.
std::vector<std::vector<int>> region_tree(const Realization& r);

struct OracleResult {
    int ovals = 0;
    int regions = 0;
    bool tree = false;
    int essential = 0;
    int root = -1;
    int p = 0, n = 0;
    std::string shape;  // AHU string of the region tree rooted at the essential region
};

// Numeric patchworking oracle for curves in the projective plane: evaluates
// sum delta(v) t^(-nu(v)) x^v on a grid per quadrant and flood-fills.
OracleResult numeric_oracle(const Triangulation& tri, const std::vector<Rational>& heights,
                            const Signs& s, int grid = 400, double t = 1e-8);

}  // namespace pwtest
