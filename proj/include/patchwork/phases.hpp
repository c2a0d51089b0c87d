#pragma once

#include <optional>
#include <vector>

#include "patchwork/lattice.hpp"

namespace patchwork {

using Signs = std::vector<int>;      // +1 / -1 per lattice point
using EdgeSet = std::vector<bool>;   // membership over all edge ids

Signs harnack_signs(const Triangulation& tri);

// delta(eps v) = (-1)^(eps.v) delta(v); eps packed as in mod2()
inline int sign_in_copy(const Triangulation& tri, const Signs& s, int v, int eps) {
    Point p = tri.points[v];
    int par = ((eps & 1) ? p.x : 0) + ((eps & 2) ? p.y : 0);
    return (par & 1) ? -s[v] : s[v];
}

EdgeSet twists_from_signs(const Triangulation& tri, const Curve& curve, const Signs& s);
// throws Inadmissible naming the first violated cycle
Signs signs_from_twists(const Triangulation& tri, const Curve& curve, const EdgeSet& t);

// index of the first primitive cycle whose twisted directions do not sum to zero
std::optional<int> violated_cycle(const Curve& curve, const EdgeSet& t);
bool is_admissible(const Curve& curve, const EdgeSet& t);
bool is_dividing(const Curve& curve, const EdgeSet& t);
bool is_maximal(const Curve& curve, const EdgeSet& t);
bool is_even_free(const Triangulation& tri, const EdgeSet& t);
bool all_non_exposed(const Curve& curve, const EdgeSet& t);

EdgeSet empty_set(const Curve& curve);
EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);
std::vector<int> members(const EdgeSet& t);
EdgeSet from_members(const Curve& curve, const std::vector<int>& ids);

// bases of the admissible and dividing subspaces, via GF(2) kernels
std::vector<EdgeSet> admissible_basis(const Curve& curve);
std::vector<EdgeSet> dividing_basis(const Curve& curve);

struct MultiBridge {
    EdgeSet edges;
    int direction = 0;
    bool circuit = false;    // all edges non-exposed
    bool even = false;       // some dual endpoint is an even point
};

// Greedy extraction; throws NotDividing.
std::vector<MultiBridge> decompose_multibridges(const Triangulation& tri, const Curve& curve,
                                                const EdgeSet& t);

// true iff removing `cut` leaves exactly two pieces and every removed edge
// joins them (a minimal disconnecting set)
bool is_bond(const Curve& curve, const EdgeSet& cut);

}  // namespace patchwork
