#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "patchwork/phases.hpp"

namespace patchwork {

struct ZoneDecomposition {
    std::vector<int> zone;          // per triangle
    int zone_count = 0;
    std::vector<int> color;         // per zone: 1 for Y1, 0 for Y0
    int special = -1;
    std::vector<int> boundary_zones;
    std::vector<int> point_zone;    // per point, -1 on T-dual segments or on the boundary
    int p1 = 0, n1 = 0, p0 = 0, n0 = 0;
};

// Throws Inadmissible, NotTwoColorable, NoUniqueSpecialZone.
ZoneDecomposition zone_decomposition(const Triangulation& tri, const Curve& curve, const EdgeSet& t);

// (n1 + p0 + 1, p1 + n0). Throws PreconditionFailed.
std::pair<int, int> even_free_lower_bound(const Triangulation& tri, const Curve& curve,
                                          const EdgeSet& t, const ZoneDecomposition& zd);

struct BlockShape {
    int l = 0;            // block is K_{2,2l}
    int boundary = 0;     // block vertices on the polygon boundary
    std::vector<int> pair;   // the two apex points
    std::vector<int> side;   // the 2l other points
};

// Recognises the segment graph of `block` as K_{2,2l}; nullopt otherwise.
std::optional<BlockShape> block_shape(const Triangulation& tri, const EdgeSet& block);

struct OvalCountPrediction {
    int p = 0, n = 0;
    std::vector<BlockShape> shapes;
    std::vector<std::pair<int, int>> contributions;  // per block (dp, dn)
};

// Throws HypothesisViolated naming the failed hypothesis.
OvalCountPrediction bipartite_count(const Triangulation& tri, const Curve& curve, const EdgeSet& t,
                                    const ZoneDecomposition& zd, const std::vector<EdgeSet>& blocks);

}  // namespace patchwork
