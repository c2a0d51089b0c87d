#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patchwork/phases.hpp"
#include "patchwork/rational.hpp"

namespace patchwork {

using Segment = std::pair<Point, Point>;

std::vector<Point> simplex(int d);  // counterclockwise vertices of the degree-d simplex

// Required edges first, then the shortest remaining primitive segments in
// lexicographic order, skipping any that cross. Throws CrossingRequiredEdges,
// NonPrimitiveRequiredEdge.
Triangulation triangulate_with_constraints(const std::vector<Point>& polygon,
                                           const std::vector<Segment>& required);

long long ragsdale_r(int k);   // odd interior points of the degree-2k simplex
int gain_offset(int k);           // 0, 10, 8, 6, 4, 6 for k = 0..5 mod 6
Rational closed_form_p(int k);

struct Placement {
    int a1 = 3;   // x of the upper apex (row 4t+6)
    int a2 = 3;   // x of the lower apex (row 4t)
    int b1 = 1;   // x of the first side vertex (row 4t+3)
};

struct RagsdaleBlock {
    int t = 0, m = 0;
    Point upper, lower;
    std::vector<Point> side;
    std::string adjustment;   // empty when the table values were used as given
    std::vector<Segment> segments() const;
};

// Throws ConstraintViolated.
RagsdaleBlock make_block(int k, int t, int m, const Placement& pl);

struct RagsdaleConfig {
    int k = 0;
    std::vector<RagsdaleBlock> blocks;
    Triangulation tri;
    Curve curve;
    EdgeSet twists;
    std::vector<EdgeSet> block_twists;
    long long predicted_p = 0;                // R(k) + 1 + sum of block gains
    std::optional<Rational> closed_form;          // full construction only
    std::vector<std::string> adjustments;
    int expected_rank() const { return 2 * (int)blocks.size(); }
};

RagsdaleConfig single_block(int k, int t, int m, std::optional<Placement> pl = std::nullopt);
RagsdaleConfig full_construction(int k);

}  // namespace patchwork
