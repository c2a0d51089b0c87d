#pragma once

#include <array>
#include <optional>
#include <vector>

#include "patchwork/phases.hpp"

namespace patchwork {

// Nodes are (edge, phase) pairs; node id = 2 * edge + slot, slot 0 holding the
// smaller phase.
struct RealPart {
    std::vector<std::array<int, 2>> phases;   // per edge
    std::vector<std::array<int, 2>> adjacent; // per node, its two neighbours
    std::vector<int> component;               // per node
    std::vector<std::vector<int>> nodes_of;   // per component, in traversal order

    int count() const { return (int)nodes_of.size(); }
    int edge_of(int node) const { return node / 2; }
    int phase_of(int node) const { return phases[node / 2][node % 2]; }
};

RealPart real_part(const Triangulation& tri, const Curve& curve, const Signs& s);

struct Gluing {
    int a, b;
    int stratum;  // -1 for gluings inside one copy, else the stratum crossed
};

struct RegionComplex {
    std::vector<Gluing> gluings;
    std::vector<int> region;                // per cell 4 * point + eps
    int region_count = 0;
    std::vector<int> region_sign;           // 0 when cells disagree
    std::vector<bool> essential;
    std::vector<std::vector<int>> component_regions;  // adjacent regions, 1 or 2 each
};

// Throws SignConflict.
RegionComplex complement_regions(const Triangulation& tri, const Signs& s, const RealPart& rp);

bool oval_test(const RegionComplex& rc, const RealPart& rp, int component);

struct Nesting {
    int root = -1;
    std::vector<int> region_depth;
    std::vector<int> region_parent_oval;   // oval separating a region from its parent, -1 at root
    std::vector<int> oval_depth;           // number of ovals containing each oval
    std::vector<int> oval_parent;          // innermost oval containing it, -1 if none
    std::vector<int> oval_inner_region;
    int p = 0, n = 0;
    bool sign_parity_checked = false;
    bool sign_parity_ok = true;
};

// Throws NotAllOvals, NotATree, MultipleEssentialRegions.
Nesting nesting(const RegionComplex& rc, const RealPart& rp);

std::optional<int> special_component(const Curve& curve, const RealPart& rp, const EdgeSet& t);

// per stratum: parity of real points of the curve on the stratum line
std::vector<int> curve_class(const Triangulation& tri, const Curve& curve, const RealPart& rp);

// Everything the reports need, in one pass.
struct Realization {
    RealPart real;
    RegionComplex regions;
    std::vector<bool> oval;
    bool all_ovals = false;
    std::optional<Nesting> nest;
    std::optional<int> special;
};

Realization realize(const Triangulation& tri, const Curve& curve, const Signs& s,
                    const EdgeSet& t);

}  // namespace patchwork
