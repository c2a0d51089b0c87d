#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patchwork/gf2.hpp"
#include "patchwork/phases.hpp"

namespace patchwork {

struct IntersectionMatrix {
    BitMatrix a;      // g x g, canonical cycle order
    int rank = 0;
    int kernel_dim = 0;
    bool zero_diagonal = true;
};

IntersectionMatrix intersection_matrix(const Curve& curve, const EdgeSet& t);

// Graph on primitive cycles joined by shared twisted (necessarily non-exposed) edges.
std::vector<std::vector<int>> gamma_graph(const Curve& curve, const EdgeSet& t);

struct M1Certificate {
    std::vector<int> clique;  // cycle indices of K_n
};

struct M2Certificate {
    std::vector<std::vector<int>> parts;  // 2 or 3 parts, cycle indices, sorted by size
    std::string label() const;            // "bipartite K_{1,7}" etc.
};

std::optional<M1Certificate> classify_m1(const Curve& curve, const EdgeSet& t);
// Throws NotDividing.
std::optional<M2Certificate> classify_m2(const Curve& curve, const EdgeSet& t);

struct Classification {
    int genus = 0;
    int rank = 0;
    int components = 0;
    bool admissible = false;
    bool dividing = false;
    bool maximal = false;
    std::optional<M1Certificate> m1;
    std::optional<M2Certificate> m2;
    std::string certificate() const;  // "maximal", "M1 K_2", "bipartite K_{1,4}", or ""
    std::string summary() const;      // one-line report
};

Classification classify(const Curve& curve, const EdgeSet& t);

struct Composition {
    EdgeSet twists;
    int expected_rank = 0;
};

// Throws NotCycleDisjoint.
Composition compose_cycle_disjoint(const Curve& curve, const std::vector<EdgeSet>& parts);

}  // namespace patchwork
