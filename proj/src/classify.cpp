#include "patchwork/classify.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "patchwork/error.hpp"

namespace patchwork {

namespace {

std::vector<std::vector<int>> cycles_of_edges(const Curve& curve) {
    std::vector<std::vector<int>> out(curve.ends.size());
    for (int c = 0; c < curve.genus; ++c)
        for (int e : curve.cycles[c]) out[e].push_back(c);
    return out;
}

}  // namespace

IntersectionMatrix intersection_matrix(const Curve& curve, const EdgeSet& t) {
    IntersectionMatrix m;
    m.a = BitMatrix(curve.genus, curve.genus);
    auto coe = cycles_of_edges(curve);
    for (int e = 0; e < (int)t.size(); ++e) {
        if (!t[e]) continue;
        for (int i : coe[e])
            for (int j : coe[e]) m.a.flip(i, j);
    }
    for (int i = 0; i < curve.genus; ++i)
        if (m.a.get(i, i)) m.zero_diagonal = false;
    m.rank = m.a.rank();
    m.kernel_dim = curve.genus - m.rank;
    return m;
}

std::vector<std::vector<int>> gamma_graph(const Curve& curve, const EdgeSet& t) {
    std::vector<std::vector<int>> adj(curve.genus);
    auto coe = cycles_of_edges(curve);
    for (int e = 0; e < (int)t.size(); ++e)
        if (t[e] && coe[e].size() == 2) {
            adj[coe[e][0]].push_back(coe[e][1]);
            adj[coe[e][1]].push_back(coe[e][0]);
        }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::optional<M1Certificate> classify_m1(const Curve& curve, const EdgeSet& t) {
    auto adj = gamma_graph(curve, t);
    std::vector<int> odd;
    for (int c = 0; c < curve.genus; ++c) {
        int n = 0;
        for (int e : curve.cycles[c]) n += t[e];
        if (n % 2) odd.push_back(c);
    }
    if (odd.empty() || odd.size() > 4) return std::nullopt;
    for (int c = 0; c < curve.genus; ++c) {
        bool in = std::binary_search(odd.begin(), odd.end(), c);
        if (!in && !adj[c].empty()) return std::nullopt;
        if (in) {
            // adjacent to exactly the other clique members
            std::vector<int> want;
            for (int d : odd)
                if (d != c) want.push_back(d);
            if (adj[c] != want) return std::nullopt;
        }
    }
    return M1Certificate{odd};
}

std::string M2Certificate::label() const {
    std::string s = parts.size() == 2 ? "bipartite K_{" : "tripartite K_{";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i].size());
    }
    return s + "}";
}

std::optional<M2Certificate> classify_m2(const Curve& curve, const EdgeSet& t) {
    if (!is_dividing(curve, t)) throw Error(Code::NotDividing, "twist set is not dividing");
    auto adj = gamma_graph(curve, t);
    std::vector<int> live;
    for (int c = 0; c < curve.genus; ++c)
        if (!adj[c].empty()) live.push_back(c);
    if (live.empty()) return std::nullopt;
    // parts = connected components of the complement graph on non-isolated cycles
    std::vector<int> part(curve.genus, -1);
    std::vector<std::vector<int>> parts;
    for (int s : live) {
        if (part[s] >= 0) continue;
        int id = (int)parts.size();
        parts.emplace_back();
        std::deque<int> q{s};
        part[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            parts[id].push_back(u);
            for (int w : live)
                if (part[w] < 0 && w != u && !std::binary_search(adj[u].begin(), adj[u].end(), w)) {
                    part[w] = id;
                    q.push_back(w);
                }
        }
    }
    if (parts.size() < 2 || parts.size() > 3) return std::nullopt;
    for (const auto& p : parts)
        for (int u : p)
            for (int w : p)
                if (std::binary_search(adj[u].begin(), adj[u].end(), w)) return std::nullopt;
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::stable_sort(parts.begin(), parts.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    // Gamma_T is a subgraph of a planar graph, so it cannot contain K_{3,3}
    int total = 0;
    for (const auto& p : parts) total += (int)p.size();
    for (const auto& p : parts) {
        int rest = total - (int)p.size();
        if ((int)p.size() >= 3 && rest >= 3)
            throw std::logic_error("non-planar certificate " + M2Certificate{parts}.label());
    }
    return M2Certificate{parts};
}

std::string Classification::certificate() const {
    if (maximal) return "maximal";
    if (m1) return "M1 K_" + std::to_string(m1->clique.size());
    if (m2) return m2->label();
    return "";
}

std::string Classification::summary() const {
    std::string s = "g=" + std::to_string(genus) + " rank=" + std::to_string(rank) +
                    " components=" + std::to_string(components) + " " +
                    (dividing ? "dividing" : "non-dividing") + " M-" + std::to_string(rank);
    std::string c = certificate();
    if (!c.empty()) s += " " + c;
    return s;
}

Classification classify(const Curve& curve, const EdgeSet& t) {
    Classification c;
    c.genus = curve.genus;
    c.admissible = is_admissible(curve, t);
    auto m = intersection_matrix(curve, t);
    c.rank = m.rank;
    c.components = curve.genus - m.rank + 1;
    c.dividing = c.admissible && m.zero_diagonal;
    c.maximal = is_maximal(curve, t);
    c.m1 = classify_m1(curve, t);
    if (c.dividing) c.m2 = classify_m2(curve, t);
    return c;
}

Composition compose_cycle_disjoint(const Curve& curve, const std::vector<EdgeSet>& parts) {
    std::vector<int> owner(curve.genus, -1);
    Composition out;
    out.twists = empty_set(curve);
    for (int i = 0; i < (int)parts.size(); ++i) {
        for (int c = 0; c < curve.genus; ++c)
            for (int e : curve.cycles[c])
                if (parts[i][e]) {
                    if (owner[c] >= 0 && owner[c] != i)
                        throw Error(Code::NotCycleDisjoint,
                                    "parts " + std::to_string(owner[c]) + " and " +
                                        std::to_string(i) + " meet a common cycle");
                    owner[c] = i;
                }
        for (int e = 0; e < (int)parts[i].size(); ++e)
            if (parts[i][e]) {
                if (out.twists[e]) throw Error(Code::NotCycleDisjoint, "parts share an edge");
                out.twists[e] = true;
            }
        out.expected_rank += intersection_matrix(curve, parts[i]).rank;
    }
    int actual = intersection_matrix(curve, out.twists).rank;
    if (actual != out.expected_rank)
        throw std::logic_error("block ranks do not add up on a cycle-disjoint union");
    return out;
}

}  // namespace patchwork
