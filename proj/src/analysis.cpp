#include "patchwork/analysis.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "patchwork/error.hpp"

namespace patchwork {

using nlohmann::json;

std::vector<EdgeSet> segment_blocks(const Triangulation& tri, const Curve& curve, const EdgeSet& t) {
    std::vector<int> parent(tri.points.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto ts = members(t);
    for (int e : ts) parent[find(tri.edges[e][0])] = find(tri.edges[e][1]);
    std::map<int, int> slot;
    std::vector<EdgeSet> out;
    for (int e : ts) {
        int r = find(tri.edges[e][0]);
        auto [it, fresh] = slot.emplace(r, (int)out.size());
        if (fresh) out.push_back(empty_set(curve));
        out[it->second][e] = true;
    }
    return out;
}

Analysis analyze(const Configuration& c) {
    Analysis a;
    a.cls = classify(c.curve, c.twists);
    a.real = realize(c.tri, c.curve, c.signs, c.twists);
    if (a.real.real.count() != a.cls.components)
        throw std::logic_error("real part has " + std::to_string(a.real.real.count()) +
                               " components, rank predicts " + std::to_string(a.cls.components));
    try {
        a.zones = zone_decomposition(c.tri, c.curve, c.twists);
    } catch (const Error& e) {
        a.zones_error = code_name(e.code());
    }
    if (a.zones) {
        try {
            a.lower_bound = even_free_lower_bound(c.tri, c.curve, c.twists, *a.zones);
        } catch (const Error&) {
        }
        if (a.cls.dividing && !members(c.twists).empty()) {
            try {
                a.prediction = bipartite_count(c.tri, c.curve, c.twists, *a.zones,
                                               segment_blocks(c.tri, c.curve, c.twists));
            } catch (const Error& e) {
                a.prediction_error = e.what();
            }
        }
    }
    return a;
}

json point_json(Point p) { return json::array({p.x, p.y}); }

json report_json(const Configuration& c, const Analysis& a) {
    json r;
    r["genus"] = a.cls.genus;
    r["rank"] = a.cls.rank;
    r["components"] = a.cls.components;
    r["admissible"] = a.cls.admissible;
    r["dividing"] = a.cls.dividing;
    r["maximal"] = a.cls.maximal;
    r["m_minus"] = a.cls.rank;
    r["certificate"] = a.cls.certificate();
    r["summary"] = a.cls.summary();
    json tw = json::array();
    for (int e : members(c.twists))
        tw.push_back({point_json(c.tri.points[c.tri.edges[e][0]]), point_json(c.tri.points[c.tri.edges[e][1]])});
    r["twists"] = tw;
    json sg = json::array();
    for (size_t i = 0; i < c.tri.points.size(); ++i)
        sg.push_back({point_json(c.tri.points[i]), c.signs[i] > 0 ? "+" : "-"});
    r["signs"] = sg;

    const auto& real = a.real;
    r["regions"] = real.regions.region_count;
    r["all_ovals"] = real.all_ovals;
    r["special_component"] = real.special ? json(*real.special) : json(nullptr);
    json ovals = json::array();
    for (int k = 0; k < real.real.count(); ++k) {
        json o;
        o["component"] = k;
        o["oval"] = (bool)real.oval[k];
        o["length"] = real.real.nodes_of[k].size();
        if (real.nest) {
            o["depth"] = real.nest->oval_depth[k];
            o["parent"] = real.nest->oval_parent[k] < 0 ? json(nullptr) : json(real.nest->oval_parent[k]);
            o["even"] = real.nest->oval_depth[k] % 2 == 0;
        }
        ovals.push_back(o);
    }
    r["ovals"] = ovals;
    if (real.nest) {
        r["p"] = real.nest->p;
        r["n"] = real.nest->n;
        r["sign_parity_checked"] = real.nest->sign_parity_checked;
        r["sign_parity_ok"] = real.nest->sign_parity_ok;
    } else {
        r["p"] = nullptr;
        r["n"] = nullptr;
    }

    if (a.zones) {
        const auto& z = *a.zones;
        r["zones"] = {{"count", z.zone_count}, {"special", z.special}, {"p1", z.p1},
                      {"n1", z.n1},          {"p0", z.p0},           {"n0", z.n0},
                      {"boundary_zones", z.boundary_zones}};
    } else {
        r["zones"] = {{"error", a.zones_error}};
    }
    r["lower_bound"] = a.lower_bound ? json::array({a.lower_bound->first, a.lower_bound->second}) : json(nullptr);
    if (a.prediction) {
        json blocks = json::array();
        for (size_t i = 0; i < a.prediction->shapes.size(); ++i)
            blocks.push_back({{"l", a.prediction->shapes[i].l},
                              {"boundary_vertices", a.prediction->shapes[i].boundary},
                              {"dp", a.prediction->contributions[i].first},
                              {"dn", a.prediction->contributions[i].second}});
        r["prediction"] = {{"p", a.prediction->p}, {"n", a.prediction->n}, {"blocks", blocks}};
    } else {
        r["prediction"] = nullptr;
        if (!a.prediction_error.empty()) r["prediction_error"] = a.prediction_error;
    }
    return r;
}

std::string ovals_text(const Analysis& a) {
    if (!a.real.nest) {
        int bad = 0;
        for (size_t k = 0; k < a.real.oval.size(); ++k)
            if (!a.real.oval[k]) bad = (int)k;
        throw Error(Code::NotAllOvals, "component " + std::to_string(bad) + " is not an oval");
    }
    const auto& nt = *a.real.nest;
    std::ostringstream out;
    out << "p=" << nt.p << " n=" << nt.n << "\n";
    // children listed under their parent, depth-first
    std::vector<std::vector<int>> kids(nt.oval_depth.size());
    std::vector<int> tops;
    for (int k = 0; k < (int)nt.oval_depth.size(); ++k)
        (nt.oval_parent[k] < 0 ? tops : kids[nt.oval_parent[k]]).push_back(k);
    std::vector<std::pair<int, int>> stack;
    for (auto it = tops.rbegin(); it != tops.rend(); ++it) stack.push_back({*it, 0});
    while (!stack.empty()) {
        auto [k, d] = stack.back();
        stack.pop_back();
        out << std::string(2 * d, ' ') << "oval " << k << (d % 2 == 0 ? " even" : " odd") << "\n";
        for (auto it = kids[k].rbegin(); it != kids[k].rend(); ++it) stack.push_back({*it, d + 1});
    }
    return out.str();
}

}  // namespace patchwork
