#include "patchwork/patchfile.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "patchwork/error.hpp"

namespace patchwork {

namespace {

const std::set<std::string> kSections = {"polygon", "triangles", "heights", "signs", "twists"};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

int to_int(const std::string& w, int line) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(w, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != w.size()) throw Error(Code::SyntaxError, "expected an integer, got '" + w + "'", line);
    return v;
}

std::array<Point, 3> canonical_triangle(std::array<Point, 3> t) {
    if (cross(t[1] - t[0], t[2] - t[0]) < 0) std::swap(t[1], t[2]);
    std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
    return t;
}

}  // namespace

PatchFile parse_patch(const std::string& text) {
    PatchFile f;
    std::istringstream in(text);
    std::string raw, section;
    std::set<std::string> seen;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw.substr(0, raw.find('#')));
        if (s.empty()) continue;
        if (s.back() == ':') {
            section = trim(s.substr(0, s.size() - 1));
            if (!kSections.count(section))
                throw Error(Code::SyntaxError, "unknown section '" + section + "'", line);
            if (!seen.insert(section).second)
                throw Error(Code::SyntaxError, "section '" + section + "' repeated", line);
            if (seen.count("signs") && seen.count("twists"))
                throw Error(Code::SemanticError, "a file gives either signs or twists, not both", line);
            if (section == "heights") f.heights.emplace();
            if (section == "signs") f.signs.emplace();
            if (section == "twists") f.twists.emplace();
            continue;
        }
        if (section.empty()) throw Error(Code::SyntaxError, "data before any section header", line);
        auto w = tokens(s);
        auto need = [&](size_t n) {
            if (w.size() != n)
                throw Error(Code::SyntaxError,
                            section + " entries have " + std::to_string(n) + " fields, got " +
                                std::to_string(w.size()),
                            line);
        };
        auto pt = [&](size_t i) { return Point{to_int(w[i], line), to_int(w[i + 1], line)}; };
        if (section == "polygon") {
            need(2);
            f.polygon.push_back(pt(0));
        } else if (section == "triangles") {
            need(6);
            f.triangles.push_back({pt(0), pt(2), pt(4)});
        } else if (section == "heights") {
            need(3);
            try {
                f.heights->emplace_back(pt(0), Rational::parse(w[2]));
            } catch (const std::exception&) {
                throw Error(Code::SyntaxError, "bad rational '" + w[2] + "'", line);
            }
        } else if (section == "signs") {
            need(3);
            if (w[2] != "+" && w[2] != "-")
                throw Error(Code::SyntaxError, "sign must be + or -, got '" + w[2] + "'", line);
            f.signs->emplace_back(pt(0), w[2] == "+" ? 1 : -1);
        } else {
            need(4);
            f.twists->emplace_back(pt(0), pt(2));
        }
    }
    if (f.polygon.empty()) throw Error(Code::SyntaxError, "missing polygon section", line);
    if (f.triangles.empty()) throw Error(Code::SyntaxError, "missing triangles section", line);
    return f;
}

std::string emit_patch(const PatchFile& f) {
    std::ostringstream out;
    auto poly = f.polygon;
    std::rotate(poly.begin(), std::min_element(poly.begin(), poly.end()), poly.end());
    out << "polygon:\n";
    for (Point p : poly) out << p.x << " " << p.y << "\n";
    std::vector<std::array<Point, 3>> tris;
    for (const auto& t : f.triangles) tris.push_back(canonical_triangle(t));
    std::sort(tris.begin(), tris.end());
    out << "triangles:\n";
    for (const auto& t : tris)
        out << t[0].x << " " << t[0].y << " " << t[1].x << " " << t[1].y << " " << t[2].x << " "
            << t[2].y << "\n";
    if (f.heights) {
        auto h = *f.heights;
        std::sort(h.begin(), h.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out << "heights:\n";
        for (const auto& [p, v] : h) out << p.x << " " << p.y << " " << v.str() << "\n";
    }
    if (f.signs) {
        auto s = *f.signs;
        std::sort(s.begin(), s.end());
        out << "signs:\n";
        for (const auto& [p, v] : s) out << p.x << " " << p.y << " " << (v > 0 ? "+" : "-") << "\n";
    }
    if (f.twists) {
        auto t = *f.twists;
        for (auto& [a, b] : t)
            if (b < a) std::swap(a, b);
        std::sort(t.begin(), t.end());
        out << "twists:\n";
        for (const auto& [a, b] : t) out << a.x << " " << a.y << " " << b.x << " " << b.y << "\n";
    }
    return out.str();
}

Configuration make_configuration(Triangulation tri, const EdgeSet& twists) {
    Configuration c;
    c.tri = std::move(tri);
    c.curve = dual_curve(c.tri);
    c.twists = twists;
    c.signs = signs_from_twists(c.tri, c.curve, c.twists);
    return c;
}

Configuration load(const PatchFile& f) {
    if (f.signs && f.twists) throw Error(Code::SemanticError, "a file gives either signs or twists, not both");
    Configuration c;
    c.tri = validate_triangulation(f.polygon, f.triangles);
    c.curve = dual_curve(c.tri);
    const int np = (int)c.tri.points.size();
    auto index_of = [&](Point p, const char* what) {
        int i = c.tri.point_index(p);
        if (i < 0) throw Error(Code::SemanticError, std::string(what) + " names " + to_string(p) +
                                                        ", which is not a lattice point of the polygon");
        return i;
    };
    if (f.heights) {
        std::vector<Rational> h(np);
        std::vector<bool> have(np, false);
        for (const auto& [p, v] : *f.heights) {
            int i = index_of(p, "heights entry");
            if (have[i]) throw Error(Code::SemanticError, "two heights for " + to_string(p));
            have[i] = true;
            h[i] = v;
        }
        for (int i = 0; i < np; ++i)
            if (!have[i]) throw Error(Code::SemanticError, "no height for " + to_string(c.tri.points[i]));
        c.heights = std::move(h);
    }
    if (f.signs) {
        c.signs.assign(np, 0);
        for (const auto& [p, v] : *f.signs) {
            int i = index_of(p, "signs entry");
            if (c.signs[i] != 0) throw Error(Code::SemanticError, "two signs for " + to_string(p));
            c.signs[i] = v;
        }
        for (int i = 0; i < np; ++i)
            if (c.signs[i] == 0) throw Error(Code::SemanticError, "no sign for " + to_string(c.tri.points[i]));
        c.twists = twists_from_signs(c.tri, c.curve, c.signs);
    } else {
        c.twists = empty_set(c.curve);
        if (f.twists)
            for (const auto& [a, b] : *f.twists) {
                int e = c.tri.edge_index(a, b);
                if (e < 0)
                    throw Error(Code::SemanticError,
                                "twist " + to_string(a) + "-" + to_string(b) + " is not a triangulation edge");
                if (c.tri.edge_on_boundary[e])
                    throw Error(Code::SemanticError, "twist " + to_string(a) + "-" + to_string(b) +
                                                         " is a boundary edge; only bounded edges twist");
                c.twists[e] = true;
            }
        c.signs = signs_from_twists(c.tri, c.curve, c.twists);
    }
    if (c.heights) curve_geometry(c.tri, *c.heights);
    return c;
}

PatchFile to_patch(const Configuration& c, bool with_signs) {
    PatchFile f;
    f.polygon = c.tri.polygon;
    for (const auto& t : c.tri.triangles)
        f.triangles.push_back({c.tri.points[t[0]], c.tri.points[t[1]], c.tri.points[t[2]]});
    if (c.heights) {
        f.heights.emplace();
        for (size_t i = 0; i < c.tri.points.size(); ++i) f.heights->emplace_back(c.tri.points[i], (*c.heights)[i]);
    }
    if (with_signs) {
        f.signs.emplace();
        for (size_t i = 0; i < c.tri.points.size(); ++i) f.signs->emplace_back(c.tri.points[i], c.signs[i]);
    } else {
        f.twists.emplace();
        for (int e : members(c.twists))
            f.twists->emplace_back(c.tri.points[c.tri.edges[e][0]], c.tri.points[c.tri.edges[e][1]]);
    }
    return f;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Code::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Code::IoError, "cannot write " + path);
    out << text;
    if (!out) throw Error(Code::IoError, "write failed for " + path);
}

}  // namespace patchwork
