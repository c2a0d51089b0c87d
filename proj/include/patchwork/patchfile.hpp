#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patchwork/phases.hpp"
#include "patchwork/rational.hpp"

namespace patchwork {

struct PatchFile {
    std::vector<Point> polygon;
    std::vector<std::array<Point, 3>> triangles;
    std::optional<std::vector<std::pair<Point, Rational>>> heights;
    std::optional<std::vector<std::pair<Point, int>>> signs;
    std::optional<std::vector<std::pair<Point, Point>>> twists;
};

// Throws SyntaxError (with line number) and SemanticError.
PatchFile parse_patch(const std::string& text);
// Canonical form: polygon starts at its least vertex, every list sorted.
std::string emit_patch(const PatchFile& f);

struct Configuration {
    Triangulation tri;
    Curve curve;
    Signs signs;
    EdgeSet twists;
    std::optional<std::vector<Rational>> heights;  // per point index
};

// Validates the triangulation and resolves signs or twists. With twists (or
// neither section) the signs are derived from the twist set.
Configuration load(const PatchFile& f);
PatchFile to_patch(const Configuration& c, bool with_signs = false);

Configuration make_configuration(Triangulation tri, const EdgeSet& twists);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace patchwork
