#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "patchwork/classify.hpp"
#include "patchwork/patchfile.hpp"
#include "patchwork/realization.hpp"
#include "patchwork/zones.hpp"

namespace patchwork {

// Twisted edges grouped by connected pieces of their dual segments.
std::vector<EdgeSet> segment_blocks(const Triangulation& tri, const Curve& curve, const EdgeSet& t);

struct Analysis {
    Classification cls;
    Realization real;
    std::optional<ZoneDecomposition> zones;
    std::string zones_error;                 // error code name when zones failed
    std::optional<std::pair<int, int>> lower_bound;
    std::optional<OvalCountPrediction> prediction;
    std::string prediction_error;
};

Analysis analyze(const Configuration& c);

nlohmann::json point_json(Point p);
nlohmann::json report_json(const Configuration& c, const Analysis& a);

// "p=68 n=7" followed by one line per oval
std::string ovals_text(const Analysis& a);

}  // namespace patchwork
