#pragma once

#include <string>

#include "patchwork/analysis.hpp"

namespace patchwork {

// view: "subdivision", "zones" or "realpart". Throws ViewUnavailable.
std::string render_svg(const Configuration& c, const Analysis& a, const std::string& view);

}  // namespace patchwork
