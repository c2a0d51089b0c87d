#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "patchwork/point.hpp"

namespace patchwork {

enum class Code {
    NonConvexPolygon,
    NotUnimodular,
    MissingLatticePoint,
    BadIncidence,
    OutsidePolygon,
    NotInducing,
    Inadmissible,
    NotDividing,
    SignConflict,
    NotAllOvals,
    NotATree,
    MultipleEssentialRegions,
    NotCycleDisjoint,
    NotTwoColorable,
    NoUniqueSpecialZone,
    PreconditionFailed,
    HypothesisViolated,
    ConstraintViolated,
    CrossingRequiredEdges,
    NonPrimitiveRequiredEdge,
    SyntaxError,
    SemanticError,
    ViewUnavailable,
    IoError,
};

const char* code_name(Code c);

// Every module failure is reported through this type; the code is stable and
// is what the CLI and the HTTP service print.
class Error : public std::runtime_error {
public:
    Error(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Error(Code code, const std::string& msg, int line)
        : std::runtime_error(msg), code_(code), line_(line) {}
    Error(Code code, const std::string& msg, Point where)
        : std::runtime_error(msg), code_(code), where_(where) {}

    Code code() const { return code_; }
    std::optional<int> line() const { return line_; }
    // lattice point attached to the failure (e.g. the interior point of a violated cycle)
    std::optional<Point> where() const { return where_; }

private:
    Code code_;
    std::optional<int> line_;
    std::optional<Point> where_;
};

}  // namespace patchwork
