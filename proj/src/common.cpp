#include <numeric>
#include <stdexcept>

#include "patchwork/error.hpp"
#include "patchwork/rational.hpp"

namespace patchwork {

const char* code_name(Code c) {
    switch (c) {
        case Code::NonConvexPolygon: return "NonConvexPolygon";
        case Code::NotUnimodular: return "NotUnimodular";
        case Code::MissingLatticePoint: return "MissingLatticePoint";
        case Code::BadIncidence: return "BadIncidence";
        case Code::OutsidePolygon: return "OutsidePolygon";
        case Code::NotInducing: return "NotInducing";
        case Code::Inadmissible: return "Inadmissible";
        case Code::NotDividing: return "NotDividing";
        case Code::SignConflict: return "SignConflict";
        case Code::NotAllOvals: return "NotAllOvals";
        case Code::NotATree: return "NotATree";
        case Code::MultipleEssentialRegions: return "MultipleEssentialRegions";
        case Code::NotCycleDisjoint: return "NotCycleDisjoint";
        case Code::NotTwoColorable: return "NotTwoColorable";
        case Code::NoUniqueSpecialZone: return "NoUniqueSpecialZone";
        case Code::PreconditionFailed: return "PreconditionFailed";
        case Code::HypothesisViolated: return "HypothesisViolated";
        case Code::ConstraintViolated: return "ConstraintViolated";
        case Code::CrossingRequiredEdges: return "CrossingRequiredEdges";
        case Code::NonPrimitiveRequiredEdge: return "NonPrimitiveRequiredEdge";
        case Code::SyntaxError: return "SyntaxError";
        case Code::SemanticError: return "SemanticError";
        case Code::ViewUnavailable: return "ViewUnavailable";
        case Code::IoError: return "IoError";
    }
    return "Unknown";
}

std::string to_string(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational Rational::from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    const __int128 lim = (__int128)INT64_MAX;
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
}

Rational::Rational(long long n, long long d) { *this = from128(n, d); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                             (__int128)a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    return Rational::from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = (__int128)a.num_ * b.den_;
    __int128 r = (__int128)b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    auto parse_int = [](const std::string& t) -> long long {
        if (t.empty()) throw std::invalid_argument("empty number");
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("bad number: " + t);
        for (size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') throw std::invalid_argument("bad number: " + t);
        return std::stoll(t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    long long d = parse_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(parse_int(s.substr(0, slash)), d);
}

}  // namespace patchwork
