#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace patchwork {

struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

inline long long cross(Point a, Point b) { return (long long)a.x * b.y - (long long)a.y * b.x; }
inline long long dot(Point a, Point b) { return (long long)a.x * b.x + (long long)a.y * b.y; }

// even <=> both coordinates even
inline bool is_even(Point p) { return (p.x & 1) == 0 && (p.y & 1) == 0; }

// Z2^2 elements are packed as bit0 = first coordinate, bit1 = second.
inline int mod2(Point p) { return (p.x & 1) | ((p.y & 1) << 1); }

std::string to_string(Point p);

}  // namespace patchwork
