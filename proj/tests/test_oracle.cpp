// Numeric patchworking oracle against the combinatorial realization.
#include <doctest.h>

#include "support.hpp"

using namespace pwtest;

namespace {

void compare(const Triangulation& tri, const Signs& s) {
    Curve curve = dual_curve(tri);
    EdgeSet t = twists_from_signs(tri, curve, s);
    Realization r = realize(tri, curve, s, t);
    OracleResult o = numeric_oracle(tri, staircase_heights(tri), s);
    CHECK(o.ovals == r.real.count());
    CHECK(o.regions == r.regions.region_count);
    if (!r.all_ovals || !r.nest) {
        CHECK_FALSE(o.tree);
        return;
    }
    REQUIRE(o.tree);
    CHECK(o.essential == 1);
    CHECK(o.p == r.nest->p);
    CHECK(o.n == r.nest->n);
    CHECK(o.shape == ahu(region_tree(r), r.nest->root));
}

}  // namespace

TEST_CASE("staircase heights induce the staircase triangulations") {
    for (int d : {2, 4, 6}) {
        Triangulation tri = staircase(d);
        CHECK_NOTHROW(curve_geometry(tri, staircase_heights(tri)));
    }
}

TEST_CASE("conic: all 64 sign vectors agree with the sampling oracle") {
    Triangulation tri = conic();
    for (int mask = 0; mask < 64; ++mask) {
        Signs s(6);
        for (int v = 0; v < 6; ++v) s[v] = (mask >> v) & 1 ? -1 : 1;
        CAPTURE(mask);
        compare(tri, s);
    }
}

TEST_CASE("quartic: Harnack and random sign vectors agree with the sampling oracle") {
    Triangulation tri = quartic();
    compare(tri, harnack_signs(tri));
    Rng rng(17);
    for (int i = 0; i < 12; ++i) {
        Signs s(tri.points.size());
        for (auto& x : s) x = rng() & 1 ? 1 : -1;
        CAPTURE(i);
        compare(tri, s);
    }
}
