#include <doctest.h>

#include "patchwork/error.hpp"
#include "support.hpp"

using namespace pwtest;

namespace {

struct Parallelograms {
    Triangulation tri;
    Curve curve;
    EdgeSet twists;
    std::vector<EdgeSet> blocks;
};

// up to `count` disjoint parallelograms in the degree-2k simplex
std::optional<Parallelograms> random_circuits(int k, int count, Rng& rng, std::optional<bool> even) {
    std::vector<Parallelogram> ps;
    for (int i = 0; i < count; ++i)
        if (auto p = random_parallelogram(simplex(2 * k), ps, rng, even)) ps.push_back(*p);
    if (ps.empty()) return std::nullopt;
    std::vector<Segment> req;
    for (const auto& p : ps)
        for (const auto& s : p.sides()) req.push_back(s);
    Parallelograms out;
    out.tri = triangulate_with_constraints(simplex(2 * k), req);
    out.curve = dual_curve(out.tri);
    out.twists = empty_set(out.curve);
    for (const auto& p : ps) {
        out.blocks.push_back(parallelogram_twists(out.tri, out.curve, p));
        out.twists = symmetric_difference(out.twists, out.blocks.back());
    }
    return out;
}

}  // namespace

TEST_CASE("empty twist set: one zone") {
    Triangulation tri = staircase(10);
    Curve c = dual_curve(tri);
    EdgeSet t = empty_set(c);
    ZoneDecomposition zd = zone_decomposition(tri, c, t);
    CHECK(zd.zone_count == 1);
    CHECK(zd.color[zd.special] == 1);
    CHECK(zd.n1 == 30);
    CHECK(zd.p1 == 6);
    CHECK(even_free_lower_bound(tri, c, t, zd) == std::pair{31, 6});
    Realization r = realize(tri, c, harnack_signs(tri), t);
    REQUIRE(r.nest);
    CHECK(r.nest->p == 31);
    CHECK(r.nest->n == 6);
}

TEST_CASE("degree 10 single block zones") {
    RagsdaleConfig rc = single_block(5, 0, 1);
    ZoneDecomposition zd = zone_decomposition(rc.tri, rc.curve, rc.twists);
    CHECK(zd.zone_count == 4);
    CHECK(zd.boundary_zones.size() == 1);
    CHECK(zd.n1 == 25);
    CHECK(zd.p0 == 4);
    CHECK(zd.p1 == 2);
    CHECK(zd.n0 == 0);
    int y0 = 0;
    for (int z = 0; z < zd.zone_count; ++z) y0 += zd.color[z] == 0;
    CHECK(y0 == 2);  // l bounded zones in Y0, l - 1 in Y1
    CHECK(even_free_lower_bound(rc.tri, rc.curve, rc.twists, zd) == std::pair{30, 2});

    auto blocks = segment_blocks(rc.tri, rc.curve, rc.twists);
    REQUIRE(blocks.size() == 1);
    auto shape = block_shape(rc.tri, blocks[0]);
    REQUIRE(shape);
    CHECK(shape->l == 2);
    OvalCountPrediction pr = bipartite_count(rc.tri, rc.curve, rc.twists, zd, blocks);
    CHECK(pr.p == 32);
    CHECK(pr.n == 3);
}

TEST_CASE("degree 14 single block zones") {
    RagsdaleConfig rc = single_block(7, 0, 2, Placement{5, 5, 0});
    ZoneDecomposition zd = zone_decomposition(rc.tri, rc.curve, rc.twists);
    // the side row touches the left edge, which splits off one more boundary zone
    CHECK(zd.zone_count == 9);
    CHECK(zd.boundary_zones.size() == 2);
    CHECK(zd.n1 == 55);
    CHECK(zd.p0 == 8);
    CHECK(zd.p1 == 7);
    CHECK(zd.n0 == 0);
    CHECK(even_free_lower_bound(rc.tri, rc.curve, rc.twists, zd) == std::pair{64, 7});
    OvalCountPrediction pr =
        bipartite_count(rc.tri, rc.curve, rc.twists, zd, segment_blocks(rc.tri, rc.curve, rc.twists));
    CHECK(pr.p == 67);
    CHECK(pr.n == 10);
    REQUIRE(pr.shapes.size() == 1);
    CHECK(pr.shapes[0].l == 4);
}

TEST_CASE("full construction k = 7 prediction") {
    RagsdaleConfig rc = full_construction(7);
    ZoneDecomposition zd = zone_decomposition(rc.tri, rc.curve, rc.twists);
    OvalCountPrediction pr =
        bipartite_count(rc.tri, rc.curve, rc.twists, zd, segment_blocks(rc.tri, rc.curve, rc.twists));
    CHECK(pr.p == 68);
    CHECK(pr.n == 7);
}

TEST_CASE("hypotheses are enforced") {
    // odd degree fails strict even degree
    Triangulation tri = staircase(5);
    Curve c = dual_curve(tri);
    EdgeSet t = empty_set(c);
    ZoneDecomposition zd = zone_decomposition(tri, c, t);
    bool threw = false;
    try {
        even_free_lower_bound(tri, c, t, zd);
    } catch (const Error& e) {
        threw = e.code() == Code::PreconditionFailed;
    }
    CHECK(threw);
    threw = false;
    try {
        bipartite_count(tri, c, t, zd, {});
    } catch (const Error& e) {
        threw = e.code() == Code::HypothesisViolated;
    }
    CHECK(threw);

    // an inadmissible set is refused
    Triangulation q = quartic();
    Curve qc = dual_curve(q);
    threw = false;
    try {
        zone_decomposition(q, qc, from_members(qc, {qc.cycles[0][0]}));
    } catch (const Error& e) {
        threw = e.code() == Code::Inadmissible;
    }
    CHECK(threw);
}

TEST_CASE("prediction matches nesting on random parallelogram circuits") {
    Rng rng(77);
    int compared = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + trial % 4;
        auto pc = random_circuits(k, 1 + trial % 3, rng, false);
        if (!pc) continue;
        Configuration cfg = make_configuration(pc->tri, pc->twists);
        Analysis a = analyze(cfg);
        REQUIRE(a.real.nest);
        REQUIRE(a.zones);
        // a bounded zone census of K_{2,2}: one Y0 zone inside each parallelogram
        CHECK(a.zones->zone_count == 1 + (int)pc->blocks.size());
        REQUIRE(a.lower_bound);
        CHECK(a.real.nest->p >= a.lower_bound->first);
        CHECK(a.real.nest->n >= a.lower_bound->second);
        REQUIRE(a.prediction);
        CHECK(a.prediction->p == a.real.nest->p);
        CHECK(a.prediction->n == a.real.nest->n);
        CHECK(a.prediction->p + a.prediction->n == a.cls.components);
        ++compared;
    }
    CHECK(compared >= 25);
}

TEST_CASE("prediction matches nesting on random single Ragsdale blocks") {
    Rng rng(5);
    int compared = 0;
    for (int trial = 0; trial < 60 && compared < 15; ++trial) {
        int k = 5 + trial % 3;
        int t = (int)(rng() % ((k - 5) / 2 + 1));
        int m = 1 + (int)(rng() % ((2 * k - 1 - 4 * t) / 6));
        // apexes odd and congruent to b1 + 2 mod 3, so every segment is primitive
        int b1 = (int)(rng() % 3);
        auto apex = [&] {
            int a = b1 + 2 + 3 * (int)(rng() % 3);
            return a % 2 ? a : a + 3;
        };
        Placement pl{apex(), apex(), b1};
        RagsdaleConfig rc;
        try {
            rc = single_block(k, t, m, pl);
        } catch (const Error& e) {
            continue;
        }
        Analysis a = analyze(make_configuration(rc.tri, rc.twists));
        REQUIRE(a.real.nest);
        REQUIRE(a.prediction);
        CHECK(a.prediction->p == a.real.nest->p);
        CHECK(a.prediction->n == a.real.nest->n);
        CHECK(a.prediction->p == rc.predicted_p);
        ++compared;
    }
    CHECK(compared >= 5);
}
