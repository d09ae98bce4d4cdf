#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "atlas/realizer.hpp"

using namespace atlas;

namespace {

ChernCoords coords(const ManifoldState &s) { return chern_coords(s.invariants); }

// Evaluates a realized point and checks target, abelianization and verdict.
VerdictLevel check_point(long long c, long long chi, const std::string &pi1)
{
    ConstructionPlan plan = realize(c, chi, pi1);
    ManifoldState s = evaluate_plan(plan);
    REQUIRE(s.target_ok.has_value());
    CHECK_MESSAGE(*s.target_ok, s.target_report);
    auto g = closed_pi1(s);
    auto expected = parse_pi1_descriptor(pi1);
    CHECK(abelianization(g) == expected);
    return verify_cyclic(g, expected, 4000).level;
}

} // namespace

TEST_CASE("decompose is exhaustive for n <= 50")
{
    for (long long n = 1; n <= 50; ++n) {
        for (long long m = 0; m <= 4 * n - 1; ++m) {
            Decomposition t = decompose(m, n);
            CHECK(check_decomposition(m, n, t));
        }
    }
}

TEST_CASE("decompose worked examples and checker tolerance")
{
    Decomposition t = decompose(39, 11);
    CHECK(check_decomposition(39, 11, t));
    // Both quoted tuples for (39, 11) are valid.
    CHECK(check_decomposition(39, 11, Decomposition{1, 0, 0, 9, 1}));
    CHECK(check_decomposition(39, 11, Decomposition{2, 0, 1, 8, 0}));

    t = decompose(1, 2);
    CHECK(t.b == 0);
    CHECK(t.c == 0);
    CHECK(t.d == 1);
    CHECK(t.g == 0);
    CHECK(t.k == 1);

    t = decompose(0, 7);
    CHECK(t.k == 7);
    CHECK(t.b + t.c + t.d + t.g == 0);

    CHECK(!check_decomposition(39, 11, Decomposition{0, 0, 3, 9, -1}));
    CHECK(!check_decomposition(4, 1, Decomposition{0, 0, 0, 1, 0})); // b = 0, g > 0
    CHECK_THROWS_AS(decompose(8, 2), OutOfRegion);
    CHECK_THROWS_AS(decompose(-1, 3), OutOfRegion);
}

TEST_CASE("plan_even worked examples")
{
    // (2, 2): D summed with E'(1).
    ConstructionPlan plan = plan_even(2, 2, "Z_3");
    CHECK(plan.base_block == "D");
    auto s = evaluate_plan(plan);
    CHECK(coords(s).c1sq == 2);
    CHECK(coords(s).chi_num == 2);
    CHECK(s.invariants.e == 22);
    CHECK(s.invariants.sigma == -14);
    CHECK(verify_cyclic(closed_pi1(s), AbelianGroup{0, {3}}, 4000).level ==
          VerdictLevel::ProvenCyclic);

    // (0, 1): E'(1) riding the four-torus.
    plan = plan_even(0, 1, "Z_3");
    CHECK(plan.base_block == "T4");
    s = evaluate_plan(plan);
    CHECK(s.invariants.e == 12);
    CHECK(s.invariants.sigma == -8);
    CHECK(coords(s).c1sq == 0);
    CHECK(coords(s).chi_num == 1);

    // (6, 1): a single B and one surgery.
    plan = plan_even(6, 1, "Z");
    CHECK(plan.base_block == "B");
    CHECK(plan.steps.size() == 1);
    s = evaluate_plan(plan);
    CHECK(coords(s).c1sq == 6);
    CHECK(verify_cyclic(closed_pi1(s), AbelianGroup{1, {}}, 4000).level ==
          VerdictLevel::ProvenCyclic);

    CHECK_THROWS_AS(plan_even(7, 2, "Z"), OddC);
    CHECK_THROWS_AS(plan_even(16, 2, "Z"), OutOfRegion);
}

TEST_CASE("emitted even plans satisfy the lemma identity")
{
    for (long long chi = 1; chi <= 6; ++chi) {
        for (long long c = 0; c <= 8 * chi - 2; c += 2) {
            ConstructionPlan plan = plan_even(c, chi, "Z_3");
            auto s = evaluate_plan(plan);
            CHECK(coords(s).c1sq == c);
            CHECK(coords(s).chi_num == chi);
            CHECK(coords(s).chi_den == 1);
        }
    }
}

TEST_CASE("plan_odd worked examples")
{
    ConstructionPlan plan = plan_odd(7, 2, "Z_3");
    CHECK(plan.base_block == "DPark");
    CHECK(check_point(7, 2, "Z_3") == VerdictLevel::ProvenCyclic);

    // Telescoping family point (5 + 8k, 1 + k) at k = 2.
    plan = plan_odd(21, 3, "Z");
    CHECK(plan.base_block == "P");
    CHECK(plan.base_param == 2);
    CHECK(check_point(21, 3, "Z") == VerdictLevel::ProvenCyclic);

    // Genus 3 resolution point.
    plan = plan_odd(19, 3, "Z");
    CHECK(plan.base_block == "Atilde");
    CHECK(check_point(19, 3, "Z") == VerdictLevel::ProvenCyclic);

    CHECK_THROWS_AS(plan_odd(2, 2, "Z"), OddC);
    CHECK_THROWS_AS(plan_odd(17, 2, "Z"), OutOfRegion);
    CHECK_THROWS_AS(plan_odd(1, 1, "Z"), UnsupportedPoint);
}

TEST_CASE("scripted odd points prove cyclic for both groups")
{
    const long long pts[][2] = {{3, 1},  {7, 1},  {1, 2},  {3, 2},  {5, 2},
                                {7, 2},  {9, 2},  {15, 2}, {15, 3}, {17, 3},
                                {19, 3}, {21, 3}, {23, 3}};
    for (auto &p : pts) {
        CAPTURE(p[0]);
        CAPTURE(p[1]);
        CHECK(check_point(p[0], p[1], "Z") == VerdictLevel::ProvenCyclic);
        CHECK(check_point(p[0], p[1], "Z_3") == VerdictLevel::ProvenCyclic);
    }
}

TEST_CASE("audit_region chi_max = 3 covers everything")
{
    for (const char *pi1 : {"Z_3", "Z"}) {
        CAPTURE(pi1);
        CoverageReport r = audit_region(3, pi1);
        CHECK(r.points.size() == 48); // 8 + 16 + 24
        CHECK(r.unrealized == 0);
        CHECK(r.special == 4); // (1,1), (5,1), (11,2), (13,2)
        CHECK(r.realized == 44);
        for (const auto &p : r.points) {
            CAPTURE(p.c1sq);
            CAPTURE(p.chi_h);
            CHECK(p.status != PointStatus::Unrealized);
            if (p.status == PointStatus::Realized)
                CHECK(p.verdict != VerdictLevel::Mismatch);
        }
    }
}

TEST_CASE("audit_region chi_max = 1 has 8 points")
{
    CoverageReport r = audit_region(1, "Z_3");
    CHECK(r.points.size() == 8);
    CHECK(r.unrealized == 0);
}

TEST_CASE("sampled larger-chi points verify")
{
    // Worked example (78, 11) plus region representatives.
    ConstructionPlan plan = realize(78, 11, "Z_3");
    auto s = evaluate_plan(plan);
    CHECK(coords(s).c1sq == 78);
    CHECK(coords(s).chi_num == 11);
    CHECK(check_point(78, 11, "Z_3") == VerdictLevel::ProvenCyclic);

    CHECK(check_point(27, 4, "Z") == VerdictLevel::ProvenCyclic);  // P58 region
    CHECK(check_point(19, 4, "Z_3") == VerdictLevel::ProvenCyclic); // DPark region
    CHECK(check_point(5, 4, "Z_3") == VerdictLevel::ProvenCyclic);  // S11 region
    CHECK(check_point(160, 21, "Z") == VerdictLevel::ProvenCyclic);
}

TEST_CASE("table of chained sums with X1 and E(1)")
{
    struct Row {
        std::string block;
        std::optional<long long> param;
        std::string cap;
        long long c1sq, chi;
    };
    const Row rows[] = {
        {"D", {}, "X1", 8, 2},   {"C", {}, "X1", 10, 2},  {"B", {}, "X1", 12, 2},
        {"B_g", 1, "X1", 20, 3}, {"B_g", 2, "X1", 28, 4}, {"B_g", 3, "X1", 36, 5},
        {"D", {}, "E", 2, 2},    {"C", {}, "E", 4, 2},    {"B", {}, "E", 6, 2},
        {"B_g", 1, "E", 14, 3},  {"B_g", 2, "E", 22, 4},  {"B_g", 3, "E", 30, 5},
    };
    for (const Row &r : rows) {
        CAPTURE(r.block);
        CAPTURE(r.cap);
        SumStep glue;
        glue.left_surface = "T1";
        glue.right_block = r.cap;
        if (r.cap == "E") glue.right_param = 1;
        glue.right_surface = "T";
        ConstructionPlan plan;
        plan.base_block = r.block;
        plan.base_param = r.param;
        plan.steps = {glue};
        auto s = evaluate_plan(plan);
        CHECK(coords(s).c1sq == r.c1sq);
        CHECK(coords(s).chi_num == r.chi);
        CHECK(abelianization(closed_pi1(s)) == AbelianGroup{1, {}});

        plan.steps.push_back(LuttingerStep{"T2", "m", 1, 3});
        s = evaluate_plan(plan);
        CHECK(coords(s).c1sq == r.c1sq);
        CHECK(abelianization(closed_pi1(s)) == AbelianGroup{0, {3}});
    }
}

TEST_CASE("extend_region offsets and plan evaluation")
{
    ConstructionPlan seed;
    seed.base_block = "AP_M";
    seed.target = Target{194, 24, "1"};
    auto pts = extend_region(seed, "T", RegionMode::Open, 2);
    CHECK(pts.size() == 8 + 16);
    size_t i = 0;
    for (long long chi = 1; chi <= 2; ++chi) {
        for (long long c = 0; c <= 8 * chi - 1; ++c, ++i) {
            const ExtensionPoint &p = pts[i];
            CHECK(p.c1sq - 194 == c);
            CHECK(p.chi_h - 24 == chi);
            if (c % 2 == 0) {
                REQUIRE(p.plan.has_value());
            }
            if (p.plan) {
                auto s = evaluate_plan(*p.plan);
                CHECK(coords(s).c1sq == p.c1sq);
                CHECK(coords(s).chi_num == p.chi_h);
                // Nothing attached contributes fundamental group.
                CHECK(abelianization(closed_pi1(s)) == AbelianGroup{0, {}});
            } else {
                CHECK(!p.note.empty());
            }
        }
    }
    // chi' = 2 odd offsets ride the simply connected seeds.
    CHECK(pts[8 + 1].plan.has_value());  // (1, 2)
    CHECK(pts[8 + 9].plan.has_value());  // (9, 2)

    CHECK_THROWS_AS(extend_region(seed, "nope", RegionMode::Open, 1),
                    MissingTorus);
}

TEST_CASE("extend_region closed mode reaches the sigma = 0 line")
{
    ConstructionPlan seed;
    seed.base_block = "StipsiczS";
    seed.target = Target{364, 45, "1"};
    auto pts = extend_region(seed, "T", RegionMode::Closed, 2);
    CHECK(pts.size() == 9 + 17);
    // c' = 8 chi' - 4 members carry plans with sigma = 0.
    for (const ExtensionPoint &p : pts) {
        long long chi = p.chi_h - 45;
        long long c = p.c1sq - 364;
        if (c == 8 * chi - 4) {
            REQUIRE(p.plan.has_value());
            auto s = evaluate_plan(*p.plan);
            CHECK(s.invariants.sigma == 0);
        }
        if (c == 8 * chi) CHECK(!p.plan.has_value()); // beyond the catalog
    }
}

TEST_CASE("known discrepancies are exactly two")
{
    auto d = known_discrepancies();
    CHECK(d.size() == 2);
    CHECK(d[0].subject.find("(m, n) = (1, 2)") != std::string::npos);
    CHECK(d[1].subject.find("S11") != std::string::npos);
}
