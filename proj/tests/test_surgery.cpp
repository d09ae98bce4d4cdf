#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "atlas/surgery.hpp"

using namespace atlas;

namespace {

ChernCoords coords(const ManifoldState &s) { return chern_coords(s.invariants); }

// The six-surgery chain on the Baldridge-Kirk block, last coefficient -k/1.
ConstructionPlan zbk_chain(long long p, bool finite)
{
    ConstructionPlan plan;
    plan.base_block = "Z_BK";
    plan.steps = {
        LuttingerStep{"T1'", "m", 1, 1},
        LuttingerStep{"T1", "l", -1, 1},
        LuttingerStep{"T2'", "l", 1, 1},
        LuttingerStep{"T3", "m", -1, 1},
        LuttingerStep{"T4", "l", -1, finite ? p : 1},
    };
    if (finite)
        plan.steps.push_back(TorusSurgeryStep{"T2", "m", -1, 1, true});
    plan.target = Target{6, 1, finite ? "Z_" + std::to_string(p) : "Z"};
    return plan;
}

// B with one +1 surgery, then the chained sum with Z8 along T1 = S8 with the
// stated swapped-and-inverted gluing, then seven surgeries.
ConstructionPlan x35_chain(long long p, bool finite)
{
    SumStep sum;
    sum.left_surface = "T1";
    sum.right_block = "Z8";
    sum.right_surface = "S8";
    sum.identifications = {{"t2", "y2"}, {"1", "b2 a2 b2^-1 a2^-1 b2^-1"}};
    ConstructionPlan plan;
    plan.base_block = "B";
    plan.steps = {
        LuttingerStep{"T2", "m", 1, 1},
        sum,
        LuttingerStep{"S3", "m", 1, 1},
        LuttingerStep{"S2", "m", 1, 1},
        LuttingerStep{"S4", "l", 1, 1},
        LuttingerStep{"S7", "m", 1, 1},
        LuttingerStep{"S6", "m", 1, 1},
    };
    if (finite) plan.steps.push_back(LuttingerStep{"S1", "l", 1, p});
    plan.steps.push_back(TorusSurgeryStep{"S5", "l", 1, 1, true});
    plan.target = Target{14, 2, finite ? "Z_" + std::to_string(p) : "Z"};
    return plan;
}

// Skipped-surgery family member: the surgered genus 2 x genus n product with
// the m-dial torus surgery, capped off by the surgered blow-up of the
// four-torus; one more surgery gives the finite quotient.
ConstructionPlan snm_chain(long long n, long long p, bool finite)
{
    SumStep cap;
    cap.left_surface = "Sigma2";
    cap.right_block = "Zprime";
    cap.right_surface = "Sigma2'";
    ConstructionPlan plan;
    plan.base_block = "Sigma2xSigman";
    plan.base_param = n;
    plan.steps = {TorusSurgeryStep{"Tm", "m", 1, 1, true}, cap};
    if (finite) plan.steps.push_back(LuttingerStep{"a2xc2", "m", -1, p});
    plan.target = Target{8 * (n + 1) - 1 - 8, 0, ""}; // filled below
    plan.target->c1sq = 2 * (4 * n + 1) - 3;
    plan.target->chi_h = n;
    plan.target->pi1 = finite ? "Z_" + std::to_string(p) : "Z";
    return plan;
}

// The genus-2-times-torus construction capped with the blown-up four-torus.
ConstructionPlan x12_chain(long long p, bool finite)
{
    SumStep cap;
    cap.left_surface = "S2";
    cap.right_block = "T4CP1";
    cap.right_surface = "Sigma2'";
    cap.right_steps = {SurgeryOp{"A23", "l", -1, 1, false},
                       SurgeryOp{"A24", "l", -1, 1, true}};
    ConstructionPlan plan;
    plan.base_block = "Sigma2xT2";
    plan.steps = {
        LuttingerStep{"A1C", "m", -1, 1},
        LuttingerStep{"B1C", "m", -1, 1},
        TorusSurgeryStep{"A2D", "l", -1, 1, true},
        cap,
    };
    if (finite) plan.steps.push_back(LuttingerStep{"A2C", "l", 1, p});
    plan.target = Target{7, 1, finite ? "Z_" + std::to_string(p) : "Z"};
    return plan;
}

} // namespace

TEST_CASE("luttinger_relation word table")
{
    auto b = lookup("B");
    auto rel = luttinger_relation(*b.surface("T1"), b.presentation, "l", 1, 1);
    CHECK(b.presentation.render(rel) == "t2");

    rel = luttinger_relation(*b.surface("T2"), b.presentation, "m", 1, 3);
    CHECK(b.presentation.render(rel) == "t1^3");

    auto z8 = lookup("Z8");
    rel = luttinger_relation(*z8.surface("S3"), z8.presentation, "m", 1, 1);
    CHECK(z8.presentation.render(rel) == "b2^-1 y1^-1 b2 y1 x1");

    CHECK_THROWS_AS(
        luttinger_relation(*b.surface("T1"), b.presentation, "nope", 1, 1),
        MissingWordData);
}

TEST_CASE("surgeries on the chained-sum seed")
{
    ConstructionPlan plan;
    plan.base_block = "B";
    plan.steps = {LuttingerStep{"T2", "m", 1, 1}};
    auto s = evaluate_plan(plan);
    CHECK(abelianization(closed_pi1(s)) == AbelianGroup{1, {}});
    CHECK(coords(s).c1sq == 6);
    CHECK(coords(s).chi_num == 1);
    CHECK(s.invariants.symplectic);

    plan.steps.push_back(LuttingerStep{"T1", "l", 1, 3});
    s = evaluate_plan(plan);
    CHECK(abelianization(closed_pi1(s)) == AbelianGroup{0, {3}});
    CHECK(s.invariants.e == 6);
    CHECK(s.invariants.sigma == -2);
    auto v = verify_cyclic(closed_pi1(s), AbelianGroup{0, {3}});
    CHECK(v.level == VerdictLevel::ProvenCyclic);
}

TEST_CASE("blow-up of zero points is the identity")
{
    ConstructionPlan plan;
    plan.base_block = "B";
    plan.steps = {BlowUpStep{0}};
    auto s = evaluate_plan(plan);
    CHECK(s.invariants.e == 6);
    CHECK(s.invariants.sigma == -2);
    CHECK(s.invariants.minimal == Minimality::Minimal);
    plan.steps = {BlowUpStep{2}};
    s = evaluate_plan(plan);
    CHECK(s.invariants.e == 8);
    CHECK(s.invariants.minimal == Minimality::NonMinimal);
}

TEST_CASE("sum of D with the elliptic block")
{
    SumStep sum;
    sum.left_surface = "T1";
    sum.right_block = "E";
    sum.right_param = 1;
    sum.right_surface = "T";
    ConstructionPlan plan;
    plan.base_block = "D";
    plan.steps = {sum};
    auto s = evaluate_plan(plan);
    CHECK(s.invariants.e == 22);
    CHECK(s.invariants.sigma == -14);
    // one Z^2 factor dies against the simply connected complement
    CHECK(abelianization(closed_pi1(s)) == AbelianGroup{1, {}});
    s.invariants.b1 = 1;
    auto bn = betti(s.invariants);
    CHECK(bn.b2plus == 4);
    CHECK(bn.b2minus == 18);
}

TEST_CASE("identity plan on the eight-torus block")
{
    ConstructionPlan plan;
    plan.base_block = "Z8";
    auto s = evaluate_plan(plan);
    CHECK(s.invariants.e == 4);
    CHECK(s.invariants.sigma == 0);
    CHECK(abelianization(s.presentation).free_rank == 8);
}

TEST_CASE("inventory errors")
{
    ConstructionPlan plan;
    plan.base_block = "B";
    plan.steps = {LuttingerStep{"T9", "m", 1, 1}};
    CHECK_THROWS_AS(evaluate_plan(plan), UnknownSurface);

    plan.steps = {LuttingerStep{"T2", "m", 1, 1}, LuttingerStep{"T2", "l", 1, 1}};
    CHECK_THROWS_AS(evaluate_plan(plan), SurfaceConsumed);

    plan.steps = {LuttingerStep{"F", "m", 1, 1}};
    CHECK_THROWS_AS(evaluate_plan(plan), NonTorusSurgery);
}

TEST_CASE("six-surgery chain reaches the finite and infinite quotients")
{
    auto s = evaluate_plan(zbk_chain(3, true), {}, true);
    CHECK(s.target_ok == true);
    CHECK(s.invariants.e == 6);
    CHECK(s.invariants.sigma == -2);
    auto v = verify_cyclic(closed_pi1(s), AbelianGroup{0, {3}}, 4000);
    CHECK(v.level == VerdictLevel::ProvenCyclic);

    auto z = evaluate_plan(zbk_chain(3, false), {}, true);
    CHECK(z.target_ok == true);
    auto vz = verify_cyclic(closed_pi1(z), AbelianGroup{1, {}}, 4000);
    CHECK(vz.level == VerdictLevel::ProvenCyclic);
}

TEST_CASE("chained sum with the eight-torus block")
{
    auto s = evaluate_plan(x35_chain(3, true), {}, true);
    CHECK(s.target_ok == true);
    CHECK(s.invariants.e == 10);
    CHECK(s.invariants.sigma == -2);
    auto v = verify_cyclic(closed_pi1(s), AbelianGroup{0, {3}}, 4000);
    CHECK(v.level == VerdictLevel::ProvenCyclic);

    auto z = evaluate_plan(x35_chain(3, false), {}, true);
    CHECK(z.target_ok == true);
    auto vz = verify_cyclic(closed_pi1(z), AbelianGroup{1, {}}, 4000);
    CHECK(vz.level == VerdictLevel::ProvenCyclic);
}

TEST_CASE("skipped-surgery family replay at n = 3")
{
    auto z = evaluate_plan(snm_chain(3, 3, false), {}, true);
    CHECK(z.target_ok == true);
    CHECK(z.invariants.e == 13);
    CHECK(z.invariants.sigma == -1);
    CHECK(z.admits_infinite_family);
    auto vz = verify_cyclic(closed_pi1(z), AbelianGroup{1, {}}, 4000);
    CHECK(vz.level == VerdictLevel::ProvenCyclic);

    auto s = evaluate_plan(snm_chain(3, 3, true), {}, true);
    CHECK(s.target_ok == true);
    auto v = verify_cyclic(closed_pi1(s), AbelianGroup{0, {3}}, 4000);
    CHECK(v.level == VerdictLevel::ProvenCyclic);
}

TEST_CASE("skipped-surgery family invariants scale with n")
{
    for (long long n = 2; n <= 5; ++n) {
        auto s = evaluate_plan(snm_chain(n, 3, true));
        CHECK(s.invariants.e == 4 * n + 1);
        CHECK(s.invariants.sigma == -1);
    }
}

TEST_CASE("genus-2-times-torus chain with the capping block")
{
    auto z = evaluate_plan(x12_chain(3, false), {}, true);
    CHECK(z.target_ok == true);
    CHECK(z.invariants.e == 5);
    CHECK(z.invariants.sigma == -1);
    auto vz = verify_cyclic(closed_pi1(z), AbelianGroup{1, {}}, 4000);
    CHECK(vz.level == VerdictLevel::ProvenCyclic);

    auto s = evaluate_plan(x12_chain(3, true), {}, true);
    CHECK(s.target_ok == true);
    auto v = verify_cyclic(closed_pi1(s), AbelianGroup{0, {3}}, 4000);
    CHECK(v.level == VerdictLevel::ProvenCyclic);
}

TEST_CASE("dial value changes nothing but the symplectic flag")
{
    std::vector<ConstructionPlan> plans = {zbk_chain(3, true), x35_chain(3, true),
                                           snm_chain(3, 3, true), x12_chain(3, true)};
    for (const auto &plan : plans) {
        auto s1 = evaluate_plan(plan, 1);
        auto s2 = evaluate_plan(plan, 2);
        auto s5 = evaluate_plan(plan, 5);
        CHECK(s1.invariants.e == s2.invariants.e);
        CHECK(s1.invariants.sigma == s2.invariants.sigma);
        CHECK(s2.invariants.e == s5.invariants.e);
        CHECK(abelianization(closed_pi1(s1)) == abelianization(closed_pi1(s2)));
        CHECK(abelianization(closed_pi1(s2)) == abelianization(closed_pi1(s5)));
        CHECK(s1.invariants.symplectic);
        CHECK(!s2.invariants.symplectic);
        CHECK(s1.admits_infinite_family);
        CHECK(s2.admits_infinite_family);
    }
}

TEST_CASE("plan JSON round trip")
{
    for (const auto &plan : {x35_chain(3, true), x12_chain(5, true),
                             snm_chain(4, 3, false), zbk_chain(7, true)}) {
        std::string once = plan_to_json(plan);
        std::string twice = plan_to_json(plan_from_json(once));
        CHECK(once == twice);
    }
}

TEST_CASE("target mismatch reporting")
{
    ConstructionPlan plan;
    plan.base_block = "B";
    plan.steps = {LuttingerStep{"T2", "m", 1, 1}};
    plan.target = Target{999, 1, "Z"};
    auto s = evaluate_plan(plan);
    CHECK(s.target_ok == false);
    CHECK(!s.target_report.empty());
    CHECK_THROWS_AS(evaluate_plan(plan, {}, true), TargetMismatch);
}
