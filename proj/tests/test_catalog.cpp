#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "atlas/catalog.hpp"

using namespace atlas;

namespace {

// Every concrete instantiation exercised by the word-table checks.
std::vector<BlockSpec> all_instances()
{
    std::vector<BlockSpec> out;
    for (const auto &name : catalog_names())
        out.push_back(lookup(name, default_param(name)));
    for (long long g = 0; g <= 4; ++g) out.push_back(lookup("B_g", g));
    for (long long k = 1; k <= 3; ++k) {
        out.push_back(lookup("E", k));
        out.push_back(lookup("E'", k));
    }
    for (long long g = 1; g <= 4; ++g) out.push_back(lookup("Zg", g));
    for (long long n = 2; n <= 5; ++n) out.push_back(lookup("Sigma2xSigman", n));
    for (long long k = 10; k <= 18; ++k) out.push_back(lookup("JPark", k));
    for (long long k = 2; k <= 6; ++k) out.push_back(lookup("P", k));
    return out;
}

} // namespace

TEST_CASE("documented lookups")
{
    auto b = lookup("B");
    CHECK(b.invariants.e == 6);
    CHECK(b.invariants.sigma == -2);
    CHECK(b.telescoping);
    CHECK(b.surface("F") != nullptr);
    CHECK(b.surface("F")->genus == 2);

    CHECK(lookup("B_g", 3).invariants.e == 18);
    CHECK(lookup("B_g", 3).invariants.sigma == -2);

    auto ep = lookup("E'", 2);
    CHECK(ep.invariants.e == 24);
    CHECK(ep.invariants.sigma == -16);

    auto z8 = lookup("Z8");
    CHECK(z8.invariants.e == 4);
    CHECK(z8.invariants.sigma == 0);
    REQUIRE(z8.surfaces.size() == 8);
    const auto *s1 = z8.surface("S1");
    REQUIRE(s1 != nullptr);
    CHECK(z8.presentation.render(z8.presentation.parse(s1->meridian)) ==
          "b1^-1 y1^-1 b1 y1");
    CHECK(s1->pushoffs[0] == std::pair<std::string, std::string>{"m", "x1"});
    CHECK(s1->pushoffs[1] == std::pair<std::string, std::string>{"l", "a1"});
    const auto *s8 = z8.surface("S8");
    REQUIRE(s8 != nullptr);
    CHECK(s8->pushoffs[1].second == "b2 a2 b2^-1 a2^-1 b2^-1");
}

TEST_CASE("family invariants follow the quoted formulas")
{
    for (long long k = 1; k <= 4; ++k) {
        CHECK(lookup("E", k).invariants.e == 12 * k);
        CHECK(lookup("E", k).invariants.sigma == -8 * k);
    }
    CHECK(lookup("E", 2).invariants.parity == Parity::Even);
    CHECK(lookup("E", 1).invariants.parity == Parity::Odd);
    CHECK(lookup("E", 1).invariants.minimal == Minimality::NonMinimal);
    CHECK(lookup("E'", 2).invariants.parity == Parity::Odd);

    for (long long g = 1; g <= 4; ++g) {
        CHECK(lookup("Zg", g).invariants.e == 8 * g - 8);
        CHECK(lookup("Zg", g).invariants.sigma == 0);
    }
    for (long long n = 2; n <= 5; ++n)
        CHECK(lookup("Sigma2xSigman", n).invariants.e == 4 * n - 4);
    for (long long k = 10; k <= 18; ++k) {
        auto c = chern_coords(lookup("JPark", k).invariants);
        CHECK(c.c1sq == 19 - k);
        CHECK(c.chi_num == 2);
    }
    CHECK(lookup("P", 2).invariants.e == 15);
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(lookup("nope"), UnknownBlock);
    CHECK_THROWS_AS(lookup("B_g", -1), ParamOutOfRange);
    CHECK_THROWS_AS(lookup("E'"), ParamOutOfRange);
    CHECK_THROWS_AS(lookup("JPark", 9), ParamOutOfRange);
    CHECK_THROWS_AS(lookup("JPark", 19), ParamOutOfRange);
    CHECK_THROWS_AS(lookup("Sigma2xSigman", 1), ParamOutOfRange);
}

TEST_CASE("telescoping blocks abelianize to Z^2")
{
    for (const auto &b : all_instances()) {
        if (!b.telescoping) continue;
        CAPTURE(b.name);
        CHECK(abelianization(b.presentation) == AbelianGroup{2, {}});
        CHECK(b.surface("T1") != nullptr);
        CHECK(b.surface("T2") != nullptr);
        CHECK(b.surface("T1")->meridian_trivial);
        CHECK(b.surface("T2")->meridian_trivial);
    }
}

TEST_CASE("every catalog word parses against its presentation")
{
    for (const auto &b : all_instances()) {
        CAPTURE(b.name);
        for (const auto &s : b.surfaces) {
            CAPTURE(s.name);
            if (!s.meridian.empty()) CHECK_NOTHROW(b.presentation.parse(s.meridian));
            for (const auto &[curve, w] : s.pushoffs)
                CHECK_NOTHROW(b.presentation.parse(w));
            for (const auto &[gen, w] : s.pi1_images)
                CHECK_NOTHROW(b.presentation.parse(w));
            // square -1 dual tori are never surgered, so carry no push-offs
            if (s.genus == 1 && s.self_intersection == 0)
                CHECK(s.pushoffs.size() == 2);
            if (s.genus >= 2 && !s.pi1_images.empty() && s.name != "Sigma2'")
                CHECK(s.pi1_images.size() == (size_t)(2 * s.genus));
        }
    }
}

TEST_CASE("sum-admissible surfaces have square zero")
{
    for (const auto &b : all_instances())
        for (const auto &s : b.surfaces)
            if (!s.pi1_images.empty() || !s.pushoffs.empty())
                if (s.self_intersection != 0) CHECK(s.name == "H1");
}

TEST_CASE("lookup is referentially transparent")
{
    auto a = lookup("Z_BK"), b = lookup("Z_BK");
    CHECK(a.presentation.render() == b.presentation.render());
    REQUIRE(a.surfaces.size() == b.surfaces.size());
    for (size_t i = 0; i < a.surfaces.size(); ++i) {
        CHECK(a.surfaces[i].name == b.surfaces[i].name);
        CHECK(a.surfaces[i].meridian == b.surfaces[i].meridian);
        CHECK(a.surfaces[i].pushoffs == b.surfaces[i].pushoffs);
    }
}

TEST_CASE("audit flags exactly the one clashing block")
{
    auto findings = audit_catalog();
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].subject == "P58");
    CHECK(findings[0].detail.find("e = 14") != std::string::npos);
    CHECK(findings[0].detail.find("e = 15") != std::string::npos);
    CHECK(!findings[0].citation.empty());
}
