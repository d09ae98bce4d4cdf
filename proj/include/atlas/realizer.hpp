#pragma once

#include "atlas/surgery.hpp"

#include <optional>
#include <string>
#include <vector>

namespace atlas {

struct OutOfRegion : std::runtime_error {
    explicit OutOfRegion(const std::string &msg) : std::runtime_error(msg) {}
};
struct OddC : std::runtime_error {
    explicit OddC(const std::string &msg) : std::runtime_error(msg) {}
};
struct UnsupportedPoint : std::runtime_error {
    std::string citation; // set when a known external construction covers it
    explicit UnsupportedPoint(const std::string &msg, std::string cite = "")
        : std::runtime_error(msg), citation(std::move(cite)) {}
};
struct MissingTorus : std::runtime_error {
    explicit MissingTorus(const std::string &msg) : std::runtime_error(msg) {}
};

// m = d + 2c + 3b + 4g, n = b + c + d + g + k, with b >= 1 whenever g > 0.
struct Decomposition {
    long long b = 0, c = 0, d = 0, g = 0, k = 0;
};

bool check_decomposition(long long m, long long n, const Decomposition &t);

// Deterministic chooser: g descending, then b, c, d descending; first tuple
// satisfying both equations and the side condition wins.
Decomposition decompose(long long m, long long n);

// pi1 descriptors are "Z" or "Z_p" with a concrete p (e.g. "Z_3").
ConstructionPlan plan_even(long long c, long long chi, const std::string &pi1);
ConstructionPlan plan_odd(long long c, long long chi, const std::string &pi1);
ConstructionPlan realize(long long c, long long chi, const std::string &pi1);

enum class RegionMode { Open, Closed }; // c <= 8chi - 1 vs c <= 8chi

// One emitted lattice point of a region extension. Points the block catalog
// cannot reach carry a citation note instead of a plan.
struct ExtensionPoint {
    long long c1sq = 0;
    long long chi_h = 0;
    std::optional<ConstructionPlan> plan;
    std::string note;
};

// Extends a seed plan through its named torus: every appended block is simply
// connected (or fully killed), so the seed's fundamental group is preserved
// while (c1sq, chi_h) moves by (c', chi') over the requested region. The
// torus must have trivial meridian and nullhomotopic push-offs.
std::vector<ExtensionPoint> extend_region(const ConstructionPlan &seed,
                                          const std::string &torus,
                                          RegionMode mode, long long chi_max);

enum class PointStatus { Realized, SpecialCase, Unrealized };

struct PointReport {
    long long c1sq = 0;
    long long chi_h = 0;
    PointStatus status = PointStatus::Unrealized;
    std::optional<ConstructionPlan> plan;
    VerdictLevel verdict = VerdictLevel::Mismatch;
    std::string note; // citation or failure reason
};

struct CoverageReport {
    long long chi_max = 0;
    std::string pi1;
    std::vector<PointReport> points; // chi ascending, then c ascending
    long long realized = 0, special = 0, unrealized = 0;
};

// Runs realize/evaluate/verify over every (c, chi) with 1 <= chi <= chi_max
// and 0 <= c <= 8 chi - 1.
CoverageReport audit_region(long long chi_max, const std::string &pi1);

// Discrepancies between quoted realizer data and the values that actually
// check out; reported by the paper-audit command next to audit_catalog().
std::vector<Inconsistency> known_discrepancies();

} // namespace atlas
