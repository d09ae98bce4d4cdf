#pragma once

#include "atlas/catalog.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace atlas {

struct UnknownSurface : std::runtime_error {
    explicit UnknownSurface(const std::string &msg) : std::runtime_error(msg) {}
};
struct SurfaceConsumed : std::runtime_error {
    explicit SurfaceConsumed(const std::string &msg) : std::runtime_error(msg) {}
};
struct NonTorusSurgery : std::runtime_error {
    explicit NonTorusSurgery(const std::string &msg) : std::runtime_error(msg) {}
};
struct MissingWordData : std::runtime_error {
    explicit MissingWordData(const std::string &msg) : std::runtime_error(msg) {}
};
struct TargetMismatch : std::runtime_error {
    explicit TargetMismatch(const std::string &msg) : std::runtime_error(msg) {}
};

// A surgery applied inside a Sum step to the incoming block before gluing.
struct SurgeryOp {
    std::string torus;
    std::string curve;
    long long num = 1;
    long long den = 1;
    bool variable = false; // num is the family dial n
};

struct SumStep {
    std::string left_surface;
    std::string right_block;
    std::optional<long long> right_param;
    std::string right_surface;
    std::vector<SurgeryOp> right_steps;
    // Explicit gluing word pairs (left text, right text). When empty, tori
    // glue push-off to push-off by curve name and higher-genus surfaces glue
    // image to image by surface-generator label.
    std::vector<std::pair<std::string, std::string>> identifications;
    std::vector<std::string> kill_left;
    std::vector<std::string> kill_right;
};

struct BlowUpStep {
    long long count = 0;
};

struct LuttingerStep {
    std::string torus;
    std::string curve;
    long long num = 1; // restricted to +/-1
    long long den = 1;
};

struct TorusSurgeryStep {
    std::string torus;
    std::string curve;
    long long num = 1;
    long long den = 1;
    bool variable = false;
};

using PlanStep = std::variant<SumStep, BlowUpStep, LuttingerStep, TorusSurgeryStep>;

struct Target {
    long long c1sq = 0;
    long long chi_h = 0;
    std::string pi1; // "Z", "Z_p" with concrete p (e.g. "Z_3"), or "1"
};

struct ConstructionPlan {
    std::string base_block;
    std::optional<long long> base_param;
    std::vector<PlanStep> steps;
    std::optional<Target> target;
};

struct ManifoldState {
    CharInvariants invariants;
    GroupPresentation presentation; // complement of the surviving surfaces
    std::vector<SurfaceSpec> surfaces;
    std::vector<std::string> consumed;
    bool admits_infinite_family = false;
    std::vector<std::string> history;
    std::optional<bool> target_ok;
    std::string target_report;

    const SurfaceSpec *surface(const std::string &n) const;
};

// Relator of a p/q surgery on torus t along the named curve:
// mu^p * (push-off of curve)^q, parsed against pres.
Word luttinger_relation(const SurfaceSpec &t, const GroupPresentation &pres,
                        const std::string &curve, long long p, long long q);

ManifoldState initial_state(const BlockSpec &block);

ManifoldState apply_step(const ManifoldState &s, const PlanStep &step,
                         std::optional<long long> n_override = {});

// Folds apply_step over the plan; variable-coefficient surgeries take their
// dial value from n_override when given. With a target set, the final state
// records the cross-check; strict mode throws TargetMismatch instead.
ManifoldState evaluate_plan(const ConstructionPlan &plan,
                            std::optional<long long> n_override = {},
                            bool strict = false);

// pi1 of the closed manifold: the complement presentation modulo the
// meridians of the surviving surfaces.
GroupPresentation closed_pi1(const ManifoldState &s);

// "Z" -> Z, "Z_p" -> Z/p, "1" -> trivial.
AbelianGroup parse_pi1_descriptor(const std::string &text);

// Plan (de)serialization in the CLI's JSON document format.
std::string plan_to_json(const ConstructionPlan &plan);
ConstructionPlan plan_from_json(const std::string &text);

} // namespace atlas
