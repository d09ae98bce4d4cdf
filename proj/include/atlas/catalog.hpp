#pragma once

#include "atlas/fpgroup.hpp"
#include "atlas/invariants.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace atlas {

struct UnknownBlock : std::runtime_error {
    explicit UnknownBlock(const std::string &msg) : std::runtime_error(msg) {}
};
struct ParamOutOfRange : std::runtime_error {
    explicit ParamOutOfRange(const std::string &msg) : std::runtime_error(msg) {}
};

// An embedded surface of a catalogued block, with the boundary word data a
// surgery or sum step needs. All words are texts parsed against the owning
// block's presentation.
struct SurfaceSpec {
    std::string name;
    long long genus = 1;
    long long self_intersection = 0;
    std::string meridian;          // empty when trivial or killed
    bool meridian_trivial = false; // nullhomotopic in the complement
    bool meridian_killed = false;  // dies in any sum (meets a -1 sphere)
    // Push-offs of the torus's two curves, canonically ordered (m before l
    // where the source tables use that naming).
    std::vector<std::pair<std::string, std::string>> pushoffs;
    // Images of the surface group generators (a1, b1, ..., ag, bg) in the
    // ambient group; used as default gluing data by Sum steps.
    std::vector<std::pair<std::string, std::string>> pi1_images;
    bool lagrangian = false;
    std::string geometric_dual; // empty if none recorded
};

// A literal value quoted by the source for this block, kept for the audit.
struct StatedValue {
    std::string field; // "e", "sigma", "c1sq", "chi_h"
    long long value = 0;
    std::string citation;
};

struct BlockSpec {
    std::string name;
    CharInvariants invariants;
    // Presentation of the complement of the listed surfaces, where known;
    // the trivial presentation when the source proves the complement simply
    // connected.
    GroupPresentation presentation;
    std::vector<SurfaceSpec> surfaces;
    bool telescoping = false;
    std::string notes;
    std::vector<StatedValue> stated;

    const SurfaceSpec *surface(const std::string &n) const;
};

struct Inconsistency {
    std::string subject;
    std::string detail;
    std::string citation;
};

// Returns the fully populated block; parametrized families (B_g, E, E',
// JPark, P, Zg, Sigma2xSigman, BKY1..BKY4) require the parameter.
BlockSpec lookup(const std::string &name, std::optional<long long> param = {});

// All block names, in a fixed documented order.
std::vector<std::string> catalog_names();

// The parameter used when a family block is instantiated without one
// (smallest documented value); empty for unparametrized blocks.
std::optional<long long> default_param(const std::string &name);

// Cross-checks every stated value against the block's computed invariants.
std::vector<Inconsistency> audit_catalog();

} // namespace atlas
