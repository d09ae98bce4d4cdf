#pragma once

#include "atlas/classifier.hpp"
#include "atlas/realizer.hpp"

#include <string>

namespace atlas {

// "z" -> "Z", "zp:5" -> "Z_5", "zp" -> "Z_<default>". The default order is 3
// unless the ATLAS_DEFAULT_P environment variable overrides it.
std::string pi1_from_flag(const std::string &flag);

long long default_p();

struct EvaluationReport {
    std::string text; // human-readable block, newline terminated
    VerdictLevel verdict = VerdictLevel::Mismatch;
    bool target_ok = true;
};

// The shared realize/verify report: invariants, Betti numbers,
// abelianization, verdict and prototype for the evaluated plan.
EvaluationReport evaluate_report(const ConstructionPlan &plan);

// CSV table of a coverage report; header is fixed as
// "c1sq, chi_h, status, prototype, verdict".
std::string audit_csv(const CoverageReport &report);

// Deterministic SVG chart of a coverage report on (chi_h, c1sq) axes with
// the c1sq = 8 chi and c1sq = 8 chi - 1 guide lines.
std::string audit_svg(const CoverageReport &report);

// audit_catalog() plus the realizer's known discrepancies, one line each.
std::string paper_audit_text();

// 1-based line/column of a byte offset in a text, for parse diagnostics.
std::pair<long long, long long> line_column(const std::string &text,
                                            size_t byte);

} // namespace atlas
