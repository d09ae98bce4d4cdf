#include "atlas/report.hpp"

#include <cstdlib>
#include <sstream>

namespace atlas {

namespace {

const char *parity_name(Parity p)
{
    switch (p) {
    case Parity::Odd: return "Odd";
    case Parity::Even: return "Even";
    default: return "Unknown";
    }
}

const char *minimality_name(Minimality m)
{
    switch (m) {
    case Minimality::Minimal: return "Minimal";
    case Minimality::NonMinimal: return "NonMinimal";
    default: return "Unknown";
    }
}

const char *verdict_name(VerdictLevel v)
{
    switch (v) {
    case VerdictLevel::ProvenCyclic: return "ProvenCyclic";
    case VerdictLevel::AbelianizationOnly: return "AbelianizationOnly";
    default: return "Mismatch";
    }
}

std::string descriptor_of(const AbelianGroup &ab)
{
    if (ab.free_rank == 1 && ab.torsion.empty()) return "Z";
    if (ab.free_rank == 0 && ab.torsion.size() == 1)
        return "Z_" + std::to_string(ab.torsion[0]);
    if (ab.free_rank == 0 && ab.torsion.empty()) return "1";
    return "";
}

std::string csv_field(const std::string &s)
{
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}

} // namespace

long long default_p()
{
    if (const char *env = std::getenv("ATLAS_DEFAULT_P")) {
        long long p = std::atoll(env);
        if (p >= 2) return p;
    }
    return 3;
}

std::string pi1_from_flag(const std::string &flag)
{
    if (flag == "z") return "Z";
    if (flag == "zp") return "Z_" + std::to_string(default_p());
    if (flag.rfind("zp:", 0) == 0) return "Z_" + flag.substr(3);
    throw OutOfRegion("unsupported --pi1 value: " + flag +
                      " (expected z, zp or zp:P)");
}

EvaluationReport evaluate_report(const ConstructionPlan &plan)
{
    EvaluationReport out;
    ManifoldState s = evaluate_plan(plan);
    ChernCoords cc = chern_coords(s.invariants);
    BettiNumbers bn = betti(s.invariants);
    GroupPresentation g = closed_pi1(s);
    AbelianGroup ab = abelianization(g);
    std::string pi1 = plan.target ? plan.target->pi1 : descriptor_of(ab);
    AbelianGroup expected = pi1.empty() ? ab : parse_pi1_descriptor(pi1);
    out.verdict = verify_cyclic(g, expected, 4000).level;
    out.target_ok = s.target_ok.value_or(true);

    std::ostringstream os;
    os << "point: (c1sq, chi_h) = (" << cc.c1sq << ", " << cc.chi_num;
    if (!cc.is_lattice()) os << "/" << cc.chi_den;
    os << ")\n";
    os << "invariants: e = " << s.invariants.e
       << ", sigma = " << s.invariants.sigma << ", b1 = " << s.invariants.b1
       << ", parity = " << parity_name(s.invariants.parity)
       << ", minimality = " << minimality_name(s.invariants.minimal)
       << ", symplectic = " << (s.invariants.symplectic ? "yes" : "no") << "\n";
    os << "betti: b2+ = " << bn.b2plus << ", b2- = " << bn.b2minus << "\n";
    os << "abelianization: " << ab.describe() << "\n";
    os << "verdict: " << verdict_name(out.verdict) << "\n";
    if (pi1 == "Z" || pi1.rfind("Z_", 0) == 0)
        os << "prototype: " << prototype(s, pi1).render() << "\n";
    else
        os << "prototype: -\n";
    if (!out.target_ok) os << "target: MISMATCH (" << s.target_report << ")\n";
    out.text = os.str();
    return out;
}

std::string audit_csv(const CoverageReport &report)
{
    std::ostringstream os;
    os << "c1sq, chi_h, status, prototype, verdict\n";
    for (const PointReport &p : report.points) {
        std::string status, proto = "-", verdict = "-";
        switch (p.status) {
        case PointStatus::Realized: status = "Realized"; break;
        case PointStatus::SpecialCase: status = "SpecialCase"; break;
        case PointStatus::Unrealized: status = "Unrealized"; break;
        }
        if (p.status == PointStatus::Realized && p.plan) {
            ManifoldState s = evaluate_plan(*p.plan);
            proto = prototype(s, report.pi1).render();
            verdict = verdict_name(p.verdict);
        }
        os << p.c1sq << ", " << p.chi_h << ", " << status << ", "
           << csv_field(proto) << ", " << verdict << "\n";
    }
    return os.str();
}

std::string audit_svg(const CoverageReport &report)
{
    const long long cell = 10, margin = 50;
    long long rows = 8 * report.chi_max;
    long long width = margin * 2 + report.chi_max * cell * 3;
    long long height = margin * 2 + rows * cell / 2;
    auto x_of = [&](long long chi) { return margin + (chi - 1) * cell * 3; };
    auto y_of = [&](long long c) { return height - margin - c * cell / 2; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";
    // Guide lines c1sq = 8 chi and c1sq = 8 chi - 1.
    os << "<polyline fill=\"none\" stroke=\"#888888\" points=\"";
    for (long long chi = 1; chi <= report.chi_max; ++chi)
        os << x_of(chi) << "," << y_of(8 * chi) << " ";
    os << "\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"#bbbbbb\" points=\"";
    for (long long chi = 1; chi <= report.chi_max; ++chi)
        os << x_of(chi) << "," << y_of(8 * chi - 1) << " ";
    os << "\"/>\n";
    for (const PointReport &p : report.points) {
        const char *fill = "#f44336";
        if (p.status == PointStatus::Realized) fill = "#4caf50";
        else if (p.status == PointStatus::SpecialCase) fill = "#ff9800";
        os << "<rect x=\"" << x_of(p.chi_h) << "\" y=\"" << y_of(p.c1sq) - 2
           << "\" width=\"" << cell * 2 << "\" height=\"4\" fill=\"" << fill
           << "\"/>\n";
    }
    os << "<text x=\"" << width / 2 << "\" y=\"" << height - 10
       << "\" font-size=\"12\">chi_h</text>\n";
    os << "<text x=\"10\" y=\"" << margin
       << "\" font-size=\"12\">c1sq</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string paper_audit_text()
{
    std::ostringstream os;
    long long n = 0;
    for (const Inconsistency &i : audit_catalog()) {
        os << ++n << ". " << i.subject << ": " << i.detail << " [" << i.citation
           << "]\n";
    }
    for (const Inconsistency &i : known_discrepancies()) {
        os << ++n << ". " << i.subject << ": " << i.detail << " [" << i.citation
           << "]\n";
    }
    os << n << " inconsistencies\n";
    return os.str();
}

std::pair<long long, long long> line_column(const std::string &text, size_t byte)
{
    long long line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace atlas
