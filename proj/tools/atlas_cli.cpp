#include "atlas/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace atlas;

namespace {

int exit_code(const EvaluationReport &r)
{
    if (!r.target_ok) {
        std::cerr << "error: TargetMismatch\n";
        return 1;
    }
    switch (r.verdict) {
    case VerdictLevel::ProvenCyclic: return 0;
    case VerdictLevel::AbelianizationOnly: return 2;
    default:
        std::cerr << "error: abelianization does not match the target group\n";
        return 1;
    }
}

int write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    return 0;
}

int cmd_realize(long long c1sq, long long chih, const std::string &pi1_flag,
                const std::string &out_path)
{
    ConstructionPlan plan = realize(c1sq, chih, pi1_from_flag(pi1_flag));
    EvaluationReport r = evaluate_report(plan);
    if (int rc = write_file(out_path, plan_to_json(plan))) return rc;
    std::cout << r.text;
    std::cout << "plan: " << out_path << "\n";
    return exit_code(r);
}

int cmd_verify(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    ConstructionPlan plan;
    try {
        plan = plan_from_json(text);
    } catch (const nlohmann::json::parse_error &e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::cerr << "error: " << path << ":" << line << ":" << col
                  << ": " << e.what() << "\n";
        return 1;
    }
    EvaluationReport r = evaluate_report(plan);
    std::cout << r.text;
    return exit_code(r);
}

int cmd_atlas(long long chi_max, const std::string &pi1_flag,
              const std::string &out_path)
{
    CoverageReport report = audit_region(chi_max, pi1_from_flag(pi1_flag));
    bool svg = out_path.size() >= 4 &&
               out_path.compare(out_path.size() - 4, 4, ".svg") == 0;
    std::string body = svg ? audit_svg(report) : audit_csv(report);
    if (int rc = write_file(out_path, body)) return rc;
    std::cout << out_path << ": " << report.points.size() << " points, "
              << report.realized << " realized, " << report.special
              << " special, " << report.unrealized << " unrealized\n";
    return 0;
}

int cmd_dump(const std::string &block)
{
    std::vector<std::string> names =
        block.empty() ? catalog_names() : std::vector<std::string>{block};
    for (const std::string &name : names) {
        ConstructionPlan plan;
        plan.base_block = name;
        plan.base_param = default_param(name);
        std::cout << plan_to_json(plan) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"symplectic geography atlas"};
    app.require_subcommand(1);

    long long c1sq = 0, chih = 1, chi_max = 3;
    std::string pi1 = "zp", out_plan = "plan.json", out_atlas = "atlas.csv";
    std::string verify_path, dump_block;

    auto *realize_cmd = app.add_subcommand("realize", "plan a lattice point");
    realize_cmd->add_option("--c1sq", c1sq)->required();
    realize_cmd->add_option("--chih", chih)->required();
    realize_cmd->add_option("--pi1", pi1, "z, zp or zp:P");
    realize_cmd->add_option("--out", out_plan, "plan file path");

    auto *verify_cmd = app.add_subcommand("verify", "evaluate a plan file");
    verify_cmd->add_option("path", verify_path)->required();

    auto *atlas_cmd = app.add_subcommand("atlas", "coverage table or chart");
    atlas_cmd->add_option("--chi-max", chi_max)->check(CLI::PositiveNumber);
    atlas_cmd->add_option("--pi1", pi1, "z, zp or zp:P");
    atlas_cmd->add_option("--out", out_atlas, ".csv or .svg path");

    auto *audit_cmd = app.add_subcommand("paper-audit", "source inconsistencies");
    (void)audit_cmd;

    auto *dump_cmd = app.add_subcommand("dump", "emit catalog blocks as plans");
    dump_cmd->add_option("block", dump_block);

    CLI11_PARSE(app, argc, argv);

    try {
        if (realize_cmd->parsed()) return cmd_realize(c1sq, chih, pi1, out_plan);
        if (verify_cmd->parsed()) return cmd_verify(verify_path);
        if (atlas_cmd->parsed()) return cmd_atlas(chi_max, pi1, out_atlas);
        if (dump_cmd->parsed()) return cmd_dump(dump_block);
        std::cout << paper_audit_text();
        return 0;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
