#include "atlas/surgery.hpp"

#include <json.hpp>

#include <algorithm>

namespace atlas {

namespace {

using nlohmann::json;

const SurfaceSpec *find_surface(const std::vector<SurfaceSpec> &surfaces,
                                const std::string &name)
{
    for (const auto &s : surfaces)
        if (s.name == name) return &s;
    return nullptr;
}

const SurfaceSpec &require_surface(const ManifoldState &s, const std::string &name)
{
    const SurfaceSpec *found = find_surface(s.surfaces, name);
    if (found) return *found;
    if (std::find(s.consumed.begin(), s.consumed.end(), name) != s.consumed.end())
        throw SurfaceConsumed("surface already consumed: " + name);
    throw UnknownSurface("no such surface: " + name);
}

void erase_surface(ManifoldState &s, const std::string &name)
{
    s.surfaces.erase(std::remove_if(s.surfaces.begin(), s.surfaces.end(),
                                    [&](const SurfaceSpec &x) {
                                        return x.name == name;
                                    }),
                     s.surfaces.end());
    s.consumed.push_back(name);
}

ManifoldState apply_surgery(const ManifoldState &s, const std::string &torus,
                            const std::string &curve, long long num, long long den,
                            bool variable, bool luttinger,
                            std::optional<long long> n_override)
{
    const SurfaceSpec &t = require_surface(s, torus);
    if (t.genus != 1) throw NonTorusSurgery("surgery torus has genus != 1: " + torus);
    if (luttinger && num != 1 && num != -1)
        throw MissingWordData("Luttinger coefficient must be +/-1 or +/-1/q");
    long long effective = num;
    if (variable && n_override)
        effective = num < 0 ? -*n_override : *n_override;
    Word rel = luttinger_relation(t, s.presentation, curve, effective, den);

    ManifoldState out = s;
    out.presentation = quotient(s.presentation, {rel});
    erase_surface(out, torus);
    if (!luttinger) {
        if (variable) out.admits_infinite_family = true;
        if (effective != 1 && effective != -1) out.invariants.symplectic = false;
    }
    // surgeries never move (e, sigma)
    if (out.invariants.e != s.invariants.e || out.invariants.sigma != s.invariants.sigma)
        throw std::logic_error("surgery changed e or sigma");
    out.history.push_back((luttinger ? "luttinger " : "torus_surgery ") + torus +
                          " along " + curve + " coefficient " +
                          std::to_string(effective) + "/" + std::to_string(den));
    return out;
}

// Re-express a word of the incoming block in the amalgamated presentation by
// shifting its generator indices past the left side's.
std::string shift_text(const std::string &text, const GroupPresentation &right,
                       const GroupPresentation &combined, long long offset)
{
    if (text.empty()) return text;
    Word w = right.parse(text);
    for (auto &letter : w) letter.gen += (int)offset;
    return combined.render(w);
}

ManifoldState apply_sum(const ManifoldState &s, const SumStep &step,
                        std::optional<long long> n_override)
{
    const SurfaceSpec left = require_surface(s, step.left_surface);
    BlockSpec rb = lookup(step.right_block, step.right_param);
    ManifoldState right = initial_state(rb);
    for (const auto &op : step.right_steps)
        right = apply_surgery(right, op.torus, op.curve, op.num, op.den, op.variable,
                              !op.variable && (op.num == 1 || op.num == -1),
                              n_override);
    const SurfaceSpec *rsp = find_surface(right.surfaces, step.right_surface);
    if (!rsp) throw UnknownSurface("right block has no surface " + step.right_surface);
    const SurfaceSpec rsurf = *rsp;
    if (left.genus != rsurf.genus)
        throw std::logic_error("sum glues surfaces of different genus");
    if (left.self_intersection != 0 || rsurf.self_intersection != 0)
        throw std::logic_error("sum needs square-zero surfaces");

    // gluing word pairs
    std::vector<std::pair<Word, Word>> idents;
    if (!step.identifications.empty()) {
        for (const auto &[lt, rt] : step.identifications)
            idents.push_back({s.presentation.parse(lt), right.presentation.parse(rt)});
    } else if (left.genus == 1) {
        for (const auto &[curve, lw] : left.pushoffs)
            for (const auto &[rcurve, rw] : rsurf.pushoffs)
                if (curve == rcurve)
                    idents.push_back(
                        {s.presentation.parse(lw), right.presentation.parse(rw)});
    } else {
        for (const auto &[label, lw] : left.pi1_images)
            for (const auto &[rlabel, rw] : rsurf.pi1_images)
                if (label == rlabel)
                    idents.push_back(
                        {s.presentation.parse(lw), right.presentation.parse(rw)});
    }

    std::vector<Word> kill_a, kill_b;
    for (const auto &t : step.kill_left) kill_a.push_back(s.presentation.parse(t));
    for (const auto &t : step.kill_right) kill_b.push_back(right.presentation.parse(t));

    // meridian bookkeeping: a nullhomotopic or sphere-killed meridian on
    // either side kills both; otherwise the gluing identifies them inversely
    bool dead = left.meridian_trivial || left.meridian_killed ||
                rsurf.meridian_trivial || rsurf.meridian_killed;
    Word lmu = left.meridian.empty() ? Word{} : s.presentation.parse(left.meridian);
    Word rmu = rsurf.meridian.empty() ? Word{} : right.presentation.parse(rsurf.meridian);
    if (dead) {
        if (!lmu.empty()) kill_a.push_back(lmu);
        if (!rmu.empty()) kill_b.push_back(rmu);
    } else {
        if (lmu.empty() || rmu.empty())
            throw MissingWordData("sum along " + left.name +
                                  " needs both meridian words");
        idents.push_back({lmu, inverse(rmu)});
    }

    ManifoldState out;
    out.invariants = sum_invariants(s.invariants, right.invariants, left.genus);
    out.presentation =
        amalgamate(s.presentation, right.presentation, idents, kill_a, kill_b);
    long long offset = (long long)s.presentation.generators.size();

    out.consumed = s.consumed;
    out.admits_infinite_family = s.admits_infinite_family || right.admits_infinite_family;
    out.history = s.history;
    for (const auto &h : right.history) out.history.push_back("right: " + h);
    for (const auto &surf : s.surfaces)
        if (surf.name != left.name) out.surfaces.push_back(surf);
    out.consumed.push_back(left.name);
    for (const auto &surf : right.surfaces) {
        if (surf.name == rsurf.name) continue;
        SurfaceSpec moved = surf;
        if (find_surface(out.surfaces, moved.name)) moved.name = "r_" + moved.name;
        moved.meridian = shift_text(surf.meridian, right.presentation,
                                    out.presentation, offset);
        for (auto &[curve, w] : moved.pushoffs)
            w = shift_text(w, right.presentation, out.presentation, offset);
        for (auto &[label, w] : moved.pi1_images)
            w = shift_text(w, right.presentation, out.presentation, offset);
        out.surfaces.push_back(moved);
    }
    out.history.push_back("sum along " + left.name + " = " + step.right_block + "." +
                          step.right_surface);

    // recomputation guard for the sum formula
    if (out.invariants.e !=
            s.invariants.e + right.invariants.e + 4 * left.genus - 4 ||
        out.invariants.sigma != s.invariants.sigma + right.invariants.sigma)
        throw std::logic_error("sum invariants drifted");
    return out;
}

} // namespace

const SurfaceSpec *ManifoldState::surface(const std::string &n) const
{
    return find_surface(surfaces, n);
}

Word luttinger_relation(const SurfaceSpec &t, const GroupPresentation &pres,
                        const std::string &curve, long long p, long long q)
{
    if (p == 0 && q == 0) throw MissingWordData("coefficient 0/0");
    const std::string *pushoff = nullptr;
    for (const auto &[name, w] : t.pushoffs)
        if (name == curve) pushoff = &w;
    if (!pushoff)
        throw MissingWordData("torus " + t.name + " has no push-off for curve " +
                              curve);
    Word mu;
    if (!t.meridian.empty())
        mu = pres.parse(t.meridian);
    else if (!t.meridian_trivial && !t.meridian_killed)
        throw MissingWordData("torus " + t.name + " has no meridian word");
    return free_reduce(concat(power(mu, p), power(pres.parse(*pushoff), q)));
}

ManifoldState initial_state(const BlockSpec &block)
{
    ManifoldState s;
    s.invariants = block.invariants;
    s.presentation = block.presentation;
    s.surfaces = block.surfaces;
    s.history = {"base " + block.name};
    return s;
}

ManifoldState apply_step(const ManifoldState &s, const PlanStep &step,
                         std::optional<long long> n_override)
{
    if (const auto *sum = std::get_if<SumStep>(&step))
        return apply_sum(s, *sum, n_override);
    if (const auto *blowup = std::get_if<BlowUpStep>(&step)) {
        if (blowup->count < 0) throw std::logic_error("negative blow-up count");
        ManifoldState out = s;
        out.invariants = blowup_invariants(s.invariants, blowup->count);
        if (blowup->count > 0)
            out.history.push_back("blowup x" + std::to_string(blowup->count));
        return out;
    }
    if (const auto *lut = std::get_if<LuttingerStep>(&step))
        return apply_surgery(s, lut->torus, lut->curve, lut->num, lut->den, false,
                             true, n_override);
    const auto &ts = std::get<TorusSurgeryStep>(step);
    return apply_surgery(s, ts.torus, ts.curve, ts.num, ts.den, ts.variable, false,
                         n_override);
}

GroupPresentation closed_pi1(const ManifoldState &s)
{
    std::vector<Word> meridians;
    for (const auto &surf : s.surfaces)
        if (!surf.meridian.empty())
            meridians.push_back(s.presentation.parse(surf.meridian));
    return quotient(s.presentation, meridians);
}

AbelianGroup parse_pi1_descriptor(const std::string &text)
{
    if (text == "Z") return {1, {}};
    if (text == "1") return {0, {}};
    if (text.rfind("Z_", 0) == 0) {
        long long p = std::stoll(text.substr(2));
        if (p < 2) throw std::invalid_argument("bad torsion order in " + text);
        return {0, {p}};
    }
    throw std::invalid_argument("unknown pi1 descriptor: " + text);
}

ManifoldState evaluate_plan(const ConstructionPlan &plan,
                            std::optional<long long> n_override, bool strict)
{
    ManifoldState s = initial_state(lookup(plan.base_block, plan.base_param));
    for (const auto &step : plan.steps) s = apply_step(s, step, n_override);
    AbelianGroup ab = abelianization(closed_pi1(s));
    s.invariants.b1 = ab.free_rank;
    if (plan.target) {
        ChernCoords c = chern_coords(s.invariants);
        AbelianGroup expected = parse_pi1_descriptor(plan.target->pi1);
        bool ok = c.is_lattice() && c.c1sq == plan.target->c1sq &&
                  c.chi_num == plan.target->chi_h && ab == expected;
        s.target_ok = ok;
        s.target_report = "computed (c1sq, chi_h) = (" + std::to_string(c.c1sq) +
                          ", " + std::to_string(c.chi_num) +
                          (c.is_lattice() ? "" : "/" + std::to_string(c.chi_den)) +
                          ") pi1 ab = " + ab.describe() + "; expected (" +
                          std::to_string(plan.target->c1sq) + ", " +
                          std::to_string(plan.target->chi_h) + ") " +
                          expected.describe();
        if (!ok && strict) throw TargetMismatch(s.target_report);
    }
    return s;
}

namespace {

json op_to_json(const SurgeryOp &op)
{
    return json{{"torus", op.torus}, {"curve", op.curve}, {"num", op.num},
                {"den", op.den},     {"variable", op.variable}};
}

SurgeryOp op_from_json(const json &j)
{
    SurgeryOp op;
    op.torus = j.at("torus").get<std::string>();
    op.curve = j.at("curve").get<std::string>();
    op.num = j.at("num").get<long long>();
    op.den = j.at("den").get<long long>();
    op.variable = j.value("variable", false);
    return op;
}

} // namespace

std::string plan_to_json(const ConstructionPlan &plan)
{
    json j;
    j["base"] = {{"block", plan.base_block}};
    if (plan.base_param) j["base"]["param"] = *plan.base_param;
    j["steps"] = json::array();
    for (const auto &step : plan.steps) {
        json js;
        if (const auto *sum = std::get_if<SumStep>(&step)) {
            js["op"] = "sum";
            js["left_surface"] = sum->left_surface;
            js["block"] = sum->right_block;
            if (sum->right_param) js["param"] = *sum->right_param;
            js["right_surface"] = sum->right_surface;
            if (!sum->right_steps.empty()) {
                js["right_steps"] = json::array();
                for (const auto &op : sum->right_steps)
                    js["right_steps"].push_back(op_to_json(op));
            }
            if (!sum->identifications.empty()) {
                js["identifications"] = json::array();
                for (const auto &[l, r] : sum->identifications)
                    js["identifications"].push_back(json::array({l, r}));
            }
            if (!sum->kill_left.empty()) js["kill_left"] = sum->kill_left;
            if (!sum->kill_right.empty()) js["kill_right"] = sum->kill_right;
        } else if (const auto *blowup = std::get_if<BlowUpStep>(&step)) {
            js["op"] = "blowup";
            js["count"] = blowup->count;
        } else if (const auto *lut = std::get_if<LuttingerStep>(&step)) {
            js["op"] = "luttinger";
            js["torus"] = lut->torus;
            js["curve"] = lut->curve;
            js["num"] = lut->num;
            js["den"] = lut->den;
        } else {
            const auto &ts = std::get<TorusSurgeryStep>(step);
            js["op"] = "torus_surgery";
            js["torus"] = ts.torus;
            js["curve"] = ts.curve;
            js["num"] = ts.num;
            js["den"] = ts.den;
            js["variable"] = ts.variable;
        }
        j["steps"].push_back(js);
    }
    if (plan.target)
        j["target"] = {{"c1sq", plan.target->c1sq},
                       {"chi_h", plan.target->chi_h},
                       {"pi1", plan.target->pi1}};
    return j.dump(2);
}

ConstructionPlan plan_from_json(const std::string &text)
{
    json j = json::parse(text);
    ConstructionPlan plan;
    plan.base_block = j.at("base").at("block").get<std::string>();
    if (j.at("base").contains("param"))
        plan.base_param = j["base"]["param"].get<long long>();
    for (const auto &js : j.value("steps", json::array())) {
        std::string op = js.at("op").get<std::string>();
        if (op == "sum") {
            SumStep sum;
            sum.left_surface = js.at("left_surface").get<std::string>();
            sum.right_block = js.at("block").get<std::string>();
            if (js.contains("param")) sum.right_param = js["param"].get<long long>();
            sum.right_surface = js.at("right_surface").get<std::string>();
            for (const auto &jo : js.value("right_steps", json::array()))
                sum.right_steps.push_back(op_from_json(jo));
            for (const auto &ji : js.value("identifications", json::array()))
                sum.identifications.push_back(
                    {ji.at(0).get<std::string>(), ji.at(1).get<std::string>()});
            for (const auto &k : js.value("kill_left", json::array()))
                sum.kill_left.push_back(k.get<std::string>());
            for (const auto &k : js.value("kill_right", json::array()))
                sum.kill_right.push_back(k.get<std::string>());
            plan.steps.push_back(sum);
        } else if (op == "blowup") {
            plan.steps.push_back(BlowUpStep{js.at("count").get<long long>()});
        } else if (op == "luttinger") {
            plan.steps.push_back(LuttingerStep{js.at("torus").get<std::string>(),
                                               js.at("curve").get<std::string>(),
                                               js.at("num").get<long long>(),
                                               js.at("den").get<long long>()});
        } else if (op == "torus_surgery") {
            plan.steps.push_back(TorusSurgeryStep{js.at("torus").get<std::string>(),
                                                  js.at("curve").get<std::string>(),
                                                  js.at("num").get<long long>(),
                                                  js.at("den").get<long long>(),
                                                  js.value("variable", false)});
        } else {
            throw std::invalid_argument("unknown plan step op: " + op);
        }
    }
    if (j.contains("target")) {
        Target t;
        t.c1sq = j["target"].at("c1sq").get<long long>();
        t.chi_h = j["target"].at("chi_h").get<long long>();
        t.pi1 = j["target"].at("pi1").get<std::string>();
        plan.target = t;
    }
    return plan;
}

} // namespace atlas
