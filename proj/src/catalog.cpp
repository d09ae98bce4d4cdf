#include "atlas/catalog.hpp"

#include <map>

namespace atlas {

namespace {

GroupPresentation pres(std::vector<std::string> gens, std::vector<std::string> rels)
{
    GroupPresentation p;
    p.generators = std::move(gens);
    for (const auto &r : rels) p.relators.push_back(cyclic_reduce(p.parse(r)));
    return p;
}

SurfaceSpec lag_torus(std::string name, std::string mu, std::string m, std::string l,
                      std::string dual = "")
{
    SurfaceSpec s;
    s.name = std::move(name);
    s.genus = 1;
    s.meridian = std::move(mu);
    s.lagrangian = true;
    s.pushoffs = {{"m", std::move(m)}, {"l", std::move(l)}};
    s.geometric_dual = std::move(dual);
    return s;
}

SurfaceSpec trivial_torus(std::string name)
{
    SurfaceSpec s;
    s.name = std::move(name);
    s.genus = 1;
    s.meridian_trivial = true;
    s.pushoffs = {{"m", "1"}, {"l", "1"}};
    return s;
}

SurfaceSpec genus_surface(std::string name, long long genus,
                          std::vector<std::string> images)
{
    SurfaceSpec s;
    s.name = std::move(name);
    s.genus = genus;
    for (long long i = 1; i <= genus; ++i) {
        s.pi1_images.push_back({"a" + std::to_string(i), images[(size_t)(2 * i - 2)]});
        s.pi1_images.push_back({"b" + std::to_string(i), images[(size_t)(2 * i - 1)]});
    }
    return s;
}

void state(BlockSpec &b, const std::string &field, long long value,
           const std::string &citation)
{
    b.stated.push_back({field, value, citation});
}

// Shared skeleton of the chained-sum building blocks: pi1 = Z^2 generated by
// t1, t2 and two Lagrangian tori with trivial meridians whose push-offs hit
// 1, t2 (first torus) and t1, t2 (second torus).
BlockSpec chain_block(const std::string &name, long long e, long long sigma)
{
    BlockSpec b;
    b.name = name;
    b.invariants = {e, sigma, 2, Parity::Odd, Minimality::Minimal, true};
    b.presentation = pres({"t1", "t2"}, {"[t1, t2]"});
    b.telescoping = true;
    SurfaceSpec t1 = lag_torus("T1", "", "1", "t2");
    t1.meridian_trivial = true;
    SurfaceSpec t2 = lag_torus("T2", "", "t1", "t2");
    t2.meridian_trivial = true;
    b.surfaces = {t1, t2};
    return b;
}

BlockSpec block_B()
{
    BlockSpec b = chain_block("B", 6, -2);
    SurfaceSpec f = genus_surface("F", 2, {"1", "1", "1", "t2"});
    f.meridian_trivial = true;
    f.geometric_dual = "H1";
    SurfaceSpec h1;
    h1.name = "H1";
    h1.genus = 1;
    h1.self_intersection = -1;
    h1.pi1_images = {{"a1", "1"}, {"b1", "t1"}};
    h1.geometric_dual = "F";
    b.surfaces.push_back(f);
    b.surfaces.push_back(h1);
    state(b, "e", 6, "quoted invariants of B: e(B) = 6");
    state(b, "sigma", -2, "quoted invariants of B: sigma(B) = -2");
    b.notes = "chained-sum seed with a square-0 genus 2 surface F dual to the"
              " square -1 torus H1";
    return b;
}

BlockSpec block_Bg(long long g)
{
    if (g < 0) throw ParamOutOfRange("B_g needs g >= 0");
    BlockSpec b = chain_block("B_g", 6 + 4 * g, -2);
    state(b, "e", 6 + 4 * g, "quoted family invariants: e(B_g) = 6 + 4g");
    state(b, "sigma", -2, "quoted family invariants: sigma(B_g) = -2");
    b.notes = "genus-raised variant of B; carries a genus g + 2 surface not"
              " used by any scripted plan";
    return b;
}

BlockSpec block_C()
{
    BlockSpec b = chain_block("C", 8, -4);
    state(b, "e", 8, "quoted invariants of C: e(C) = 8");
    state(b, "sigma", -4, "quoted invariants of C: sigma(C) = -4");
    return b;
}

BlockSpec block_D()
{
    BlockSpec b = chain_block("D", 10, -6);
    state(b, "e", 10, "quoted invariants of D: e(D) = 10");
    state(b, "sigma", -6, "quoted invariants of D: sigma(D) = -6");
    return b;
}

BlockSpec block_A()
{
    BlockSpec b = chain_block("A", 22, -18);
    b.invariants.minimal = Minimality::NonMinimal;
    std::vector<std::string> im(36, "1");
    im[33] = "t2"; // b17
    im[35] = "t1"; // b18
    SurfaceSpec f = genus_surface("F18", 18, im);
    f.meridian_trivial = true;
    b.surfaces.push_back(f);
    state(b, "e", 22, "quoted invariants of A: e(A) = 22");
    state(b, "sigma", -18, "quoted invariants of A: sigma(A) = -18");
    b.notes = "sixteen-fold blow-up of B carrying a square-0 genus 18 surface";
    return b;
}

BlockSpec block_Atilde()
{
    BlockSpec b = chain_block("Atilde", 7, -3);
    b.invariants.minimal = Minimality::NonMinimal;
    SurfaceSpec f = genus_surface("F3", 3, {"1", "1", "1", "t2", "1", "t1"});
    f.meridian_trivial = true;
    b.surfaces.push_back(f);
    state(b, "e", 7, "one-point blow-up of B: e = 7");
    state(b, "sigma", -3, "one-point blow-up of B: sigma = -3");
    b.notes = "blow-up of B in which F and H1 resolve to a square-0 genus 3"
              " surface F3";
    return b;
}

BlockSpec block_X1()
{
    BlockSpec b;
    b.name = "X1";
    b.invariants = {6, -2, 1, Parity::Odd, Minimality::Minimal, true};
    b.presentation = pres({"u"}, {});
    SurfaceSpec t = lag_torus("T", "", "u", "1");
    t.meridian_trivial = true;
    b.surfaces = {t};
    state(b, "e", 6, "quoted invariants: e = 6");
    state(b, "sigma", -2, "quoted invariants: sigma = -2");
    b.notes = "infinite-cyclic block whose torus complement group is free on"
              " u; push-off words reconstructed from the chained-sum"
              " computations that use it";
    return b;
}

BlockSpec block_E(long long k)
{
    if (k < 1) throw ParamOutOfRange("E needs k >= 1");
    BlockSpec b;
    b.name = "E";
    b.invariants = {12 * k, -8 * k, 0, k % 2 == 0 ? Parity::Even : Parity::Odd,
                    k == 1 ? Minimality::NonMinimal : Minimality::Minimal, true};
    b.presentation = pres({}, {});
    b.surfaces = {trivial_torus("T")};
    state(b, "e", 12 * k, "quoted family invariants: e = 12k");
    state(b, "sigma", -8 * k, "quoted family invariants: sigma = -8k");
    b.notes = "elliptic family; fiber torus T has simply connected complement";
    return b;
}

BlockSpec block_Ep(long long k)
{
    if (k < 1) throw ParamOutOfRange("E' needs k >= 1");
    BlockSpec b;
    b.name = "E'";
    b.invariants = {12 * k, -8 * k, 0, Parity::Odd, Minimality::Minimal, true};
    b.presentation = pres({}, {});
    b.surfaces = {trivial_torus("T")};
    state(b, "e", 12 * k, "quoted family invariants: e = 12k");
    state(b, "sigma", -8 * k, "quoted family invariants: sigma = -8k");
    b.notes = "odd-intersection-form sibling of E(k) with the same"
              " characteristic numbers and a torus of simply connected"
              " complement";
    return b;
}

BlockSpec block_T4()
{
    BlockSpec b;
    b.name = "T4";
    b.invariants = {0, 0, 4, Parity::Even, Minimality::Minimal, true};
    b.presentation = pres({"a1", "b1", "a2", "b2"},
                          {"[a1, b1]", "[a1, a2]", "[a1, b2]", "[b1, a2]",
                           "[b1, b2]", "[a2, b2]"});
    SurfaceSpec tsym = lag_torus("Tsym", "", "a1", "b1");
    tsym.meridian_trivial = true;
    tsym.lagrangian = false;
    SurfaceSpec ta = lag_torus("TA", "", "a1", "a2");
    ta.meridian_trivial = true;
    SurfaceSpec tb = lag_torus("TB", "", "b1", "b2");
    tb.meridian_trivial = true;
    b.surfaces = {tsym, ta, tb};
    b.notes = "four-torus; all meridians collapse because the ambient group"
              " is abelian";
    return b;
}

BlockSpec block_Z_BK()
{
    BlockSpec b;
    b.name = "Z_BK";
    b.invariants = {6, -2, 6, Parity::Odd, Minimality::Minimal, true};
    b.presentation = pres({"x", "y", "a1", "b1", "a2", "b2"},
                          {"[b1, b2]", "[a1, b2]", "[b1, a1]", "[b2, a2]",
                           "[x, a1]", "[y, a1]", "[x, a2]", "[y, a2]"});
    SurfaceSpec f = genus_surface("F", 2, {"a1", "b1", "a2", "b2"});
    f.meridian = "[x, y]";
    f.geometric_dual = "H3";
    b.surfaces = {
        lag_torus("T1'", "[a2^-1, a1^-1]", "b1^-1", "b2^-1", "R1'"),
        lag_torus("T2'", "[b1, a2]", "b1 a2 b1^-1", "b2^-1", "R2'"),
        lag_torus("T1", "[b1^-1, y^-1]", "x", "a1", "R1"),
        lag_torus("T2", "[x^-1, b1]", "y", "a1", "R2"),
        lag_torus("T3", "[b2^-1, y^-1]", "x", "a2", "R3"),
        lag_torus("T4", "[x^-1, b2]", "y", "a2", "R4"),
        f,
    };
    state(b, "e", 6, "quoted invariants: e(Z) = 6");
    state(b, "sigma", -2, "quoted invariants: sigma(Z) = -2");
    b.notes = "sum of T2 x Sigma_2 and a twice-blown-up four-torus along a"
              " genus 2 surface; six Lagrangian tori with the full word table";
    return b;
}

BlockSpec block_Z8()
{
    BlockSpec b;
    b.name = "Z8";
    b.invariants = {4, 0, 4, Parity::Unknown, Minimality::Minimal, true};
    b.presentation = pres({"x1", "y1", "x2", "y2", "a1", "b1", "a2", "b2"}, {});
    // Relations among the eight generators are not recorded at the source;
    // only the word table below is. Stored relator list is therefore empty.
    b.surfaces = {
        lag_torus("S1", "[b1^-1, y1^-1]", "x1", "a1", "S1d"),
        lag_torus("S2", "[x1^-1, b1]", "y1", "b1 a1 b1^-1", "S2d"),
        lag_torus("S3", "[b2^-1, y1^-1]", "x1", "a2", "S3d"),
        lag_torus("S4", "[x1^-1, b2]", "y1", "b2 a2 b2^-1", "S4d"),
        lag_torus("S5", "[b1 a1^-1 b1^-1, y2^-1]", "x2", "b1^-1", "S5d"),
        lag_torus("S6", "[x2^-1, b1 a1 b1^-1]", "y2", "b1 a1 b1^-1 a1^-1 b1^-1",
                  "S6d"),
        lag_torus("S7", "[b2 a2^-1 b2^-1, y2^-1]", "x2", "b2^-1", "S7d"),
        lag_torus("S8", "[x2^-1, b2 a2 b2^-1]", "y2", "b2 a2 b2^-1 a2^-1 b2^-1",
                  "S8d"),
    };
    state(b, "e", 4, "quoted invariants: e(Z) = 4");
    state(b, "sigma", 0, "quoted invariants: sigma(Z) = 0");
    b.notes = "eight homologically essential Lagrangian tori, each with a"
              " geometric dual; the source's last push-off label is garbled"
              " and transcribed as l8";
    return b;
}

BlockSpec block_T4CP1()
{
    BlockSpec b;
    b.name = "T4CP1";
    b.invariants = {1, -1, 4, Parity::Odd, Minimality::NonMinimal, true};
    b.presentation = pres({"alpha1", "alpha2", "alpha3", "alpha4"},
                          {"[alpha1, alpha2]", "[alpha2, alpha3]",
                           "[alpha2, alpha4]"});
    SurfaceSpec s2 = genus_surface("Sigma2'", 2,
                                   {"alpha1", "alpha2", "alpha3^2", "alpha4"});
    s2.meridian = "[alpha3, alpha4]";
    s2.meridian_killed = true; // meets the exceptional sphere
    b.surfaces = {
        s2,
        lag_torus("A23", "[alpha1^-1, alpha4^-1]", "alpha2", "alpha3"),
        lag_torus("A24", "[alpha1, alpha3^-1]", "alpha2", "alpha4"),
    };
    b.notes = "one-point blow-up of the four-torus carrying a square-0 genus 2"
              " surface and two Lagrangian tori";
    return b;
}

BlockSpec block_Zprime()
{
    BlockSpec b;
    b.name = "Zprime";
    b.invariants = {1, -1, 3, Parity::Odd, Minimality::NonMinimal, true};
    b.presentation = pres({"alpha1", "alpha2", "alpha3", "alpha4"},
                          {"alpha3^-1 [alpha1^-1, alpha4^-1]", "[alpha1, alpha3]",
                           "[alpha2, alpha3]", "[alpha2, alpha4]"});
    SurfaceSpec s2;
    s2.name = "Sigma2'";
    s2.genus = 2;
    s2.meridian = "[alpha3, alpha4]";
    s2.meridian_killed = true; // meets the exceptional sphere
    s2.pi1_images = {{"a1", "alpha1"}, {"b1", "alpha2"}, {"b2", "alpha4"}};
    b.surfaces = {s2};
    b.notes = "surgered blow-up of the four-torus used as the capping block of"
              " the skipped-surgery family; only the three displayed surface"
              " images are recorded";
    return b;
}

BlockSpec block_Sigma2xT2()
{
    BlockSpec b;
    b.name = "Sigma2xT2";
    b.invariants = {0, 0, 6, Parity::Even, Minimality::Minimal, true};
    b.presentation = pres({"a1", "b1", "a2", "b2", "c", "d"},
                          {"[a1, c]", "[b1, c]", "[a2, c]", "[a2, d]",
                           "[a1, b1] [a2, b2]"});
    SurfaceSpec s2 = genus_surface("S2", 2, {"a1", "b1", "a2", "b2"});
    s2.meridian = "[c, d]";
    SurfaceSpec a2c = lag_torus("A2C", "[b2^-1, d^-1]", "a2", "c");
    b.surfaces = {
        lag_torus("A1C", "[b1^-1, d^-1]", "a1", "c"),
        lag_torus("B1C", "[a1^-1, d]", "b1", "c"),
        lag_torus("A2D", "[c^-1, b2]", "a2", "d"),
        a2c,
        s2,
    };
    b.notes = "product of a genus 2 surface with a torus; the meridian of A2C"
              " is reconstructed from the symmetry of the displayed rows";
    return b;
}

BlockSpec block_T2S2_4()
{
    BlockSpec b;
    b.name = "T2S2_4";
    b.invariants = {4, -4, 2, Parity::Odd, Minimality::NonMinimal, true};
    b.presentation = pres({"c", "d"}, {"[c, d]"});
    SurfaceSpec s2 = genus_surface("Sigma2", 2, {"c", "d", "c^-1", "d^-1"});
    s2.meridian_trivial = true;
    b.surfaces = {s2};
    b.notes = "four-fold blow-up of T2 x S2 whose square-0 genus 2 surface"
              " doubles the torus factor";
    return b;
}

BlockSpec block_F3cap_TF2()
{
    BlockSpec b;
    b.name = "F3cap_TF2";
    b.invariants = {2, -2, 6, Parity::Odd, Minimality::NonMinimal, true};
    b.presentation = pres(
        {"x", "y", "u1", "v1", "u2", "v2"},
        {"[x, y]", "[x, u1]", "[x, v1]", "[x, u2]", "[x, v2]", "[y, u1]",
         "[y, v1]", "[y, u2]", "[y, v2]", "[u1, v1] [u2, v2]"});
    SurfaceSpec f3 = genus_surface("F3", 3, {"x", "y", "u1", "v1", "u2", "v2"});
    f3.meridian_trivial = true;
    b.surfaces = {f3};
    b.notes = "twice-blown-up product of a torus and a genus 2 surface with a"
              " square-0 genus 3 surface";
    return b;
}

BlockSpec block_F3cap_T4()
{
    BlockSpec b;
    b.name = "F3cap_T4";
    b.invariants = {4, -4, 4, Parity::Odd, Minimality::NonMinimal, true};
    b.presentation = pres({"x", "y", "u", "v"},
                          {"[x, y]", "[x, u]", "[x, v]", "[y, u]", "[y, v]",
                           "[u, v]"});
    SurfaceSpec f3 = genus_surface("F3", 3, {"u", "v", "x", "y", "x", "y"});
    f3.meridian_trivial = true;
    b.surfaces = {f3};
    b.notes = "four-fold blow-up of the four-torus; the genus 3 surface images"
              " use a permuted symplectic basis";
    return b;
}

BlockSpec block_F3cap_T2S2()
{
    BlockSpec b;
    b.name = "F3cap_T2S2";
    b.invariants = {6, -6, 2, Parity::Odd, Minimality::NonMinimal, true};
    b.presentation = pres({"x", "y"}, {"[x, y]"});
    SurfaceSpec f3 = genus_surface("F3", 3, {"1", "1", "x", "y", "1", "x"});
    f3.meridian_trivial = true;
    b.surfaces = {f3};
    b.notes = "six-fold blow-up of T2 x S2; genus 3 surface images after a"
              " symplectic basis change";
    return b;
}

BlockSpec block_Xtilde(bool plus)
{
    BlockSpec b;
    b.name = plus ? "Xtilde_plus" : "Xtilde_minus";
    b.invariants = {plus ? 7 : 11, -3, 0, Parity::Odd, Minimality::NonMinimal,
                    true};
    b.presentation = pres({}, {});
    SurfaceSpec f3 = genus_surface("F3t", 3, {"1", "1", "1", "1", "1", "1"});
    f3.meridian_killed = true; // meets the exceptional sphere
    b.surfaces = {f3};
    state(b, "e", plus ? 7 : 11,
          plus ? "blow-up of the e = 6 seed: e = 7" : "blow-up of the e = 10 seed: e = 11");
    state(b, "sigma", -3, "blow-up adds -1 to sigma = -2: sigma = -3");
    b.notes = "simply connected cap with a square-0 genus 3 surface obtained"
              " by resolving a genus 2 surface with a dual square -1 torus and"
              " blowing up once";
    return b;
}

BlockSpec block_Zg(long long g)
{
    if (g < 1) throw ParamOutOfRange("Zg needs g >= 1");
    BlockSpec b;
    b.name = "Zg";
    b.invariants = {8 * g - 8, 0, 0, Parity::Even, Minimality::Minimal, true};
    std::vector<std::string> gens = {"x1", "y1", "x2", "y2", "x3", "y3"};
    for (long long j = 1; j <= g; ++j) {
        gens.push_back("a" + std::to_string(j));
        gens.push_back("b" + std::to_string(j));
    }
    std::vector<std::string> rels;
    for (long long j = 1; j <= g; ++j)
        rels.push_back("[x1, b" + std::to_string(j) + "] a" + std::to_string(j) +
                       "^-1");
    for (long long j = 1; j + 1 <= g; ++j)
        rels.push_back("[x2, a" + std::to_string(j) + "] b" + std::to_string(j) +
                       "^-1");
    b.presentation = pres(gens, rels);
    SurfaceSpec f3 = genus_surface("F3", 3, {"x1", "y1", "x2", "y2", "x3", "y3"});
    f3.meridian_trivial = true;
    SurfaceSpec dial = lag_torus("Y2Bg", "[x2, a" + std::to_string(g) + "]^-1",
                                 "y2", "b" + std::to_string(g));
    b.surfaces = {f3, dial};
    b.notes = "product of a genus 3 and a genus g surface after 2g - 1 torus"
              " surgeries, leaving the b_g dial torus alone; its meridian is"
              " reconstructed from the surgered rows";
    return b;
}

BlockSpec block_Sigma2xSigman(long long n)
{
    if (n < 2) throw ParamOutOfRange("Sigma2xSigman needs n >= 2");
    BlockSpec b;
    b.name = "Sigma2xSigman";
    b.invariants = {4 * n - 4, 0, 0, Parity::Even, Minimality::Minimal, true};
    std::vector<std::string> gens = {"a1", "b1", "a2", "b2"};
    for (long long j = 1; j <= n; ++j) {
        gens.push_back("c" + std::to_string(j));
        gens.push_back("d" + std::to_string(j));
    }
    // Relations introduced by the 2n + 1 performed torus surgeries (the
    // a2-defining one is skipped, the b1-defining one is the separate dial
    // step) plus the one displayed commutation.
    std::vector<std::string> rels = {
        "a1^-1 [b1^-1, d1^-1]", "b2^-1 [a2^-1, d2]", "c1^-1 [d1^-1, b2^-1]",
        "d1^-1 [c1^-1, b2]",    "c2^-1 [d2^-1, b1^-1]", "d2^-1 [c2^-1, b1]",
        "[b1, c1]",
    };
    for (long long j = 3; j <= n; ++j) {
        rels.push_back("c" + std::to_string(j) + "^-1 [d" + std::to_string(j) +
                       "^-1, b2^-1]");
        rels.push_back("d" + std::to_string(j) + "^-1 [c" + std::to_string(j) +
                       "^-1, b2]");
    }
    b.presentation = pres(gens, rels);
    SurfaceSpec s2 = genus_surface("Sigma2", 2, {"a1", "b1", "a2", "b2"});
    SurfaceSpec dial = lag_torus("Tm", "[a1^-1, d1]", "b1^-1", "d1");
    SurfaceSpec a2c2 = lag_torus("a2xc2", "[b2^-1, d2^-1]", "a2", "c2");
    b.surfaces = {s2, dial, a2c2};
    b.notes = "product of a genus 2 and a genus n surface after all but two of"
              " the 2n + 3 torus surgeries; relation rows not displayed at the"
              " source follow the displayed j <= 2 pattern";
    return b;
}

BlockSpec simply_connected_seed(const std::string &name, long long e,
                                long long sigma, std::vector<SurfaceSpec> surfaces,
                                const std::string &notes)
{
    BlockSpec b;
    b.name = name;
    b.invariants = {e, sigma, 0, Parity::Odd, Minimality::Minimal, true};
    b.presentation = pres({}, {});
    b.surfaces = std::move(surfaces);
    b.notes = notes;
    state(b, "e", e, "quoted invariants: e = " + std::to_string(e));
    state(b, "sigma", sigma, "quoted invariants: sigma = " + std::to_string(sigma));
    return b;
}

SurfaceSpec trivial_genus2(std::string name)
{
    SurfaceSpec s = genus_surface(std::move(name), 2, {"1", "1", "1", "1"});
    s.meridian_trivial = true;
    return s;
}

BlockSpec block_JPark(long long k)
{
    if (k < 10 || k > 18) throw ParamOutOfRange("JPark needs 10 <= k <= 18");
    BlockSpec b = simply_connected_seed(
        "JPark", 5 + k, 3 - k, {trivial_genus2("Sigma2"), trivial_torus("T")},
        "simply connected seed with chi_h = 2 and c1^2 = 19 - k; both the"
        " genus 2 surface and the torus have simply connected complement");
    state(b, "c1sq", 19 - k, "quoted Chern coordinate: c1^2 = 19 - k");
    state(b, "chi_h", 2, "quoted Chern coordinate: chi_h = 2");
    return b;
}

BlockSpec block_P(long long k)
{
    if (k < 2) throw ParamOutOfRange("P needs k >= 2");
    BlockSpec b = simply_connected_seed(
        "P", 7 + 4 * k, -3, {trivial_torus("T")},
        "sigma = -3 family seed; torus word data reconstructed (the source"
        " keeps an unsurgered dial torus in each family member)");
    state(b, "e", 7 + 4 * k, "quoted family invariants: e = 7 + 4k");
    state(b, "sigma", -3, "quoted family invariants: sigma = -3");
    return b;
}

BlockSpec block_P58()
{
    BlockSpec b = simply_connected_seed(
        "P58", 15, -3, {trivial_torus("T")},
        "the k = 2 member of the sigma = -3 family; the source quotes both"
        " e = 14 and (c1^2, chi_h) = (21, 3), which disagree");
    b.stated.clear();
    state(b, "e", 14, "quoted invariants: e = 14");
    state(b, "sigma", -3, "quoted invariants: sigma = -3");
    state(b, "c1sq", 21, "quoted Chern coordinates: c1^2 = 21");
    state(b, "chi_h", 3, "quoted Chern coordinates: chi_h = 3");
    return b;
}

BlockSpec block_H()
{
    BlockSpec b = simply_connected_seed("H", 75, 25, {},
                                        "positive-signature seed used for"
                                        " invariant arithmetic only");
    return b;
}

BlockSpec block_BKY(int variant, long long n)
{
    if (n < 2) throw ParamOutOfRange("BKY needs n >= 2");
    // K choices for a one-generator one-relator group (g = 1, r = 1).
    static const long long s = 2;
    long long ke = 0, ks = 0;
    switch (variant) {
    case 1: ke = 12 * (s + 1); ks = -8 * (s + 1); break;
    case 2: ke = 12 + 8 * s; ks = -8 - 4 * s; break;
    case 3: ke = 10 + 6 * s; ks = -2 - 2 * s; break;
    default: ke = 10 + 4 * s; ks = -2; break;
    }
    BlockSpec b;
    b.name = "BKY" + std::to_string(variant);
    b.invariants = {75 * n * n + 256 * n + 130 + ke, 25 * n * n - 68 * n - 78 + ks,
                    0, Parity::Unknown, Minimality::Unknown, true};
    b.presentation = pres({}, {});
    b.notes = "formula family only (no surface inventory); instantiated for a"
              " one-generator one-relator group, reading the garbled middle"
              " term of the quoted Euler characteristic as 256n";
    return b;
}

BlockSpec lookup_impl(const std::string &name, std::optional<long long> param)
{
    auto need = [&](const char *what) -> long long {
        if (!param) throw ParamOutOfRange(name + std::string(" needs parameter ") + what);
        return *param;
    };
    if (name == "B") return block_B();
    if (name == "B_g") return block_Bg(need("g"));
    if (name == "C") return block_C();
    if (name == "D") return block_D();
    if (name == "A") return block_A();
    if (name == "Atilde") return block_Atilde();
    if (name == "X1") return block_X1();
    if (name == "E") return block_E(need("k"));
    if (name == "E'" || name == "Ep") return block_Ep(need("k"));
    if (name == "T4") return block_T4();
    if (name == "Z_BK") return block_Z_BK();
    if (name == "Z8") return block_Z8();
    if (name == "T4CP1") return block_T4CP1();
    if (name == "Zprime") return block_Zprime();
    if (name == "Sigma2xT2") return block_Sigma2xT2();
    if (name == "T2S2_4") return block_T2S2_4();
    if (name == "F3cap_TF2") return block_F3cap_TF2();
    if (name == "F3cap_T4") return block_F3cap_T4();
    if (name == "F3cap_T2S2") return block_F3cap_T2S2();
    if (name == "Xtilde_plus") return block_Xtilde(true);
    if (name == "Xtilde_minus") return block_Xtilde(false);
    if (name == "Zg") return block_Zg(need("g"));
    if (name == "Sigma2xSigman") return block_Sigma2xSigman(need("n"));
    if (name == "S11")
        return simply_connected_seed("S11", 23, -15, {trivial_torus("F1")},
                                     "simply connected seed at (c1^2, chi_h) ="
                                     " (1, 2) with a torus of simply connected"
                                     " complement");
    if (name == "R21")
        return simply_connected_seed("R21", 21, -13, {trivial_torus("T")},
                                     "simply connected seed at (3, 2)");
    if (name == "R22")
        return simply_connected_seed("R22", 19, -11, {trivial_torus("T")},
                                     "simply connected seed at (5, 2)");
    if (name == "DPark")
        return simply_connected_seed("DPark", 17, -9, {trivial_torus("T24")},
                                     "simply connected seed at (7, 2)");
    if (name == "JPark") return block_JPark(need("k"));
    if (name == "P") return block_P(need("k"));
    if (name == "P58") return block_P58();
    if (name == "H") return block_H();
    if (name == "AP_M")
        return simply_connected_seed("AP_M", 94, 2, {trivial_torus("T")},
                                     "smallest-Euler-characteristic seed at"
                                     " (194, 24); torus complement simply"
                                     " connected");
    if (name == "AP_N")
        return simply_connected_seed("AP_N", 100, 4, {trivial_torus("T")},
                                     "seed at (212, 26); torus complement"
                                     " simply connected");
    if (name == "StipsiczS")
        return simply_connected_seed("StipsiczS", 176, 4, {trivial_torus("T")},
                                     "seed at (364, 45) for the non-negative"
                                     " signature families");
    if (name == "BKY1") return block_BKY(1, need("n"));
    if (name == "BKY2") return block_BKY(2, need("n"));
    if (name == "BKY3") return block_BKY(3, need("n"));
    if (name == "BKY4") return block_BKY(4, need("n"));
    throw UnknownBlock("unknown block: " + name);
}

} // namespace

const SurfaceSpec *BlockSpec::surface(const std::string &n) const
{
    for (const auto &s : surfaces)
        if (s.name == n) return &s;
    return nullptr;
}

BlockSpec lookup(const std::string &name, std::optional<long long> param)
{
    return lookup_impl(name, param);
}

std::vector<std::string> catalog_names()
{
    return {"B",      "B_g",       "C",          "D",           "A",
            "Atilde", "X1",        "E",          "E'",          "T4",
            "Z_BK",   "Z8",        "T4CP1",      "Zprime",      "Sigma2xT2",
            "T2S2_4", "F3cap_TF2", "F3cap_T4",   "F3cap_T2S2",  "Xtilde_plus",
            "Xtilde_minus", "Zg",  "Sigma2xSigman", "S11",      "R21",
            "R22",    "DPark",     "JPark",      "P",           "P58",
            "H",      "AP_M",      "AP_N",       "StipsiczS",   "BKY1",
            "BKY2",   "BKY3",      "BKY4"};
}

std::optional<long long> default_param(const std::string &name)
{
    static const std::map<std::string, long long> d = {
        {"B_g", 1},  {"E", 1},    {"E'", 1},   {"Zg", 1},
        {"Sigma2xSigman", 3},     {"JPark", 10}, {"P", 2},
        {"BKY1", 2}, {"BKY2", 2}, {"BKY3", 2}, {"BKY4", 2},
    };
    auto it = d.find(name);
    if (it == d.end()) return {};
    return it->second;
}

std::vector<Inconsistency> audit_catalog()
{
    std::vector<Inconsistency> out;
    for (const auto &name : catalog_names()) {
        BlockSpec b = lookup(name, default_param(name));
        ChernCoords c = chern_coords(b.invariants);
        for (const auto &sv : b.stated) {
            long long computed = 0;
            if (sv.field == "e") computed = b.invariants.e;
            else if (sv.field == "sigma") computed = b.invariants.sigma;
            else if (sv.field == "c1sq") computed = c.c1sq;
            else if (sv.field == "chi_h") {
                if (!c.is_lattice()) {
                    out.push_back({name, "stated chi_h but computed chi_h is not"
                                         " an integer", sv.citation});
                    continue;
                }
                computed = c.chi_num;
            } else {
                out.push_back({name, "unknown stated field " + sv.field,
                               sv.citation});
                continue;
            }
            if (computed != sv.value)
                out.push_back({name, "stated " + sv.field + " = " +
                                         std::to_string(sv.value) +
                                         " but the block's other recorded"
                                         " numbers force " + sv.field + " = " +
                                         std::to_string(computed),
                               sv.citation});
        }
    }
    return out;
}

} // namespace atlas
