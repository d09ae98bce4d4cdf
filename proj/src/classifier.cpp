#include "atlas/classifier.hpp"

namespace atlas {

namespace {

struct CyclicDescriptor {
    bool finite = false;
    long long p = 0;
};

CyclicDescriptor parse_cyclic(const std::string &pi1)
{
    if (pi1 == "Z") return {false, 0};
    if (pi1.rfind("Z_", 0) == 0) {
        long long p = std::stoll(pi1.substr(2));
        if (p >= 2) return {true, p};
    }
    throw NonCyclicGroup("not a cyclic descriptor: " + pi1);
}

} // namespace

Omega2Type omega2_type(Parity parity, std::optional<long long> pi1_order,
                       long long e, long long sigma)
{
    (void)e;
    if (parity == Parity::Unknown) throw UnknownParity("parity unknown");
    if (parity == Parity::Even) return Omega2Type::Undetermined;
    if (!pi1_order) return Omega2Type::TypeI; // odd equivariant form route
    // Rokhlin on the universal cover: signature p * sigma must dodge 0 mod 16.
    return (*pi1_order * sigma) % 16 != 0 ? Omega2Type::TypeI
                                          : Omega2Type::Undetermined;
}

std::string PrototypeName::render() const
{
    if (!classified) return "Unclassified(" + reason + ")";
    std::string tail = finite ? "~L(" + std::to_string(p) + ",1)xS1" : "S1xS3";
    return std::to_string(b2plus) + " CP2 # " + std::to_string(b2minus) +
           " -CP2 # " + tail;
}

PrototypeName prototype(const ManifoldState &state, const std::string &pi1)
{
    CyclicDescriptor d = parse_cyclic(pi1);
    const CharInvariants &inv = state.invariants;
    BettiNumbers bn = betti(inv);
    PrototypeName out;
    out.finite = d.finite;
    out.p = d.p;
    out.b2plus = bn.b2plus;
    out.b2minus = bn.b2minus;
    if (!d.finite) {
        long long slack = bn.b2 - std::abs(inv.sigma);
        if (slack >= 6 && inv.parity == Parity::Odd) {
            out.classified = true;
        } else {
            out.reason = "stability gap";
        }
        return out;
    }
    if (omega2_type(inv.parity, d.p, inv.e, inv.sigma) == Omega2Type::TypeI) {
        out.classified = true;
    } else {
        out.reason = "omega2 undetermined";
    }
    return out;
}

HomeoVerdict homeo_equal(const ManifoldState &a, const std::string &pi1a,
                         const ManifoldState &b, const std::string &pi1b)
{
    PrototypeName pa = prototype(a, pi1a);
    PrototypeName pb = prototype(b, pi1b);
    if (pa.classified && pb.classified)
        return pa == pb ? HomeoVerdict::Homeomorphic : HomeoVerdict::Distinct;
    // Without both prototypes, only a known invariant mismatch separates.
    if (pi1a != pi1b) return HomeoVerdict::Distinct;
    BettiNumbers ba = betti(a.invariants), bb = betti(b.invariants);
    if (ba.b2plus != bb.b2plus || ba.b2minus != bb.b2minus)
        return HomeoVerdict::Distinct;
    if (a.invariants.parity != Parity::Unknown &&
        b.invariants.parity != Parity::Unknown &&
        a.invariants.parity != b.invariants.parity)
        return HomeoVerdict::Distinct;
    return HomeoVerdict::Undetermined;
}

} // namespace atlas
