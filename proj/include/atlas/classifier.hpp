#pragma once

#include "atlas/surgery.hpp"

#include <optional>
#include <string>

namespace atlas {

struct UnknownParity : std::runtime_error {
    explicit UnknownParity(const std::string &msg) : std::runtime_error(msg) {}
};
struct NonCyclicGroup : std::runtime_error {
    explicit NonCyclicGroup(const std::string &msg) : std::runtime_error(msg) {}
};

enum class Omega2Type { TypeI, TypeII, TypeIII, Undetermined };

// Spin-type of the universal cover. The engine never certifies spin-ness:
// even parity and the mod-16 degenerate covers come back Undetermined.
// pi1_order empty means infinite cyclic.
Omega2Type omega2_type(Parity parity, std::optional<long long> pi1_order,
                       long long e, long long sigma);

// Topological prototype: b+ CP2 # b- -CP2 # S1xS3 (infinite cyclic) or
// b+ CP2 # b- -CP2 # ~L(p,1)xS1 (finite cyclic), when the homeomorphism
// criteria apply; Unclassified(reason) otherwise.
struct PrototypeName {
    bool classified = false;
    long long b2plus = 0;
    long long b2minus = 0;
    bool finite = false;
    long long p = 0;
    std::string reason; // set when not classified
    std::string render() const;
    bool operator==(const PrototypeName &o) const
    {
        return classified == o.classified && b2plus == o.b2plus &&
               b2minus == o.b2minus && finite == o.finite && p == o.p;
    }
};

// pi1 is the verified cyclic descriptor of the closed manifold ("Z", "Z_p").
PrototypeName prototype(const ManifoldState &state, const std::string &pi1);

enum class HomeoVerdict { Homeomorphic, Distinct, Undetermined };

HomeoVerdict homeo_equal(const ManifoldState &a, const std::string &pi1a,
                         const ManifoldState &b, const std::string &pi1b);

} // namespace atlas
