#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

enum class Parity { Odd, Even, Unknown };
enum class Minimality { Minimal, NonMinimal, Unknown };

struct ParityError : std::runtime_error {
    explicit ParityError(const std::string &msg) : std::runtime_error(msg) {}
};
struct NegativeBetti : std::runtime_error {
    explicit NegativeBetti(const std::string &msg) : std::runtime_error(msg) {}
};
struct GenusZero : std::runtime_error {
    explicit GenusZero(const std::string &msg) : std::runtime_error(msg) {}
};

// Numeric state of a closed oriented 4-manifold.
struct CharInvariants {
    long long e = 0;
    long long sigma = 0;
    long long b1 = 0;
    Parity parity = Parity::Unknown;
    Minimality minimal = Minimality::Unknown;
    bool symplectic = false;
};

// Exact rational chi_h = (e + sigma)/4 in lowest terms; c1sq = 2e + 3sigma.
struct ChernCoords {
    long long c1sq = 0;
    long long chi_num = 0;
    long long chi_den = 1;
    bool is_lattice() const { return chi_den == 1; }
};

struct BettiNumbers {
    long long b2 = 0;
    long long b2plus = 0;
    long long b2minus = 0;
};

ChernCoords chern_coords(const CharInvariants &inv);
BettiNumbers betti(const CharInvariants &inv);
CharInvariants sum_invariants(const CharInvariants &left, const CharInvariants &right,
                              long long genus);
CharInvariants blowup_invariants(const CharInvariants &inv, long long n);
CharInvariants cover_invariants(const CharInvariants &inv, long long degree);

} // namespace atlas
