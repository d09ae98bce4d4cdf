#include "atlas/invariants.hpp"

#include <numeric>

namespace atlas {

ChernCoords chern_coords(const CharInvariants &inv)
{
    ChernCoords out;
    out.c1sq = 2 * inv.e + 3 * inv.sigma;
    long long num = inv.e + inv.sigma;
    long long den = 4;
    if (num == 0) {
        out.chi_num = 0;
        out.chi_den = 1;
    } else {
        long long g = std::gcd(num < 0 ? -num : num, den);
        out.chi_num = num / g;
        out.chi_den = den / g;
        if (out.chi_den < 0) {
            out.chi_den = -out.chi_den;
            out.chi_num = -out.chi_num;
        }
    }
    return out;
}

BettiNumbers betti(const CharInvariants &inv)
{
    BettiNumbers out;
    out.b2 = inv.e - 2 + 2 * inv.b1;
    if (out.b2 < 0) throw NegativeBetti("b2 = e - 2 + 2*b1 is negative");
    long long plus = out.b2 + inv.sigma;
    long long minus = out.b2 - inv.sigma;
    if (plus % 2 != 0 || minus % 2 != 0) throw ParityError("b2 +/- sigma is odd");
    out.b2plus = plus / 2;
    out.b2minus = minus / 2;
    if (out.b2plus < 0 || out.b2minus < 0) throw NegativeBetti("negative b2+ or b2-");
    return out;
}

CharInvariants sum_invariants(const CharInvariants &left, const CharInvariants &right,
                              long long genus)
{
    if (genus < 1) throw GenusZero("fiber sum along genus 0 rejected");
    CharInvariants out;
    out.e = left.e + right.e + 4 * genus - 4;
    out.sigma = left.sigma + right.sigma;
    out.b1 = 0; // caller sets b1 from the group engine
    out.parity = (left.parity == Parity::Odd || right.parity == Parity::Odd)
                     ? Parity::Odd
                     : Parity::Unknown;
    // Usher: a sum of minimal pieces along genus >= 1 is minimal unless an
    // exceptional sphere survives in a complement; that hazard is handled by
    // the surgery module via catalog flags.
    if (left.minimal == Minimality::Minimal && right.minimal == Minimality::Minimal)
        out.minimal = Minimality::Minimal;
    else
        out.minimal = Minimality::Unknown;
    out.symplectic = left.symplectic && right.symplectic;
    return out;
}

CharInvariants blowup_invariants(const CharInvariants &inv, long long n)
{
    CharInvariants out = inv;
    out.e += n;
    out.sigma -= n;
    if (n > 0) {
        out.minimal = Minimality::NonMinimal;
        out.parity = Parity::Odd;
    }
    return out;
}

CharInvariants cover_invariants(const CharInvariants &inv, long long degree)
{
    CharInvariants out = inv;
    out.e = inv.e * degree;
    out.sigma = inv.sigma * degree;
    return out;
}

} // namespace atlas
