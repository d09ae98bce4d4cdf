#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atlas {

struct UnknownGenerator : std::runtime_error {
    explicit UnknownGenerator(const std::string &msg) : std::runtime_error(msg) {}
};
struct WordParseError : std::runtime_error {
    explicit WordParseError(const std::string &msg) : std::runtime_error(msg) {}
};

// One syllable of a word: generator index and a nonzero exponent.
struct Letter {
    int gen = 0;
    long long exp = 0;
    bool operator==(const Letter &o) const { return gen == o.gen && exp == o.exp; }
    bool operator<(const Letter &o) const
    {
        return gen != o.gen ? gen < o.gen : exp < o.exp;
    }
};

// Freely reduced word in the generators of some presentation.
using Word = std::vector<Letter>;

Word free_reduce(const Word &w);
Word cyclic_reduce(const Word &w);
Word inverse(const Word &w);
Word concat(const Word &a, const Word &b);
Word commutator(const Word &a, const Word &b); // [a,b] = a b a^-1 b^-1
Word power(const Word &a, long long n);
long long word_length(const Word &w);

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators; // stored freely and cyclically reduced

    int gen_index(const std::string &name) const; // -1 if absent
    int require_gen(const std::string &name) const;

    // Parses words like "t1", "x^-1", "[b1^-1, y^-1]", "a b^2 [x,y]^-1", "1".
    Word parse(const std::string &text) const;
    std::string render(const Word &w) const;
    std::string render() const;
};

GroupPresentation quotient(const GroupPresentation &p, const std::vector<Word> &new_relators);

// Free product of a and b plus identification relators u = v and a kill list
// (words of either side forced trivial, e.g. meridian nullhomotopies).
// Name collisions on the b side are resolved by prefixing `btag`.
// b-side generator k gets index a.generators.size() + k in the result.
GroupPresentation amalgamate(const GroupPresentation &a, const GroupPresentation &b,
                             const std::vector<std::pair<Word, Word>> &identifications,
                             const std::vector<Word> &kill_a,
                             const std::vector<Word> &kill_b,
                             const std::string &btag = "r_");

struct AbelianGroup {
    long long free_rank = 0;
    std::vector<long long> torsion; // d1 | d2 | ..., each >= 2
    bool operator==(const AbelianGroup &o) const
    {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    std::string describe() const;
};

// Dense integer matrix, row major.
struct IntMatrix {
    long long rows = 0, cols = 0;
    std::vector<long long> a;
    IntMatrix() = default;
    IntMatrix(long long r, long long c) : rows(r), cols(c), a(r * c, 0) {}
    long long &at(long long i, long long j) { return a[i * cols + j]; }
    long long at(long long i, long long j) const { return a[i * cols + j]; }
    static IntMatrix identity(long long n);
};

IntMatrix matmul(const IntMatrix &x, const IntMatrix &y);
long long det(const IntMatrix &m); // for the unimodularity check

struct SmithResult {
    IntMatrix d, u, v; // u * m * v = d
};

// Smith normal form with unimodular u, v; verified by exact multiplication.
SmithResult smith_normal_form(const IntMatrix &m);

AbelianGroup abelianization(const GroupPresentation &p);

// Bounded deterministic Tietze simplification; output presents an
// isomorphic group. Moves: free/cyclic reduction, trivial-relator deletion,
// kill of generators with a length-1 unit relator, elimination of a
// generator occurring exactly once with unit exponent in some relator, and
// rewriting relators modulo generator pairs known to commute.
GroupPresentation simplify(const GroupPresentation &p, long long budget = 2000);

enum class VerdictLevel { ProvenCyclic, AbelianizationOnly, Mismatch };

struct CyclicVerdict {
    VerdictLevel level = VerdictLevel::Mismatch;
    std::optional<GroupPresentation> witness;
};

CyclicVerdict verify_cyclic(const GroupPresentation &p, const AbelianGroup &expected,
                            long long budget = 2000);

} // namespace atlas
