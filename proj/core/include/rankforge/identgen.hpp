#ifndef RANKFORGE_IDENTGEN_HPP
#define RANKFORGE_IDENTGEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rankforge/fmonoid.hpp"
#include "rankforge/poly.hpp"

namespace rankforge {

// Input to the shuffle construction: a pairwise-coprime basis p_1..p_n, an
// m x n matrix of nonnegative exponents Lambda, and one permutation of the
// rows per column. Shuffling each column of Lambda independently preserves
// the column multisets, which is exactly what makes the resulting pair of
// tuples a valid rank identity.
//
// Only pairwise coprimality is required of the basis (verified with gcd),
// not irreducibility: gcd and lcm act coordinatewise on exponent vectors of
// a coprime basis, so the chain-equality argument goes through unchanged,
// and no irreducibility testing is needed anywhere.
struct ShuffleSpec {
    FieldSpec field;
    std::vector<Poly> basis;
    std::vector<std::vector<unsigned>> lambda;          // m rows, n columns
    std::vector<std::vector<std::size_t>> column_perms; // n perms of {0..m-1}
};

// A claimed identity: sum of ranks of lhs evaluations equals sum of ranks
// of rhs evaluations, for every square matrix argument. `provenance` is
// free-form display text carried into reports.
struct RankIdentity {
    FieldSpec field;
    std::vector<Poly> lhs;
    std::vector<Poly> rhs;
    std::string provenance;
};

// Row i of the result is the product over j of basis[j]^exponents[i][j],
// fully expanded. Throws NotCoprime (naming the offending pair) if the
// basis is not pairwise coprime, ZeroPolynomial on a zero basis entry.
std::vector<Poly> build_tuple(
    const std::vector<Poly>& basis,
    const std::vector<std::vector<unsigned>>& exponents);

// One uniform permutation per column, Fisher-Yates on a SplitMix64 stream
// derived as derive(seed, column index). Deterministic in (shape, seed).
std::vector<std::vector<std::size_t>> shuffle_columns(std::size_t rows,
                                                      std::size_t cols,
                                                      std::uint64_t seed);

// lhs from Lambda, rhs from the shuffled matrix mu with
// mu[i][j] = lambda[perm_j(i)][j]. The output always satisfies
// check_lattice_condition; that is asserted before returning.
RankIdentity make_identity(const ShuffleSpec& spec,
                           std::string provenance = "shuffle");

// Decides validity: true iff the canonical chains of the two tuples agree,
// in which case the rank identity holds over every ranked algebra (and in
// particular for square matrices of every size over this field). Throws
// ZeroPolynomial or LengthMismatch on malformed input.
bool check_lattice_condition(const std::vector<Poly>& lhs,
                             const std::vector<Poly>& rhs);

// Stable catalog names: "eq-1.1" (rank(A) + rank(I-A) = rank(I) +
// rank(A-A^2)) and "example-6.5" (the degree-5 three-factor shuffle
// instance). Unknown names throw Error; example-6.5 throws NotCoprime over
// F2, where its basis degenerates.
RankIdentity builtin_identity(const std::string& name,
                              const FieldSpec& field);
std::vector<std::string> builtin_identity_names();
std::vector<RankIdentity> builtin_identities(const FieldSpec& field);

} // namespace rankforge

#endif
