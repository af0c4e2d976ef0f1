#ifndef RANKFORGE_EXACTMAT_HPP
#define RANKFORGE_EXACTMAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankforge/identgen.hpp"
#include "rankforge/poly.hpp"
#include "rankforge/rng.hpp"

namespace rankforge {

// Dense matrix of canonical field scalars. Values are immutable in spirit:
// the algorithms below copy before eliminating.
class ExactMatrix {
  public:
    ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& spec)
        : spec_(spec), rows_(rows), cols_(cols),
          data_(rows * cols, FieldElem::zero(spec)) {}

    static ExactMatrix identity(std::size_t n, const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    FieldElem& at(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const FieldElem& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_zero() const;
    ExactMatrix conjugate_transpose() const;

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix operator*(const FieldElem& c) const;
    ExactMatrix operator-() const;

    bool operator==(const ExactMatrix& b) const {
        return spec_ == b.spec_ && rows_ == b.rows_ && cols_ == b.cols_ &&
               data_ == b.data_;
    }
    bool operator!=(const ExactMatrix& b) const { return !(*this == b); }

    // Row-major entry strings, the matrix file/report format.
    std::vector<std::vector<std::string>> entry_strings() const;
    std::string to_string() const;

  private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<FieldElem> data_;
};

ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b);

// Exact row rank. Over Q and Q(i) the elimination is fraction-free
// (Bareiss) on a denominator-cleared integer copy; over F_p it is plain
// Gaussian elimination.
unsigned rank(const ExactMatrix& m);

// Gauss-Jordan inverse; throws NotSquare or Error("matrix is singular").
ExactMatrix inverse(const ExactMatrix& m);

// p(A) by Horner, with the constant term times the identity.
ExactMatrix eval_poly(const Poly& p, const ExactMatrix& a);

// Companion matrix of a monic polynomial of degree n >= 1: ones on the
// subdiagonal, last column the negated low coefficients. Its minimal (and
// characteristic) polynomial is p itself.
ExactMatrix companion(const Poly& p);

// --------------------------------------------------------------------------
// Matrices over K[t] and the Smith normal form.

class PolyMatrix {
  public:
    PolyMatrix(std::size_t rows, std::size_t cols, const FieldSpec& spec)
        : spec_(spec), rows_(rows), cols_(cols),
          data_(rows * cols, Poly::zero(spec)) {}

    static PolyMatrix identity(std::size_t n, const FieldSpec& spec);
    static PolyMatrix diagonal(const std::vector<Poly>& entries,
                               const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    bool operator==(const PolyMatrix& b) const {
        return spec_ == b.spec_ && rows_ == b.rows_ && cols_ == b.cols_ &&
               data_ == b.data_;
    }

    std::vector<std::vector<std::string>> entry_strings() const;

  private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<Poly> data_;
};

// Determinant over K[t] by fraction-free elimination (exact divisions).
Poly poly_det(const PolyMatrix& m);

// U * M * V = diag(factors) with U, V invertible over K[t] (unit constant
// determinants) and factors monic-or-zero with factors[k] dividing
// factors[k+1]. U and V are returned so callers can audit the equation.
struct SnfResult {
    std::vector<Poly> factors;
    PolyMatrix U;
    PolyMatrix V;
};
SnfResult smith_normal_form(const PolyMatrix& m);

// --------------------------------------------------------------------------
// Structured random samplers. All draw from the caller's SplitMix64 stream;
// entry distribution is integers in [-3, 3] mapped into the field (both
// parts for Q(i)) and uniform residues over F_p.

FieldElem sample_scalar(const FieldSpec& spec, SplitMix64& rng);
ExactMatrix sample_general(std::size_t rows, std::size_t cols,
                           const FieldSpec& spec, SplitMix64& rng);
// Retries up to 64 times, then throws SamplerExhausted.
ExactMatrix sample_invertible(std::size_t n, const FieldSpec& spec,
                              SplitMix64& rng);
// S * diag(I_r, 0) * S^-1 for random invertible S; rank r by construction.
ExactMatrix sample_idempotent(std::size_t n, std::size_t r,
                              const FieldSpec& spec, SplitMix64& rng);
// B (B*B)^-1 B* for a random full-column-rank n x r B; needs a field with
// an involution (Q or Q(i)).
ExactMatrix sample_projection(std::size_t n, std::size_t r,
                              const FieldSpec& spec, SplitMix64& rng);

// --------------------------------------------------------------------------
// Randomized verification and counterexample search.

struct TrialRecord {
    std::uint64_t stream;  // derived SplitMix64 state for the trial
    std::size_t dim;
    unsigned lhs_sum;
    unsigned rhs_sum;
    bool pass;
};

struct VerificationReport {
    RankIdentity identity;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims;
    std::vector<TrialRecord> records;
    std::optional<ExactMatrix> counterexample;
    bool all_pass() const {
        for (const TrialRecord& r : records)
            if (!r.pass)
                return false;
        return true;
    }
};

// For trial k, samples a general matrix of size dims[k mod |dims|] from the
// stream derive(seed, k) and compares the two rank sums exactly. The first
// failing matrix is stored as the counterexample.
VerificationReport verify_identity(const RankIdentity& id,
                                   std::size_t trials,
                                   const std::vector<std::size_t>& dims,
                                   std::uint64_t seed);

// Searches for a matrix separating the two tuples. Returns nullopt
// immediately when the lattice condition holds (the identity is valid, no
// witness exists). Otherwise tries companion matrices of powers of a
// gcd-free basis of the tuple entries, then block sums of pairs of those,
// then random matrices, up to `budget` candidates.
//
// For equal-length tuples of nonzero polynomials the companion phase is
// complete: the sorted exponent vectors over a gcd-free basis are
// determined by the rank sums of companion(p^k) evaluations, so an invalid
// identity always yields a witness there.
std::optional<ExactMatrix> counterexample_search(const std::vector<Poly>& lhs,
                                                 const std::vector<Poly>& rhs,
                                                 std::size_t budget = 256);

// Pairwise-coprime refinement of the monic nonconstant parts of the inputs:
// every input is a unit times a product of powers of basis elements, and
// basis elements are pairwise coprime. Uses gcds only, never factorization.
std::vector<Poly> gcd_free_basis(const std::vector<Poly>& inputs);

// true iff rank(I + AB) = rank(I + BA) and
// rank(A) + rank(I + BA) = rank(A + ABA) + n.
bool two_sided_identities_check(const ExactMatrix& a, const ExactMatrix& b);

} // namespace rankforge

#endif
