#ifndef RANKFORGE_VNRANK_HPP
#define RANKFORGE_VNRANK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rankforge/error.hpp"
#include "rankforge/exactmat.hpp"
#include "rankforge/field.hpp"
#include "rankforge/rng.hpp"

namespace rankforge {

// Finite-dimensional model of a finite von Neumann algebra: a direct sum
// of full matrix algebras M_{n_1} + ... + M_{n_m} over Q(i), whose center
// is Q(i)^m. Q(i) stands in for C: conjugate-transpose is the involution
// and x*x = 0 forces x = 0, which is all the projection constructions
// use. Center-valued data (traces, ranks) lives in the rational cone
// [0,1]^m, one component per block.
class BlockShape {
  public:
    explicit BlockShape(std::vector<std::size_t> dims);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t blocks() const { return dims_.size(); }
    std::size_t dim(std::size_t i) const { return dims_[i]; }

    bool operator==(const BlockShape&) const = default;

    std::string to_string() const;

  private:
    std::vector<std::size_t> dims_;
};

// One operator: a square matrix over Q(i) per block.
class BlockAlgebraElem {
  public:
    explicit BlockAlgebraElem(const BlockShape& shape);
    static BlockAlgebraElem identity(const BlockShape& shape);

    const BlockShape& shape() const { return shape_; }
    ExactMatrix& block(std::size_t i) { return blocks_[i]; }
    const ExactMatrix& block(std::size_t i) const { return blocks_[i]; }

    BlockAlgebraElem adjoint() const;
    bool is_zero() const;
    bool is_idempotent() const;
    // Self-adjoint idempotent.
    bool is_projection() const;

    BlockAlgebraElem operator-() const;
    friend BlockAlgebraElem operator+(const BlockAlgebraElem& a,
                                      const BlockAlgebraElem& b);
    friend BlockAlgebraElem operator-(const BlockAlgebraElem& a,
                                      const BlockAlgebraElem& b);
    friend BlockAlgebraElem operator*(const BlockAlgebraElem& a,
                                      const BlockAlgebraElem& b);

    bool operator==(const BlockAlgebraElem& b) const {
        return shape_ == b.shape_ && blocks_ == b.blocks_;
    }
    bool operator!=(const BlockAlgebraElem& b) const { return !(*this == b); }

    std::string to_string() const;

  private:
    BlockShape shape_;
    std::vector<ExactMatrix> blocks_;
};

// An element of the positive part of the center: one rational per block.
// Traces and ranks of the elements this module works with always land
// here (idempotent traces are integers; ranks are integers over block
// dimensions).
struct CenterValue {
    std::vector<mpq_class> components;

    bool operator==(const CenterValue& b) const {
        return components == b.components;
    }
    bool operator!=(const CenterValue& b) const { return !(*this == b); }

    std::vector<std::string> to_strings() const;
    std::string to_string() const;
};

CenterValue operator+(const CenterValue& a, const CenterValue& b);
// Componentwise partial order on the center's positive cone.
bool center_leq(const CenterValue& a, const CenterValue& b);

// Normalized per-block trace: component i is tr(block i) / n_i. Tracial
// and unital: commutators map to zero and the identity maps to (1,...,1).
// The value must land in the rational center; a nonzero imaginary part
// (impossible for idempotents, projections, and elements of the form
// A*A) throws Error.
CenterValue center_trace(const BlockAlgebraElem& a);

// Per-block orthogonal projection onto the column space, built as
// P = B (B*B)^{-1} B* from a column basis B. Satisfies P = P* = P^2,
// P A = A, and fixing the projection again is a no-op.
BlockAlgebraElem range_projection(const BlockAlgebraElem& a);

// Projection onto the kernel: I - range_projection(A*).
BlockAlgebraElem null_projection(const BlockAlgebraElem& a);

// Center-valued rank: component i is rank(block i) / n_i. Equals
// center_trace(range_projection(a)).
CenterValue center_rank(const BlockAlgebraElem& a);

// Lattice operations on projections (inputs checked; NotAProjection).
// The join is the range projection of the sum; the meet is the
// complement of the join of the complements.
BlockAlgebraElem proj_join(const BlockAlgebraElem& e,
                           const BlockAlgebraElem& f);
BlockAlgebraElem proj_meet(const BlockAlgebraElem& e,
                           const BlockAlgebraElem& f);

// Rank subadditivity probe for one pair: rank(A+B) <= rank(A) + rank(B)
// always; equality holds exactly when the ranges of A and B intersect
// trivially and the null spaces jointly cover everything. Both sides of
// that equivalence are computed independently.
struct SubadditivityRecord {
    CenterValue lhs;
    CenterValue rhs;
    bool equal = false;
    bool condition_holds = false;
};

SubadditivityRecord subadditivity_check(const BlockAlgebraElem& a,
                                        const BlockAlgebraElem& b);

// Decomposition probe: given summands of an idempotent E (checked:
// SumMismatch if they do not sum to E, NotIdempotent if E isn't one),
// reports whether the ranks add up to rank(E) and whether the summands
// are mutually orthogonal idempotents. The two flags agreeing on every
// instance is the theorem under test; theorem_consistent records it.
struct CochranRecord {
    bool rank_sum_matches = false;
    bool mutually_orthogonal_idempotents = false;
    bool theorem_consistent = false;
};

CochranRecord cochran_check(const std::vector<BlockAlgebraElem>& parts,
                            const BlockAlgebraElem& e);

// Sum-of-idempotents probe: each input must be idempotent
// (NotIdempotent). Reports whether the sum is idempotent and whether the
// family is mutually orthogonal; the two are equivalent in this model,
// and theorem_consistent records whether the instance agrees.
struct IdempotentSumRecord {
    bool sum_idempotent = false;
    bool mutually_orthogonal = false;
    bool theorem_consistent = false;
};

IdempotentSumRecord
idempotent_sum_check(const std::vector<BlockAlgebraElem>& family);

// Samplers, blockwise over the scalar samplers. Deterministic given the
// generator state.
BlockAlgebraElem sample_block_general(const BlockShape& shape,
                                      SplitMix64& rng);
BlockAlgebraElem sample_block_idempotent(const BlockShape& shape,
                                         SplitMix64& rng);
BlockAlgebraElem sample_block_projection(const BlockShape& shape,
                                         SplitMix64& rng);

// A family of `count` mutually orthogonal idempotents: per block, a
// random invertible conjugates a split of a diagonal 0/1 partition. The
// family's sum is an idempotent (not the identity in general).
std::vector<BlockAlgebraElem>
sample_orthogonal_idempotent_family(const BlockShape& shape,
                                    std::size_t count, SplitMix64& rng);

} // namespace rankforge

#endif
