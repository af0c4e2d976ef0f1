#ifndef RANKFORGE_FMONOID_HPP
#define RANKFORGE_FMONOID_HPP

#include <string>
#include <vector>

#include "rankforge/divlattice.hpp"

namespace rankforge {

// Canonical form of a finite polynomial tuple up to diagonal equivalence
// and zero-padding: an ascending divisor multichain with every [0] entry
// stripped. Two tuples are equivalent iff their canonical chains are equal,
// so structural equality below is the decision procedure for rank-identity
// validity. The empty chain is the monoid identity.
//
// [1] entries are kept: a unit entry contributes a full-rank term to a rank
// identity and is not removable.
class FMonoidElem {
  public:
    static FMonoidElem identity(const FieldSpec& spec) {
        return FMonoidElem(spec, {});
    }

    const FieldSpec& spec() const { return spec_; }
    const std::vector<DivClass>& chain() const { return chain_; }
    std::size_t size() const { return chain_.size(); }

    bool operator==(const FMonoidElem& b) const {
        return spec_ == b.spec_ && chain_ == b.chain_;
    }
    bool operator!=(const FMonoidElem& b) const { return !(*this == b); }

    // Chain entries as printed polynomials, ascending.
    std::vector<std::string> to_strings() const;

  private:
    friend FMonoidElem canonical_form(const std::vector<Poly>& tuple,
                                      const FieldSpec& spec);
    friend FMonoidElem oplus(const FMonoidElem& a, const FMonoidElem& b);

    FMonoidElem(const FieldSpec& spec, std::vector<DivClass> chain)
        : spec_(spec), chain_(std::move(chain)) {}

    FieldSpec spec_;
    std::vector<DivClass> chain_;
};

// Order statistics of the class multiset of the tuple, with [0] entries
// removed. Zeros in the input are legal; callers who care about the zero
// multiplicity count them on their side.
FMonoidElem canonical_form(const std::vector<Poly>& tuple,
                           const FieldSpec& spec);

// The monoid sum: canonical form of the concatenation. Commutative and
// associative with identity(). Throws FieldMismatch.
FMonoidElem oplus(const FMonoidElem& a, const FMonoidElem& b);

// Equality as a checked operation (same-field precondition enforced).
bool equals(const FMonoidElem& a, const FMonoidElem& b);

// The two surjective monoid homomorphism invariants: chain length S and
// chain product Delta (Delta of the identity is [1]). S is additive and
// Delta multiplicative under oplus.
struct SDelta {
    std::size_t count;
    DivClass product;
};
SDelta invariants_S_Delta(const FMonoidElem& a);

} // namespace rankforge

#endif
