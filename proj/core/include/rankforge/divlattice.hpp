#ifndef RANKFORGE_DIVLATTICE_HPP
#define RANKFORGE_DIVLATTICE_HPP

#include <vector>

#include "rankforge/poly.hpp"

namespace rankforge {

// An associate class [r] of K[t], canonically represented by the monic
// polynomial of the class (zero for [0]). Divisibility makes these a
// bounded distributive lattice: [1] at the bottom, [0] on top, meet = gcd,
// join = lcm.
class DivClass {
  public:
    explicit DivClass(const Poly& rep) : rep_(rep.monic()) {}

    static DivClass unit(const FieldSpec& spec) {
        return DivClass(Poly::one(spec));
    }
    static DivClass top(const FieldSpec& spec) {
        return DivClass(Poly::zero(spec));
    }

    const Poly& rep() const { return rep_; }
    const FieldSpec& spec() const { return rep_.spec(); }
    bool is_unit() const { return rep_.is_one(); }
    bool is_top() const { return rep_.is_zero(); }

    bool operator==(const DivClass& b) const { return rep_ == b.rep_; }
    bool operator!=(const DivClass& b) const { return !(*this == b); }
    static int compare(const DivClass& a, const DivClass& b) {
        return Poly::compare(a.rep_, b.rep_);
    }

  private:
    Poly rep_;
};

DivClass meet(const DivClass& a, const DivClass& b);
DivClass join(const DivClass& a, const DivClass& b);

// The divisibility order: a <= b iff rep(a) divides rep(b). Everything
// divides [0]; [0] divides only itself.
bool div_leq(const DivClass& a, const DivClass& b);

// A finite multiset of associate classes. Insertion order is irrelevant;
// storage is kept sorted so equal multisets compare equal structurally.
class DivMultiset {
  public:
    explicit DivMultiset(std::vector<DivClass> items);

    const std::vector<DivClass>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    bool operator==(const DivMultiset& b) const { return items_ == b.items_; }

  private:
    std::vector<DivClass> items_;
};

// One merge step: given an ascending divisor chain x_1 <= ... <= x_n and a
// class y, produces the ascending chain of length n+1 given by
//   y_1 = y /\ x_1,   y_i = (y \/ x_{i-1}) /\ x_i,   y_{n+1} = y \/ x_n.
// The class product of the output equals the product of the input times y.
// Throws NotAChain if the input violates the divisibility order.
std::vector<DivClass> merge_chain(const std::vector<DivClass>& chain,
                                  const DivClass& y);

// Order statistics (X_(1), ..., X_(n)) of a nonempty multiset: the k-th
// entry is the meet over all k-subsets of the join of the subset, which for
// the output chain is simply the k-th smallest element. Computed by folding
// merge_chain (n^2 lattice operations), not by enumerating 2^n subsets; the
// defining formula survives only as a small-n test oracle.
std::vector<DivClass> order_statistics(const DivMultiset& X);

} // namespace rankforge

#endif
