#include "rankforge/divlattice.hpp"

#include <algorithm>

namespace rankforge {

DivClass meet(const DivClass& a, const DivClass& b) {
    return DivClass(gcd(a.rep(), b.rep()));
}

DivClass join(const DivClass& a, const DivClass& b) {
    return DivClass(lcm(a.rep(), b.rep()));
}

bool div_leq(const DivClass& a, const DivClass& b) {
    if (b.is_top())
        return true;
    if (a.is_top())
        return false;
    return divides(a.rep(), b.rep());
}

DivMultiset::DivMultiset(std::vector<DivClass> items)
    : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end(),
              [](const DivClass& a, const DivClass& b) {
                  return DivClass::compare(a, b) < 0;
              });
}

std::vector<DivClass> merge_chain(const std::vector<DivClass>& chain,
                                  const DivClass& y) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!div_leq(chain[i], chain[i + 1]))
            throw NotAChain("entry " + std::to_string(i) +
                            " does not divide its successor");
    const std::size_t n = chain.size();
    std::vector<DivClass> out;
    out.reserve(n + 1);
    if (n == 0) {
        out.push_back(y);
        return out;
    }
    out.push_back(meet(y, chain[0]));
    for (std::size_t i = 1; i < n; ++i)
        out.push_back(meet(join(y, chain[i - 1]), chain[i]));
    out.push_back(join(y, chain[n - 1]));
    return out;
}

std::vector<DivClass> order_statistics(const DivMultiset& X) {
    if (X.empty())
        throw EmptyMultiset("order statistics of an empty multiset");
    std::vector<DivClass> chain;
    for (const DivClass& x : X.items())
        chain = merge_chain(chain, x);
    return chain;
}

} // namespace rankforge
