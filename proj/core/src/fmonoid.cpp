#include "rankforge/fmonoid.hpp"

namespace rankforge {

std::vector<std::string> FMonoidElem::to_strings() const {
    std::vector<std::string> out;
    out.reserve(chain_.size());
    for (const DivClass& c : chain_)
        out.push_back(c.rep().to_string());
    return out;
}

FMonoidElem canonical_form(const std::vector<Poly>& tuple,
                           const FieldSpec& spec) {
    std::vector<DivClass> classes;
    classes.reserve(tuple.size());
    for (const Poly& p : tuple) {
        if (!(p.spec() == spec))
            throw FieldMismatch("tuple entry over " + p.spec().to_string() +
                                " in a canonical form over " +
                                spec.to_string());
        classes.emplace_back(p);
    }
    if (classes.empty())
        return FMonoidElem::identity(spec);
    std::vector<DivClass> chain = order_statistics(DivMultiset(classes));
    // [0] entries of a chain sit at the end; strip them all.
    while (!chain.empty() && chain.back().is_top())
        chain.pop_back();
    return FMonoidElem(spec, std::move(chain));
}

FMonoidElem oplus(const FMonoidElem& a, const FMonoidElem& b) {
    if (!(a.spec() == b.spec()))
        throw FieldMismatch("oplus across " + a.spec().to_string() + " and " +
                            b.spec().to_string());
    std::vector<DivClass> combined = a.chain();
    combined.insert(combined.end(), b.chain().begin(), b.chain().end());
    if (combined.empty())
        return FMonoidElem::identity(a.spec());
    return FMonoidElem(a.spec(), order_statistics(DivMultiset(combined)));
}

bool equals(const FMonoidElem& a, const FMonoidElem& b) {
    if (!(a.spec() == b.spec()))
        throw FieldMismatch("equality across " + a.spec().to_string() +
                            " and " + b.spec().to_string());
    return a == b;
}

SDelta invariants_S_Delta(const FMonoidElem& a) {
    DivClass prod = DivClass::unit(a.spec());
    for (const DivClass& c : a.chain())
        prod = DivClass(prod.rep() * c.rep());
    return {a.size(), prod};
}

} // namespace rankforge
