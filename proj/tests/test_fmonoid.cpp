#include "rankforge/exactmat.hpp"
#include "rankforge/fmonoid.hpp"
#include "rankforge/identgen.hpp"
#include "rankforge/rng.hpp"

#include <gtest/gtest.h>

using namespace rankforge;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF7 = FieldSpec::prime_field(7);

std::vector<Poly> parse_tuple(std::initializer_list<const char*> polys,
                              const FieldSpec& spec = kQ) {
    std::vector<Poly> out;
    for (const char* p : polys)
        out.push_back(Poly::parse(p, spec));
    return out;
}

std::vector<Poly> random_tuple(const FieldSpec& spec, SplitMix64& rng,
                               bool allow_zero = false) {
    static const char* pool[] = {"1",     "t",       "t+1",   "t-1",
                                 "t^2",   "t^2-1",   "t^2+t", "2t+2",
                                 "t^3-t", "t^2-2t+1"};
    std::vector<Poly> out;
    const std::size_t n = 1 + rng.below(5);
    for (std::size_t k = 0; k < n; ++k) {
        if (allow_zero && rng.below(6) == 0)
            out.push_back(Poly::zero(spec));
        else
            out.push_back(Poly::parse(pool[rng.below(std::size(pool))], spec));
    }
    return out;
}

} // namespace

TEST(CanonicalForm, KnownChains) {
    FMonoidElem a = canonical_form(parse_tuple({"t^2-1", "t-1"}), kQ);
    EXPECT_EQ(a.to_strings(), (std::vector<std::string>{"t - 1", "t^2 - 1"}));

    // Unit-content entries normalize away; the chain only sees classes.
    FMonoidElem b = canonical_form(parse_tuple({"3t-3", "t^2-1"}), kQ);
    EXPECT_EQ(a, b);

    EXPECT_EQ(canonical_form(parse_tuple({"1", "t^2+t"}), kQ),
              canonical_form(parse_tuple({"t", "t+1"}), kQ));
}

TEST(CanonicalForm, ZeroEntriesAreStrippedUnitsAreKept) {
    FMonoidElem with_zero = canonical_form(parse_tuple({"0", "t"}), kQ);
    EXPECT_EQ(with_zero, canonical_form(parse_tuple({"t"}), kQ));
    EXPECT_EQ(with_zero.size(), 1u);

    FMonoidElem with_unit = canonical_form(parse_tuple({"1", "t"}), kQ);
    EXPECT_EQ(with_unit.size(), 2u);
    EXPECT_NE(with_unit, with_zero);
    EXPECT_EQ(with_unit.to_strings(),
              (std::vector<std::string>{"1", "t"}));

    EXPECT_EQ(canonical_form(parse_tuple({"0", "0"}), kQ),
              FMonoidElem::identity(kQ));
    EXPECT_EQ(canonical_form({}, kQ), FMonoidElem::identity(kQ));
}

TEST(Oplus, KnownValue) {
    FMonoidElem a = canonical_form(parse_tuple({"t"}), kQ);
    FMonoidElem b = canonical_form(parse_tuple({"t+1"}), kQ);
    EXPECT_EQ(oplus(a, b).to_strings(),
              (std::vector<std::string>{"1", "t^2 + t"}));
}

TEST(Oplus, CommutativeMonoidLaws) {
    constexpr int rounds = 200;
    for (const FieldSpec& spec : {kQ, kF7}) {
        SplitMix64 rng(SplitMix64::derive_state(41, spec.modulus()));
        for (int i = 0; i < rounds; ++i) {
            FMonoidElem a = canonical_form(random_tuple(spec, rng), spec);
            FMonoidElem b = canonical_form(random_tuple(spec, rng), spec);
            FMonoidElem c = canonical_form(random_tuple(spec, rng), spec);
            EXPECT_EQ(oplus(a, b), oplus(b, a));
            EXPECT_EQ(oplus(oplus(a, b), c), oplus(a, oplus(b, c)));
            EXPECT_EQ(oplus(a, FMonoidElem::identity(spec)), a);
            EXPECT_TRUE(equals(a, a));
        }
    }
    EXPECT_THROW(oplus(FMonoidElem::identity(kQ),
                       FMonoidElem::identity(kF7)),
                 FieldMismatch);
    EXPECT_THROW(equals(FMonoidElem::identity(kQ),
                        FMonoidElem::identity(kF7)),
                 FieldMismatch);
}

TEST(Oplus, MatchesCanonicalFormOfConcatenation) {
    constexpr int rounds = 200;
    SplitMix64 rng(42);
    for (int i = 0; i < rounds; ++i) {
        std::vector<Poly> u = random_tuple(kQ, rng, true);
        std::vector<Poly> v = random_tuple(kQ, rng, true);
        std::vector<Poly> uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        EXPECT_EQ(oplus(canonical_form(u, kQ), canonical_form(v, kQ)),
                  canonical_form(uv, kQ));
    }
}

TEST(CanonicalForm, InvariantUnderDiagonalMoves) {
    constexpr int rounds = 200;
    SplitMix64 rng(43);
    for (int i = 0; i < rounds; ++i) {
        std::vector<Poly> tuple = random_tuple(kQ, rng);
        FMonoidElem base = canonical_form(tuple, kQ);

        std::vector<Poly> permuted;
        for (std::size_t k : rng.permutation(tuple.size()))
            permuted.push_back(tuple[k]);
        EXPECT_EQ(canonical_form(permuted, kQ), base);

        std::vector<Poly> scaled = tuple;
        scaled[rng.below(scaled.size())] *=
            Poly::constant(FieldElem::from_int(-5, kQ));
        EXPECT_EQ(canonical_form(scaled, kQ), base);

        std::vector<Poly> padded = tuple;
        padded.push_back(Poly::zero(kQ));
        EXPECT_EQ(canonical_form(padded, kQ), base);
    }
}

TEST(Invariants, KnownSAndDelta) {
    FMonoidElem a = canonical_form(parse_tuple({"t^2-1", "t-1"}), kQ);
    SDelta inv = invariants_S_Delta(a);
    EXPECT_EQ(inv.count, 2u);
    EXPECT_EQ(inv.product, DivClass(Poly::parse("t^3-t^2-t+1", kQ)));

    SDelta id = invariants_S_Delta(FMonoidElem::identity(kQ));
    EXPECT_EQ(id.count, 0u);
    EXPECT_EQ(id.product, DivClass::unit(kQ));
}

TEST(Invariants, SAndDeltaAreMonoidHomomorphisms) {
    constexpr int rounds = 200;
    SplitMix64 rng(44);
    for (int i = 0; i < rounds; ++i) {
        FMonoidElem a = canonical_form(random_tuple(kQ, rng), kQ);
        FMonoidElem b = canonical_form(random_tuple(kQ, rng), kQ);
        SDelta sa = invariants_S_Delta(a);
        SDelta sb = invariants_S_Delta(b);
        SDelta sum = invariants_S_Delta(oplus(a, b));
        EXPECT_EQ(sum.count, sa.count + sb.count);
        EXPECT_EQ(sum.product,
                  DivClass(sa.product.rep() * sb.product.rep()));
    }
}

TEST(CanonicalForm, DecidesTupleEquivalenceLikeTheLatticeCheck) {
    constexpr int rounds = 150;
    SplitMix64 rng(45);
    for (int i = 0; i < rounds; ++i) {
        std::vector<Poly> lhs = random_tuple(kQ, rng);
        std::vector<Poly> rhs = random_tuple(kQ, rng);
        rhs.resize(lhs.size(), Poly::one(kQ)); // the check wants equal length
        const bool by_chain =
            canonical_form(lhs, kQ) == canonical_form(rhs, kQ);
        EXPECT_EQ(by_chain, check_lattice_condition(lhs, rhs));
    }
    EXPECT_THROW(check_lattice_condition(parse_tuple({"t"}),
                                         parse_tuple({"t", "t"})),
                 LengthMismatch);
    EXPECT_THROW(check_lattice_condition(parse_tuple({"0"}),
                                         parse_tuple({"t"})),
                 ZeroPolynomial);
}
