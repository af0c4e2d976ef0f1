#include "rankforge/exactmat.hpp"
#include "rankforge/fmonoid.hpp"
#include "rankforge/rng.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <vector>

using namespace rankforge;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime_field(2);
const FieldSpec kF7 = FieldSpec::prime_field(7);
const FieldSpec kF101 = FieldSpec::prime_field(101);
const FieldSpec kQi = FieldSpec::gaussian_rationals();

std::vector<FieldSpec> all_specs() { return {kQ, kF2, kF7, kF101, kQi}; }

// Textbook row reduction with explicit field division. Deliberately naive
// and separate from the library's fraction-free path, so the two can check
// each other.
unsigned gauss_rank_oracle(ExactMatrix m) {
    unsigned r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m.at(r, j), m.at(piv, j));
        const FieldElem inv_piv = m.at(r, c).inv();
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(r, j) *= inv_piv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero())
                continue;
            const FieldElem f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

ExactMatrix from_ints(std::size_t rows, std::size_t cols,
                      std::initializer_list<long> entries,
                      const FieldSpec& spec) {
    ExactMatrix m(rows, cols, spec);
    auto it = entries.begin();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = FieldElem::from_int(*it++, spec);
    return m;
}

PolyMatrix diag_from_strings(std::initializer_list<const char*> entries,
                             const FieldSpec& spec) {
    std::vector<Poly> polys;
    for (const char* e : entries)
        polys.push_back(Poly::parse(e, spec));
    return PolyMatrix::diagonal(polys, spec);
}

} // namespace

TEST(Rank, KnownValues) {
    for (const FieldSpec& spec : all_specs()) {
        EXPECT_EQ(rank(ExactMatrix::identity(4, spec)), 4u);
        EXPECT_EQ(rank(ExactMatrix(3, 5, spec)), 0u);
        // Proportional rows.
        EXPECT_EQ(rank(from_ints(2, 2, {1, 2, 2, 4}, spec)), 1u);
        // One nonzero Jordan block: nilpotent but not zero.
        EXPECT_EQ(rank(from_ints(2, 2, {0, 1, 0, 0}, spec)), 1u);
    }
    ExactMatrix g(2, 2, kQi);
    g.at(0, 0) = FieldElem::one(kQi);
    g.at(0, 1) = FieldElem::imaginary_unit();
    g.at(1, 0) = FieldElem::imaginary_unit();
    g.at(1, 1) = -FieldElem::one(kQi);
    // Second row is i times the first.
    EXPECT_EQ(rank(g), 1u);
}

TEST(Rank, MatchesPlainGaussianElimination) {
    constexpr int rounds = 120;
    for (const FieldSpec& spec : all_specs()) {
        SplitMix64 rng(SplitMix64::derive_state(61, spec.modulus() +
                                                        (spec == kQi ? 1 : 0)));
        for (int k = 0; k < rounds; ++k) {
            const std::size_t rows = 1 + rng.below(6);
            const std::size_t cols = 1 + rng.below(6);
            ExactMatrix m = sample_general(rows, cols, spec, rng);
            EXPECT_EQ(rank(m), gauss_rank_oracle(m));
        }
    }
}

TEST(Rank, InvariantUnderTransposeAndProducts) {
    SplitMix64 rng(62);
    for (int k = 0; k < 60; ++k) {
        for (const FieldSpec& spec : {kQ, kF7, kQi}) {
            const std::size_t n = 2 + rng.below(4);
            ExactMatrix a = sample_general(n, n, spec, rng);
            EXPECT_EQ(rank(a), rank(a.conjugate_transpose()));
            ExactMatrix s = sample_invertible(n, spec, rng);
            EXPECT_EQ(rank(s * a), rank(a));
            EXPECT_EQ(rank(a * s), rank(a));
        }
    }
}

TEST(Inverse, RoundTripAndFailureModes) {
    SplitMix64 rng(63);
    for (const FieldSpec& spec : all_specs()) {
        for (int k = 0; k < 25; ++k) {
            const std::size_t n = 1 + rng.below(5);
            ExactMatrix s = sample_invertible(n, spec, rng);
            EXPECT_EQ(s * inverse(s), ExactMatrix::identity(n, spec));
            EXPECT_EQ(inverse(s) * s, ExactMatrix::identity(n, spec));
        }
    }
    EXPECT_THROW(inverse(from_ints(2, 2, {1, 2, 2, 4}, kQ)), Error);
    EXPECT_THROW(inverse(ExactMatrix(2, 3, kQ)), NotSquare);
}

TEST(ConjugateTranspose, IsAnAntimultiplicativeInvolution) {
    SplitMix64 rng(64);
    for (int k = 0; k < 40; ++k) {
        ExactMatrix a = sample_general(3, 4, kQi, rng);
        ExactMatrix b = sample_general(4, 2, kQi, rng);
        EXPECT_EQ((a * b).conjugate_transpose(),
                  b.conjugate_transpose() * a.conjugate_transpose());
        EXPECT_EQ(a.conjugate_transpose().conjugate_transpose(), a);
    }
    ExactMatrix m(1, 2, kQi);
    m.at(0, 0) = FieldElem::imaginary_unit();
    m.at(0, 1) = FieldElem::gaussian(1, -2);
    ExactMatrix mt = m.conjugate_transpose();
    EXPECT_EQ(mt.rows(), 2u);
    EXPECT_EQ(mt.at(0, 0), -FieldElem::imaginary_unit());
    EXPECT_EQ(mt.at(1, 0), FieldElem::gaussian(1, 2));
}

TEST(EvalPoly, IsARingHomomorphismInThePolynomial) {
    SplitMix64 rng(65);
    for (const FieldSpec& spec : {kQ, kF7, kQi}) {
        for (int k = 0; k < 30; ++k) {
            const std::size_t n = 1 + rng.below(4);
            ExactMatrix a = sample_general(n, n, spec, rng);
            std::vector<FieldElem> pc, qc;
            for (int d = 0; d < 4; ++d) {
                pc.push_back(sample_scalar(spec, rng));
                qc.push_back(sample_scalar(spec, rng));
            }
            Poly p = Poly::from_coeffs(pc, spec);
            Poly q = Poly::from_coeffs(qc, spec);
            EXPECT_EQ(eval_poly(p * q, a), eval_poly(p, a) * eval_poly(q, a));
            EXPECT_EQ(eval_poly(p + q, a), eval_poly(p, a) + eval_poly(q, a));
        }
        ExactMatrix a = sample_general(3, 3, spec, rng);
        EXPECT_EQ(eval_poly(Poly::one(spec), a),
                  ExactMatrix::identity(3, spec));
        EXPECT_TRUE(eval_poly(Poly::zero(spec), a).is_zero());
        EXPECT_EQ(eval_poly(Poly::t(spec), a), a);
    }
}

TEST(Companion, KnownMatrixAndCharacteristicPolynomial) {
    Poly p = Poly::parse("t^2-3t+2", kQ);
    ExactMatrix c = companion(p);
    EXPECT_EQ(c, from_ints(2, 2, {0, -2, 1, 3}, kQ));
    // p annihilates its companion matrix.
    EXPECT_TRUE(eval_poly(p, c).is_zero());
    EXPECT_THROW(companion(Poly::parse("2t-1", kQ)), BadDimension);
    EXPECT_THROW(companion(Poly::one(kQ)), BadDimension);
}

TEST(Companion, CharacteristicPolynomialIsTheInput) {
    SplitMix64 rng(66);
    for (const FieldSpec& spec : {kQ, kF7}) {
        for (int k = 0; k < 25; ++k) {
            const std::size_t deg = 1 + rng.below(5);
            std::vector<FieldElem> low(deg, FieldElem::zero(spec));
            for (FieldElem& c : low)
                c = sample_scalar(spec, rng);
            low.push_back(FieldElem::one(spec));
            Poly p = Poly::from_coeffs(low, spec);
            ExactMatrix c = companion(p);
            // det(tI - C) over K[t].
            PolyMatrix char_mat(deg, deg, spec);
            for (std::size_t i = 0; i < deg; ++i)
                for (std::size_t j = 0; j < deg; ++j) {
                    char_mat.at(i, j) = -Poly::constant(c.at(i, j));
                    if (i == j)
                        char_mat.at(i, j) += Poly::t(spec);
                }
            EXPECT_EQ(poly_det(char_mat), p);
        }
    }
}

TEST(BlockDiag, RankIsAdditive) {
    SplitMix64 rng(67);
    for (int k = 0; k < 40; ++k) {
        for (const FieldSpec& spec : {kQ, kF7}) {
            ExactMatrix a =
                sample_general(1 + rng.below(4), 1 + rng.below(4), spec, rng);
            ExactMatrix b =
                sample_general(1 + rng.below(4), 1 + rng.below(4), spec, rng);
            ExactMatrix d = block_diag(a, b);
            EXPECT_EQ(d.rows(), a.rows() + b.rows());
            EXPECT_EQ(d.cols(), a.cols() + b.cols());
            EXPECT_EQ(rank(d), rank(a) + rank(b));
        }
    }
    EXPECT_THROW(block_diag(ExactMatrix(1, 1, kQ), ExactMatrix(1, 1, kF7)),
                 FieldMismatch);
}

TEST(SmithNormalForm, KnownDiagonalInputs) {
    SnfResult s = smith_normal_form(diag_from_strings({"t", "t+1"}, kQ));
    ASSERT_EQ(s.factors.size(), 2u);
    EXPECT_EQ(s.factors[0], Poly::one(kQ));
    EXPECT_EQ(s.factors[1], Poly::parse("t^2+t", kQ));

    s = smith_normal_form(diag_from_strings({"t^2-1", "t-1"}, kQ));
    EXPECT_EQ(s.factors[0], Poly::parse("t-1", kQ));
    EXPECT_EQ(s.factors[1], Poly::parse("t^2-1", kQ));

    s = smith_normal_form(diag_from_strings({"0", "t", "0"}, kF7));
    EXPECT_EQ(s.factors[0], Poly::t(kF7));
    EXPECT_TRUE(s.factors[1].is_zero());
    EXPECT_TRUE(s.factors[2].is_zero());
}

namespace {

Poly random_small_poly(const FieldSpec& spec, SplitMix64& rng, int max_deg) {
    std::vector<FieldElem> c(1 + rng.below(max_deg + 1),
                             FieldElem::zero(spec));
    for (FieldElem& x : c)
        x = sample_scalar(spec, rng);
    return Poly::from_coeffs(c, spec);
}

} // namespace

TEST(SmithNormalForm, AuditOnRandomMatrices) {
    SplitMix64 rng(68);
    for (const FieldSpec& spec : {kQ, kF7}) {
        for (int k = 0; k < 30; ++k) {
            const std::size_t n = 1 + rng.below(4);
            PolyMatrix m(n, n, spec);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m.at(i, j) = random_small_poly(spec, rng, 2);
            SnfResult s = smith_normal_form(m);
            ASSERT_EQ(s.factors.size(), n);
            // The transforms are unimodular over K[t] and realize the form.
            EXPECT_EQ(s.U * m * s.V,
                      PolyMatrix::diagonal(s.factors, spec));
            Poly du = poly_det(s.U);
            Poly dv = poly_det(s.V);
            EXPECT_TRUE(du.is_constant() && !du.is_zero());
            EXPECT_TRUE(dv.is_constant() && !dv.is_zero());
            // Each factor divides the next, zeros come last, nonzero monic.
            Poly prod = Poly::one(spec);
            for (std::size_t i = 0; i < n; ++i) {
                if (s.factors[i].is_zero()) {
                    for (std::size_t j = i; j < n; ++j)
                        EXPECT_TRUE(s.factors[j].is_zero());
                    break;
                }
                EXPECT_TRUE(s.factors[i].is_monic());
                if (i + 1 < n && !s.factors[i + 1].is_zero())
                    EXPECT_TRUE(divides(s.factors[i], s.factors[i + 1]));
                prod *= s.factors[i];
            }
            // Unimodular transforms only move det(m) by a unit.
            Poly dm = poly_det(m);
            if (dm.is_zero())
                EXPECT_TRUE(s.factors[n - 1].is_zero());
            else
                EXPECT_EQ(prod.monic(), dm.monic());
        }
    }
}

TEST(SmithNormalForm, DiagonalFactorsAreTheCanonicalChain) {
    SplitMix64 rng(69);
    static const char* pool[] = {"0",    "1",       "t",     "t-1",
                                 "t^2",  "t^2-1",   "t+2",   "3t-3",
                                 "t^3-t"};
    for (const FieldSpec& spec : {kQ, kF7}) {
        for (int k = 0; k < 80; ++k) {
            const std::size_t n = 1 + rng.below(4);
            std::vector<Poly> entries;
            for (std::size_t i = 0; i < n; ++i)
                entries.push_back(
                    Poly::parse(pool[rng.below(std::size(pool))], spec));
            SnfResult s =
                smith_normal_form(PolyMatrix::diagonal(entries, spec));

            std::vector<Poly> nonzero;
            std::size_t zeros = 0;
            for (const Poly& e : entries) {
                if (e.is_zero())
                    ++zeros;
                else
                    nonzero.push_back(e);
            }
            std::vector<Poly> expect;
            const FMonoidElem canon = canonical_form(nonzero, spec);
            for (const DivClass& c : canon.chain())
                expect.push_back(c.rep());
            expect.resize(n, Poly::zero(spec));

            EXPECT_EQ(s.factors, expect);
            EXPECT_EQ(zeros, static_cast<std::size_t>(std::count_if(
                                 s.factors.begin(), s.factors.end(),
                                 [](const Poly& f) { return f.is_zero(); })));
        }
    }
}

TEST(Samplers, IdempotentsAndProjectionsHaveTheRequestedRank) {
    SplitMix64 rng(70);
    for (const FieldSpec& spec : all_specs()) {
        for (int k = 0; k < 20; ++k) {
            const std::size_t n = 1 + rng.below(5);
            const std::size_t r = rng.below(n + 1);
            ExactMatrix e = sample_idempotent(n, r, spec, rng);
            EXPECT_EQ(e * e, e);
            EXPECT_EQ(rank(e), r);
        }
    }
    for (const FieldSpec& spec : {kQ, kQi}) {
        for (int k = 0; k < 20; ++k) {
            const std::size_t n = 1 + rng.below(5);
            const std::size_t r = rng.below(n + 1);
            ExactMatrix p = sample_projection(n, r, spec, rng);
            EXPECT_EQ(p * p, p);
            EXPECT_EQ(p.conjugate_transpose(), p);
            EXPECT_EQ(rank(p), r);
        }
    }
    EXPECT_THROW(sample_projection(3, 1, kF7, rng), BadDimension);
    EXPECT_THROW(sample_idempotent(2, 3, kQ, rng), BadDimension);
}

TEST(VerifyIdentity, AcceptsAValidIdentityAndRecordsTheStreams) {
    RankIdentity id = builtin_identity("eq-1.1", kF7);
    const std::uint64_t seed = 99;
    const std::vector<std::size_t> dims{2, 3, 4};
    VerificationReport rep = verify_identity(id, 30, dims, seed);
    EXPECT_TRUE(rep.all_pass());
    EXPECT_FALSE(rep.counterexample.has_value());
    ASSERT_EQ(rep.records.size(), 30u);
    for (std::size_t k = 0; k < rep.records.size(); ++k) {
        EXPECT_EQ(rep.records[k].stream, SplitMix64::derive_state(seed, k));
        EXPECT_EQ(rep.records[k].dim, dims[k % dims.size()]);
        EXPECT_EQ(rep.records[k].lhs_sum, rep.records[k].rhs_sum);
    }
    EXPECT_THROW(verify_identity(id, 5, {}, 1), BadDimension);
    EXPECT_THROW(verify_identity(id, 5, {2, 0}, 1), BadDimension);
}

TEST(VerifyIdentity, CatchesAFalseIdentityOnASampledMatrix) {
    // rank(A) = rank(A^2) fails exactly on matrices with a nilpotent part,
    // which 2x2 samples over F2 hit often. Seed checked to hit one.
    RankIdentity bad{kF2,
                     {Poly::t(kF2)},
                     {Poly::parse("t^2", kF2)},
                     "sampling-failure case"};
    VerificationReport rep = verify_identity(bad, 64, {2}, 1);
    EXPECT_FALSE(rep.all_pass());
    ASSERT_TRUE(rep.counterexample.has_value());
    const ExactMatrix& w = *rep.counterexample;
    EXPECT_NE(rank(eval_poly(bad.lhs[0], w)), rank(eval_poly(bad.rhs[0], w)));
}

TEST(CounterexampleSearch, ValidIdentitiesHaveNoWitness) {
    EXPECT_EQ(counterexample_search({Poly::parse("t", kQ),
                                     Poly::parse("t+1", kQ)},
                                    {Poly::parse("1", kQ),
                                     Poly::parse("t^2+t", kQ)}),
              std::nullopt);
}

TEST(CounterexampleSearch, FindsWitnessesForInvalidTuples) {
    struct Case {
        const char* lhs;
        const char* rhs;
    };
    const Case cases[] = {
        {"t", "t^2"},
        {"t-1", "(t-1)^2"},
        {"t(t+1)", "t"},
    };
    for (const FieldSpec& spec : {kQ, kF7}) {
        for (const Case& c : cases) {
            std::vector<Poly> lhs{Poly::parse(c.lhs, spec)};
            std::vector<Poly> rhs{Poly::parse(c.rhs, spec)};
            auto witness = counterexample_search(lhs, rhs);
            ASSERT_TRUE(witness.has_value()) << c.lhs << " vs " << c.rhs;
            EXPECT_NE(rank(eval_poly(lhs[0], *witness)),
                      rank(eval_poly(rhs[0], *witness)));
        }
    }
    // Multi-entry tuples with equal products but different chains.
    std::vector<Poly> lhs{Poly::parse("t", kQ), Poly::parse("t", kQ)};
    std::vector<Poly> rhs{Poly::parse("1", kQ), Poly::parse("t^2", kQ)};
    auto witness = counterexample_search(lhs, rhs);
    ASSERT_TRUE(witness.has_value());
    unsigned l = 0, r = 0;
    for (const Poly& p : lhs)
        l += rank(eval_poly(p, *witness));
    for (const Poly& p : rhs)
        r += rank(eval_poly(p, *witness));
    EXPECT_NE(l, r);
}

TEST(GcdFreeBasis, RefinesIntoPairwiseCoprimeFactors) {
    std::vector<Poly> basis = gcd_free_basis(
        {Poly::parse("t^2-1", kQ), Poly::parse("t-1", kQ)});
    std::sort(basis.begin(), basis.end(),
              [](const Poly& a, const Poly& b) {
                  return Poly::compare(a, b) < 0;
              });
    ASSERT_EQ(basis.size(), 2u);
    EXPECT_EQ(basis[0], Poly::parse("t-1", kQ));
    EXPECT_EQ(basis[1], Poly::parse("t+1", kQ));

    SplitMix64 rng(71);
    static const char* pool[] = {"t", "t-1", "t+1", "t^2+1", "t-2"};
    for (const FieldSpec& spec : {kQ, kF7}) {
        for (int round = 0; round < 40; ++round) {
            std::vector<Poly> inputs;
            const std::size_t count = 1 + rng.below(4);
            for (std::size_t i = 0; i < count; ++i) {
                Poly p = Poly::one(spec);
                for (int f = 0; f < 3; ++f)
                    p *= pow(Poly::parse(pool[rng.below(5)], spec),
                             rng.below(3));
                if (p.is_constant() && rng.coin())
                    p = Poly::parse("t^2-t", spec);
                inputs.push_back(p);
            }
            std::vector<Poly> out = gcd_free_basis(inputs);
            for (std::size_t i = 0; i < out.size(); ++i) {
                EXPECT_TRUE(out[i].is_monic());
                EXPECT_GE(out[i].degree(), 1);
                for (std::size_t j = i + 1; j < out.size(); ++j)
                    EXPECT_TRUE(gcd(out[i], out[j]).is_one());
            }
            // Every input factors completely over the basis.
            for (Poly p : inputs) {
                for (const Poly& b : out) {
                    while (divides(b, p) && !p.is_constant())
                        p = divmod(p, b).first;
                }
                EXPECT_TRUE(p.is_constant());
            }
        }
    }
}

TEST(TwoSidedIdentities, HoldOnRandomPairs) {
    SplitMix64 rng(72);
    for (const FieldSpec& spec : {kQ, kF2, kF7, kQi}) {
        for (int k = 0; k < 40; ++k) {
            const std::size_t n = 1 + rng.below(5);
            ExactMatrix a = sample_general(n, n, spec, rng);
            ExactMatrix b = sample_general(n, n, spec, rng);
            EXPECT_TRUE(two_sided_identities_check(a, b));
        }
    }
    EXPECT_THROW(two_sided_identities_check(ExactMatrix(2, 2, kQ),
                                            ExactMatrix(3, 3, kQ)),
                 SizeMismatch);
}
