#include "rankforge/identgen.hpp"

#include <algorithm>

#include "rankforge/rng.hpp"

namespace rankforge {

namespace {

void require_pairwise_coprime(const std::vector<Poly>& basis) {
    // Zero entries first: gcd(p, 0) = p would otherwise surface as a
    // confusing NotCoprime blaming the nonzero partner.
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].is_zero())
            throw ZeroPolynomial("basis entry " + std::to_string(i) +
                                 " is zero");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!gcd(basis[i], basis[j]).is_one())
                throw NotCoprime("basis entries " + std::to_string(i) +
                                 " and " + std::to_string(j) +
                                 " share the factor " +
                                 gcd(basis[i], basis[j]).to_string());
        }
    }
}

} // namespace

std::vector<Poly> build_tuple(
    const std::vector<Poly>& basis,
    const std::vector<std::vector<unsigned>>& exponents) {
    require_pairwise_coprime(basis);
    std::vector<Poly> out;
    out.reserve(exponents.size());
    for (const std::vector<unsigned>& row : exponents) {
        if (row.size() != basis.size())
            throw LengthMismatch("exponent row has " +
                                 std::to_string(row.size()) +
                                 " entries for a basis of size " +
                                 std::to_string(basis.size()));
        Poly q = Poly::one(basis.empty() ? FieldSpec::rationals()
                                         : basis[0].spec());
        for (std::size_t j = 0; j < basis.size(); ++j)
            q *= pow(basis[j], row[j]);
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<std::vector<std::size_t>> shuffle_columns(std::size_t rows,
                                                      std::size_t cols,
                                                      std::uint64_t seed) {
    std::vector<std::vector<std::size_t>> perms;
    perms.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j)
        perms.push_back(SplitMix64::derive(seed, j).permutation(rows));
    return perms;
}

RankIdentity make_identity(const ShuffleSpec& spec, std::string provenance) {
    const std::size_t m = spec.lambda.size();
    const std::size_t n = spec.basis.size();
    if (spec.column_perms.size() != n)
        throw LengthMismatch("need one permutation per basis column");
    for (const auto& perm : spec.column_perms) {
        if (perm.size() != m)
            throw LengthMismatch("column permutation length != row count");
        std::vector<bool> seen(m, false);
        for (std::size_t v : perm) {
            if (v >= m || seen[v])
                throw LengthMismatch("column permutation is not a "
                                     "permutation of the row indices");
            seen[v] = true;
        }
    }

    std::vector<std::vector<unsigned>> mu(m, std::vector<unsigned>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (spec.lambda[i].size() != n)
                throw LengthMismatch("exponent matrix is ragged");
            mu[i][j] = spec.lambda[spec.column_perms[j][i]][j];
        }

    RankIdentity id{spec.field, build_tuple(spec.basis, spec.lambda),
                    build_tuple(spec.basis, mu), std::move(provenance)};

    // Column multisets of exponents are preserved by construction, so this
    // can only fire on an internal bug; treat it as one.
    if (!check_lattice_condition(id.lhs, id.rhs))
        throw Error("shuffle construction produced an invalid identity");
    return id;
}

bool check_lattice_condition(const std::vector<Poly>& lhs,
                             const std::vector<Poly>& rhs) {
    if (lhs.size() != rhs.size())
        throw LengthMismatch("tuples of length " +
                             std::to_string(lhs.size()) + " vs " +
                             std::to_string(rhs.size()));
    if (lhs.empty())
        return true;
    const FieldSpec spec = lhs[0].spec();
    for (const std::vector<Poly>* side : {&lhs, &rhs})
        for (const Poly& p : *side)
            if (p.is_zero())
                throw ZeroPolynomial(
                    "rank identities are about nonzero polynomials");
    return equals(canonical_form(lhs, spec), canonical_form(rhs, spec));
}

std::vector<std::string> builtin_identity_names() {
    return {"eq-1.1", "example-6.5"};
}

RankIdentity builtin_identity(const std::string& name,
                              const FieldSpec& field) {
    if (name == "eq-1.1") {
        return RankIdentity{
            field,
            {Poly::t(field), Poly::from_int_coeffs({1, -1}, field)},
            {Poly::one(field), Poly::from_int_coeffs({0, 1, -1}, field)},
            "builtin eq-1.1: rank(A) + rank(I - A) = rank(I) + "
            "rank(A - A^2)"};
    }
    if (name == "example-6.5") {
        ShuffleSpec spec{
            field,
            {Poly::from_int_coeffs({-1, 1}, field),
             Poly::from_int_coeffs({1, 1}, field),
             Poly::from_int_coeffs({1, 0, 1}, field)},
            {{0, 0, 0}, {1, 1, 1}, {2, 1, 1}},
            {{2, 1, 0}, {0, 1, 2}, {1, 0, 2}},
        };
        return make_identity(spec,
                             "builtin example-6.5: basis (t-1; t+1; t^2+1), "
                             "exponent rows (0,0,0),(1,1,1),(2,1,1)");
    }
    throw Error("unknown builtin identity '" + name + "'");
}

std::vector<RankIdentity> builtin_identities(const FieldSpec& field) {
    std::vector<RankIdentity> out;
    for (const std::string& name : builtin_identity_names())
        out.push_back(builtin_identity(name, field));
    return out;
}

} // namespace rankforge
