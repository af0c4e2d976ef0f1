#include "rankforge/exactmat.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace rankforge {

// ---------------------------------------------------------------------------
// ExactMatrix basics

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldSpec& spec) {
    ExactMatrix m(n, n, spec);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = FieldElem::one(spec);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const FieldElem& e : data_)
        if (!e.is_zero())
            return false;
    return true;
}

ExactMatrix ExactMatrix::conjugate_transpose() const {
    ExactMatrix m(cols_, rows_, spec_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j).conj();
    return m;
}

namespace {
void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
    if (!(a.spec() == b.spec()))
        throw FieldMismatch("matrices over different fields");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw SizeMismatch("matrix shapes " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()) + " vs " +
                           std::to_string(b.rows()) + "x" +
                           std::to_string(b.cols()));
}
} // namespace

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b);
    ExactMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) += b.at(i, j);
    return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b);
    ExactMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) -= b.at(i, j);
    return r;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (!(a.spec() == b.spec()))
        throw FieldMismatch("matrices over different fields");
    if (a.cols() != b.rows())
        throw SizeMismatch("product of " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()) + " by " +
                           std::to_string(b.rows()) + "x" +
                           std::to_string(b.cols()));
    ExactMatrix r(a.rows(), b.cols(), a.spec());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElem& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::operator*(const FieldElem& c) const {
    ExactMatrix r = *this;
    for (FieldElem& e : r.data_)
        e *= c;
    return r;
}

ExactMatrix ExactMatrix::operator-() const {
    return *this * (-FieldElem::one(spec_));
}

std::vector<std::vector<std::string>> ExactMatrix::entry_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i].reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            out[i].push_back(at(i, j).to_string());
    }
    return out;
}

std::string ExactMatrix::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        s += "[ ";
        for (std::size_t j = 0; j < cols_; ++j) {
            s += at(i, j).to_string();
            if (j + 1 < cols_)
                s += ", ";
        }
        s += " ]\n";
    }
    return s;
}

ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b) {
    if (!(a.spec() == b.spec()))
        throw FieldMismatch("block sum over different fields");
    ExactMatrix r(a.rows() + b.rows(), a.cols() + b.cols(), a.spec());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

// ---------------------------------------------------------------------------
// Rank kernels

namespace {

// Gaussian integers, the Bareiss carrier for Q(i).
struct Zi {
    mpz_class re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

Zi operator*(const Zi& a, const Zi& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Zi operator-(const Zi& a, const Zi& b) { return {a.re - b.re, a.im - b.im}; }

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// a / b in Z[i]; the callers only divide when divisibility is guaranteed.
Zi exact_div(const Zi& a, const Zi& b) {
    mpz_class n = b.re * b.re + b.im * b.im;
    Zi num{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
    return {exact_div(num.re, n), exact_div(num.im, n)};
}

bool entry_is_zero(const mpz_class& v) { return v == 0; }
bool entry_is_zero(const Zi& v) { return v.is_zero(); }

// One-step fraction-free elimination; entries stay in the domain because
// every intermediate value is a minor of the scaled input.
template <class T>
unsigned bareiss_rank(std::vector<std::vector<T>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    T prev{1};
    unsigned r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && entry_is_zero(m[piv][c]))
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] =
                    exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = T{0};
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::vector<std::vector<mpz_class>> scaled_integer_rows(const ExactMatrix& a) {
    std::vector<std::vector<mpz_class>> m(a.rows(),
                                          std::vector<mpz_class>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                    a.at(i, j).re().get_den().get_mpz_t());
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const mpq_class& q = a.at(i, j).re();
            m[i][j] = q.get_num() * exact_div(scale, q.get_den());
        }
    }
    return m;
}

std::vector<std::vector<Zi>> scaled_gaussian_rows(const ExactMatrix& a) {
    std::vector<std::vector<Zi>> m(a.rows(), std::vector<Zi>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                    a.at(i, j).re().get_den().get_mpz_t());
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                    a.at(i, j).im().get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const mpq_class& re = a.at(i, j).re();
            const mpq_class& im = a.at(i, j).im();
            m[i][j] = {re.get_num() * exact_div(scale, re.get_den()),
                       im.get_num() * exact_div(scale, im.get_den())};
        }
    }
    return m;
}

unsigned gauss_rank_mod_p(const ExactMatrix& a) {
    std::vector<std::vector<FieldElem>> m(
        a.rows(), std::vector<FieldElem>(a.cols(),
                                         FieldElem::zero(a.spec())));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m[i][j] = a.at(i, j);
    unsigned r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && m[piv][c].is_zero())
            ++piv;
        if (piv == a.rows())
            continue;
        std::swap(m[piv], m[r]);
        const FieldElem pinv = m[r][c].inv();
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (m[i][c].is_zero())
                continue;
            const FieldElem f = m[i][c] * pinv;
            for (std::size_t j = c; j < a.cols(); ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

unsigned rank(const ExactMatrix& m) {
    switch (m.spec().kind()) {
    case FieldKind::Rationals: {
        auto grid = scaled_integer_rows(m);
        return bareiss_rank(grid);
    }
    case FieldKind::GaussianRationals: {
        auto grid = scaled_gaussian_rows(m);
        return bareiss_rank(grid);
    }
    case FieldKind::PrimeField:
        return gauss_rank_mod_p(m);
    }
    throw Error("unreachable");
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (!m.is_square())
        throw NotSquare("inverse of a " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    ExactMatrix a = m;
    ExactMatrix inv = ExactMatrix::identity(n, m.spec());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a.at(piv, c).is_zero())
            ++piv;
        if (piv == n)
            throw Error("matrix is singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a.at(piv, j), a.at(c, j));
            std::swap(inv.at(piv, j), inv.at(c, j));
        }
        const FieldElem pinv = a.at(c, c).inv();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(c, j) *= pinv;
            inv.at(c, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a.at(i, c).is_zero())
                continue;
            const FieldElem f = a.at(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

ExactMatrix eval_poly(const Poly& p, const ExactMatrix& a) {
    if (!a.is_square())
        throw NotSquare("polynomial evaluation needs a square matrix");
    if (!(p.spec() == a.spec()))
        throw FieldMismatch("polynomial and matrix over different fields");
    const std::size_t n = a.rows();
    ExactMatrix acc(n, n, a.spec());
    for (std::size_t k = p.coeffs().size(); k > 0; --k) {
        acc = acc * a;
        const FieldElem& c = p.coeffs()[k - 1];
        if (!c.is_zero())
            for (std::size_t i = 0; i < n; ++i)
                acc.at(i, i) += c;
    }
    return acc;
}

ExactMatrix companion(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw BadDimension("companion matrix needs a monic polynomial of "
                           "degree >= 1");
    const std::size_t n = static_cast<std::size_t>(p.degree());
    ExactMatrix m(n, n, p.spec());
    for (std::size_t i = 0; i + 1 < n; ++i)
        m.at(i + 1, i) = FieldElem::one(p.spec());
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, n - 1) = -p.coeff(i);
    return m;
}

// ---------------------------------------------------------------------------
// PolyMatrix and Smith normal form

PolyMatrix PolyMatrix::identity(std::size_t n, const FieldSpec& spec) {
    PolyMatrix m(n, n, spec);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Poly::one(spec);
    return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Poly>& entries,
                                const FieldSpec& spec) {
    PolyMatrix m(entries.size(), entries.size(), spec);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.at(i, i) = entries[i];
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (!(a.spec() == b.spec()))
        throw FieldMismatch("polynomial matrices over different fields");
    if (a.cols() != b.rows())
        throw SizeMismatch("polynomial matrix product shape mismatch");
    PolyMatrix r(a.rows(), b.cols(), a.spec());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

std::vector<std::vector<std::string>> PolyMatrix::entry_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i].reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            out[i].push_back(at(i, j).to_string());
    }
    return out;
}

Poly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquare("determinant of a rectangular matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return Poly::one(m.spec());
    PolyMatrix a = m;
    bool negate = false;
    Poly prev = Poly::one(m.spec());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a.at(piv, k).is_zero())
            ++piv;
        if (piv == n)
            return Poly::zero(m.spec());
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(piv, j), a.at(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                auto [q, r] = divmod(num, prev);
                if (!r.is_zero())
                    throw Error("fraction-free elimination lost exactness");
                a.at(i, j) = std::move(q);
            }
            a.at(i, k) = Poly::zero(m.spec());
        }
        prev = a.at(k, k);
    }
    Poly det = a.at(n - 1, n - 1);
    return negate ? -det : det;
}

namespace {

// Row/column operation helpers keeping U * M * V = A invariant.
struct SnfWork {
    PolyMatrix A, U, V;

    void row_swap(std::size_t i1, std::size_t i2) {
        if (i1 == i2)
            return;
        for (std::size_t j = 0; j < A.cols(); ++j)
            std::swap(A.at(i1, j), A.at(i2, j));
        for (std::size_t j = 0; j < U.cols(); ++j)
            std::swap(U.at(i1, j), U.at(i2, j));
    }
    void col_swap(std::size_t j1, std::size_t j2) {
        if (j1 == j2)
            return;
        for (std::size_t i = 0; i < A.rows(); ++i)
            std::swap(A.at(i, j1), A.at(i, j2));
        for (std::size_t i = 0; i < V.rows(); ++i)
            std::swap(V.at(i, j1), V.at(i, j2));
    }
    // row_i -= q * row_k
    void row_sub(std::size_t i, const Poly& q, std::size_t k) {
        for (std::size_t j = 0; j < A.cols(); ++j)
            A.at(i, j) -= q * A.at(k, j);
        for (std::size_t j = 0; j < U.cols(); ++j)
            U.at(i, j) -= q * U.at(k, j);
    }
    // col_j -= q * col_k
    void col_sub(std::size_t j, const Poly& q, std::size_t k) {
        for (std::size_t i = 0; i < A.rows(); ++i)
            A.at(i, j) -= q * A.at(i, k);
        for (std::size_t i = 0; i < V.rows(); ++i)
            V.at(i, j) -= q * V.at(i, k);
    }
    // row_k += row_i
    void row_add(std::size_t k, std::size_t i) {
        for (std::size_t j = 0; j < A.cols(); ++j)
            A.at(k, j) += A.at(i, j);
        for (std::size_t j = 0; j < U.cols(); ++j)
            U.at(k, j) += U.at(i, j);
    }
    void row_scale(std::size_t i, const FieldElem& c) {
        for (std::size_t j = 0; j < A.cols(); ++j)
            A.at(i, j) = A.at(i, j) * c;
        for (std::size_t j = 0; j < U.cols(); ++j)
            U.at(i, j) = U.at(i, j) * c;
    }
};

} // namespace

SnfResult smith_normal_form(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquare("Smith normal form is implemented for square "
                        "matrices only");
    const std::size_t n = m.rows();
    SnfWork w{m, PolyMatrix::identity(n, m.spec()),
              PolyMatrix::identity(n, m.spec())};

    for (std::size_t k = 0; k < n; ++k) {
        while (true) {
            // Minimal-degree nonzero pivot in the trailing block.
            long best = -1;
            std::size_t pi = k, pj = k;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    const Poly& e = w.A.at(i, j);
                    if (e.is_zero())
                        continue;
                    if (best < 0 || e.degree() < best) {
                        best = e.degree();
                        pi = i;
                        pj = j;
                    }
                }
            if (best < 0)
                goto next_pivot; // trailing block is zero; factors 0 follow
            w.row_swap(k, pi);
            w.col_swap(k, pj);

            {
                // Euclidean reduction of the pivot row and column; leftover
                // remainders have strictly smaller degree, so this loop
                // terminates by degree descent.
                bool dirty = false;
                for (std::size_t i = k + 1; i < n; ++i) {
                    if (w.A.at(i, k).is_zero())
                        continue;
                    w.row_sub(i, divmod(w.A.at(i, k), w.A.at(k, k)).first, k);
                    if (!w.A.at(i, k).is_zero())
                        dirty = true;
                }
                for (std::size_t j = k + 1; j < n; ++j) {
                    if (w.A.at(k, j).is_zero())
                        continue;
                    w.col_sub(j, divmod(w.A.at(k, j), w.A.at(k, k)).first, k);
                    if (!w.A.at(k, j).is_zero())
                        dirty = true;
                }
                if (dirty)
                    continue;

                // Pivot isolated; force it to divide the rest of the block,
                // otherwise pull an offending row in and reduce again.
                bool fixed = true;
                for (std::size_t i = k + 1; i < n && fixed; ++i)
                    for (std::size_t j = k + 1; j < n && fixed; ++j)
                        if (!w.A.at(i, j).is_zero() &&
                            !divmod(w.A.at(i, j), w.A.at(k, k))
                                 .second.is_zero()) {
                            w.row_add(k, i);
                            fixed = false;
                        }
                if (fixed)
                    break;
            }
        }
    next_pivot:;
    }

    // Monic normalization of the nonzero pivots.
    for (std::size_t k = 0; k < n; ++k)
        if (!w.A.at(k, k).is_zero() && !w.A.at(k, k).is_monic())
            w.row_scale(k, w.A.at(k, k).leading_coeff().inv());

    SnfResult res{std::vector<Poly>(), std::move(w.U), std::move(w.V)};
    res.factors.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        res.factors.push_back(w.A.at(k, k));
    return res;
}

// ---------------------------------------------------------------------------
// Samplers

FieldElem sample_scalar(const FieldSpec& spec, SplitMix64& rng) {
    switch (spec.kind()) {
    case FieldKind::Rationals:
        return FieldElem::from_int(rng.range(-3, 3), spec);
    case FieldKind::PrimeField:
        return FieldElem::from_int(
            static_cast<long>(rng.below(spec.modulus())), spec);
    case FieldKind::GaussianRationals:
        return FieldElem::gaussian(rng.range(-3, 3), rng.range(-3, 3));
    }
    throw Error("unreachable");
}

ExactMatrix sample_general(std::size_t rows, std::size_t cols,
                           const FieldSpec& spec, SplitMix64& rng) {
    ExactMatrix m(rows, cols, spec);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = sample_scalar(spec, rng);
    return m;
}

ExactMatrix sample_invertible(std::size_t n, const FieldSpec& spec,
                              SplitMix64& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        ExactMatrix m = sample_general(n, n, spec, rng);
        if (rank(m) == n)
            return m;
    }
    throw SamplerExhausted("no invertible " + std::to_string(n) + "x" +
                           std::to_string(n) + " sample in 64 attempts");
}

ExactMatrix sample_idempotent(std::size_t n, std::size_t r,
                              const FieldSpec& spec, SplitMix64& rng) {
    if (r > n)
        throw BadDimension("idempotent rank r exceeds the dimension");
    ExactMatrix s = sample_invertible(n, spec, rng);
    ExactMatrix d(n, n, spec);
    for (std::size_t i = 0; i < r; ++i)
        d.at(i, i) = FieldElem::one(spec);
    return s * d * inverse(s);
}

ExactMatrix sample_projection(std::size_t n, std::size_t r,
                              const FieldSpec& spec, SplitMix64& rng) {
    if (!spec.has_involution())
        throw BadDimension("projections need a field with an involution "
                           "(Q or Qi)");
    if (r > n)
        throw BadDimension("projection rank r exceeds the dimension");
    if (r == 0)
        return ExactMatrix(n, n, spec);
    for (int attempt = 0; attempt < 64; ++attempt) {
        ExactMatrix b = sample_general(n, r, spec, rng);
        if (rank(b) != r)
            continue;
        ExactMatrix bstar = b.conjugate_transpose();
        return b * inverse(bstar * b) * bstar;
    }
    throw SamplerExhausted("no full-column-rank basis in 64 attempts");
}

// ---------------------------------------------------------------------------
// Verification

namespace {

unsigned rank_sum(const std::vector<Poly>& tuple, const ExactMatrix& a) {
    unsigned sum = 0;
    for (const Poly& p : tuple)
        sum += rank(eval_poly(p, a));
    return sum;
}

} // namespace

VerificationReport verify_identity(const RankIdentity& id,
                                   std::size_t trials,
                                   const std::vector<std::size_t>& dims,
                                   std::uint64_t seed) {
    if (dims.empty())
        throw BadDimension("need at least one trial dimension");
    for (std::size_t d : dims)
        if (d == 0)
            throw BadDimension("trial dimension 0");
    VerificationReport report{id, seed, dims, {}, {}};
    report.records.reserve(trials);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t dim = dims[trial % dims.size()];
        const std::uint64_t stream = SplitMix64::derive_state(seed, trial);
        SplitMix64 rng(stream);
        ExactMatrix a = sample_general(dim, dim, id.field, rng);
        TrialRecord rec;
        rec.stream = stream;
        rec.dim = dim;
        rec.lhs_sum = rank_sum(id.lhs, a);
        rec.rhs_sum = rank_sum(id.rhs, a);
        rec.pass = rec.lhs_sum == rec.rhs_sum;
        if (!rec.pass && !report.counterexample)
            report.counterexample = a;
        report.records.push_back(rec);
    }
    return report;
}

std::vector<Poly> gcd_free_basis(const std::vector<Poly>& inputs) {
    std::vector<Poly> basis;
    // Recursive splitter: reduce f against the current basis until it is
    // coprime to everything, splitting basis entries as needed. Total degree
    // never grows, so this terminates.
    auto insert = [&basis](auto&& self, Poly f) -> void {
        f = f.monic();
        while (!f.is_constant()) {
            bool split = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                Poly g = gcd(f, basis[i]);
                if (g.is_one())
                    continue;
                Poly b = basis[i];
                basis.erase(basis.begin() +
                            static_cast<std::ptrdiff_t>(i));
                self(self, divmod(b, g).first);
                self(self, g);
                f = divmod(f, g).first.monic();
                split = true;
                break;
            }
            if (!split) {
                basis.push_back(f);
                return;
            }
        }
    };
    for (const Poly& p : inputs)
        if (!p.is_zero() && !p.is_constant())
            insert(insert, p);
    std::sort(basis.begin(), basis.end(), [](const Poly& a, const Poly& b) {
        return Poly::compare(a, b) < 0;
    });
    return basis;
}

namespace {

unsigned multiplicity(const Poly& atom, Poly f) {
    unsigned count = 0;
    while (divides(atom, f)) {
        f = divmod(f, atom).first;
        ++count;
    }
    return count;
}

} // namespace

std::optional<ExactMatrix> counterexample_search(const std::vector<Poly>& lhs,
                                                 const std::vector<Poly>& rhs,
                                                 std::size_t budget) {
    if (check_lattice_condition(lhs, rhs))
        return std::nullopt; // valid identity: no witness exists
    const FieldSpec spec = lhs.empty() ? rhs[0].spec() : lhs[0].spec();

    std::vector<Poly> all = lhs;
    all.insert(all.end(), rhs.begin(), rhs.end());
    const std::vector<Poly> atoms = gcd_free_basis(all);

    std::size_t spent = 0;
    auto separates = [&](const ExactMatrix& cand) {
        ++spent;
        return rank_sum(lhs, cand) != rank_sum(rhs, cand);
    };

    // Phase 1: companions of atom powers. Complete for equal-length tuples
    // of nonzero polynomials (see header).
    std::vector<ExactMatrix> companions;
    for (const Poly& atom : atoms) {
        unsigned max_mult = 0;
        for (const Poly& f : all)
            max_mult = std::max(max_mult, multiplicity(atom, f));
        for (unsigned k = 1; k <= max_mult + 1 && spent < budget; ++k) {
            ExactMatrix cand = companion(pow(atom, k));
            if (separates(cand))
                return cand;
            companions.push_back(std::move(cand));
        }
    }

    // Phase 2: block sums of pairs of the phase-1 candidates.
    for (std::size_t i = 0; i < companions.size() && spent < budget; ++i)
        for (std::size_t j = i; j < companions.size() && spent < budget; ++j) {
            ExactMatrix cand = block_diag(companions[i], companions[j]);
            if (separates(cand))
                return cand;
        }

    // Phase 3: random matrices on a fixed internal stream (deterministic).
    for (std::size_t i = 0; spent < budget; ++i) {
        SplitMix64 rng = SplitMix64::derive(0x636F756E746572ULL, i);
        const std::size_t dim = 1 + i % 4;
        ExactMatrix cand = sample_general(dim, dim, spec, rng);
        if (separates(cand))
            return cand;
    }
    return std::nullopt; // budget exhausted; not a validity certificate
}

bool two_sided_identities_check(const ExactMatrix& a, const ExactMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw SizeMismatch("two-sided check needs equal square matrices");
    require_same_shape(a, b);
    const std::size_t n = a.rows();
    const ExactMatrix I = ExactMatrix::identity(n, a.spec());
    const unsigned r1 = rank(I + a * b);
    const unsigned r2 = rank(I + b * a);
    if (r1 != r2)
        return false;
    return rank(a) + r2 == rank(a + a * b * a) + n;
}

} // namespace rankforge
