#include "rankforge/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace rankforge {

bool letter_allowed(AlgebraMode mode, char letter) {
    if (mode == AlgebraMode::Free)
        return letter == '1' || letter == '2';
    return letter == 'e' || letter == 'f' || letter == 'x' || letter == 'y';
}

bool letter_idempotent(AlgebraMode mode, char letter) {
    return mode == AlgebraMode::Idempotent && (letter == 'e' || letter == 'f');
}

std::string reduce_word(const std::string& word, AlgebraMode mode) {
    std::string out;
    out.reserve(word.size());
    for (char c : word) {
        if (!letter_allowed(mode, c))
            throw Error(std::string("letter '") + c +
                        "' is not in the algebra's alphabet");
        if (!out.empty() && out.back() == c && letter_idempotent(mode, c))
            continue;
        out.push_back(c);
    }
    return out;
}

std::string word_mul(const std::string& u, const std::string& v,
                     AlgebraMode mode) {
    return reduce_word(u + v, mode);
}

std::string word_to_string(const std::string& word, AlgebraMode mode) {
    if (word.empty())
        return "1";
    if (mode == AlgebraMode::Idempotent)
        return word;
    std::string out;
    for (char c : word) {
        out.push_back('t');
        out.push_back(c);
    }
    return out;
}

FreeElem FreeElem::zero(const FieldSpec& spec, AlgebraMode mode) {
    return FreeElem(spec, mode);
}

FreeElem FreeElem::one(const FieldSpec& spec, AlgebraMode mode) {
    return from_int(1, spec, mode);
}

FreeElem FreeElem::from_int(long value, const FieldSpec& spec,
                            AlgebraMode mode) {
    return scalar(FieldElem::from_int(value, spec), mode);
}

FreeElem FreeElem::scalar(const FieldElem& value, AlgebraMode mode) {
    FreeElem r(value.spec(), mode);
    if (!value.is_zero())
        r.terms_.emplace(std::string(), value);
    return r;
}

FreeElem FreeElem::generator(char letter, const FieldSpec& spec,
                             AlgebraMode mode) {
    if (!letter_allowed(mode, letter))
        throw Error(std::string("generator '") + letter +
                    "' is not in the algebra's alphabet");
    FreeElem r(spec, mode);
    r.terms_.emplace(std::string(1, letter), FieldElem::one(spec));
    return r;
}

void FreeElem::add_term(const std::string& word, const FieldElem& coeff) {
    if (coeff.is_zero())
        return;
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        terms_.emplace(word, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

namespace {

void require_compatible(const FreeElem& a, const FreeElem& b) {
    if (a.mode() != b.mode())
        throw ModeMismatch("mixing free and idempotent algebra elements");
    if (!(a.spec() == b.spec()))
        throw FieldMismatch("algebra elements over different fields");
}

} // namespace

FreeElem FreeElem::operator-() const {
    FreeElem r(spec_, mode_);
    for (const auto& [word, coeff] : terms_)
        r.terms_.emplace(word, -coeff);
    return r;
}

FreeElem FreeElem::scaled(const FieldElem& c) const {
    if (!(c.spec() == spec_))
        throw FieldMismatch("scaling by an element of a different field");
    FreeElem r(spec_, mode_);
    if (c.is_zero())
        return r;
    for (const auto& [word, coeff] : terms_)
        r.terms_.emplace(word, coeff * c);
    return r;
}

FreeElem operator+(const FreeElem& a, const FreeElem& b) {
    require_compatible(a, b);
    FreeElem r = a;
    for (const auto& [word, coeff] : b.terms_)
        r.add_term(word, coeff);
    return r;
}

FreeElem operator-(const FreeElem& a, const FreeElem& b) {
    require_compatible(a, b);
    FreeElem r = a;
    for (const auto& [word, coeff] : b.terms_)
        r.add_term(word, -coeff);
    return r;
}

FreeElem operator*(const FreeElem& a, const FreeElem& b) {
    require_compatible(a, b);
    FreeElem r(a.spec_, a.mode_);
    for (const auto& [u, cu] : a.terms_)
        for (const auto& [v, cv] : b.terms_)
            r.add_term(word_mul(u, v, a.mode_), cu * cv);
    return r;
}

std::string FreeElem::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [word, coeff] : terms_) {
        // Pull an unambiguous sign out of the coefficient so terms join
        // with " + " / " - "; mixed Gaussian coefficients stay inside
        // parentheses and always join with " + ".
        bool negative = false;
        FieldElem mag = coeff;
        if (coeff.im() == 0 ? coeff.re() < 0 : coeff.re() == 0 && coeff.im() < 0) {
            negative = true;
            mag = -coeff;
        }
        std::string body;
        if (word.empty()) {
            body = mag.to_string();
        } else if (mag.is_one()) {
            body = word_to_string(word, mode_);
        } else {
            std::string c = mag.to_string();
            bool plain = !c.empty() &&
                         std::all_of(c.begin(), c.end(),
                                     [](unsigned char ch) { return std::isdigit(ch); });
            body = (plain ? c : "(" + c + ")") + word_to_string(word, mode_);
        }
        if (first) {
            out = negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    return out;
}

FreeMatrix FreeMatrix::identity(std::size_t n, const FieldSpec& spec,
                                AlgebraMode mode) {
    FreeMatrix m(n, n, spec, mode);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = FreeElem::one(spec, mode);
    return m;
}

namespace {

void require_compatible(const FreeMatrix& a, const FreeMatrix& b) {
    if (a.mode() != b.mode())
        throw ModeMismatch("mixing free and idempotent algebra matrices");
    if (!(a.spec() == b.spec()))
        throw FieldMismatch("algebra matrices over different fields");
}

} // namespace

FreeMatrix operator+(const FreeMatrix& a, const FreeMatrix& b) {
    require_compatible(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw SizeMismatch("adding matrices of different shapes");
    FreeMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k)
        r.data_[k] += b.data_[k];
    return r;
}

FreeMatrix operator-(const FreeMatrix& a, const FreeMatrix& b) {
    require_compatible(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw SizeMismatch("subtracting matrices of different shapes");
    FreeMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k)
        r.data_[k] -= b.data_[k];
    return r;
}

FreeMatrix operator*(const FreeMatrix& a, const FreeMatrix& b) {
    require_compatible(a, b);
    if (a.cols_ != b.rows_)
        throw SizeMismatch("multiplying matrices with mismatched inner sizes");
    FreeMatrix r(a.rows_, b.cols_, a.spec_, a.mode_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FreeElem& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const FreeElem& bkj = b.at(k, j);
                if (bkj.is_zero())
                    continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

std::vector<std::vector<std::string>> FreeMatrix::entry_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i].reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            out[i].push_back(at(i, j).to_string());
    }
    return out;
}

std::string FreeMatrix::to_string() const {
    auto grid = entry_strings();
    std::vector<std::size_t> width(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            width[j] = std::max(width[j], grid[i][j].size());
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        s += "[ ";
        for (std::size_t j = 0; j < cols_; ++j) {
            s += grid[i][j];
            s.append(width[j] - grid[i][j].size(), ' ');
            if (j + 1 < cols_)
                s += "  ";
        }
        s += " ]\n";
    }
    return s;
}

namespace {

struct ClauseFailure {
    bool found = false;
    std::size_t i = 0;
    std::size_t j = 0;
    std::string difference;
};

ClauseFailure first_difference(const FreeMatrix& got, const FreeMatrix& want) {
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j) {
            FreeElem d = got.at(i, j) - want.at(i, j);
            if (!d.is_zero())
                return {true, i, j, d.to_string()};
        }
    return {};
}

std::string describe(const std::string& clause, const ClauseFailure& f) {
    return clause + " fails at entry (" + std::to_string(f.i) + ", " +
           std::to_string(f.j) + "): difference " + f.difference;
}

} // namespace

CheckResult verify_certificate(const Certificate& cert) {
    const FreeMatrix ident =
        FreeMatrix::identity(cert.n, cert.A.spec(), cert.mode);
    for (CertClaim claim : cert.claims) {
        switch (claim) {
        case CertClaim::InversePairA: {
            if (auto f = first_difference(cert.A * cert.A_inv, ident); f.found)
                return {false, describe("A * A_inv = I", f)};
            if (auto f = first_difference(cert.A_inv * cert.A, ident); f.found)
                return {false, describe("A_inv * A = I", f)};
            break;
        }
        case CertClaim::InversePairB: {
            if (auto f = first_difference(cert.B * cert.B_inv, ident); f.found)
                return {false, describe("B * B_inv = I", f)};
            if (auto f = first_difference(cert.B_inv * cert.B, ident); f.found)
                return {false, describe("B_inv * B = I", f)};
            break;
        }
        case CertClaim::Conjugation: {
            if (auto f = first_difference(cert.A * cert.X * cert.B, cert.Y);
                f.found)
                return {false, describe("A * X * B = Y", f)};
            break;
        }
        }
    }
    return {true, ""};
}

namespace {

constexpr std::size_t kCatalogSize = 15;

const char* const kCatalogNames[kCatalogSize] = {
    "lemma-fund-id-step1-i",
    "lemma-fund-id-step1-ii",
    "lemma-fund-id-i",
    "lemma-fund-id-ii",
    "lemma-fund-id-iii",
    "lemma-fund-id-iv",
    "cor-fund-id-1-i",
    "cor-fund-id-1-ii",
    "lemma-diff-rank-id",
    "prop-two-rho-f",
    "thm-rank-sub",
    "prop-commutator-rank-a",
    "prop-commutator-rank-b",
    "prop-free-assoc-62",
    "prop-free-assoc-63",
};

// Shared shorthand for spelling certificate matrices close to how the
// displays they encode are written.
struct Builder {
    FieldSpec spec;
    AlgebraMode mode;

    FreeElem num(long v) const { return FreeElem::from_int(v, spec, mode); }
    FreeElem gen(char c) const { return FreeElem::generator(c, spec, mode); }
    FreeElem zero() const { return FreeElem::zero(spec, mode); }
    FreeElem one() const { return FreeElem::one(spec, mode); }

    FreeMatrix mat(std::size_t n, std::vector<FreeElem> entries) const {
        FreeMatrix m(n, n, spec, mode);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = std::move(entries[i * n + j]);
        return m;
    }

    FreeMatrix diag(std::vector<FreeElem> entries) const {
        const std::size_t n = entries.size();
        FreeMatrix m(n, n, spec, mode);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = std::move(entries[i]);
        return m;
    }

    FreeMatrix ident(std::size_t n) const {
        return FreeMatrix::identity(n, spec, mode);
    }

    // Identity plus a single off-diagonal entry: as a left factor this is
    // the row operation row_i += c * row_j, as a right factor the column
    // operation col_j += col_i * c. Its inverse negates c.
    FreeMatrix transvection(std::size_t n, std::size_t i, std::size_t j,
                            const FreeElem& c) const {
        FreeMatrix m = ident(n);
        m.at(i, j) = c;
        return m;
    }

    FreeMatrix swap_matrix(std::size_t n, std::size_t i,
                           std::size_t j) const {
        FreeMatrix m = ident(n);
        m.at(i, i) = zero();
        m.at(j, j) = zero();
        m.at(i, j) = one();
        m.at(j, i) = one();
        return m;
    }

    FreeMatrix scale(const FreeMatrix& m, const FieldElem& c) const {
        FreeMatrix r = m;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                r.at(i, j) = m.at(i, j).scaled(c);
        return r;
    }
};

const std::vector<CertClaim> kAllClaims = {
    CertClaim::InversePairA, CertClaim::InversePairB, CertClaim::Conjugation};

// The 2x2 involution with top row (e, 1-e); squares to the identity.
FreeMatrix involution_a(const Builder& b) {
    auto e = b.gen('e');
    return b.mat(2, {e, b.one() - e, b.one() + e, -e});
}

// The companion involution with top row (e, 1+e).
FreeMatrix involution_b(const Builder& b) {
    auto e = b.gen('e');
    return b.mat(2, {e, b.one() + e, b.one() - e, -e});
}

Certificate cert_fund_id_step1(const Builder& b, const std::string& name,
                               bool variant_b) {
    FreeMatrix m = variant_b ? involution_b(b) : involution_a(b);
    return Certificate{name,
                       b.mode,
                       2,
                       m,
                       m,
                       m,
                       m,
                       b.ident(2),
                       b.ident(2),
                       kAllClaims,
                       std::string("the 2x2 block matrix with top row (e, ") +
                           (variant_b ? "1+e" : "1-e") +
                           ") is its own inverse"};
}

Certificate cert_fund_id_i(const Builder& b) {
    auto e = b.gen('e');
    auto x = b.gen('x');
    auto y = b.gen('y');
    auto z = b.zero();
    FreeMatrix big = involution_a(b);
    return Certificate{"lemma-fund-id-i",
                       b.mode,
                       2,
                       b.ident(2),
                       b.ident(2),
                       big,
                       big,
                       b.mat(2, {x * e, z, y * (b.one() - e), z}),
                       b.diag({x * e, y * (b.one() - e)}),
                       kAllClaims,
                       "rank[[xe, 0], [y(1-e), 0]] = rank(xe) + rank(y(1-e))"};
}

Certificate cert_fund_id_ii(const Builder& b) {
    auto e = b.gen('e');
    auto x = b.gen('x');
    auto y = b.gen('y');
    auto z = b.zero();
    FreeMatrix big = involution_b(b);
    return Certificate{"lemma-fund-id-ii",
                       b.mode,
                       2,
                       big,
                       big,
                       b.ident(2),
                       b.ident(2),
                       b.mat(2, {e * x, (b.one() - e) * y, z, z}),
                       b.diag({e * x, (b.one() - e) * y}),
                       kAllClaims,
                       "rank[[ex, (1-e)y], [0, 0]] = rank(ex) + rank((1-e)y)"};
}

Certificate cert_fund_id_iii(const Builder& b) {
    auto e = b.gen('e');
    auto x = b.gen('x');
    auto z = b.zero();
    FreeMatrix big = involution_a(b);
    return Certificate{"lemma-fund-id-iii",
                       b.mode,
                       2,
                       b.mat(2, {b.one(), z, -x, b.one()}),
                       b.mat(2, {b.one(), z, x, b.one()}),
                       big,
                       big,
                       b.mat(2, {e, z, x, z}),
                       b.diag({e, x * (b.one() - e)}),
                       kAllClaims,
                       "rank[[e, 0], [x, 0]] = rank(e) + rank(x(1-e))"};
}

Certificate cert_fund_id_iv(const Builder& b) {
    auto e = b.gen('e');
    auto x = b.gen('x');
    auto z = b.zero();
    FreeMatrix big = involution_b(b);
    return Certificate{"lemma-fund-id-iv",
                       b.mode,
                       2,
                       big,
                       big,
                       b.mat(2, {b.one(), -x, z, b.one()}),
                       b.mat(2, {b.one(), x, z, b.one()}),
                       b.mat(2, {e, x, z, z}),
                       b.diag({e, (b.one() - e) * x}),
                       kAllClaims,
                       "rank[[e, x], [0, 0]] = rank(e) + rank((1-e)x)"};
}

Certificate cert_cor_fund_id_1_i(const Builder& b) {
    auto e = b.gen('e');
    auto f = b.gen('f');
    auto z = b.zero();
    return Certificate{"cor-fund-id-1-i",
                       b.mode,
                       2,
                       b.ident(2),
                       b.ident(2),
                       b.swap_matrix(2, 0, 1),
                       b.swap_matrix(2, 0, 1),
                       b.mat(2, {e, f, z, z}),
                       b.mat(2, {f, e, z, z}),
                       kAllClaims,
                       "swapping columns of [[e, f], [0, 0]] yields "
                       "rank(e) + rank((1-e)f) = rank(f) + rank((1-f)e)"};
}

Certificate cert_cor_fund_id_1_ii(const Builder& b) {
    auto e = b.gen('e');
    auto f = b.gen('f');
    auto z = b.zero();
    return Certificate{"cor-fund-id-1-ii",
                       b.mode,
                       2,
                       b.swap_matrix(2, 0, 1),
                       b.swap_matrix(2, 0, 1),
                       b.ident(2),
                       b.ident(2),
                       b.mat(2, {e, z, f, z}),
                       b.mat(2, {f, z, e, z}),
                       kAllClaims,
                       "swapping rows of [[e, 0], [f, 0]] yields "
                       "rank(e) + rank(f(1-e)) = rank(f) + rank(e(1-f))"};
}

Certificate cert_diff_rank_id(const Builder& b) {
    auto e = b.gen('e');
    auto f = b.gen('f');
    auto z = b.zero();
    auto o = b.one();
    FreeMatrix a = b.mat(4, {z, z, o, z,
                             f, z, z, o,
                             o - f, z, o, -o,
                             z, o, z, z});
    FreeMatrix a_inv = b.mat(4, {-o, o, o, z,
                                 z, z, z, o,
                                 o, z, z, z,
                                 f, o - f, -f, z});
    FreeMatrix bb = b.mat(4, {o, z, o, z,
                              z, o, -o, z,
                              -e, z, o - e, z,
                              z, z, z, o});
    FreeMatrix bb_inv = b.mat(4, {o - e, z, -o, z,
                                  e, o, o, z,
                                  e, z, o, z,
                                  z, z, z, o});
    FreeMatrix x = b.mat(4, {e, f, z, z,
                             z, z, z, z,
                             z, z, e, z,
                             z, z, f, z});
    return Certificate{"lemma-diff-rank-id",
                       b.mode,
                       4,
                       a,
                       a_inv,
                       bb,
                       bb_inv,
                       x,
                       b.diag({-e, f, e - f, z}),
                       kAllClaims,
                       "rank(e-f) = rank(e(1-f)) + rank((1-e)f) after "
                       "cancelling rank(e) + rank(f)"};
}

// Built as a product of elementary row and column operations that carry
// [[e, f], [f, 0]] (padded to 4x4) onto diag(f, f, (1-f)e(1-f), 0).
Certificate cert_two_rho_f(const Builder& b) {
    auto e = b.gen('e');
    auto f = b.gen('f');
    auto o = b.one();
    auto g = o - f; // 1 - f, idempotent

    FreeMatrix p01 = b.swap_matrix(4, 0, 1);
    FreeMatrix col_e = b.transvection(4, 1, 0, -e);
    FreeMatrix row_ge = b.transvection(4, 1, 0, -(g * e));
    FreeMatrix row_g = b.transvection(4, 2, 1, g);
    FreeMatrix row_m1 = b.transvection(4, 1, 2, -o);
    FreeMatrix col_g = b.transvection(4, 0, 2, g);
    FreeMatrix col_m1 = b.transvection(4, 2, 0, -o);

    FreeMatrix a = row_m1 * row_g * row_ge * p01;
    FreeMatrix a_inv = p01 * b.transvection(4, 1, 0, g * e) *
                       b.transvection(4, 2, 1, -g) *
                       b.transvection(4, 1, 2, o);
    FreeMatrix bb = col_e * col_g * col_m1;
    FreeMatrix bb_inv = b.transvection(4, 2, 0, o) *
                        b.transvection(4, 0, 2, -g) *
                        b.transvection(4, 1, 0, e);

    FreeMatrix x(4, 4, b.spec, b.mode);
    x.at(0, 0) = e;
    x.at(0, 1) = f;
    x.at(1, 0) = f;

    return Certificate{"prop-two-rho-f",
                       b.mode,
                       4,
                       a,
                       a_inv,
                       bb,
                       bb_inv,
                       x,
                       b.diag({f, f, g * e * g, b.zero()}),
                       kAllClaims,
                       "rank[[e, f], [f, 0]] = 2 rank(f) + rank((1-f)e(1-f))"};
}

Certificate cert_rank_sub(const Builder& b) {
    if (b.spec.characteristic() == 2)
        throw CharTwoUnsupported(
            "certificate 'thm-rank-sub' needs 2 to be invertible; " +
            b.spec.to_string() + " has characteristic 2");
    const FieldElem half = FieldElem::from_int(2, b.spec).inv();
    auto e = b.gen('e');
    auto f = b.gen('f');
    auto z = b.zero();
    auto o = b.one();
    auto two = b.num(2);
    FreeMatrix m1 = b.mat(3, {o, z, z,
                              o, two, two,
                              f, -(o - f), f});
    FreeMatrix m2 = b.mat(3, {two, z, z,
                              f, f, -two,
                              -(o + f), o - f, two});
    FreeMatrix n1 = b.mat(3, {o + e, e - o, z,
                              e, e - two, o,
                              e, e - two, z});
    FreeMatrix n2 = b.mat(3, {two - e, z, e - o,
                              e, z, -(o + e),
                              z, two, -two});
    return Certificate{"thm-rank-sub",
                       b.mode,
                       3,
                       b.scale(m1, half),
                       m2,
                       n1,
                       b.scale(n2, half),
                       b.diag({e, f, -(e + f)}),
                       b.mat(3, {e, z, z,
                                 z, e, f,
                                 z, f, z}),
                       kAllClaims,
                       "rank(e+f) = rank((1-f)e(1-f)) + rank(f) when 2 is "
                       "invertible"};
}

Certificate cert_commutator_rank_a(const Builder& b) {
    auto e = b.gen('e');
    auto f = b.gen('f');
    auto z = b.zero();
    auto o = b.one();
    auto two = b.num(2);
    FreeMatrix x = b.mat(2, {o, e + f - o, e - f, z});
    return Certificate{"prop-commutator-rank-a",
                       b.mode,
                       2,
                       b.mat(2, {z, o, o, o - two * e}),
                       b.mat(2, {two * e - o, o, o, z}),
                       b.mat(2, {o, z, o - two * f, o}),
                       b.mat(2, {o, z, two * f - o, o}),
                       x,
                       b.diag({e - f, e + f - o}),
                       kAllClaims,
                       "conjugates [[1, e+f-1], [e-f, 0]] to "
                       "diag(e-f, e+f-1); -1 is a unit, so this carries "
                       "the rank data of (e-f, 1-e-f)"};
}

Certificate cert_commutator_rank_b(const Builder& b) {
    auto e = b.gen('e');
    auto f = b.gen('f');
    auto z = b.zero();
    auto o = b.one();
    FreeMatrix x = b.mat(2, {o, e + f - o, e - f, z});
    return Certificate{"prop-commutator-rank-b",
                       b.mode,
                       2,
                       b.mat(2, {e - f, -o, o, z}),
                       b.mat(2, {z, o, -o, e - f}),
                       b.mat(2, {o - e - f, o, o, z}),
                       b.mat(2, {z, o, o, -(o - e - f)}),
                       x,
                       b.diag({e * f - f * e, o}),
                       kAllClaims,
                       "conjugates the same pivot matrix to "
                       "diag(ef-fe, 1); paired with -a this gives "
                       "rank(ef-fe) + n = rank(e-f) + rank(1-e-f)"};
}

Certificate cert_free_assoc_62(const Builder& b) {
    auto t1 = b.gen('1');
    auto t2 = b.gen('2');
    auto z = b.zero();
    auto o = b.one();
    FreeMatrix a = b.mat(2, {t2, o, o, z}) * b.mat(2, {o, t1, z, o});
    FreeMatrix a_inv =
        b.mat(2, {o, -t1, z, o}) * b.mat(2, {z, o, o, -t2});
    FreeMatrix bb = b.mat(2, {o, z, -t2, o}) * b.mat(2, {-t1, o, o, z});
    FreeMatrix bb_inv =
        b.mat(2, {z, o, o, t1}) * b.mat(2, {o, z, t2, o});
    return Certificate{"prop-free-assoc-62",
                       b.mode,
                       2,
                       a,
                       a_inv,
                       bb,
                       bb_inv,
                       b.diag({o + t1 * t2, o}),
                       b.diag({o + t2 * t1, o}),
                       kAllClaims,
                       "the pairs (1 + t1t2, 1) and (1 + t2t1, 1) carry "
                       "equal rank data"};
}

Certificate cert_free_assoc_63(const Builder& b) {
    auto t1 = b.gen('1');
    auto t2 = b.gen('2');
    auto z = b.zero();
    auto o = b.one();
    auto u = o + t2 * t1;
    FreeMatrix a = b.mat(2, {t1, -o, o, z}) * b.mat(2, {o, -t2, z, o});
    FreeMatrix a_inv =
        b.mat(2, {o, t2, z, o}) * b.mat(2, {z, o, -o, t1});
    FreeMatrix bb = b.mat(2, {o, o, o, z}) * b.mat(2, {-u, o, o, z});
    FreeMatrix bb_inv = b.mat(2, {z, o, o, u}) * b.mat(2, {z, o, o, -o});
    return Certificate{"prop-free-assoc-63",
                       b.mode,
                       2,
                       a,
                       a_inv,
                       bb,
                       bb_inv,
                       b.diag({u, t1}),
                       b.diag({t1 * u, o}),
                       kAllClaims,
                       "the pairs (t1(1 + t2t1), 1) and (1 + t2t1, t1) "
                       "carry equal rank data"};
}

} // namespace

std::vector<std::string> builtin_certificate_names() {
    return std::vector<std::string>(kCatalogNames,
                                    kCatalogNames + kCatalogSize);
}

Certificate make_builtin_certificate(const std::string& name,
                                     const FieldSpec& spec) {
    Builder idem{spec, AlgebraMode::Idempotent};
    Builder free{spec, AlgebraMode::Free};
    if (name == "lemma-fund-id-step1-i")
        return cert_fund_id_step1(idem, name, false);
    if (name == "lemma-fund-id-step1-ii")
        return cert_fund_id_step1(idem, name, true);
    if (name == "lemma-fund-id-i")
        return cert_fund_id_i(idem);
    if (name == "lemma-fund-id-ii")
        return cert_fund_id_ii(idem);
    if (name == "lemma-fund-id-iii")
        return cert_fund_id_iii(idem);
    if (name == "lemma-fund-id-iv")
        return cert_fund_id_iv(idem);
    if (name == "cor-fund-id-1-i")
        return cert_cor_fund_id_1_i(idem);
    if (name == "cor-fund-id-1-ii")
        return cert_cor_fund_id_1_ii(idem);
    if (name == "lemma-diff-rank-id")
        return cert_diff_rank_id(idem);
    if (name == "prop-two-rho-f")
        return cert_two_rho_f(idem);
    if (name == "thm-rank-sub")
        return cert_rank_sub(idem);
    if (name == "prop-commutator-rank-a")
        return cert_commutator_rank_a(idem);
    if (name == "prop-commutator-rank-b")
        return cert_commutator_rank_b(idem);
    if (name == "prop-free-assoc-62")
        return cert_free_assoc_62(free);
    if (name == "prop-free-assoc-63")
        return cert_free_assoc_63(free);
    throw Error("unknown certificate '" + name + "'");
}

std::vector<Certificate> builtin_certificates(const FieldSpec& spec) {
    std::vector<Certificate> out;
    out.reserve(kCatalogSize);
    for (const auto& name : builtin_certificate_names())
        out.push_back(make_builtin_certificate(name, spec));
    return out;
}

} // namespace rankforge
