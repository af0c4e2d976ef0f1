#include "rankforge/field.hpp"

#include <array>
#include <cctype>

namespace rankforge {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1)
            acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

} // namespace

bool is_prime_u64(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
        if (p % small == 0)
            return p == small;
    std::uint64_t d = p - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set is known to be a deterministic witness family for every
    // odd number below 2^64.
    constexpr std::array<std::uint64_t, 12> bases = {2,  3,  5,  7,  11, 13,
                                                     17, 19, 23, 29, 31, 37};
    for (std::uint64_t a : bases) {
        std::uint64_t x = powmod_u64(a % p, d, p);
        if (x == 0 || x == 1 || x == p - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, p);
            if (x == p - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw NotPrime("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q")
        return rationals();
    if (text == "Qi")
        return gaussian_rationals();
    if (text.size() >= 2 && text[0] == 'F') {
        std::uint64_t p = 0;
        for (std::size_t i = 1; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw Error("bad field spec '" + std::string(text) +
                            "': expected Q, Qi, or F<p>");
            p = p * 10 + static_cast<std::uint64_t>(text[i] - '0');
        }
        return prime_field(p);
    }
    throw Error("bad field spec '" + std::string(text) +
                "': expected Q, Qi, or F<p>");
}

std::string FieldSpec::to_string() const {
    switch (kind_) {
    case FieldKind::Rationals:
        return "Q";
    case FieldKind::GaussianRationals:
        return "Qi";
    case FieldKind::PrimeField:
        return "F" + std::to_string(p_);
    }
    return "?";
}

FieldElem::FieldElem(const FieldSpec& spec, mpq_class re, mpq_class im)
    : spec_(spec), re_(std::move(re)), im_(std::move(im)) {
    if (spec_.kind() == FieldKind::PrimeField) {
        // Residues are stored as integers in [0, p); the constructor only
        // ever receives integral values here.
        mpz_class p(static_cast<unsigned long>(spec_.modulus()));
        mpz_class r = re_.get_num() % p;
        if (r < 0)
            r += p;
        re_ = mpq_class(r);
        im_ = 0;
    } else if (spec_.kind() == FieldKind::Rationals) {
        im_ = 0;
    }
    re_.canonicalize();
    im_.canonicalize();
}

FieldElem FieldElem::from_fraction(const mpz_class& num, const mpz_class& den,
                                   const FieldSpec& spec) {
    if (den == 0)
        throw ZeroDenominator("denominator is zero");
    if (spec.kind() == FieldKind::PrimeField)
        return FieldElem(spec, mpq_class(num), 0) /
               FieldElem(spec, mpq_class(den), 0);
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElem(spec, q, 0);
}

FieldElem FieldElem::from_rational(const mpq_class& value,
                                   const FieldSpec& spec) {
    return from_fraction(value.get_num(), value.get_den(), spec);
}

FieldElem FieldElem::gaussian(const mpq_class& re, const mpq_class& im) {
    return FieldElem(FieldSpec::gaussian_rationals(), re, im);
}

FieldElem FieldElem::imaginary_unit() { return gaussian(0, 1); }

FieldElem FieldElem::operator-() const {
    return FieldElem(spec_, -re_, -im_);
}

FieldElem FieldElem::conj() const { return FieldElem(spec_, re_, -im_); }

namespace {
void require_same(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b))
        throw FieldMismatch("mixed scalars from " + a.to_string() + " and " +
                            b.to_string());
}
} // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same(a.spec_, b.spec_);
    return FieldElem(a.spec_, a.re_ + b.re_, a.im_ + b.im_);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same(a.spec_, b.spec_);
    return FieldElem(a.spec_, a.re_ - b.re_, a.im_ - b.im_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same(a.spec_, b.spec_);
    if (a.spec_.kind() == FieldKind::GaussianRationals)
        return FieldElem(a.spec_, a.re_ * b.re_ - a.im_ * b.im_,
                         a.re_ * b.im_ + a.im_ * b.re_);
    return FieldElem(a.spec_, a.re_ * b.re_, 0);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    return a * b.inv();
}

FieldElem FieldElem::inv() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero in " + spec_.to_string());
    switch (spec_.kind()) {
    case FieldKind::Rationals:
        return FieldElem(spec_, 1 / re_, 0);
    case FieldKind::PrimeField: {
        mpz_class p(static_cast<unsigned long>(spec_.modulus()));
        mpz_class r;
        if (mpz_invert(r.get_mpz_t(), re_.get_num().get_mpz_t(),
                       p.get_mpz_t()) == 0)
            throw DivisionByZero("residue has no inverse mod " +
                                 std::to_string(spec_.modulus()));
        return FieldElem(spec_, mpq_class(r), 0);
    }
    case FieldKind::GaussianRationals: {
        mpq_class n = re_ * re_ + im_ * im_;
        return FieldElem(spec_, re_ / n, -im_ / n);
    }
    }
    throw Error("unreachable");
}

int FieldElem::compare(const FieldElem& a, const FieldElem& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0)
        return c;
    return cmp(a.im_, b.im_);
}

std::string FieldElem::to_string() const {
    if (spec_.kind() != FieldKind::GaussianRationals)
        return re_.get_str();
    if (im_ == 0)
        return re_.get_str();
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = im_.get_str() + "i";
    if (re_ == 0)
        return imag;
    if (im_ > 0)
        return re_.get_str() + "+" + imag;
    return re_.get_str() + imag; // imag already carries the minus sign
}

} // namespace rankforge
