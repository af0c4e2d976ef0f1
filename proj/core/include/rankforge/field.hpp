#ifndef RANKFORGE_FIELD_HPP
#define RANKFORGE_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "rankforge/error.hpp"

namespace rankforge {

// The three coefficient domains: the rationals Q, prime fields F_p, and the
// Gaussian rationals Q(i). Q(i) is the stand-in for a *-field: it carries a
// conjugation involution and satisfies x* x = 0 => x = 0, which is what the
// exact range-projection machinery needs. No floating point anywhere.
enum class FieldKind { Rationals, PrimeField, GaussianRationals };

class FieldSpec {
  public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec gaussian_rationals() {
        return FieldSpec(FieldKind::GaussianRationals, 0);
    }
    // Validates primality (deterministic Miller-Rabin, exact for 64-bit
    // inputs); throws NotPrime otherwise.
    static FieldSpec prime_field(std::uint64_t p);

    // Text grammar used by the CLI and file formats: "Q", "Qi", "F<p>".
    static FieldSpec parse(std::string_view text);

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    std::uint64_t characteristic() const {
        return kind_ == FieldKind::PrimeField ? p_ : 0;
    }
    // Fields where conjugation is meaningful (trivial on Q): these admit the
    // B -> B(B*B)^{-1}B* projection construction.
    bool has_involution() const { return kind_ != FieldKind::PrimeField; }

    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;

  private:
    FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
    FieldKind kind_;
    std::uint64_t p_;
};

// One scalar, always in canonical form: reduced fraction with positive
// denominator over Q, residue in [0, p) over F_p, both parts reduced over
// Q(i). Canonical form makes operator== semantic equality. Values are
// immutable after construction apart from assignment.
class FieldElem {
  public:
    // Default-constructs rational zero; containers need this. Prefer the
    // named factories below.
    FieldElem() : spec_(FieldSpec::rationals()), re_(0), im_(0) {}

    static FieldElem zero(const FieldSpec& spec) {
        return FieldElem(spec, 0, 0);
    }
    static FieldElem one(const FieldSpec& spec) { return FieldElem(spec, 1, 0); }
    static FieldElem from_int(long value, const FieldSpec& spec) {
        return FieldElem(spec, mpq_class(value), 0);
    }
    // Reduces num/den into the field; den = 0 throws ZeroDenominator, and a
    // denominator that is a zero divisor mod p throws DivisionByZero.
    static FieldElem from_fraction(const mpz_class& num, const mpz_class& den,
                                   const FieldSpec& spec);
    static FieldElem from_rational(const mpq_class& value,
                                   const FieldSpec& spec);
    // Gaussian rational re + im*i; requires a spec with an involution.
    static FieldElem gaussian(const mpq_class& re, const mpq_class& im);
    // The imaginary unit over Q(i).
    static FieldElem imaginary_unit();

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    // Rational value accessors; im() is 0 except over Q(i). Over F_p, re()
    // is the residue as an integer in [0, p).
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    FieldElem operator-() const;
    FieldElem conj() const;
    // Multiplicative inverse; throws DivisionByZero on 0.
    FieldElem inv() const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

    bool operator==(const FieldElem& b) const {
        return spec_ == b.spec_ && re_ == b.re_ && im_ == b.im_;
    }
    bool operator!=(const FieldElem& b) const { return !(*this == b); }

    // Arbitrary total order (value within a fixed spec); used only to keep
    // containers and printed output deterministic.
    static int compare(const FieldElem& a, const FieldElem& b);

    std::string to_string() const;

  private:
    FieldElem(const FieldSpec& spec, mpq_class re, mpq_class im);

    FieldSpec spec_;
    mpq_class re_;
    mpq_class im_;
};

// true iff p is prime; deterministic for all 64-bit inputs.
bool is_prime_u64(std::uint64_t p);

} // namespace rankforge

#endif
