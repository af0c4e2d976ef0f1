#ifndef RANKFORGE_POLY_HPP
#define RANKFORGE_POLY_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankforge/field.hpp"

namespace rankforge {

// Univariate polynomial in t over an exact field. Dense low-to-high
// coefficient storage with no trailing zeros; the zero polynomial is the
// empty list. Degrees in this project stay small (tens after products), so
// dense is the right trade.
class Poly {
  public:
    explicit Poly(const FieldSpec& spec) : spec_(spec) {}

    static Poly zero(const FieldSpec& spec) { return Poly(spec); }
    static Poly one(const FieldSpec& spec) {
        return constant(FieldElem::one(spec));
    }
    static Poly t(const FieldSpec& spec);
    static Poly constant(const FieldElem& c);
    // Coefficients low-to-high; trailing zeros are trimmed.
    static Poly from_coeffs(std::vector<FieldElem> coeffs,
                            const FieldSpec& spec);
    static Poly from_int_coeffs(std::initializer_list<long> low_to_high,
                                const FieldSpec& spec);

    // Grammar: integer or fraction coefficients, variable t, operators
    // + - * ^, parentheses, implicit multiplication ("2t", "(t-1)(t+1)");
    // the literal i is accepted over Qi only. Throws SyntaxError (with
    // position) or CoefficientError.
    static Poly parse(std::string_view text, const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    FieldElem coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : FieldElem::zero(spec_);
    }
    FieldElem leading_coeff() const {
        return is_zero() ? FieldElem::zero(spec_) : coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

    // Canonical associate representative: leading coefficient scaled to 1;
    // zero stays zero.
    Poly monic() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const FieldElem& c) const;
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    bool operator==(const Poly& b) const {
        return spec_ == b.spec_ && coeffs_ == b.coeffs_;
    }
    bool operator!=(const Poly& b) const { return !(*this == b); }

    FieldElem eval(const FieldElem& x) const;

    // Total order for deterministic container layouts: degree first, then
    // coefficients from the top down. Not a divisibility order.
    static int compare(const Poly& a, const Poly& b);

    // Fully expanded, descending powers: "t^5 - t^4 - t + 1". Re-parses to
    // an equal Poly.
    std::string to_string() const;

  private:
    void trim();

    FieldSpec spec_;
    std::vector<FieldElem> coeffs_;
};

// Euclidean division: a = q*b + r with deg r < deg b or r = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd; gcd(0,0) = 0, gcd(a,0) = monic(a). Euclidean remainder
// sequence with monic renormalization at each step to keep rational
// coefficients small.
Poly gcd(const Poly& a, const Poly& b);

// (g, r, s) with r*a + s*b = g = gcd(a, b), g monic (or zero only if the
// preconditions are violated). Throws ZeroPolynomial on (0, 0).
struct XgcdResult {
    Poly g, r, s;
};
XgcdResult extended_gcd(const Poly& a, const Poly& b);

// Monic lcm; lcm(a, 0) = 0.
Poly lcm(const Poly& a, const Poly& b);

bool divides(const Poly& a, const Poly& b); // a | b; a must be nonzero
Poly pow(const Poly& base, unsigned long exp);

} // namespace rankforge

#endif
