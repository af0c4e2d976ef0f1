#include "rankforge/poly.hpp"

#include <cctype>
#include <cstdlib>

namespace rankforge {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Poly Poly::t(const FieldSpec& spec) {
    Poly p(spec);
    p.coeffs_ = {FieldElem::zero(spec), FieldElem::one(spec)};
    return p;
}

Poly Poly::constant(const FieldElem& c) {
    Poly p(c.spec());
    if (!c.is_zero())
        p.coeffs_ = {c};
    return p;
}

Poly Poly::from_coeffs(std::vector<FieldElem> coeffs, const FieldSpec& spec) {
    Poly p(spec);
    for (const FieldElem& c : coeffs)
        if (!(c.spec() == spec))
            throw FieldMismatch("coefficient from " + c.spec().to_string() +
                                " in a polynomial over " + spec.to_string());
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::from_int_coeffs(std::initializer_list<long> low_to_high,
                           const FieldSpec& spec) {
    std::vector<FieldElem> cs;
    cs.reserve(low_to_high.size());
    for (long v : low_to_high)
        cs.push_back(FieldElem::from_int(v, spec));
    return from_coeffs(std::move(cs), spec);
}

Poly Poly::monic() const {
    if (is_zero() || is_monic())
        return *this;
    return *this * leading_coeff().inv();
}

Poly Poly::operator-() const {
    Poly r(spec_);
    r.coeffs_.reserve(coeffs_.size());
    for (const FieldElem& c : coeffs_)
        r.coeffs_.push_back(-c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (!(a.spec_ == b.spec_))
        throw FieldMismatch("polynomial addition across fields");
    Poly r(a.spec_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        r.coeffs_.push_back(a.coeff(k) + b.coeff(k));
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (!(a.spec_ == b.spec_))
        throw FieldMismatch("polynomial multiplication across fields");
    Poly r(a.spec_);
    if (a.is_zero() || b.is_zero())
        return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1,
                     FieldElem::zero(a.spec_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

Poly Poly::operator*(const FieldElem& c) const {
    if (c.is_zero())
        return Poly(spec_);
    Poly r(spec_);
    r.coeffs_.reserve(coeffs_.size());
    for (const FieldElem& a : coeffs_)
        r.coeffs_.push_back(a * c);
    r.trim();
    return r;
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem acc = FieldElem::zero(spec_);
    for (std::size_t k = coeffs_.size(); k > 0; --k)
        acc = acc * x + coeffs_[k - 1];
    return acc;
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t k = a.coeffs_.size(); k > 0; --k) {
        int c = FieldElem::compare(a.coeffs_[k - 1], b.coeffs_[k - 1]);
        if (c != 0)
            return c;
    }
    return 0;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    Poly q(a.spec());
    Poly r = a;
    const FieldElem lead_inv = b.leading_coeff().inv();
    std::vector<FieldElem> qc;
    if (r.degree() >= b.degree())
        qc.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1,
                  FieldElem::zero(a.spec()));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift =
            static_cast<std::size_t>(r.degree() - b.degree());
        const FieldElem c = r.leading_coeff() * lead_inv;
        qc[shift] = c;
        // r -= c * t^shift * b, done in place on the coefficient vector.
        std::vector<FieldElem> rc = r.coeffs();
        for (std::size_t k = 0; k < b.coeffs().size(); ++k)
            rc[k + shift] = rc[k + shift] - c * b.coeffs()[k];
        r = Poly::from_coeffs(std::move(rc), a.spec());
    }
    q = Poly::from_coeffs(std::move(qc), a.spec());
    return {q, r};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a.monic();
    Poly y = b.monic();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

XgcdResult extended_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw ZeroPolynomial("extended_gcd(0, 0) is undefined");
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(a.spec()), s1 = Poly::zero(a.spec());
    Poly t0 = Poly::zero(a.spec()), t1 = Poly::one(a.spec());
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const FieldElem c = r0.leading_coeff().inv();
    return {r0 * c, s0 * c, t0 * c};
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly::zero(a.spec());
    return divmod(a * b, gcd(a, b)).first.monic();
}

bool divides(const Poly& a, const Poly& b) {
    if (a.is_zero())
        throw DivisionByZero("divisibility by the zero polynomial");
    return divmod(b, a).second.is_zero();
}

Poly pow(const Poly& base, unsigned long exp) {
    Poly acc = Poly::one(base.spec());
    Poly sq = base;
    while (exp != 0) {
        if (exp & 1)
            acc *= sq;
        exp >>= 1;
        if (exp != 0)
            sq *= sq;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Splits a coefficient into (negative?, magnitude string) for the printer.
// Gaussian coefficients with both parts nonzero are parenthesized and never
// treated as negative, which keeps the output unambiguous.
std::pair<bool, std::string> signed_magnitude(const FieldElem& c) {
    if (c.spec().kind() == FieldKind::GaussianRationals && c.re() != 0 &&
        c.im() != 0)
        return {false, "(" + c.to_string() + ")"};
    if (c.spec().kind() == FieldKind::GaussianRationals && c.re() == 0) {
        if (c.im() < 0)
            return {true, (-c).to_string()};
        return {false, c.to_string()};
    }
    if (c.re() < 0)
        return {true, (-c).to_string()};
    return {false, c.to_string()};
}

} // namespace

std::string Poly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k > 0; --k) {
        const std::size_t power = k - 1;
        const FieldElem& c = coeffs_[power];
        if (c.is_zero())
            continue;
        auto [neg, mag] = signed_magnitude(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string var;
        if (power == 1)
            var = "t";
        else if (power >= 2)
            var = "t^" + std::to_string(power);
        if (var.empty())
            out += mag;
        else if (mag == "1")
            out += var;
        else
            out += mag + var;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing: recursive descent with single-token lookahead.

namespace {

class Parser {
  public:
    Parser(std::string_view text, const FieldSpec& spec)
        : text_(text), spec_(spec) {}

    Poly run() {
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_primary(char c) const {
        return c == '(' || c == 't' ||
               std::isdigit(static_cast<unsigned char>(c)) ||
               (c == 'i' &&
                spec_.kind() == FieldKind::GaussianRationals);
    }

    Poly parse_expr() {
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = c == '-';
            ++pos_;
        }
        Poly acc = parse_term();
        if (neg)
            acc = -acc;
        while (true) {
            c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            Poly rhs = parse_term();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= parse_factor();
            } else if (starts_primary(c)) {
                acc *= parse_factor(); // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_primary();
        while (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            unsigned long e = 0;
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError("exponent must be a nonnegative integer",
                                  at);
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                e = e * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
            base = pow(base, e);
        }
        return base;
    }

    Poly parse_primary() {
        char c = peek();
        const std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Poly inner = parse_expr();
            if (peek() != ')')
                throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 't') {
            ++pos_;
            return Poly::t(spec_);
        }
        if (c == 'i') {
            if (spec_.kind() != FieldKind::GaussianRationals)
                throw SyntaxError("'i' is only valid over Qi", at);
            ++pos_;
            return Poly::constant(FieldElem::imaginary_unit());
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(parse_number());
        if (c == '\0')
            throw SyntaxError("unexpected end of input", at);
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          at);
    }

    FieldElem parse_number() {
        mpz_class num = parse_integer();
        mpz_class den = 1;
        // A '/' directly followed by digits is part of the literal; this is
        // what makes "1/2t" read as (1/2)*t.
        if (pos_ < text_.size() && text_[pos_] == '/' &&
            pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            den = parse_integer();
        }
        const std::size_t at = pos_;
        try {
            return FieldElem::from_fraction(num, den, spec_);
        } catch (const ZeroDenominator&) {
            throw CoefficientError("coefficient denominator is zero (at "
                                   "position " +
                                   std::to_string(at) + ")");
        } catch (const DivisionByZero&) {
            throw CoefficientError(
                "coefficient denominator is not invertible over " +
                spec_.to_string() + " (at position " + std::to_string(at) +
                ")");
        }
    }

    mpz_class parse_integer() {
        std::string digits;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return mpz_class(digits);
    }

    std::string_view text_;
    FieldSpec spec_;
    std::size_t pos_ = 0;
};

} // namespace

Poly Poly::parse(std::string_view text, const FieldSpec& spec) {
    return Parser(text, spec).run();
}

} // namespace rankforge
