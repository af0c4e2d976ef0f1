#ifndef RANKFORGE_FREEALG_HPP
#define RANKFORGE_FREEALG_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rankforge/error.hpp"
#include "rankforge/field.hpp"

namespace rankforge {

// Two symbolic coefficient algebras, both noncommutative:
//
//   Free       K<t1, t2>, letters '1' and '2', no relations.
//   Idempotent K<e, f, x, y> / (e - e^2, f - f^2), letters 'e', 'f', 'x',
//              'y'. Relations attach per letter: only e and f are
//              idempotent, x and y stay free.
//
// Words are stored as strings of letters; the empty word is 1. In
// idempotent mode a word is kept reduced, meaning no two equal adjacent
// idempotent letters. Collapsing gg -> g only ever shortens words and
// overlapping collapse sites resolve to the same normal form, so a single
// left-to-right pass reduces completely.
enum class AlgebraMode { Free, Idempotent };

bool letter_allowed(AlgebraMode mode, char letter);
bool letter_idempotent(AlgebraMode mode, char letter);

// Full reduction of an arbitrary word; throws Error on a letter outside
// the mode's alphabet.
std::string reduce_word(const std::string& word, AlgebraMode mode);

// Concatenation followed by reduction. Inputs are assumed reduced.
std::string word_mul(const std::string& u, const std::string& v,
                     AlgebraMode mode);

// Display form: idempotent words print as-is ("efx"), free words map the
// digit letters to generator names ("12" -> "t1t2"); the empty word
// prints as "1".
std::string word_to_string(const std::string& word, AlgebraMode mode);

// Length-then-lexicographic total order on words. Keeps term maps, and
// therefore printing and comparison, deterministic.
struct WordOrder {
    bool operator()(const std::string& a, const std::string& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// An element of the chosen algebra: a finite map from reduced words to
// nonzero coefficients. The zero element is the empty map.
class FreeElem {
  public:
    using TermMap = std::map<std::string, FieldElem, WordOrder>;

    static FreeElem zero(const FieldSpec& spec, AlgebraMode mode);
    static FreeElem one(const FieldSpec& spec, AlgebraMode mode);
    static FreeElem from_int(long value, const FieldSpec& spec,
                             AlgebraMode mode);
    static FreeElem scalar(const FieldElem& value, AlgebraMode mode);
    static FreeElem generator(char letter, const FieldSpec& spec,
                              AlgebraMode mode);

    const FieldSpec& spec() const { return spec_; }
    AlgebraMode mode() const { return mode_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FreeElem operator-() const;
    // Coefficient-wise scaling by a field element.
    FreeElem scaled(const FieldElem& c) const;

    friend FreeElem operator+(const FreeElem& a, const FreeElem& b);
    friend FreeElem operator-(const FreeElem& a, const FreeElem& b);
    // Noncommutative product: words concatenate in order and reduce.
    friend FreeElem operator*(const FreeElem& a, const FreeElem& b);
    FreeElem& operator+=(const FreeElem& b) { return *this = *this + b; }
    FreeElem& operator-=(const FreeElem& b) { return *this = *this - b; }
    FreeElem& operator*=(const FreeElem& b) { return *this = *this * b; }

    bool operator==(const FreeElem& b) const {
        return spec_ == b.spec_ && mode_ == b.mode_ && terms_ == b.terms_;
    }
    bool operator!=(const FreeElem& b) const { return !(*this == b); }

    std::string to_string() const;

  private:
    FreeElem(const FieldSpec& spec, AlgebraMode mode)
        : spec_(spec), mode_(mode) {}
    void add_term(const std::string& word, const FieldElem& coeff);

    FieldSpec spec_;
    AlgebraMode mode_;
    TermMap terms_;
};

// Dense matrix over FreeElem. Entry products preserve factor order, which
// is what makes the certificate checks meaningful over a noncommutative
// algebra.
class FreeMatrix {
  public:
    FreeMatrix(std::size_t rows, std::size_t cols, const FieldSpec& spec,
               AlgebraMode mode)
        : rows_(rows), cols_(cols), spec_(spec), mode_(mode),
          data_(rows * cols, FreeElem::zero(spec, mode)) {}

    static FreeMatrix identity(std::size_t n, const FieldSpec& spec,
                               AlgebraMode mode);

    const FieldSpec& spec() const { return spec_; }
    AlgebraMode mode() const { return mode_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FreeElem& at(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const FreeElem& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    friend FreeMatrix operator+(const FreeMatrix& a, const FreeMatrix& b);
    friend FreeMatrix operator-(const FreeMatrix& a, const FreeMatrix& b);
    friend FreeMatrix operator*(const FreeMatrix& a, const FreeMatrix& b);

    bool operator==(const FreeMatrix& b) const {
        return rows_ == b.rows_ && cols_ == b.cols_ && spec_ == b.spec_ &&
               mode_ == b.mode_ && data_ == b.data_;
    }
    bool operator!=(const FreeMatrix& b) const { return !(*this == b); }

    std::vector<std::vector<std::string>> entry_strings() const;
    // Aligned grid, one bracketed row per line; used by the cert CLI.
    std::string to_string() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    FieldSpec spec_;
    AlgebraMode mode_;
    std::vector<FreeElem> data_;
};

// The three clauses a certificate can claim. Every built-in certificate
// claims all three; the split exists so a failure report can name the
// clause that broke.
enum class CertClaim { InversePairA, InversePairB, Conjugation };

// A block-matrix witness for one rank identity: invertible A and B
// (with their inverses supplied, not computed) conjugating X into Y.
// Checking A A_inv = A_inv A = I, B B_inv = B_inv B = I and A X B = Y by
// symbolic expansion certifies the identity for every ranked algebra,
// because conjugation by explicit invertibles preserves rank and the
// diagonal blocks of X and Y then force the claimed equation.
struct Certificate {
    std::string name;
    AlgebraMode mode;
    std::size_t n = 0;
    FreeMatrix A, A_inv, B, B_inv, X, Y;
    std::vector<CertClaim> claims;
    // Human-readable statement of the rank identity being witnessed.
    std::string note;
};

struct CheckResult {
    bool pass = false;
    // Empty on pass; otherwise names the failing clause, the entry, and
    // the nonzero difference.
    std::string failure;
};

// Expands every claimed clause to reduced canonical form and compares
// entrywise. Stops at the first failing entry.
CheckResult verify_certificate(const Certificate& cert);

// Stable catalog names, in display order.
std::vector<std::string> builtin_certificate_names();

// Builds one catalog certificate over the given field. Throws
// CharTwoUnsupported for the certificates whose matrices require 2^{-1}
// when the field has characteristic 2, and Error for an unknown name.
Certificate make_builtin_certificate(const std::string& name,
                                     const FieldSpec& spec);

// The full catalog. Propagates CharTwoUnsupported, so callers that want
// partial coverage over characteristic 2 should iterate names and build
// individually.
std::vector<Certificate> builtin_certificates(const FieldSpec& spec);

} // namespace rankforge

#endif
