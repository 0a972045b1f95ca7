#ifndef MAGCAT_SERIES_HPP
#define MAGCAT_SERIES_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "magcat/rational.hpp"

namespace magcat {

// A non-negative exact rational exponent of q. Stored in lowest terms,
// compared exactly.
class Exponent {
public:
    Exponent() : v_(0) {}
    explicit Exponent(Rational v);
    explicit Exponent(long v) : Exponent(Rational(v)) {}

    const Rational& value() const { return v_; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return v_ == 0; }

    Exponent operator+(const Exponent& o) const { return Exponent(v_ + o.v_); }
    // Guarded difference: throws UsageError if the result would be negative.
    Exponent operator-(const Exponent& o) const;

    bool operator==(const Exponent& o) const { return v_ == o.v_; }
    bool operator!=(const Exponent& o) const { return v_ != o.v_; }
    bool operator<(const Exponent& o) const { return v_ < o.v_; }
    bool operator<=(const Exponent& o) const { return v_ <= o.v_; }
    bool operator>(const Exponent& o) const { return v_ > o.v_; }
    bool operator>=(const Exponent& o) const { return v_ >= o.v_; }

    std::string str() const { return to_string(v_); }

private:
    Rational v_;
};

// One stored term c * q^e of a truncated Novikov series; c is never zero.
struct SeriesTerm {
    Exponent exponent;
    Rational coefficient;
};

// A truncated series from the ring of rational-coefficient, rational-exponent
// power series in q: finitely many terms, valid as a residue class modulo the
// ideal of terms with exponent strictly above the cutoff (the q^cutoff term
// itself is kept). Binary operations require equal cutoffs. Values are
// immutable after construction; operations are pure.
class NSeries {
public:
    // The zero series at a given cutoff.
    explicit NSeries(Exponent cutoff) : cutoff_(std::move(cutoff)) {}

    // Builds from arbitrary (exponent, coefficient) pairs: merges duplicate
    // exponents, drops zeros and terms above the cutoff. `exact` marks the
    // series as a complete polynomial (safe to evaluate at q = 1); it is
    // cleared automatically if a term had to be dropped.
    NSeries(std::vector<SeriesTerm> terms, Exponent cutoff, bool exact = true);

    static NSeries constant(const Rational& c, const Exponent& cutoff);
    static NSeries monomial(const Rational& c, const Exponent& e, const Exponent& cutoff);
    static NSeries one(const Exponent& cutoff) { return constant(1, cutoff); }

    const Exponent& cutoff() const { return cutoff_; }
    const std::vector<SeriesTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const { return exact_; }
    // Exact polynomials may be re-flagged (e.g. after a provably complete
    // Neumann iteration); this returns a copy with the flag set.
    NSeries as_exact() const;
    NSeries as_truncated() const;

    // Coefficient of q^e (zero if absent).
    Rational coefficient(const Exponent& e) const;
    // Least exponent with nonzero coefficient; UsageError on the zero series.
    Exponent min_exponent() const;

    NSeries operator+(const NSeries& o) const;
    NSeries operator-(const NSeries& o) const;
    NSeries operator-() const;
    NSeries operator*(const NSeries& o) const;
    NSeries scaled(const Rational& c) const;

    // Multiplicative inverse modulo the cutoff ideal. Requires a nonzero
    // constant term; NotInvertibleError otherwise.
    NSeries invert() const;

    // Sum of coefficients, i.e. the value at q = 1. Only exact polynomials
    // may be evaluated; for a genuinely truncated series q = 1 lies outside
    // the formal domain and this throws UsageError.
    Rational eval_at_one() const;

    // Substitutes q -> -q; requires all exponents integral.
    NSeries negate_variable() const;

    bool operator==(const NSeries& o) const;
    bool operator!=(const NSeries& o) const { return !(*this == o); }

    // "1 - 2q + 2q^2", "q^(1/2) + ...", "0".
    std::string str() const;

private:
    void require_same_cutoff(const NSeries& o, const char* op) const;

    Exponent cutoff_;
    std::vector<SeriesTerm> terms_;  // strictly increasing exponents, no zeros
    bool exact_ = true;
};

}  // namespace magcat

#endif
