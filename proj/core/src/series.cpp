#include "magcat/series.hpp"

#include <algorithm>
#include <map>

#include "magcat/errors.hpp"

namespace magcat {

Exponent::Exponent(Rational v) : v_(std::move(v)) {
    v_.canonicalize();
    if (v_ < 0) throw UsageError("exponent must be non-negative, got " + to_string(v_));
}

Exponent Exponent::operator-(const Exponent& o) const {
    if (o.v_ > v_)
        throw UsageError("exponent difference would be negative: " + str() + " - " + o.str());
    return Exponent(v_ - o.v_);
}

namespace {
// Key order for the term map: exact rational comparison.
struct RationalLess {
    bool operator()(const Rational& a, const Rational& b) const { return a < b; }
};
}  // namespace

NSeries::NSeries(std::vector<SeriesTerm> terms, Exponent cutoff, bool exact)
    : cutoff_(std::move(cutoff)), exact_(exact) {
    std::map<Rational, Rational, RationalLess> merged;
    for (auto& t : terms) {
        if (t.exponent > cutoff_) {
            exact_ = false;
            continue;
        }
        merged[t.exponent.value()] += t.coefficient;
    }
    for (auto& [e, c] : merged) {
        if (c == 0) continue;
        terms_.push_back({Exponent(e), c});
    }
}

NSeries NSeries::constant(const Rational& c, const Exponent& cutoff) {
    return NSeries({{Exponent(), c}}, cutoff);
}

NSeries NSeries::monomial(const Rational& c, const Exponent& e, const Exponent& cutoff) {
    return NSeries({{e, c}}, cutoff);
}

NSeries NSeries::as_exact() const {
    NSeries r = *this;
    r.exact_ = true;
    return r;
}

NSeries NSeries::as_truncated() const {
    NSeries r = *this;
    r.exact_ = false;
    return r;
}

Rational NSeries::coefficient(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const SeriesTerm& t, const Exponent& x) { return t.exponent < x; });
    if (it != terms_.end() && it->exponent == e) return it->coefficient;
    return Rational(0);
}

Exponent NSeries::min_exponent() const {
    if (terms_.empty()) throw UsageError("min_exponent of the zero series");
    return terms_.front().exponent;
}

void NSeries::require_same_cutoff(const NSeries& o, const char* op) const {
    if (!(cutoff_ == o.cutoff_))
        throw UsageError(std::string("cutoff mismatch in ") + op + ": " + cutoff_.str() +
                         " vs " + o.cutoff_.str());
}

NSeries NSeries::operator+(const NSeries& o) const {
    require_same_cutoff(o, "add");
    NSeries out(cutoff_);
    out.exact_ = exact_ && o.exact_;
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->exponent < a->exponent) {
            out.terms_.push_back(*b++);
        } else {
            Rational c = a->coefficient + b->coefficient;
            if (c != 0) out.terms_.push_back({a->exponent, c});
            ++a;
            ++b;
        }
    }
    return out;
}

NSeries NSeries::operator-() const {
    NSeries out = *this;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

NSeries NSeries::operator-(const NSeries& o) const { return *this + (-o); }

NSeries NSeries::scaled(const Rational& c) const {
    NSeries out(cutoff_);
    out.exact_ = exact_;
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coefficient *= c;
    return out;
}

NSeries NSeries::operator*(const NSeries& o) const {
    require_same_cutoff(o, "mul");
    std::map<Rational, Rational, RationalLess> merged;
    bool dropped = false;
    for (const auto& s : terms_) {
        for (const auto& t : o.terms_) {
            Exponent e = s.exponent + t.exponent;
            if (e > cutoff_) {
                dropped = true;
                continue;
            }
            merged[e.value()] += s.coefficient * t.coefficient;
        }
    }
    NSeries out(cutoff_);
    out.exact_ = exact_ && o.exact_ && !dropped;
    for (auto& [e, c] : merged) {
        if (c == 0) continue;
        out.terms_.push_back({Exponent(e), c});
    }
    return out;
}

NSeries NSeries::invert() const {
    Rational c0 = coefficient(Exponent());
    if (c0 == 0)
        throw NotInvertibleError("series has zero constant term: " + str());
    // a = c0 (1 - g) with all exponents of g positive, so
    // a^{-1} = (1/c0) sum_n g^n; powers eventually fall past the cutoff.
    NSeries g = NSeries::one(cutoff_) - scaled(Rational(1) / c0);
    NSeries acc = NSeries::one(cutoff_);
    NSeries power = NSeries::one(cutoff_);
    if (!g.is_zero()) {
        Exponent eps = g.min_exponent();
        // n * eps > cutoff terminates; eps > 0 by construction.
        while (true) {
            power = power * g;
            if (power.is_zero()) break;
            acc = acc + power;
            if (power.min_exponent() + eps > cutoff_) break;
        }
    }
    NSeries out = acc.scaled(Rational(1) / c0);
    // Only a constant has a polynomial inverse we can certify here.
    out.exact_ = exact_ && g.is_zero();
    return out;
}

Rational NSeries::eval_at_one() const {
    if (!exact_)
        throw UsageError("q = 1 evaluation of a truncated series is outside the formal domain");
    Rational sum(0);
    for (const auto& t : terms_) sum += t.coefficient;
    return sum;
}

NSeries NSeries::negate_variable() const {
    NSeries out(cutoff_);
    out.exact_ = exact_;
    out.terms_ = terms_;
    for (auto& t : out.terms_) {
        if (!t.exponent.is_integer())
            throw UsageError("q -> -q substitution requires integer exponents, got q^" +
                             t.exponent.str());
        if (t.exponent.value().get_num() % 2 != 0) t.coefficient = -t.coefficient;
    }
    return out;
}

bool NSeries::operator==(const NSeries& o) const {
    require_same_cutoff(o, "compare");
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exponent != o.terms_[i].exponent) return false;
        if (terms_[i].coefficient != o.terms_[i].coefficient) return false;
    }
    return true;
}

std::string NSeries::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coefficient;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        Rational a = abs(c);
        std::string coeff = to_string(a);
        if (t.exponent.is_zero()) {
            out += coeff;
        } else {
            std::string power;
            if (t.exponent == Exponent(Rational(1)))
                power = "q";
            else if (t.exponent.is_integer())
                power = "q^" + t.exponent.str();
            else
                power = "q^(" + t.exponent.str() + ")";
            out += (a == 1) ? power : coeff + power;
        }
        first = false;
    }
    return out;
}

}  // namespace magcat
