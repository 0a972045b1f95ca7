#include <magcat/errors.hpp>
#include <magcat/series.hpp>

#include <map>
#include <random>

#include "doctest.h"

using namespace magcat;

namespace {

Exponent exp_q(long num, long den = 1) { return Exponent(Rational(num, den)); }

NSeries make(std::vector<std::pair<Rational, Rational>> terms, const Exponent& cutoff) {
    std::vector<SeriesTerm> ts;
    for (auto& [e, c] : terms) ts.push_back({Exponent(e), c});
    return NSeries(std::move(ts), cutoff);
}

// Independent term-merge oracle for addition.
NSeries add_oracle(const NSeries& a, const NSeries& b) {
    std::map<Rational, Rational> merged;
    for (const auto& t : a.terms()) merged[t.exponent.value()] += t.coefficient;
    for (const auto& t : b.terms()) merged[t.exponent.value()] += t.coefficient;
    std::vector<SeriesTerm> ts;
    for (auto& [e, c] : merged) ts.push_back({Exponent(e), c});
    return NSeries(std::move(ts), a.cutoff());
}

// Brute-force convolution oracle for multiplication.
NSeries mul_oracle(const NSeries& a, const NSeries& b) {
    std::map<Rational, Rational> merged;
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) {
            Rational e = s.exponent.value() + t.exponent.value();
            if (e > a.cutoff().value()) continue;
            merged[e] += s.coefficient * t.coefficient;
        }
    std::vector<SeriesTerm> ts;
    for (auto& [e, c] : merged) ts.push_back({Exponent(e), c});
    return NSeries(std::move(ts), a.cutoff());
}

// Triangular-solve oracle for inverses of integer-exponent series.
NSeries invert_oracle(const NSeries& a, long cutoff) {
    std::vector<Rational> c(cutoff + 1, Rational(0));
    for (const auto& t : a.terms()) c[t.exponent.value().get_num().get_si()] = t.coefficient;
    std::vector<Rational> b(cutoff + 1, Rational(0));
    b[0] = Rational(1) / c[0];
    for (long k = 1; k <= cutoff; ++k) {
        Rational sum(0);
        for (long j = 1; j <= k; ++j) sum += c[j] * b[k - j];
        b[k] = -sum / c[0];
    }
    std::vector<SeriesTerm> ts;
    for (long k = 0; k <= cutoff; ++k) ts.push_back({exp_q(k), b[k]});
    return NSeries(std::move(ts), exp_q(cutoff));
}

NSeries random_series(std::mt19937& rng, const Exponent& cutoff) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> enum_(0, 9);
    std::vector<SeriesTerm> ts;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Rational e(enum_(rng), den(rng));
        e.canonicalize();
        if (e > cutoff.value()) continue;
        Rational c(num(rng), den(rng));
        c.canonicalize();
        ts.push_back({Exponent(e), c});
    }
    return NSeries(std::move(ts), cutoff);
}

}  // namespace

TEST_CASE("exponents are exact non-negative rationals") {
    CHECK_THROWS_AS(Exponent(Rational(-1)), UsageError);
    CHECK(Exponent(Rational(2, 4)) == Exponent(Rational(1, 2)));
    CHECK(exp_q(1, 2) + exp_q(3, 2) == exp_q(2));
    CHECK_THROWS_AS(exp_q(1) - exp_q(2), UsageError);
}

TEST_CASE("addition merges and cancels") {
    Exponent L = exp_q(3);
    CHECK(make({{0, 1}, {1, 1}}, L) + make({{0, 1}, {1, -1}}, L) == make({{0, 2}}, L));
    CHECK(make({{Rational(1, 2), 1}}, L) + make({{Rational(1, 2), 1}}, L) ==
          make({{Rational(1, 2), 2}}, L));
    NSeries lhs = make({{0, 1}, {1, -2}, {2, 2}}, L) + make({{1, 2}}, L);
    CHECK(lhs == make({{0, 1}, {2, 2}}, L));
    CHECK(lhs == add_oracle(make({{0, 1}, {1, -2}, {2, 2}}, L), make({{1, 2}}, L)));
    CHECK_THROWS_AS(make({}, exp_q(2)) + make({}, exp_q(3)), UsageError);
}

TEST_CASE("multiplication is truncated convolution") {
    Exponent L = exp_q(2);
    CHECK(make({{0, 1}, {1, 1}}, L) * make({{0, 1}, {1, -1}}, L) == make({{0, 1}, {2, -1}}, L));
    CHECK(NSeries::monomial(1, exp_q(1, 2), L) * NSeries::monomial(1, exp_q(3, 2), L) ==
          NSeries::monomial(1, exp_q(2), L));
    NSeries a = make({{0, 2}, {1, -2}}, L);
    NSeries b = make({{0, 3}, {1, -6}}, L);
    CHECK(a * b == make({{0, 6}, {1, -18}, {2, 12}}, L));
    CHECK(a * b == mul_oracle(a, b));
}

TEST_CASE("inverses") {
    CHECK(NSeries::one(exp_q(4)).invert() == NSeries::one(exp_q(4)));
    Exponent L = exp_q(3);
    NSeries one_plus_q = make({{0, 1}, {1, 1}}, L);
    CHECK(one_plus_q.invert() == make({{0, 1}, {1, -1}, {2, 1}, {3, -1}}, L));
    CHECK(one_plus_q.invert() == invert_oracle(one_plus_q, 3));

    NSeries g = make({{0, 1}, {1, 2}, {2, 2}}, L);
    NSeries ginv = g.invert();
    CHECK(ginv.coefficient(exp_q(0)) == 1);
    CHECK(ginv.coefficient(exp_q(1)) == -2);
    CHECK(ginv.coefficient(exp_q(2)) == 2);
    CHECK(ginv.coefficient(exp_q(3)) == 0);
    CHECK(ginv == invert_oracle(g, 3));

    CHECK_THROWS_AS(make({{1, 1}}, L).invert(), NotInvertibleError);
}

TEST_CASE("evaluation at q = 1 needs an exact polynomial") {
    Exponent L = exp_q(2);
    CHECK(make({{0, 6}, {1, -6}}, L).eval_at_one() == 0);
    CHECK(NSeries::one(L).eval_at_one() == 1);
    CHECK(make({{0, 3}, {1, -3}, {2, 1}}, L).eval_at_one() == 1);
    NSeries truncated = make({{0, 1}, {1, 1}}, L).invert();
    CHECK_THROWS_AS(truncated.eval_at_one(), UsageError);
    // A dropped term marks the result truncated.
    NSeries dropped = make({{0, 1}, {2, 1}}, L) * make({{0, 1}, {1, 1}}, L);
    CHECK(!dropped.is_exact());
}

TEST_CASE("text rendering") {
    Exponent L = exp_q(3);
    CHECK(make({{0, 3}, {1, -6}, {2, 12}}, L).str() == "3 - 6q + 12q^2");
    CHECK(make({{Rational(1, 2), 1}}, L).str() == "q^(1/2)");
    CHECK(make({{0, Rational(1, 2)}}, L).str() == "1/2");
    CHECK(NSeries(L).str() == "0");
    CHECK(make({{1, -1}, {3, 1}}, L).str() == "-q + q^3");
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(20240811);
    Exponent L = exp_q(3);
    int checked = 0;
    for (int trial = 0; trial < 1100; ++trial) {
        NSeries a = random_series(rng, L);
        NSeries b = random_series(rng, L);
        NSeries c = random_series(rng, L);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == add_oracle(a, b));
        REQUIRE(a * b == mul_oracle(a, b));
        NSeries combined = a * b + c;
        for (const auto& t : combined.terms()) {
            REQUIRE(t.coefficient != 0);
            REQUIRE(t.exponent <= L);
        }
        ++checked;
    }
    CHECK(checked >= 1000);
}

TEST_CASE("inverse property on random units") {
    std::mt19937 rng(7);
    Exponent L = exp_q(3);
    for (int trial = 0; trial < 300; ++trial) {
        NSeries a = random_series(rng, L);
        if (a.coefficient(Exponent()) == 0) continue;
        CHECK(a * a.invert() == NSeries::one(L).as_truncated());
    }
}
