#include <magcat/errors.hpp>
#include <magcat/fcat.hpp>

#include <map>

#include "doctest.h"

using namespace magcat;

namespace {

DistanceMatrix dm(std::vector<std::vector<long>> rows) {
    DistanceMatrix d(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] < 0)
                d[i].push_back(std::nullopt);  // -1 encodes infinity
            else
                d[i].push_back(Rational(rows[i][j]));
        }
    return d;
}

LocallyFiniteGraph integer_line() {
    LocallyFiniteGraph g;
    g.symmetric = true;
    g.base = {"0"};
    g.neighbors = [](const std::string& v) {
        long n = std::stol(v);
        return std::vector<std::string>{std::to_string(n - 1), std::to_string(n + 1)};
    };
    return g;
}

}  // namespace

TEST_CASE("from_metric basics") {
    FCat point = from_metric(dm({{0}}));
    CHECK(point.num_objects() == 1);
    CHECK(point.num_morphisms() == 1);

    FCat k2 = from_metric(dm({{0, 1}, {1, 0}}), {"a", "b"});
    CHECK(k2.num_objects() == 2);
    CHECK(k2.num_morphisms() == 4);
    CHECK(k2.metric_like());
    CHECK(k2.distance(0, 1) == Exponent(Rational(1)));

    // Degenerate generalized metric spaces are valid inputs.
    FCat degen = from_metric(dm({{0, 0}, {0, 0}}), {"a", "b"});
    CHECK(degen.num_morphisms() == 4);

    CHECK_THROWS_WITH_AS(from_metric(dm({{0, 1, -1}, {1, 0, 1}, {1, 1, 0}})),
                         doctest::Contains("triangle"), ValidationError);
    CHECK_THROWS_AS(from_metric(dm({{1}})), ValidationError);
}

TEST_CASE("round trip through distances") {
    DistanceMatrix d = dm({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    FCat c = from_metric(d, {"x", "y", "z"});
    CHECK(distances(c) == d);
}

TEST_CASE("from_graph on finite graphs") {
    FCat single = from_graph(finite_graph({}, {"v"}, true), Exponent(Rational(2)));
    CHECK(single.num_objects() == 1);
    CHECK(!single.truncation());

    std::vector<std::pair<std::string, std::string>> c5;
    for (int i = 0; i < 5; ++i)
        c5.push_back({"v" + std::to_string(i), "v" + std::to_string((i + 1) % 5)});
    FCat cat = from_graph(finite_graph(c5, {}, true), Exponent(Rational(2)));
    CHECK(cat.num_objects() == 5);
    CHECK(!cat.truncation());  // exploration saturates at radius 2
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            long expect = std::min(std::abs(i - j), 5 - std::abs(i - j));
            auto oi = cat.object_by_name("v" + std::to_string(i));
            auto oj = cat.object_by_name("v" + std::to_string(j));
            CHECK(cat.distance(*oi, *oj) == Exponent(Rational(expect)));
        }
}

TEST_CASE("from_graph on the integer line is truncated") {
    FCat ball = from_graph(integer_line(), Exponent(Rational(3)));
    CHECK(ball.num_objects() == 7);
    REQUIRE(ball.truncation().has_value());
    CHECK(*ball.truncation() == Exponent(Rational(3)));
    auto o = [&](long i) { return *ball.object_by_name(std::to_string(i)); };
    for (long i = -3; i <= 3; ++i)
        for (long j = -3; j <= 3; ++j) {
            auto d = ball.distance(o(i), o(j));
            if (std::abs(i - j) <= 3) {
                REQUIRE(d.has_value());
                CHECK(*d == Exponent(Rational(std::abs(i - j))));
            } else {
                CHECK(!d.has_value());
            }
        }
}

TEST_CASE("ball restriction is monotone in the radius") {
    FCat small = from_graph(integer_line(), Exponent(Rational(2)));
    FCat large = from_graph(integer_line(), Exponent(Rational(4)));
    for (long i = -2; i <= 2; ++i)
        for (long j = -2; j <= 2; ++j) {
            auto a = small.distance(*small.object_by_name(std::to_string(i)),
                                    *small.object_by_name(std::to_string(j)));
            if (!a) continue;  // beyond the small horizon
            auto b = large.distance(*large.object_by_name(std::to_string(i)),
                                    *large.object_by_name(std::to_string(j)));
            REQUIRE(b.has_value());
            CHECK(*a == *b);
        }
}

TEST_CASE("asymmetric adjacency is rejected on symmetric graphs") {
    LocallyFiniteGraph g;
    g.symmetric = true;
    g.base = {"a"};
    g.neighbors = [](const std::string& v) -> std::vector<std::string> {
        if (v == "a") return {"b"};
        return {};
    };
    CHECK_THROWS_AS(from_graph(g, Exponent(Rational(1))), ValidationError);
}

TEST_CASE("poset builders") {
    Poset antichain{{"a", "b", "c"}, {}};
    FCat a = from_finite_poset_unit(antichain);
    CHECK(a.num_morphisms() == 3);

    Poset chain{{"0", "1", "2"}, {{0, 1}, {1, 2}}};
    FCat c = from_finite_poset_unit(chain);
    CHECK(c.num_morphisms() == 6);  // 3 identities + 01, 12, 02
    auto o02 = c.hom(0, 2);
    REQUIRE(o02.size() == 1);
    CHECK(c.morphism(o02[0]).degree == Exponent(Rational(1)));

    // Face poset of the triangle boundary: 3 vertices, 3 edges.
    Poset face{{"v0", "v1", "v2", "e01", "e02", "e12"},
               {{0, 3}, {1, 3}, {0, 4}, {2, 4}, {1, 5}, {2, 5}}};
    FCat f = from_finite_poset_unit(face);
    CHECK(f.num_morphisms() == 12);  // 6 identities + 6 cover relations

    Poset cyclic{{"a", "b"}, {{0, 1}, {1, 0}}};
    CHECK_THROWS_AS(from_finite_poset_unit(cyclic), ValidationError);
}

TEST_CASE("ranked poset builder") {
    RankedPoset chain{{"bot", "top"}, {{0, 1}}, {0, 1}};
    FCat c = from_poset_ranked(chain);
    CHECK(c.num_morphisms() == 3);

    RankedPoset b2{{"bot", "x", "y", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {0, 1, 1, 2}};
    FCat b = from_poset_ranked(b2);
    CHECK(b.distance(0, 3) == Exponent(Rational(2)));
    CHECK(!b.distance(1, 2).has_value());

    RankedPoset bad{{"bot", "top"}, {{0, 1}}, {0, 0}};
    CHECK_NOTHROW(from_poset_ranked(bad));  // non-strict grading is allowed
    RankedPoset nomin{{"a", "b"}, {}, {0, 0}};
    CHECK_THROWS_AS(from_poset_ranked(nomin), ValidationError);
    RankedPoset badphi{{"bot", "top"}, {{0, 1}}, {1, 2}};
    CHECK_THROWS_AS(from_poset_ranked(badphi), ValidationError);
}

TEST_CASE("finite category builder validates axioms") {
    // Z/2 as a one-object category with a degree-0 involution.
    CategorySpec z2;
    z2.objects = {"*"};
    z2.morphisms = {{"g", "*", "*", Rational(0)}};
    z2.composition = {{"g", "g", "id_*"}};
    FCat c = from_finite_category(z2);
    CHECK(c.num_morphisms() == 2);
    CHECK(!c.metric_like());

    // The interval with a degree-0 arrow (I_0).
    CategorySpec i0;
    i0.objects = {"0", "1"};
    i0.morphisms = {{"u", "0", "1", Rational(0)}};
    i0.composition = {};
    CHECK_NOTHROW(from_finite_category(i0));

    // Filtered-composition violation: deg(g o f) > deg f + deg g.
    CategorySpec bad;
    bad.objects = {"a", "b", "c"};
    bad.morphisms = {{"f", "a", "b", Rational(1)},
                     {"g", "b", "c", Rational(1)},
                     {"h", "a", "c", Rational(3)}};
    bad.composition = {{"g", "f", "h"}};
    CHECK_THROWS_WITH_AS(from_finite_category(bad), doctest::Contains("filtered"),
                         ValidationError);

    // Missing composite.
    CategorySpec partial;
    partial.objects = {"a", "b", "c"};
    partial.morphisms = {{"f", "a", "b", Rational(1)}, {"g", "b", "c", Rational(1)}};
    partial.composition = {};
    CHECK_THROWS_WITH_AS(from_finite_category(partial), doctest::Contains("total"),
                         ValidationError);

    // Non-associative table: p o (p o p) = p o q = id, but (p o p) o p = p.
    CategorySpec nonassoc;
    nonassoc.objects = {"*"};
    nonassoc.morphisms = {{"p", "*", "*", Rational(0)}, {"q", "*", "*", Rational(0)}};
    nonassoc.composition = {{"p", "p", "q"}, {"p", "q", "id_*"}, {"q", "p", "p"},
                            {"q", "q", "q"}};
    CHECK_THROWS_WITH_AS(from_finite_category(nonassoc), doctest::Contains("associat"),
                         ValidationError);
}

TEST_CASE("group balls") {
    GroupBall triv;
    triv.family = GroupBall::Family::Cyclic;
    triv.modulus = 1;
    triv.int_generators = {};
    triv.radius = 3;
    GroupBallResult t = from_group(triv);
    CHECK(t.one_object.num_morphisms() == 1);
    CHECK(t.whole_group);

    GroupBall z5;
    z5.family = GroupBall::Family::Cyclic;
    z5.modulus = 5;
    z5.int_generators = {1};
    z5.radius = 5;
    GroupBallResult r5 = from_group(z5);
    CHECK(r5.whole_group);
    std::map<long, int> census;
    for (auto& [e, l] : r5.word_lengths) census[l]++;
    CHECK(census[0] == 1);
    CHECK(census[1] == 2);
    CHECK(census[2] == 2);

    GroupBall z;
    z.family = GroupBall::Family::FreeGroup;
    z.rank = 1;
    z.radius = 3;
    GroupBallResult rz = from_group(z);
    CHECK(!rz.whole_group);
    CHECK(rz.word_lengths.size() == 7);
    CHECK(rz.one_object.truncation().has_value());

    // Table family: Z/2 with an explicit table.
    GroupBall tab;
    tab.family = GroupBall::Family::Table;
    tab.table = {{0, 1}, {1, 0}};
    tab.table_generators = {1};
    tab.radius = 1;
    CHECK(from_group(tab).whole_group);

    GroupBall broken = tab;
    broken.table = {{0, 1}, {1, 5}};
    CHECK_THROWS_AS(from_group(broken), ValidationError);
}

TEST_CASE("kolmogorov quotient") {
    FCat degen2 = from_metric(dm({{0, 0}, {0, 0}}), {"a", "b"});
    FCat q2 = kolmogorov_quotient(degen2);
    CHECK(q2.num_objects() == 1);

    FCat nondegen = from_metric(dm({{0, 1}, {1, 0}}));
    FCat qn = kolmogorov_quotient(nondegen);
    CHECK(qn.num_objects() == 2);

    FCat three = from_metric(dm({{0, 0, 2}, {0, 0, 2}, {2, 2, 0}}), {"a", "b", "c"});
    FCat q3 = kolmogorov_quotient(three);
    CHECK(q3.num_objects() == 2);
    CHECK(q3.distance(0, 1) == Exponent(Rational(2)));
    // Idempotent.
    CHECK(kolmogorov_quotient(q3).num_objects() == 2);
}
