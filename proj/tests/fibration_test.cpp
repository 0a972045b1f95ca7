#include <magcat/errors.hpp>
#include <magcat/fcat.hpp>
#include <magcat/fibration.hpp>
#include <magcat/specseq.hpp>
#include <magcat/magnitude.hpp>

#include "doctest.h"

using namespace magcat;

namespace {

Exponent exp_q(long n) { return Exponent(Rational(n)); }

MetricSpace k2_space() {
    MetricSpace m;
    m.points = {"y0", "y1"};
    m.d = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    return m;
}

MetricSpace k33_space() {
    MetricSpace m;
    for (int i = 0; i < 3; ++i) m.points.push_back("u" + std::to_string(i));
    for (int i = 0; i < 3; ++i) m.points.push_back("w" + std::to_string(i));
    m.d.assign(6, std::vector<Rational>(6, Rational(0)));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (i == j) continue;
            bool same_side = (i < 3) == (j < 3);
            m.d[i][j] = same_side ? 2 : 1;
        }
    return m;
}

MetricSpace cycle_space(int n) {
    MetricSpace m;
    m.d.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        m.points.push_back("c" + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            int diff = std::abs(i - j);
            m.d[i][j] = Rational(std::min(diff, n - diff));
        }
    }
    return m;
}

std::vector<ObjId> base_projection(const MetricAction& a) {
    std::vector<ObjId> proj;
    for (size_t x = 0; x < a.base.size(); ++x)
        for (size_t p = 0; p < a.fibers[x].size(); ++p) proj.push_back(static_cast<ObjId>(x));
    return proj;
}

}  // namespace

TEST_CASE("grothendieck over a point base is the fiber") {
    MetricAction a;
    a.base.points = {"x"};
    a.base.d = {{Rational(0)}};
    a.fibers = {k2_space()};
    a.transport = {{{}}};
    a.transport[0].resize(1);
    FCat e = grothendieck(a);
    CHECK(e.num_objects() == 2);
    CHECK(e.distance(0, 1) == exp_q(1));
}

TEST_CASE("trivial twist gives the product, swapped twist gives K33") {
    MetricAction trivial = cyclic_twist(k2_space(), {0, 1}, 3);
    FCat prism = grothendieck(trivial);
    CHECK(girth(to_metric_space(prism)) == 3);

    MetricAction twisted = cyclic_twist(k2_space(), {1, 0}, 3);
    FCat total = grothendieck(twisted);
    MetricSpace ms = to_metric_space(total);
    CHECK(girth(ms) == 4);
    CHECK(find_isometry(ms, k33_space()).has_value());
    // Same magnitude, not isomorphic: the distance multisets even agree
    // here, so the girth is the separating invariant.
    CHECK(!find_isometry(ms, to_metric_space(prism)).has_value());
    CHECK(distance_multiset(ms) == distance_multiset(to_metric_space(prism)));
    CHECK(magnitude(prism, exp_q(10)) == magnitude(total, exp_q(10)));
}

TEST_CASE("product formula") {
    MetricAction twisted = cyclic_twist(k2_space(), {1, 0}, 3);
    ProductFormulaReport rep = product_formula_check(twisted, exp_q(10));
    CHECK(rep.fibers_match);
    CHECK(rep.magnitude_equal);
    CHECK(rep.weighting_pointwise);

    MetricAction trivial = cyclic_twist(k2_space(), {0, 1}, 4);
    ProductFormulaReport rp = product_formula_check(trivial, exp_q(6));
    CHECK(rp.magnitude_equal);
    CHECK(rp.weighting_pointwise);
}

TEST_CASE("even cycles: identity twist is the product, non-trivial twists are inconsistent") {
    MetricAction even_id = cyclic_twist(k2_space(), {0, 1}, 4);
    FCat total = grothendieck(even_id);
    // Explicit product metric of K2 x C4.
    MetricAction product;
    product.base = cycle_space(4);
    product.fibers.assign(4, k2_space());
    product.transport.assign(4, std::vector<std::vector<int>>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) product.transport[i][j] = {0, 1};
    CHECK(find_isometry(to_metric_space(total), to_metric_space(grothendieck(product)))
              .has_value());

    CHECK_THROWS_WITH_AS(cyclic_twist(k2_space(), {1, 0}, 4),
                         doctest::Contains("even-cycle"), ValidationError);
    CHECK_THROWS_WITH_AS(cyclic_twist(k2_space(), {1, 0}, 6),
                         doctest::Contains("even-cycle"), ValidationError);
    // Odd cycles accept any self-isometry.
    CHECK_NOTHROW(cyclic_twist(k2_space(), {1, 0}, 5));
}

TEST_CASE("fibration detection and extraction round trip") {
    for (bool twist : {false, true}) {
        MetricAction a = cyclic_twist(k2_space(), twist ? std::vector<int>{1, 0}
                                                        : std::vector<int>{0, 1},
                                      3);
        FCat total = grothendieck(a);
        FCat base = to_fcat(a.base);
        std::vector<ObjId> proj = base_projection(a);
        FibrationCheck check = is_metric_fibration(total, base, proj);
        REQUIRE(check.is_fibration);
        MetricAction extracted = extract_action(check.witness);
        FCat rebuilt = grothendieck(extracted);
        std::vector<ObjId> proj2 = base_projection(extracted);
        auto iso = find_fibered_isometry(to_metric_space(rebuilt),
                                         std::vector<int>(proj2.begin(), proj2.end()),
                                         to_metric_space(total),
                                         std::vector<int>(proj.begin(), proj.end()));
        CHECK(iso.has_value());
    }
}

TEST_CASE("a non-fibration is reported with a witness") {
    // C6 -> K3 collapsing antipodal vertices: lifts fail the geodesic law.
    MetricSpace c6 = cycle_space(6);
    MetricSpace k3;
    k3.points = {"a", "b", "c"};
    k3.d.assign(3, std::vector<Rational>(3, Rational(1)));
    for (int i = 0; i < 3; ++i) k3.d[i][i] = 0;
    std::vector<ObjId> proj = {0, 1, 2, 0, 1, 2};
    FibrationCheck check = is_metric_fibration(to_fcat(c6), to_fcat(k3), proj);
    CHECK(!check.is_fibration);
    CHECK(!check.counterexample.empty());
}

TEST_CASE("projection validation") {
    MetricAction a = cyclic_twist(k2_space(), {0, 1}, 3);
    FCat total = grothendieck(a);
    FCat base = to_fcat(a.base);
    std::vector<ObjId> missing = {0, 0, 1, 1, 1, 1};  // never hits base point 2
    CHECK_THROWS_WITH_AS(is_metric_fibration(total, base, missing),
                         doctest::Contains("misses"), ValidationError);
}

TEST_CASE("raw oplax functor: a group acting on its underlying set") {
    GroupBall z5;
    z5.family = GroupBall::Family::Cyclic;
    z5.modulus = 5;
    z5.int_generators = {1};
    z5.radius = 5;
    GroupBallResult ball = from_group(z5);
    REQUIRE(ball.whole_group);

    OplaxFunctor f;
    f.base = ball.one_object;
    // The fiber is the underlying set as a discrete category.
    DistanceMatrix disc(5, std::vector<std::optional<Rational>>(5));
    std::vector<std::string> names;
    for (int i = 0; i < 5; ++i) {
        disc[i][i] = Rational(0);
        names.push_back(std::to_string(i));
    }
    f.fibers = {from_metric(disc, names)};
    // Right multiplication x -> x * g matches diagram-order composition, so
    // every comparison morphism is an identity.
    f.on_mor.resize(f.base.num_morphisms());
    auto element_of = [&](const Morphism& m) -> long {
        if (m.is_identity) return 0;
        return std::stol(m.name);
    };
    for (const auto& m : f.base.morphisms()) {
        long g = element_of(m);
        OplaxFunctor::Transport t;
        for (long x = 0; x < 5; ++x) t.obj.push_back(static_cast<ObjId>((x + g) % 5));
        for (const auto& xi : f.fibers[0].morphisms())
            t.mor.push_back(f.fibers[0].identity(t.obj[xi.src]));
        f.on_mor[m.id] = std::move(t);
    }
    for (const auto& mf : f.base.morphisms()) {
        if (mf.is_identity) continue;
        for (const auto& mg : f.base.morphisms()) {
            if (mg.is_identity) continue;
            std::vector<MorId> comps;
            for (ObjId a = 0; a < 5; ++a) {
                long g = element_of(mf), h = element_of(mg);
                comps.push_back(f.fibers[0].identity(static_cast<ObjId>((a + g + h) % 5)));
            }
            f.tau[{mf.id, mg.id}] = std::move(comps);
        }
    }
    CHECK_NOTHROW(f.validate());

    FCat e = grothendieck(f);
    CHECK(e.num_objects() == 5);
    // E(F) is the Cayley graph C5.
    FCat c5 = from_graph(ball.cayley, exp_q(5));
    auto iso = find_isometry(to_metric_space(e), to_metric_space(c5));
    CHECK(iso.has_value());

    ProductFormulaReport rep = product_formula_check(f, exp_q(8));
    CHECK(rep.fibers_match);
    CHECK(rep.magnitude_equal);
    CHECK(rep.weighting_pointwise);
    CHECK(rep.mag_fiber == NSeries::constant(5, exp_q(8)));
}

TEST_CASE("group acting trivially on a discrete set: non-metric total space") {
    // Z/2 as a one-object degree-0 category acting trivially on two points.
    CategorySpec z2;
    z2.objects = {"*"};
    z2.morphisms = {{"g", "*", "*", Rational(0)}};
    z2.composition = {{"g", "g", "id_*"}};
    OplaxFunctor f;
    f.base = from_finite_category(z2);
    DistanceMatrix disc(2, std::vector<std::optional<Rational>>(2));
    disc[0][0] = Rational(0);
    disc[1][1] = Rational(0);
    f.fibers = {from_metric(disc, {"x", "y"})};
    f.on_mor.resize(f.base.num_morphisms());
    for (const auto& m : f.base.morphisms()) {
        OplaxFunctor::Transport t;
        t.obj = {0, 1};
        t.mor = {f.fibers[0].identity(0), f.fibers[0].identity(1)};
        f.on_mor[m.id] = t;
    }
    for (const auto& mf : f.base.morphisms())
        for (const auto& mg : f.base.morphisms()) {
            if (mf.is_identity || mg.is_identity) continue;
            f.tau[{mf.id, mg.id}] = {f.fibers[0].identity(0), f.fibers[0].identity(1)};
        }
    f.validate();
    FCat e = grothendieck(f);
    // Parallel morphisms over each object pair: not metric-like, and the
    // associativity of the twisted composition is checked exhaustively.
    CHECK(!e.metric_like());
    CHECK(e.num_objects() == 2);
    CHECK(e.num_morphisms() == 4);
    ProductFormulaReport rep = product_formula_check(f, Exponent(Rational(3)));
    CHECK(rep.magnitude_equal);
    CHECK(rep.mag_total == NSeries::one(Exponent(Rational(3))));  // (1/2) * 2
}

TEST_CASE("nerve filtration rejects fractional degrees") {
    DistanceMatrix half = {{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(0)}};
    FCat c = from_metric(half);
    CHECK_THROWS_AS(build_filtered_chain(c, 2, 2), UsageError);
}

TEST_CASE("action validation catches broken transports") {
    MetricAction a = cyclic_twist(k2_space(), {0, 1}, 3);
    a.transport[0][1] = {0, 0};  // not a bijection
    CHECK_THROWS_WITH_AS(a.validate(), doctest::Contains("bijection"), ValidationError);

    MetricAction b = cyclic_twist(k2_space(), {0, 1}, 3);
    b.transport[0][1] = {1, 0};
    b.transport[1][0] = {0, 1};  // no longer mutually inverse
    CHECK_THROWS_AS(b.validate(), ValidationError);
}
