#include "magcat/corpus.hpp"

namespace magcat::corpus {

FCat point() { return from_metric({{Rational(0)}}, {"pt"}); }

FCat complete_graph(int n) {
    DistanceMatrix d(n, std::vector<std::optional<Rational>>(n, Rational(1)));
    for (int i = 0; i < n; ++i) d[i][i] = Rational(0);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("k" + std::to_string(i));
    return from_metric(d, names);
}

FCat cycle_graph(int n) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({"v" + std::to_string(i), "v" + std::to_string((i + 1) % n)});
    return from_graph(finite_graph(edges, {}, true), Exponent(Rational(n)));
}

FCat degenerate_pair() {
    return from_metric({{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}, {"a", "b"});
}

FCat z2_category() {
    CategorySpec spec;
    spec.objects = {"*"};
    spec.morphisms = {{"g", "*", "*", Rational(0)}};
    spec.composition = {{"g", "g", "id_*"}};
    return from_finite_category(spec);
}

Poset triangle_boundary_poset() {
    return Poset{{"v0", "v1", "v2", "e01", "e02", "e12"},
                 {{0, 3}, {1, 3}, {0, 4}, {2, 4}, {1, 5}, {2, 5}}};
}

FCat triangle_boundary_category() { return from_finite_poset_unit(triangle_boundary_poset()); }

RankedPoset boolean_lattice_2() {
    return RankedPoset{{"bot", "x", "y", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {0, 1, 1, 2}};
}

RankedPoset two_lines_intersection() {
    // I(S) for two lines through the origin in the plane, ranked by codim.
    return RankedPoset{{"V", "l1", "l2", "O"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {0, 1, 1, 2}};
}

RankedPoset two_lines_powerset() {
    // P(S) ordered by inclusion, graded by the codim of the intersection.
    return RankedPoset{
        {"{}", "{1}", "{2}", "{1,2}"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {0, 1, 1, 2}};
}

GroupBall z5_ball(long radius) {
    GroupBall g;
    g.family = GroupBall::Family::Cyclic;
    g.modulus = 5;
    g.int_generators = {1};
    g.radius = radius;
    return g;
}

GroupBall z_ball(long radius) {
    GroupBall g;
    g.family = GroupBall::Family::FreeGroup;
    g.rank = 1;
    g.radius = radius;
    return g;
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

Digraph diamond() {
    Digraph d;
    d.vertices = {"a", "b", "c", "d"};
    d.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    return d;
}

Digraph directed_cycle(int n) {
    Digraph d;
    for (int i = 0; i < n; ++i) d.vertices.push_back("w" + std::to_string(i));
    for (int i = 0; i < n; ++i) d.edges.insert({i, (i + 1) % n});
    return d;
}

namespace {
MetricSpace k2_space() {
    MetricSpace m;
    m.points = {"y0", "y1"};
    m.d = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    return m;
}
}  // namespace

MetricAction prism_action() { return cyclic_twist(k2_space(), {0, 1}, 3); }

MetricAction k33_action() { return cyclic_twist(k2_space(), {1, 0}, 3); }

std::vector<std::pair<std::string, FCat>> uniform_corpus() {
    std::vector<std::pair<std::string, FCat>> out;
    out.push_back({"point", point()});
    out.push_back({"K2", complete_graph(2)});
    out.push_back({"K3", complete_graph(3)});
    out.push_back({"C4", cycle_graph(4)});
    out.push_back({"C5", cycle_graph(5)});
    out.push_back({"K3xK2", grothendieck(prism_action())});
    out.push_back({"K33", grothendieck(k33_action())});
    out.push_back({"triangle-boundary", triangle_boundary_category()});
    out.push_back({"Z5-cayley", from_graph(from_group(z5_ball(5)).cayley, Exponent(Rational(5)))});
    out.push_back({"Z-ball-4", from_graph(integer_line(), Exponent(Rational(4)))});
    out.push_back({"diamond", from_digraph(diamond())});
    out.push_back({"C5-digraph", from_digraph(directed_cycle(5))});
    return out;
}

std::vector<Document> documents() {
    std::vector<Document> docs;
    auto graph_doc = [&](const std::string& name, const FCat& c) {
        GraphInput g;
        g.symmetric = true;
        for (ObjId a = 0; a < c.num_objects(); ++a) g.vertices.push_back(c.object_name(a));
        for (const auto& m : c.morphisms())
            if (!m.is_identity && m.degree == Exponent(Rational(1)) && m.src < m.tgt)
                g.edges.push_back({c.object_name(m.src), c.object_name(m.tgt)});
        docs.push_back({name, InputKind::Graph, emit_graph(g)});
    };
    graph_doc("point", point());
    graph_doc("K2", complete_graph(2));
    graph_doc("K3", complete_graph(3));
    graph_doc("C4", cycle_graph(4));
    graph_doc("C5", cycle_graph(5));
    graph_doc("K3xK2", grothendieck(prism_action()));
    graph_doc("K33", grothendieck(k33_action()));

    {
        FCat degen = degenerate_pair();
        docs.push_back({"two-point-degenerate", InputKind::Metric,
                        emit_metric(distances(degen), {"a", "b"})});
    }
    {
        PosetInput p;
        p.poset = triangle_boundary_poset();
        docs.push_back({"triangle-boundary", InputKind::Poset, emit_poset(p)});
    }
    {
        RankedPoset b2 = boolean_lattice_2();
        PosetInput p;
        p.poset = Poset{b2.elements, b2.covers};
        p.has_ranks = true;
        p.ranks = b2.phi;
        docs.push_back({"B2", InputKind::Poset, emit_poset(p)});
    }
    {
        CategorySpec z2;
        z2.objects = {"*"};
        z2.morphisms = {{"g", "*", "*", Rational(0)}};
        z2.composition = {{"g", "g", "id_*"}};
        docs.push_back({"Z2-category", InputKind::Category, emit_category(z2)});
    }
    docs.push_back({"Z5-group", InputKind::Group, emit_group(z5_ball(8))});
    docs.push_back({"Z-group", InputKind::Group, emit_group(z_ball(4))});
    {
        Digraph d = diamond();
        GraphInput g;
        g.symmetric = false;
        g.vertices = d.vertices;
        for (auto [a, b] : d.edges) g.edges.push_back({d.vertices[a], d.vertices[b]});
        docs.push_back({"diamond", InputKind::Digraph, emit_graph(g)});
    }
    {
        Digraph d = directed_cycle(5);
        GraphInput g;
        g.symmetric = false;
        g.vertices = d.vertices;
        for (auto [a, b] : d.edges) g.edges.push_back({d.vertices[a], d.vertices[b]});
        docs.push_back({"C5-digraph", InputKind::Digraph, emit_graph(g)});
    }
    {
        ActionInput a;
        a.base.symmetric = true;
        a.base.vertices = {"c0", "c1", "c2"};
        a.base.edges = {{"c0", "c1"}, {"c1", "c2"}, {"c2", "c0"}};
        a.fiber.symmetric = true;
        a.fiber.vertices = {"y0", "y1"};
        a.fiber.edges = {{"y0", "y1"}};
        a.twists = {{{"c2", "c0"}, {"y1", "y0"}}};
        docs.push_back({"K33-action", InputKind::Action, emit_action(a)});
    }
    return docs;
}

}  // namespace magcat::corpus
