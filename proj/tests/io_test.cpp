#include <magcat/corpus.hpp>
#include <magcat/errors.hpp>
#include <magcat/io.hpp>
#include <magcat/magnitude.hpp>

#include <fstream>

#include "doctest.h"

using namespace magcat;

namespace {

std::string reemit(InputKind kind, const std::string& text) {
    switch (kind) {
        case InputKind::Graph: return emit_graph(parse_graph(text, true));
        case InputKind::Digraph: return emit_graph(parse_graph(text, false));
        case InputKind::Metric: {
            std::vector<std::string> names;
            DistanceMatrix d = parse_metric(text, &names);
            return emit_metric(d, names);
        }
        case InputKind::Poset: return emit_poset(parse_poset(text));
        case InputKind::Category: return emit_category(parse_category(text));
        case InputKind::Group: return emit_group(parse_group(text));
        case InputKind::Action: return emit_action(parse_action(text));
    }
    return "";
}

}  // namespace

TEST_CASE("text formats parse") {
    GraphInput g = parse_graph("a -- b\nb -- c\n# comment\nisolated\n", true);
    CHECK(g.vertices.size() == 4);
    CHECK(g.edges.size() == 2);
    CHECK_THROWS_AS(parse_graph("a -> b\n", true), ParseError);

    GraphInput d = parse_graph("a -> b\n", false);
    CHECK(!d.symmetric);

    std::vector<std::string> names;
    DistanceMatrix m = parse_metric("0 1\n1 0\n", &names);
    CHECK(m.size() == 2);
    CHECK(*m[0][1] == 1);
    DistanceMatrix minf = parse_metric("0 inf\ninf 0\n", &names);
    CHECK(!minf[0][1].has_value());
    CHECK_THROWS_WITH_AS(parse_metric("0 1/0\n1 0\n", &names), doctest::Contains("line 1"),
                         ParseError);

    PosetInput p = parse_poset("a < b\nrank a = 0\nrank b = 1\n");
    CHECK(p.poset.elements.size() == 2);
    CHECK(p.has_ranks);
    CHECK(p.ranked().phi == std::vector<long>{0, 1});
    CHECK_THROWS_AS(parse_poset("a <\n"), ParseError);
}

TEST_CASE("canonical emissions round-trip") {
    for (const auto& doc : corpus::documents()) {
        CAPTURE(doc.name);
        std::string once = reemit(doc.kind, doc.text);
        CHECK(once == doc.text);  // documents are canonical
        std::string twice = reemit(doc.kind, once);
        CHECK(twice == once);
    }
}

TEST_CASE("series emission quadruples") {
    NSeries s({{Exponent(Rational(1, 2)), Rational(-3, 2)}, {Exponent(), Rational(1)}},
              Exponent(Rational(3)));
    std::string j = emit_series_json(s);
    CHECK(j.find("\"1\",\n") != std::string::npos);  // cutoff denominator possible
    CHECK(j.find("-3") != std::string::npos);
    CHECK(j.find("1 - 3/2q^(1/2)") != std::string::npos);
}

TEST_CASE("golden magnitudes of the corpus") {
    Exponent L(Rational(4));
    std::vector<std::pair<std::string, std::string>> expected = {
        {"point", "1"},
        {"K2", "2 - 2q + 2q^2 - 2q^3 + 2q^4"},
        {"K3", "3 - 6q + 12q^2 - 24q^3 + 48q^4"},
        {"triangle-boundary", "6 - 6q"},
    };
    auto cats = corpus::uniform_corpus();
    for (const auto& [name, want] : expected) {
        for (const auto& [cname, cat] : cats)
            if (cname == name) CHECK(magnitude(cat, L).str() == want);
    }
}
