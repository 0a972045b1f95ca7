#ifndef MAGCAT_CORPUS_HPP
#define MAGCAT_CORPUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "magcat/fcat.hpp"
#include "magcat/fibration.hpp"
#include "magcat/io.hpp"
#include "magcat/specseq.hpp"

namespace magcat::corpus {

FCat point();
FCat complete_graph(int n);
FCat cycle_graph(int n);
FCat degenerate_pair();
FCat z2_category();
FCat triangle_boundary_category();

Poset triangle_boundary_poset();
RankedPoset boolean_lattice_2();
RankedPoset two_lines_intersection();
RankedPoset two_lines_powerset();

GroupBall z5_ball(long radius);
GroupBall z_ball(long radius);
LocallyFiniteGraph integer_line();

Digraph diamond();
Digraph directed_cycle(int n);

MetricAction prism_action();  // trivial K2 action over the triangle
MetricAction k33_action();    // one edge twisted by the involution

// Uniform categories for the matrix-vs-path-expansion oracle check.
std::vector<std::pair<std::string, FCat>> uniform_corpus();

// Canonical parseable documents of every corpus object, for round-trip and
// determinism checks: (name, kind, document).
struct Document {
    std::string name;
    InputKind kind;
    std::string text;
};
std::vector<Document> documents();

}  // namespace magcat::corpus

#endif
