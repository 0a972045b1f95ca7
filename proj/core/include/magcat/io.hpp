#ifndef MAGCAT_IO_HPP
#define MAGCAT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "magcat/fcat.hpp"
#include "magcat/fibration.hpp"
#include "magcat/maghom.hpp"
#include "magcat/magnitude.hpp"

namespace magcat {

enum class InputKind { Graph, Digraph, Metric, Poset, Category, Group, Action };

InputKind input_kind_from_name(const std::string& name);
std::string input_kind_name(InputKind kind);

struct GraphInput {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    bool symmetric = true;
};

struct PosetInput {
    Poset poset;
    std::vector<long> ranks;
    bool has_ranks = false;
    RankedPoset ranked() const;
};

struct ActionInput {
    GraphInput base;
    GraphInput fiber;
    // Twisted edges: fiber points listed in image order.
    std::vector<std::pair<std::pair<std::string, std::string>, std::vector<std::string>>> twists;
    MetricAction build() const;
};

// Every parser accepts the line-oriented text format or the canonical JSON
// emission of the same kind; diagnostics carry line/field positions.
GraphInput parse_graph(const std::string& text, bool symmetric);
DistanceMatrix parse_metric(const std::string& text, std::vector<std::string>* names);
PosetInput parse_poset(const std::string& text);
CategorySpec parse_category(const std::string& text);
GroupBall parse_group(const std::string& text);
ActionInput parse_action(const std::string& text);

// Canonical JSON emissions (2-space indent, sorted keys).
std::string emit_graph(const GraphInput& g);
std::string emit_metric(const DistanceMatrix& d, const std::vector<std::string>& names);
std::string emit_poset(const PosetInput& p);
std::string emit_category(const CategorySpec& c);
std::string emit_group(const GroupBall& g);
std::string emit_action(const ActionInput& a);

// Result emissions.
std::string emit_series_json(const NSeries& s);
std::string emit_weight_vector_json(const WeightVector& w);
std::string emit_classification_json(const Classification& c);
std::string emit_summary_json(const HomologySummary& h);

std::string read_file(const std::string& path);

}  // namespace magcat

#endif
