#ifndef MAGCAT_FCAT_HPP
#define MAGCAT_FCAT_HPP

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "magcat/series.hpp"

namespace magcat {

using ObjId = int;
using MorId = int;

struct Morphism {
    MorId id = -1;
    ObjId src = -1;
    ObjId tgt = -1;
    Exponent degree;
    bool is_identity = false;
    std::string name;
};

// A finite category enriched in filtered sets: objects, degree-weighted
// morphisms and a composition table. Composition must satisfy
// deg(g o f) <= deg f + deg g, identities sit at degree 0.
//
// A category built from a radius-truncated infinite object (graph ball,
// group ball) carries its truncation radius; for those, composites are only
// required to exist when deg f + deg g stays within the radius, which is all
// any degree-bounded computation ever touches. Values are immutable after
// validation.
class FCat {
public:
    FCat() = default;

    ObjId add_object(const std::string& name);
    // Identity morphisms are added automatically for every object.
    MorId add_morphism(ObjId src, ObjId tgt, Exponent degree, const std::string& name);
    void set_composite(MorId g, MorId f, MorId gf);
    void set_truncation(Exponent radius) { truncation_ = std::move(radius); }
    void finalize();  // runs validate(), freezes hom caches

    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
    const std::string& object_name(ObjId a) const { return objects_[a]; }
    std::optional<ObjId> object_by_name(const std::string& name) const;
    const Morphism& morphism(MorId m) const { return morphisms_[m]; }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    MorId identity(ObjId a) const { return identity_[a]; }

    const std::vector<MorId>& hom(ObjId a, ObjId b) const;
    const std::vector<MorId>& morphisms_from(ObjId a) const { return from_[a]; }
    const std::vector<MorId>& morphisms_into(ObjId b) const { return into_[b]; }

    bool has_composite(MorId g, MorId f) const;
    MorId compose(MorId g, MorId f) const;  // throws UsageError if absent

    // True when every hom set has at most one element (metric-like).
    bool metric_like() const { return metric_like_; }
    const std::optional<Exponent>& truncation() const { return truncation_; }
    // Distance d(a, b) for metric-like categories; nullopt encodes infinity
    // (no morphism).
    std::optional<Exponent> distance(ObjId a, ObjId b) const;

private:
    void validate() const;

    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<MorId> identity_;
    std::unordered_map<uint64_t, MorId> comp_;
    std::vector<std::vector<std::vector<MorId>>> hom_;  // [a][b]
    std::vector<std::vector<MorId>> from_, into_;
    bool metric_like_ = false;
    bool finalized_ = false;
    std::optional<Exponent> truncation_;
};

// ---------------------------------------------------------------------------
// Builders

// Square distance matrix; nullopt entries encode infinite distance.
using DistanceMatrix = std::vector<std::vector<std::optional<Rational>>>;

// Generalized metric space as a category: one morphism per finite distance.
// Validates zero diagonal and the (infinity-absorbing) triangle inequality.
FCat from_metric(const DistanceMatrix& d, const std::vector<std::string>& names = {});

// A possibly infinite graph presented by a neighbor oracle. The oracle must
// be deterministic and terminate with a finite list on every call.
struct LocallyFiniteGraph {
    std::function<std::vector<std::string>(const std::string&)> neighbors;
    std::vector<std::string> base;
    bool symmetric = true;  // graph vs digraph
};

// Finite edge-list graph as an oracle (finite graphs, CLI input).
LocallyFiniteGraph finite_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                                const std::vector<std::string>& vertices, bool symmetric);

// Restriction of the path metric to the union of closed balls of the given
// radius around the base labels. Pairs farther than the radius get no
// morphism. If the exploration provably exhausts the (reachable) graph the
// result is complete, otherwise it is marked truncated at the radius.
FCat from_graph(const LocallyFiniteGraph& g, const Exponent& radius);

// Finite poset given by strict relations (closed under transitivity after
// construction). Element order fixes object indices.
struct Poset {
    std::vector<std::string> elements;
    std::vector<std::pair<int, int>> less;  // a < b pairs (any generating set)
};

// Full strict order relation matrix of p (transitive closure); validates
// irreflexivity/antisymmetry.
std::vector<std::vector<bool>> strict_order(const Poset& p);

// Poset with all non-identity relations at degree 1 (the order-complex
// encoding; magnitude of this category is the simplicial Euler polynomial).
FCat from_finite_poset_unit(const Poset& p);

// Poset with a minimum element and an order-preserving grading with
// phi(min) = 0. Covers may be any generating set of the order.
struct RankedPoset {
    std::vector<std::string> elements;
    std::vector<std::pair<int, int>> covers;
    std::vector<long> phi;
};

// d(a, b) = phi(b) - phi(a) for a <= b, infinity otherwise.
FCat from_poset_ranked(const RankedPoset& p);

// User-supplied finite category; every axiom is checked with a witness.
struct CategorySpec {
    std::vector<std::string> objects;
    struct Mor {
        std::string name, src, tgt;
        Rational degree;
    };
    std::vector<Mor> morphisms;  // identities included or added by name "id_<obj>"
    // Composition triples (g, f, g o f) by morphism name, for all composable
    // non-forced pairs. Pairs involving identities may be omitted.
    std::vector<std::array<std::string, 3>> composition;
};
FCat from_finite_category(const CategorySpec& spec);

// Finitely generated group, materialized as a word-length ball.
struct GroupBall {
    enum class Family { Table, FreeGroup, FreeAbelian, Cyclic };
    Family family = Family::Cyclic;
    // Family::Table
    std::vector<std::vector<int>> table;
    std::vector<std::string> element_names;
    std::vector<int> table_generators;
    // Family::FreeGroup / Family::FreeAbelian
    int rank = 0;
    // Family::Cyclic
    int modulus = 0;
    std::vector<long> int_generators;  // Cyclic / FreeAbelian generator vectors' nonzero slots
    long radius = 0;
    bool symmetrize = true;      // replace S by S u S^{-1}
    bool directed_cayley = false;
};

struct GroupBallResult {
    FCat one_object;             // Mor = ball elements, deg = word length
    LocallyFiniteGraph cayley;   // neighbors(g) = { g s }
    std::vector<std::pair<std::string, long>> word_lengths;  // ball census
    bool whole_group = false;    // ball closed under multiplication
};
GroupBallResult from_group(const GroupBall& g);

// Collapse of zero-distance pairs of a generalized metric space. Input must
// be metric-like and complete; the result is non-degenerate. Idempotent.
FCat kolmogorov_quotient(const FCat& x);

// Distance matrix of a metric-like FCat (inverse of from_metric).
DistanceMatrix distances(const FCat& c);

}  // namespace magcat

#endif
