#ifndef MAGCAT_FIBRATION_HPP
#define MAGCAT_FIBRATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magcat/fcat.hpp"
#include "magcat/series.hpp"

namespace magcat {

// Finite metric space: symmetric, non-degenerate, finite distances.
struct MetricSpace {
    std::vector<std::string> points;
    std::vector<std::vector<Rational>> d;

    size_t size() const { return points.size(); }
    void validate() const;
};

MetricSpace to_metric_space(const FCat& c);
FCat to_fcat(const MetricSpace& m);

// An isometric transport between fibers over a metric base, compatible up to
// the triangle defect of the base.
struct MetricAction {
    MetricSpace base;
    std::vector<MetricSpace> fibers;  // one per base point
    // transport[x][y] maps fiber-x point indices to fiber-y point indices
    // (x != y); diagonal entries are ignored.
    std::vector<std::vector<std::vector<int>>> transport;

    const std::vector<int>& map(size_t x, size_t y) const { return transport[x][y]; }
    void validate() const;
};

// General normal oplax functor into categories, used where the base is not
// metric (e.g. a group acting on its underlying set).
struct OplaxFunctor {
    FCat base;
    std::vector<FCat> fibers;  // per base object
    struct Transport {
        std::vector<ObjId> obj;
        std::vector<MorId> mor;
    };
    std::vector<Transport> on_mor;  // per base morphism
    // Comparison components tau[{f,g}][a] : F(g o f)(a) -> Fg(Ff(a)),
    // for composable non-identity pairs; identity pairs are forced.
    std::map<std::pair<MorId, MorId>, std::vector<MorId>> tau;

    void validate() const;
};

OplaxFunctor to_oplax(const MetricAction& a);

// Degree-weighted Grothendieck construction E(F).
FCat grothendieck(const OplaxFunctor& f);
FCat grothendieck(const MetricAction& a);

struct FibrationWitness {
    MetricSpace total, base;
    std::vector<int> projection;            // total point -> base point
    std::vector<std::vector<int>> lift;     // [x][y] = unique lift point
};

struct FibrationCheck {
    bool is_fibration = false;
    FibrationWitness witness;
    std::string counterexample;  // first violated pair, empty when fibration
};

// Exhaustive check of unique-lift existence for every (point, base point).
FibrationCheck is_metric_fibration(const FCat& total, const FCat& base,
                                   const std::vector<ObjId>& projection);

// Fibers as induced submetrics, transports from the unique lifts.
MetricAction extract_action(const FibrationWitness& w);

struct ProductFormulaReport {
    NSeries mag_total{Exponent()};
    NSeries mag_base{Exponent()};
    NSeries mag_fiber{Exponent()};
    NSeries product{Exponent()};
    bool fibers_match = false;     // isometric fibers (metric) / equal magnitude
    bool magnitude_equal = false;  // Mag E = Mag X * Mag F
    bool weighting_pointwise = false;
};
ProductFormulaReport product_formula_check(const MetricAction& a, const Exponent& cutoff);
ProductFormulaReport product_formula_check(const OplaxFunctor& f, const Exponent& cutoff);

// Action over the n-cycle: identity transports except one edge twisted by a
// self-isometry theta; longer transports composed along shortest paths. For
// even n a non-trivial twist is inconsistent (both shortest antipodal paths
// force the transport) and is rejected with a witness.
MetricAction cyclic_twist(const MetricSpace& fiber, const std::vector<int>& theta, int n);

// Backtracking isometry search with distance-multiset pruning.
std::optional<std::vector<int>> find_isometry(const MetricSpace& a, const MetricSpace& b);
// Isometry required to commute with projections to a common base.
std::optional<std::vector<int>> find_fibered_isometry(const MetricSpace& a,
                                                      const std::vector<int>& proj_a,
                                                      const MetricSpace& b,
                                                      const std::vector<int>& proj_b);

// Length of the shortest cycle of the unit-distance graph; 0 if acyclic.
long girth(const MetricSpace& m);
std::vector<Rational> distance_multiset(const MetricSpace& m);

}  // namespace magcat

#endif
