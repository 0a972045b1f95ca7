#ifndef MAGCAT_MAGNITUDE_HPP
#define MAGCAT_MAGNITUDE_HPP

#include <optional>
#include <string>
#include <vector>

#include "magcat/fcat.hpp"
#include "magcat/series.hpp"

namespace magcat {

// Square matrix of truncated series indexed by the objects of a category.
class SeriesMatrix {
public:
    SeriesMatrix(size_t n, Exponent cutoff)
        : n_(n), cutoff_(std::move(cutoff)), data_(n * n, NSeries(cutoff_)) {}

    static SeriesMatrix identity(size_t n, const Exponent& cutoff);

    size_t size() const { return n_; }
    const Exponent& cutoff() const { return cutoff_; }
    NSeries& at(size_t i, size_t j) { return data_[i * n_ + j]; }
    const NSeries& at(size_t i, size_t j) const { return data_[i * n_ + j]; }

    SeriesMatrix operator*(const SeriesMatrix& o) const;
    SeriesMatrix operator+(const SeriesMatrix& o) const;
    SeriesMatrix operator-(const SeriesMatrix& o) const;
    bool operator==(const SeriesMatrix& o) const;
    bool is_zero() const;
    // Least exponent appearing in any entry; nullopt for the zero matrix.
    std::optional<Exponent> min_exponent() const;

    NSeries row_sum(size_t i) const;
    NSeries col_sum(size_t j) const;
    NSeries total_sum() const;
    // Clears the exact-polynomial flag on every entry.
    SeriesMatrix as_truncated() const;

    std::vector<std::string> labels;  // object names, for emission

private:
    size_t n_;
    Exponent cutoff_;
    std::vector<NSeries> data_;
};

// Tameness / finite-type report with witnesses.
struct Classification {
    bool finite = true;
    bool finite_type = true;
    bool uniform = false;
    std::optional<Exponent> epsilon;  // min positive degree; absent if no non-identities
    bool tame = false;
    bool quasi_tame = false;
    bool all_degrees_zero = false;
    bool skeletal_no_endos = false;  // the finite-category tameness criterion
    std::optional<std::string> degenerate_witness;  // metric pair at mutual distance 0
    std::optional<std::string> cycle_witness;       // degree-0 cycle of non-identities
    std::optional<Exponent> truncation;

    std::string str() const;
};

Classification classify(const FCat& c);

// zeta(a, b) = sum over morphisms a -> b of q^deg, truncated.
SeriesMatrix zeta_matrix(const FCat& c, const Exponent& cutoff);

enum class InverseStrategy { Auto, Neumann, ConstantTermLU };

// Inverse of a zeta matrix modulo the cutoff ideal.
//  - Neumann: sum of (1 - zeta)^n; terminates iff the non-identity part is
//    bounded away from degree zero (uniform input), StrategyError otherwise.
//  - ConstantTermLU: exact rational elimination on the q^0 coefficient block,
//    then a Neumann correction for the positive part; NotInvertibleError with
//    a kernel witness when the constant block is singular.
SeriesMatrix zeta_inverse(const SeriesMatrix& z, InverseStrategy strategy = InverseStrategy::Auto);

struct WeightVector {
    enum class Side { Weighting, Coweighting };
    Side side = Side::Weighting;
    std::vector<std::string> labels;
    std::vector<NSeries> entries;
    Exponent horizon;  // coefficients at exponents <= horizon are exact values
};

WeightVector weighting(const FCat& c, const Exponent& cutoff,
                       InverseStrategy strategy = InverseStrategy::Auto);
WeightVector coweighting(const FCat& c, const Exponent& cutoff,
                         InverseStrategy strategy = InverseStrategy::Auto);

// Sum of all entries of zeta^{-1}.
NSeries magnitude(const FCat& c, const Exponent& cutoff,
                  InverseStrategy strategy = InverseStrategy::Auto);

// Alternating sum over explicitly enumerated non-degenerate paths of length
// <= cutoff. Must agree with magnitude(); this is the built-in cross check.
// Requires a uniform category.
NSeries path_expansion_magnitude(const FCat& c, const Exponent& cutoff);
// Same expansion restricted to paths starting at a (the weighting k^a) or
// ending at b (the coweighting k_b).
NSeries path_expansion_weighting(const FCat& c, ObjId a, const Exponent& cutoff);
NSeries path_expansion_coweighting(const FCat& c, ObjId b, const Exponent& cutoff);

// Number of steps of the longest non-degenerate path of length <= cutoff.
long longest_nondegenerate_path(const FCat& c, const Exponent& cutoff);

// Mobius function of a finite poset: inverse of the <=-incidence matrix.
// Computed from the degree-1 category encoding at q = 1 and cross-checked
// against direct integer matrix inversion.
std::vector<std::vector<Integer>> mobius(const Poset& p);

struct PoincareResult {
    NSeries weighting_at_min;  // k^0 of the d_phi metrization, equals pi(-q)
    NSeries polynomial;        // pi(q)
    NSeries via_mobius;        // classical Mobius route for pi(q)
    bool agree = false;
};
PoincareResult poincare_polynomial(const RankedPoset& p);

struct GrowthResult {
    NSeries series;             // sum_g q^{wl(g)} truncated
    NSeries magnitude;          // its inverse
    WeightVector cayley_weighting;
    bool cayley_agrees = false;  // weighting at the identity vertex matches
};
// Requires ball radius >= cutoff.
GrowthResult growth_series(const GroupBall& g, const Exponent& cutoff);

}  // namespace magcat

#endif
