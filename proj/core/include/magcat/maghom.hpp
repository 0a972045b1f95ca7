#ifndef MAGCAT_MAGHOM_HPP
#define MAGCAT_MAGHOM_HPP

#include <optional>
#include <string>
#include <vector>

#include "magcat/fcat.hpp"
#include "magcat/functor.hpp"
#include "magcat/linalg_q.hpp"
#include "magcat/series.hpp"
#include "magcat/smith.hpp"

namespace magcat {

// A generator of a magnitude chain group: a composable tuple of morphisms
// of prescribed total degree. n = 0 generators are bare objects.
struct PathGenerator {
    std::vector<MorId> tuple;  // empty for n = 0
    ObjId object = -1;         // set for n = 0
    ObjId src = -1, tgt = -1;
    Exponent degree;

    std::string str(const FCat& c) const;
};

// Graded integer chain complex in degrees 0..max_n with the boundary in
// boundary[n] : C_n -> C_{n-1}. Construction asserts d o d = 0.
struct ChainComplexZ {
    std::vector<std::vector<PathGenerator>> gens;
    std::vector<IMatrix> boundary;  // boundary[0] is empty

    size_t dim(int n) const {
        return (n < 0 || n >= static_cast<int>(gens.size())) ? 0 : gens[n].size();
    }
};

struct Basepoints {
    std::optional<ObjId> a;  // fix the source of the first morphism
    std::optional<ObjId> b;  // additionally fix the target of the last
};

// True when the object has no non-identity degree-0 morphism in or out;
// `witness` names the offending morphism otherwise.
bool is_t1_object(const FCat& c, ObjId a, std::string* witness = nullptr);

// Normalized magnitude chain complex: identity-free composable tuples of
// total degree exactly ell; boundary keeps a composition face only when the
// composite preserves degree and is not an identity. Pointed variants need
// T1 basepoints. Requires a uniform category.
ChainComplexZ mc_complex(const FCat& c, const Exponent& ell, int max_n, Basepoints bp = {});

// Un-normalized variant: identities allowed, endpoint faces kept when they
// preserve the total degree (the associated graded of the filtered nerve).
ChainComplexZ mc_complex_unnormalized(const FCat& c, const Exponent& ell, int max_n,
                                      Basepoints bp = {});

HomologySummary magnitude_homology(const FCat& c, const Exponent& ell, int n, Basepoints bp = {});
HomologySummary homology_at(const ChainComplexZ& cc, int n);

// Per exponent, the magnitude coefficient against the alternating betti sum.
struct EulerCheckRow {
    Exponent ell;
    Rational magnitude_coefficient;
    Integer euler_characteristic;
    std::vector<long> betti;  // per chain degree 0..max_n
};
struct EulerCheckReport {
    bool equal = false;
    std::optional<Exponent> first_divergence;
    std::vector<EulerCheckRow> rows;
    long path_bound = 0;  // chain degrees that can carry generators
};
// max_n must be at least the longest non-degenerate path of length <= cutoff.
EulerCheckReport euler_categorification_check(const FCat& c, const Exponent& cutoff, int max_n);

// Graded Hochschild homology of the associated graded category algebra
// acting on ZZ(Ob x Ob), compared against magnitude homology.
struct HochschildCheckRow {
    int n;
    HomologySummary hochschild;
    HomologySummary magnitude;
};
struct HochschildCheckReport {
    bool equal = false;
    std::vector<HochschildCheckRow> rows;
    size_t hochschild_generators = 0;
};
HochschildCheckReport hochschild_graded_check(const FCat& c, const Exponent& ell, int max_n,
                                              long guardrail_cells = 2000000);

// Induced map on rational magnitude homology in degree n.
struct InducedMap {
    long dom_betti = 0, cod_betti = 0;
    QMatrix matrix;  // cod_betti x dom_betti
    bool is_identity() const;
    bool is_zero() const { return matrix.is_zero(); }
};
InducedMap induced_map(const FCatFunctor& f, const Exponent& ell, int n, Basepoints bp = {});

}  // namespace magcat

#endif
