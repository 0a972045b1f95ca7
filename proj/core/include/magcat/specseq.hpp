#ifndef MAGCAT_SPECSEQ_HPP
#define MAGCAT_SPECSEQ_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "magcat/fcat.hpp"
#include "magcat/functor.hpp"
#include "magcat/linalg_q.hpp"

namespace magcat {

// Finite digraph: ordered edges, no loops.
struct Digraph {
    std::vector<std::string> vertices;
    std::set<std::pair<int, int>> edges;
};

// Directed path metric category of a digraph (complete, not truncated).
FCat from_digraph(const Digraph& d);

// One generator of the filtered nerve complex: a composable tuple with
// identities allowed; n = 0 generators are objects at filtration 0.
struct NerveGen {
    std::vector<MorId> tuple;
    ObjId object = -1;
    long filtration = 0;
};

// Rational chain complex of the filtered nerve up to length N and filtration
// L, with the full alternating face sum (endpoint deletions included).
// Generators in each degree are sorted by filtration, so every filtration
// stage is a coordinate prefix.
struct FilteredChainQ {
    const FCat* cat = nullptr;
    long L = 0;
    int N = 0;
    long max_degree = 0;  // largest single morphism degree
    std::vector<std::vector<NerveGen>> gens;
    std::vector<QMatrix> boundary;  // boundary[n] : C_n -> C_{n-1}

    size_t dim(int n) const {
        return (n < 0 || n > N) ? 0 : gens[n].size();
    }
    // Number of degree-n generators with filtration <= p (prefix length).
    size_t prefix(int n, long p) const;
    // True when F_p C_n is fully visible at these caps.
    bool stage_complete(int n, long p) const {
        return p <= L || L >= static_cast<long>(n) * max_degree;
    }
};

// Requires integral morphism degrees; L is the filtration cap, N the nerve
// length cap.
FilteredChainQ build_filtered_chain(const FCat& c, long L, int N);

struct PageEntry {
    int r = 0;
    long p = 0, q = 0;
    size_t dimension = 0;
    // Entry data only partially visible at these caps (dimension may shrink
    // with larger L or N).
    bool cap_limited = false;
    std::shared_ptr<QuotientSpace> presentation;  // ambient C_{p+q} coordinates
};

PageEntry page(const FilteredChainQ& fc, int r, long p, long q);

// Betti numbers of the unfiltered nerve complex within the caps; entry n is
// reliable for n <= N - 1.
std::vector<long> nerve_homology(const FilteredChainQ& fc);

// Reduced path homology of a digraph over the rationals: the homology of the
// d-invariant allowed-path subcomplex, computed independently of the
// spectral machinery.
struct PathHomology {
    std::vector<long> unreduced;  // dim H_p, p = 0..max_p
    std::vector<long> reduced;    // augmentation subtracted at p = 0
    std::vector<size_t> omega_dims;
};
PathHomology path_homology(const Digraph& d, int max_p);

struct E2CheckRow {
    long p = 0;
    size_t e2_dim = 0;
    long oracle = 0;  // reduced betti (p >= 1); components - 1 at p = 0
    bool agree = false;
    std::string note;
};
struct E2CheckReport {
    bool all_agree = false;
    std::vector<E2CheckRow> rows;
};
// Compares dim E^2_{p,0} of the directed path metric category against the
// reduced path homology oracle. At p = 0 the page counts components while
// the reduced oracle subtracts the augmentation, so the comparison there is
// offset by one; the row note records this.
E2CheckReport e2_vs_path_homology(const Digraph& d, int max_p);

struct RHomotopyRow {
    long p = 0, q = 0;
    size_t dom_dim = 0, cod_dim = 0;
    bool equal = false;
};
struct RHomotopyReport {
    bool all_equal = false;
    int page = 0;  // r + 1
    std::vector<RHomotopyRow> rows;
};
// Verifies Theorem-level invariance: two functors joined by a validated
// r-natural transformation induce the same maps on every E^{r+1} entry
// visible within the caps.
RHomotopyReport r_homotopy_invariance_check(const FCatFunctor& F, const FCatFunctor& G,
                                            const RNatural& tau, long L, int N);

}  // namespace magcat

#endif
