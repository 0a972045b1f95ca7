#ifndef MAGCAT_SMITH_HPP
#define MAGCAT_SMITH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "magcat/rational.hpp"

namespace magcat {

// Dense matrix over arbitrary precision integers.
class IMatrix {
public:
    IMatrix() : rows_(0), cols_(0) {}
    IMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Integer& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    IMatrix operator*(const IMatrix& o) const;
    bool is_zero() const;

private:
    size_t rows_, cols_;
    std::vector<Integer> data_;
};

// Nonzero diagonal of the Smith normal form, each entry positive and dividing
// the next. Elimination pivots on the minimal absolute value to contain entry
// growth.
std::vector<Integer> smith_diagonal(IMatrix m);

// Betti number and torsion of one homology group of an integer chain complex.
struct HomologySummary {
    long betti = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

    bool operator==(const HomologySummary& o) const {
        return betti == o.betti && torsion == o.torsion;
    }
    std::string str() const;
};

// Homology at the middle of  C_next --d_next--> C_here --d_here--> C_prev.
// `dim_here` is the rank of C_here; either matrix may be empty (treated as 0).
HomologySummary homology_summary(size_t dim_here, const IMatrix& d_here, const IMatrix& d_next);

}  // namespace magcat

#endif
