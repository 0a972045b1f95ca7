#ifndef MAGCAT_LINALG_Q_HPP
#define MAGCAT_LINALG_Q_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "magcat/rational.hpp"

namespace magcat {

// Dense matrix over the exact rationals. Sizes here are desk scale; all
// elimination is plain fraction arithmetic, no pivot magic needed.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static QMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const;
    bool is_zero() const;

    QMatrix transpose() const;
    std::vector<Rational> column(size_t j) const;
    void set_column(size_t j, const std::vector<Rational>& v);

    // Reduced row echelon form in place; returns pivot column indices.
    std::vector<size_t> rref();

private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

size_t rank(QMatrix m);

// Columns span ker(m); the result has m.cols() rows.
QMatrix nullspace(const QMatrix& m);

// Inverse of a square matrix, or nullopt with a kernel vector witness.
std::optional<QMatrix> inverse(const QMatrix& m, std::vector<Rational>* kernel_witness = nullptr);

// Rows in `rows` and columns in `cols`, in the given order.
QMatrix submatrix(const QMatrix& m, const std::vector<size_t>& rows,
                  const std::vector<size_t>& cols);

QMatrix concat_cols(const QMatrix& a, const QMatrix& b);

QMatrix from_columns(size_t dim, const std::vector<std::vector<Rational>>& cols);

// Coordinates on a quotient V / W of subspaces of an ambient Q^n.
// `denominator` spans W, `numerator` spans V (candidates; W need not be
// inside their span). A basis of V/W is chosen greedily from the numerator
// columns; coordinates(v) expresses a vector of V in that basis.
class QuotientSpace {
public:
    QuotientSpace(QMatrix denominator, QMatrix numerator);

    size_t dimension() const { return quotient_basis_.size(); }
    // Homology-style coordinates of an ambient vector known to lie in V + W.
    // Throws UsageError if the vector is not in the span.
    std::vector<Rational> coordinates(const std::vector<Rational>& v) const;
    // Ambient representative of the i-th quotient basis vector.
    std::vector<Rational> basis_vector(size_t i) const;

private:
    QMatrix solve_matrix_;               // [denominator | chosen numerator columns]
    size_t denom_cols_;
    std::vector<std::vector<Rational>> quotient_basis_;
};

}  // namespace magcat

#endif
