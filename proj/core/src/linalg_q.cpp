#include "magcat/linalg_q.hpp"

#include "magcat/errors.hpp"

namespace magcat {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw UsageError("matrix product shape mismatch");
    QMatrix out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix sum shape mismatch");
    QMatrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix diff shape mismatch");
    QMatrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

bool QMatrix::operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Rational> QMatrix::column(size_t j) const {
    std::vector<Rational> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void QMatrix::set_column(size_t j, const std::vector<Rational>& v) {
    for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::vector<size_t> QMatrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t pivot = row;
        while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
        Rational inv = Rational(1) / at(row, col);
        for (size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col) == 0) continue;
            Rational f = at(i, col);
            for (size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(QMatrix m) { return m.rref().size(); }

QMatrix nullspace(const QMatrix& m) {
    QMatrix r = m;
    std::vector<size_t> pivots = r.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<size_t> free_cols;
    for (size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    QMatrix basis(m.cols(), free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t f = free_cols[k];
        basis.at(f, k) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) basis.at(pivots[i], k) = -r.at(i, f);
    }
    return basis;
}

std::optional<QMatrix> inverse(const QMatrix& m, std::vector<Rational>* kernel_witness) {
    if (m.rows() != m.cols()) throw UsageError("inverse of a non-square matrix");
    size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<size_t> pivots = aug.rref();
    if (pivots.size() < n || pivots[n - 1] >= n) {
        if (kernel_witness) {
            QMatrix ker = nullspace(m);
            *kernel_witness = ker.column(0);
        }
        return std::nullopt;
    }
    QMatrix out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

QMatrix submatrix(const QMatrix& m, const std::vector<size_t>& rows,
                  const std::vector<size_t>& cols) {
    QMatrix out(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) out.at(i, j) = m.at(rows[i], cols[j]);
    return out;
}

QMatrix concat_cols(const QMatrix& a, const QMatrix& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw UsageError("concat_cols row mismatch");
    QMatrix out(a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

QMatrix from_columns(size_t dim, const std::vector<std::vector<Rational>>& cols) {
    QMatrix out(dim, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != dim) throw UsageError("from_columns dimension mismatch");
        for (size_t i = 0; i < dim; ++i) out.at(i, j) = cols[j][i];
    }
    return out;
}

QuotientSpace::QuotientSpace(QMatrix denominator, QMatrix numerator) {
    size_t dim = numerator.rows() ? numerator.rows() : denominator.rows();
    if (denominator.rows() == 0) denominator = QMatrix(dim, 0);
    QMatrix accum = denominator;
    size_t base_rank = rank(accum);
    // Greedy: keep numerator columns independent modulo the denominator span.
    for (size_t j = 0; j < numerator.cols(); ++j) {
        QMatrix trial = concat_cols(accum, from_columns(dim, {numerator.column(j)}));
        size_t r = rank(trial);
        if (r > base_rank + quotient_basis_.size()) {
            quotient_basis_.push_back(numerator.column(j));
            accum = trial;
        }
    }
    denom_cols_ = denominator.cols();
    solve_matrix_ = concat_cols(denominator, from_columns(dim, quotient_basis_));
}

std::vector<Rational> QuotientSpace::coordinates(const std::vector<Rational>& v) const {
    size_t n = solve_matrix_.rows();
    size_t m = solve_matrix_.cols();
    if (v.size() != n) throw UsageError("quotient coordinates: dimension mismatch");
    QMatrix aug(n, m + 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) aug.at(i, j) = solve_matrix_.at(i, j);
        aug.at(i, m) = v[i];
    }
    std::vector<size_t> pivots = aug.rref();
    std::vector<Rational> x(m, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m)
            throw UsageError("quotient coordinates: vector outside the span");
        x[pivots[i]] = aug.at(i, m);
    }
    return std::vector<Rational>(x.begin() + denom_cols_, x.end());
}

std::vector<Rational> QuotientSpace::basis_vector(size_t i) const { return quotient_basis_[i]; }

}  // namespace magcat
