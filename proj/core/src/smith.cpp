#include "magcat/smith.hpp"

#include <algorithm>

#include "magcat/errors.hpp"

namespace magcat {

IMatrix IMatrix::operator*(const IMatrix& o) const {
    if (cols_ != o.rows_) throw UsageError("integer matrix product shape mismatch");
    IMatrix out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Integer& b = o.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

bool IMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

namespace {

bool find_min_pivot(const IMatrix& m, size_t s, size_t& pi, size_t& pj) {
    bool found = false;
    Integer best;
    for (size_t i = s; i < m.rows(); ++i)
        for (size_t j = s; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            Integer a = abs(m.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

void swap_rows(IMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

std::vector<Integer> smith_diagonal(IMatrix m) {
    std::vector<Integer> diag;
    size_t nmin = std::min(m.rows(), m.cols());
    for (size_t s = 0; s < nmin; ++s) {
        size_t pi = s, pj = s;
        if (!find_min_pivot(m, s, pi, pj)) break;
        swap_rows(m, s, pi);
        swap_cols(m, s, pj);
        for (;;) {
            bool clean = true;
            for (size_t i = s + 1; i < m.rows(); ++i) {
                if (m.at(i, s) == 0) continue;
                Integer q = m.at(i, s) / m.at(s, s);
                if (q != 0)
                    for (size_t j = s; j < m.cols(); ++j) m.at(i, j) -= q * m.at(s, j);
                if (m.at(i, s) != 0) {
                    // Remainder is smaller than the pivot; promote it.
                    swap_rows(m, s, i);
                    clean = false;
                }
            }
            for (size_t j = s + 1; j < m.cols(); ++j) {
                if (m.at(s, j) == 0) continue;
                Integer q = m.at(s, j) / m.at(s, s);
                if (q != 0)
                    for (size_t i = s; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, s);
                if (m.at(s, j) != 0) {
                    swap_cols(m, s, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Pivot row/column are clear; enforce divisibility of the rest.
            bool divides_all = true;
            for (size_t i = s + 1; i < m.rows() && divides_all; ++i)
                for (size_t j = s + 1; j < m.cols(); ++j)
                    if (m.at(i, j) % m.at(s, s) != 0) {
                        for (size_t jj = s; jj < m.cols(); ++jj) m.at(s, jj) += m.at(i, jj);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        Integer d = abs(m.at(s, s));
        diag.push_back(d);
    }
    return diag;
}

std::string HomologySummary::str() const {
    std::string s = "betti " + std::to_string(betti);
    if (!torsion.empty()) {
        s += ", torsion";
        for (const auto& t : torsion) s += " " + to_string(t);
    }
    return s;
}

HomologySummary homology_summary(size_t dim_here, const IMatrix& d_here, const IMatrix& d_next) {
    size_t rank_here = 0;
    if (d_here.rows() > 0 && d_here.cols() > 0) rank_here = smith_diagonal(d_here).size();

    std::vector<Integer> next_factors;
    if (d_next.rows() > 0 && d_next.cols() > 0) next_factors = smith_diagonal(d_next);

    HomologySummary out;
    out.betti = static_cast<long>(dim_here) - static_cast<long>(rank_here) -
                static_cast<long>(next_factors.size());
    if (out.betti < 0) throw UsageError("negative betti number: not a chain complex");
    for (const auto& f : next_factors)
        if (f > 1) out.torsion.push_back(f);
    return out;
}

}  // namespace magcat
