// Dense exact rational matrices and the elimination routines the rest of
// the library is built on: RREF, rank, kernel bases, cokernel projections,
// linear solves and quotient presentations. Dimensions stay small (desk
// scale), so plain Gaussian elimination over mpq is the right tool.

#ifndef COSEGAL_MATRIX_HPP
#define COSEGAL_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "cosegal/rational.hpp"

namespace cosegal {

struct QMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries;  // row-major, rows*cols

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static QMatrix zero(std::size_t r, std::size_t c) { return QMatrix(r, c); }

    Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    bool operator==(const QMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& e : entries)
            if (e != 0) return false;
        return true;
    }

    QMatrix transpose() const {
        QMatrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }
};

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product: shape mismatch");
    QMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                if (b.at(k, j) == 0) continue;
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    return c;
}

inline QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix sum: shape mismatch");
    QMatrix c = a;
    for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] += b.entries[i];
    return c;
}

inline QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix difference: shape mismatch");
    QMatrix c = a;
    for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] -= b.entries[i];
    return c;
}

inline QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix c = a;
    for (auto& e : c.entries) e *= s;
    return c;
}

inline QMatrix operator-(const QMatrix& a) { return Rational(-1) * a; }

/// [a | b], side by side.
inline QMatrix hstack(const QMatrix& a, const QMatrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("hstack: row mismatch");
    QMatrix c(a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
    }
    return c;
}

inline QMatrix vstack(const QMatrix& a, const QMatrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("vstack: column mismatch");
    QMatrix c(a.rows + b.rows, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) c.at(a.rows + i, j) = b.at(i, j);
    return c;
}

/// Kronecker product; index (ia*b.rows+ib, ja*b.cols+jb) = a(ia,ja)*b(ib,jb).
inline QMatrix kron(const QMatrix& a, const QMatrix& b) {
    QMatrix c(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t ia = 0; ia < a.rows; ++ia)
        for (std::size_t ja = 0; ja < a.cols; ++ja) {
            const Rational& v = a.at(ia, ja);
            if (v == 0) continue;
            for (std::size_t ib = 0; ib < b.rows; ++ib)
                for (std::size_t jb = 0; jb < b.cols; ++jb)
                    c.at(ia * b.rows + ib, ja * b.cols + jb) = v * b.at(ib, jb);
        }
    return c;
}

struct Rref {
    QMatrix mat;                     // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per nonzero row
};

/// Gauss-Jordan with first-nonzero pivot choice; fully deterministic.
inline Rref rref(QMatrix m) {
    Rref r;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        Rational inv = 1 / m.at(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        r.pivots.push_back(col);
        ++row;
    }
    r.mat = std::move(m);
    return r;
}

inline std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

/// Columns form a basis of { x : m x = 0 }. Free variable j is set to 1 and
/// pivot variables are back-filled from the RREF.
inline QMatrix kernel_basis(const QMatrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    QMatrix k(m.cols, free_cols.size());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t j = free_cols[fi];
        k.at(j, fi) = 1;
        for (std::size_t row = 0; row < r.pivots.size(); ++row)
            k.at(r.pivots[row], fi) = -r.mat.at(row, j);
    }
    return k;
}

/// rank, kernel basis (cols x (cols-rank)) and a full-row-rank cokernel
/// projection ((rows-rank) x rows) with proj * m = 0.
inline std::tuple<std::size_t, QMatrix, QMatrix> rank_kernel_cokernel(const QMatrix& m) {
    std::size_t rk = rank(m);
    QMatrix ker = kernel_basis(m);
    QMatrix coker = kernel_basis(m.transpose()).transpose();
    return {rk, std::move(ker), std::move(coker)};
}

/// Solves a X = b for X (all columns at once); nullopt when inconsistent.
/// Free variables are set to 0, so the solution is deterministic.
inline std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("solve: shape mismatch");
    Rref r = rref(hstack(a, b));
    QMatrix x(a.cols, b.cols);
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
        std::size_t p = r.pivots[row];
        if (p >= a.cols) return std::nullopt;  // pivot in the rhs block: inconsistent
        for (std::size_t j = 0; j < b.cols; ++j) x.at(p, j) = r.mat.at(row, a.cols + j);
    }
    return x;
}

/// The affine solution set of a X = b restricted to one rhs column is
/// x0 + ker(a); this returns (x0, kernel_basis) or nullopt.
inline std::optional<std::pair<QMatrix, QMatrix>> solve_affine(const QMatrix& a,
                                                               const QMatrix& b) {
    auto x0 = solve(a, b);
    if (!x0) return std::nullopt;
    return std::make_pair(std::move(*x0), kernel_basis(a));
}

/// Quotient V/im(m) of the ambient space Q^rows by the column space of m,
/// presented by a projection with an explicit section. `kept` lists the
/// ambient coordinates that survive as the quotient basis (non-pivot rows
/// of the column space), so proj*section = identity.
struct QuotientPresentation {
    QMatrix proj;               // dim x rows(m)
    QMatrix section;            // rows(m) x dim
    std::vector<std::size_t> kept;
};

inline QuotientPresentation quotient_by_columns(const QMatrix& m) {
    // Row space of m^T = column space of m, in RREF.
    Rref r = rref(m.transpose());
    std::vector<bool> is_pivot(m.rows, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    QuotientPresentation q;
    for (std::size_t j = 0; j < m.rows; ++j)
        if (!is_pivot[j]) q.kept.push_back(j);
    const std::size_t dim = q.kept.size();
    q.proj = QMatrix(dim, m.rows);
    q.section = QMatrix(m.rows, dim);
    // proj(v): reduce v by the RREF rows to clear pivot coordinates, then
    // read off the kept coordinates. Linear in v, so assemble columnwise.
    for (std::size_t k = 0; k < dim; ++k) q.proj.at(k, q.kept[k]) = 1;
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
        std::size_t p = r.pivots[row];
        // e_p reduces to e_p - (row `row` of RREF); kept coords of that row
        // carry over with a minus sign.
        for (std::size_t k = 0; k < dim; ++k) q.proj.at(k, p) = -r.mat.at(row, q.kept[k]);
    }
    for (std::size_t k = 0; k < dim; ++k) q.section.at(q.kept[k], k) = 1;
    return q;
}

}  // namespace cosegal

#endif
