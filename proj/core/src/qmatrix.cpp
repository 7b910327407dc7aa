#include "epwlab/qmatrix.hpp"

#include <stdexcept>

namespace epwlab {

QMatrix::QMatrix(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != size_t(rows) * cols)
        throw std::invalid_argument("QMatrix: entries length != rows*cols");
}

std::vector<Rat> QMatrix::row(int i) const {
    return std::vector<Rat>(e_.begin() + size_t(i) * cols_, e_.begin() + size_t(i + 1) * cols_);
}

void QMatrix::set_row(int i, const std::vector<Rat>& r) {
    if (int(r.size()) != cols_) throw std::invalid_argument("set_row: width mismatch");
    std::copy(r.begin(), r.end(), e_.begin() + size_t(i) * cols_);
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows, int cols) {
    QMatrix m(int(rows.size()), cols);
    for (int i = 0; i < int(rows.size()); ++i) m.set_row(i, rows[i]);
    return m;
}

QMatrix transpose(const QMatrix& m) {
    QMatrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
    QMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (is_zero(aik)) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

QMatrix add(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
    QMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

QMatrix stack_rows(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("stack_rows: width mismatch");
    QMatrix c(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) c.set_row(i, a.row(i));
    for (int i = 0; i < b.rows(); ++i) c.set_row(a.rows() + i, b.row(i));
    return c;
}

bool is_zero(const QMatrix& m) {
    for (const Rat& q : m.entries())
        if (!is_zero(q)) return false;
    return true;
}

bool is_symmetric(const QMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

Rref rref(const QMatrix& m) {
    Rref r{m, {}};
    QMatrix& a = r.mat;
    int pr = 0;
    for (int c = 0; c < a.cols() && pr < a.rows(); ++c) {
        int piv = -1;
        for (int i = pr; i < a.rows(); ++i)
            if (!is_zero(a.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != pr)
            for (int j = 0; j < a.cols(); ++j) swap(a.at(piv, j), a.at(pr, j));
        Rat inv = 1 / a.at(pr, c);
        for (int j = c; j < a.cols(); ++j) a.at(pr, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == pr || is_zero(a.at(i, c))) continue;
            Rat f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(pr, j);
        }
        r.pivot_cols.push_back(c);
        ++pr;
    }
    return r;
}

int rank(const QMatrix& m) { return rref(m).rank(); }

QMatrix kernel_basis(const QMatrix& m) {
    Rref r = rref(m);
    int n = m.cols();
    std::vector<bool> is_piv(n, false);
    for (int c : r.pivot_cols) is_piv[c] = true;
    QMatrix k(n - r.rank(), n);
    int kr = 0;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        k.at(kr, f) = 1;
        for (int p = 0; p < r.rank(); ++p) k.at(kr, r.pivot_cols[p]) = -r.mat.at(p, f);
        ++kr;
    }
    return k;
}

QMatrix rowspace_intersection(const QMatrix& m1, const QMatrix& m2) {
    int n = m1.cols();
    if (n != m2.cols()) throw std::invalid_argument("rowspace_intersection: width mismatch");
    // Zassenhaus: reduce [m1|m1; m2|0]; rows with zero left block carry the
    // intersection in the right block.
    QMatrix z(m1.rows() + m2.rows(), 2 * n);
    for (int i = 0; i < m1.rows(); ++i)
        for (int j = 0; j < n; ++j) { z.at(i, j) = m1.at(i, j); z.at(i, n + j) = m1.at(i, j); }
    for (int i = 0; i < m2.rows(); ++i)
        for (int j = 0; j < n; ++j) z.at(m1.rows() + i, j) = m2.at(i, j);
    Rref r = rref(z);
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < z.rows(); ++i) {
        bool left_zero = true, right_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (!is_zero(r.mat.at(i, j))) left_zero = false;
        for (int j = n; j < 2 * n && right_zero; ++j)
            if (!is_zero(r.mat.at(i, j))) right_zero = false;
        if (left_zero && !right_zero) {
            std::vector<Rat> v(n);
            for (int j = 0; j < n; ++j) v[j] = r.mat.at(i, n + j);
            rows.push_back(std::move(v));
        }
    }
    return row_basis(QMatrix::from_rows(rows, n));
}

Rat det_exact(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: not square");
    int n = m.rows();
    if (n == 0) return Rat(1);
    QMatrix a = m;
    Rat prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (is_zero(a.at(k, k))) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(a.at(i, k))) { piv = i; break; }
            if (piv < 0) return Rat(0);
            for (int j = 0; j < n; ++j) swap(a.at(piv, j), a.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::optional<std::vector<Rat>> solve(const QMatrix& a, const std::vector<Rat>& b) {
    if (int(b.size()) != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Rref r = rref(aug);
    for (int c : r.pivot_cols)
        if (c == a.cols()) return std::nullopt;
    std::vector<Rat> x(a.cols(), Rat(0));
    for (int p = 0; p < r.rank(); ++p) x[r.pivot_cols[p]] = r.mat.at(p, a.cols());
    return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    int n = m.rows();
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Rref r = rref(aug);
    for (int i = 0; i < n; ++i)
        if (i >= r.rank() || r.pivot_cols[i] != i) return std::nullopt;
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

QMatrix row_basis(const QMatrix& m) {
    Rref r = rref(m);
    QMatrix b(r.rank(), m.cols());
    for (int i = 0; i < r.rank(); ++i) b.set_row(i, r.mat.row(i));
    return b;
}

bool in_rowspace(const QMatrix& m, const std::vector<Rat>& v) {
    QMatrix ext = stack_rows(m, QMatrix::from_rows({v}, m.cols()));
    return rank(ext) == rank(m);
}

std::optional<std::vector<Rat>> coords_in_rows(const QMatrix& basis, const std::vector<Rat>& v) {
    return solve(transpose(basis), v);
}

} // namespace epwlab
