#include "epwlab/polymatrix.hpp"

#include <bit>
#include <stdexcept>

namespace epwlab {

PolyMatrix::PolyMatrix(std::vector<std::string> vars, int rows, int cols)
    : rows_(rows), cols_(cols), vars_(std::move(vars)),
      e_(size_t(rows) * cols, MultiPoly::zero(vars_)) {}

PolyMatrix PolyMatrix::submatrix_deleting(int row, int col) const {
    PolyMatrix s(vars_, rows_ - 1, cols_ - 1);
    for (int i = 0, si = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (int j = 0, sj = 0; j < cols_; ++j) {
            if (j == col) continue;
            s.at(si, sj) = at(i, j);
            ++sj;
        }
        ++si;
    }
    return s;
}

QMatrix PolyMatrix::eval(const std::vector<Rat>& point) const {
    QMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).eval(point);
    return m;
}

bool PolyMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

MultiPoly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_det: not square");
    int n = m.rows();
    if (n == 0) return MultiPoly::constant(m.vars(), Rat(1));
    if (n > 20) throw std::invalid_argument("poly_det: subset table too large");
    // memo[S] = det of the submatrix on rows 0..|S|-1 and columns S.
    std::vector<MultiPoly> memo(size_t(1) << n, MultiPoly::zero(m.vars()));
    memo[0] = MultiPoly::constant(m.vars(), Rat(1));
    for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
        int k = std::popcount(s);
        MultiPoly acc = MultiPoly::zero(m.vars());
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(s & (uint32_t(1) << j))) continue;
            const MultiPoly& entry = m.at(k - 1, j);
            if (!entry.is_zero()) {
                MultiPoly contrib = entry * memo[s & ~(uint32_t(1) << j)];
                // expanding along the last row: sign (-1)^{(k-1)+pos}
                if (((k - 1) + pos) % 2 == 0)
                    acc = acc + contrib;
                else
                    acc = acc - contrib;
            }
            ++pos;
        }
        memo[s] = std::move(acc);
    }
    return memo[(size_t(1) << n) - 1];
}

PolyMatrix adjugate(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: not square");
    int n = m.rows();
    PolyMatrix c(m.vars(), n, n);
    if (n == 1) {
        c.at(0, 0) = MultiPoly::constant(m.vars(), Rat(1));
        return c;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly d = poly_det(m.submatrix_deleting(j, i));
            c.at(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    return c;
}

QMatrix adjugate_q(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate_q: not square");
    int n = m.rows();
    QMatrix c(n, n);
    if (n == 1) {
        c.at(0, 0) = 1;
        return c;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QMatrix s(n - 1, n - 1);
            for (int r = 0, sr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int q = 0, sq = 0; q < n; ++q) {
                    if (q == i) continue;
                    s.at(sr, sq) = m.at(r, q);
                    ++sq;
                }
                ++sr;
            }
            Rat d = det_exact(s);
            c.at(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    return c;
}

} // namespace epwlab
