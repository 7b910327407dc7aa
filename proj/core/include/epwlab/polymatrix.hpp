#pragma once

#include "epwlab/multipoly.hpp"
#include "epwlab/qmatrix.hpp"

#include <vector>

namespace epwlab {

// Matrix of polynomials over a shared variable list.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(std::vector<std::string> vars, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<std::string>& vars() const { return vars_; }
    MultiPoly& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const MultiPoly& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    PolyMatrix submatrix_deleting(int row, int col) const;
    QMatrix eval(const std::vector<Rat>& point) const;
    bool is_symmetric() const;

private:
    int rows_, cols_;
    std::vector<std::string> vars_;
    std::vector<MultiPoly> e_;
};

// Determinant by Laplace expansion memoized over column subsets (the 2^d
// table); the right shape for small matrices with linear entries.
MultiPoly poly_det(const PolyMatrix& m);

// Cofactor matrix: (M^c)_{ij} = (-1)^{i+j} det(M with row j, column i removed),
// so M * M^c = M^c * M = det(M) * Id.
PolyMatrix adjugate(const PolyMatrix& m);
QMatrix adjugate_q(const QMatrix& m);

} // namespace epwlab
