#pragma once

#include "epwlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace epwlab {

// Dense matrix over Q, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    QMatrix(int rows, int cols, std::vector<Rat> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
    const std::vector<Rat>& entries() const { return e_; }

    std::vector<Rat> row(int i) const;
    void set_row(int i, const std::vector<Rat>& r);

    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows, int cols);

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

QMatrix transpose(const QMatrix& m);
QMatrix mul(const QMatrix& a, const QMatrix& b);
QMatrix add(const QMatrix& a, const QMatrix& b);
QMatrix stack_rows(const QMatrix& a, const QMatrix& b);
bool is_zero(const QMatrix& m);
bool is_symmetric(const QMatrix& m);

// Reduced row echelon form. Pivot choice is the first row with a nonzero
// entry, columns scanned left to right; output is canonical.
struct Rref {
    QMatrix mat;
    std::vector<int> pivot_cols;
    int rank() const { return int(pivot_cols.size()); }
};
Rref rref(const QMatrix& m);

int rank(const QMatrix& m);

// Rows form a canonical basis of the right kernel; row count = cols - rank.
QMatrix kernel_basis(const QMatrix& m);

// Basis of rowspace(m1) ∩ rowspace(m2) (Zassenhaus).
QMatrix rowspace_intersection(const QMatrix& m1, const QMatrix& m2);

// Bareiss fraction-free determinant.
Rat det_exact(const QMatrix& m);

// One solution x of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const QMatrix& a, const std::vector<Rat>& b);

std::optional<QMatrix> inverse(const QMatrix& m);

// Canonical row-space basis (nonzero rows of the RREF).
QMatrix row_basis(const QMatrix& m);

// True iff v lies in rowspace(m).
bool in_rowspace(const QMatrix& m, const std::vector<Rat>& v);

// Coordinates of v in terms of the rows of basis, or nullopt.
std::optional<std::vector<Rat>> coords_in_rows(const QMatrix& basis, const std::vector<Rat>& v);

} // namespace epwlab
