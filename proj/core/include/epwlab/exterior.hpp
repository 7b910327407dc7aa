#pragma once

#include "epwlab/qmatrix.hpp"

#include <array>
#include <vector>

namespace epwlab {

struct GradeOverflow : std::runtime_error {
    GradeOverflow() : std::runtime_error("wedge: grade sum exceeds ambient dimension") {}
};
struct ZeroVector : std::runtime_error {
    explicit ZeroVector(const char* what) : std::runtime_error(what) {}
};

// Basis k-subsets of {0..n-1} in lexicographic order (012 < 013 < ... ).
const std::vector<std::vector<int>>& basis_subsets(int ambient, int grade);
int subset_position(int ambient, const std::vector<int>& subset);
int binom(int n, int k);

// Element of the k-th exterior power of a 5- or 6-dimensional space,
// coordinates on the lex-ordered basis of k-subsets.
struct AltK {
    int ambient = 6;
    int grade = 0;
    std::vector<Rat> coords;

    AltK() = default;
    AltK(int ambient_, int grade_) : ambient(ambient_), grade(grade_), coords(binom(ambient_, grade_)) {}

    bool is_zero() const;
    bool operator==(const AltK& o) const {
        return ambient == o.ambient && grade == o.grade && coords == o.coords;
    }

    static AltK basis(int ambient, int grade, int position);
    static AltK vector(int ambient, const std::vector<Rat>& coords);
    static AltK e(int ambient, int index); // grade-1 basis vector
};

AltK operator+(const AltK& a, const AltK& b);
AltK operator-(const AltK& a, const AltK& b);
AltK operator*(const AltK& a, const Rat& c);

AltK wedge(const AltK& a, const AltK& b);
AltK wedge(std::initializer_list<AltK> factors);

Rat vol6(const AltK& a);
Rat vol5(const AltK& a);

// Symplectic form on 3-forms of the 6-dimensional space: vol6(a ∧ b).
Rat symp(const AltK& a, const AltK& b);

// Contraction by a dual vector with coordinates f.
AltK contract(const std::vector<Rat>& f, const AltK& a);

struct Subspace {
    QMatrix basis; // independent rows, ambient = cols
    int dim() const { return basis.rows(); }
};

// Smallest U with a in the image of Λ^k U, via the span of all
// (k-1)-fold contractions of a.
Subspace support(const AltK& a);

bool is_decomposable(const AltK& a);

// vol5(a ∧ w): the duality Λ²V0 ≅ (Λ³V0)^  for the 5-dimensional space.
Rat dual_pair_5(const AltK& a, const AltK& w);

// Basis rows of F_v = {α in Λ³V : v ∧ α = 0} for nonzero v (10×20).
QMatrix F_basis(const AltK& v);

// 20x20 Gram matrix of symp on the lex basis of Λ³V.
const QMatrix& symplectic_gram();

AltK altk_from_row(int ambient, int grade, const std::vector<Rat>& row);

// Wedge of the rows of a matrix whose rows are grade-1 vectors.
AltK wedge_rows(const QMatrix& rows);

} // namespace epwlab
