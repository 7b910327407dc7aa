#pragma once

#include "epwlab/ideal.hpp"
#include "epwlab/polymatrix.hpp"
#include "epwlab/rng.hpp"

#include <vector>

namespace epwlab {

struct IndexError : std::runtime_error {
    IndexError() : std::runtime_error("index out of range") {}
};

// Symmetric matrix of polynomials: the local model of a double cover.
struct SymDet {
    PolyMatrix m;

    static SymDet make(PolyMatrix pm); // throws NotSymmetric
    int dim() const { return m.rows(); }
};

// Ideal of the cover inside Spec R[xi_1..xi_d]: the entries of M·xi and of
// xi·xi^t - M^c.
struct CoverIdeal {
    Ideal ideal;
    int d = 0;
};

CoverIdeal cover_ideal(const SymDet& s);

// The multiplication table of the cover algebra on the xi generators:
// m(pi a_i, pi a_j) = (M^c)_{ij} mod det M, i.e. the adjugate.
PolyMatrix product_table(const SymDet& s);

// Witness for M^c_{ij} a_k - M^c_{jk} a_i = gamma(sum_h X^h a_h^v):
// X from signed (d-2)-minors, residual must vanish identically.
struct AssocWitness {
    std::vector<MultiPoly> x;
    std::vector<MultiPoly> residual;
};
AssocWitness associativity_witness(const SymDet& s, int i, int j, int k);

// Same relation for a numeric symmetric matrix; returns the residual vector.
std::vector<Rat> associativity_residual_q(const QMatrix& m, int i, int j, int k);

// Ideal of the corank-c stratum: all (d+1-c) x (d+1-c) minors.
Ideal corank_stratum_ideal(const SymDet& s, int c);

// First-order germ data at a point: kernel K of M(p) and the map
// delta: tangent directions -> Sym^2 K^v (restriction of the derivative).
struct GermData {
    QMatrix k_basis;  // k x d
    QMatrix delta;    // #vars x k(k+1)/2, columns on the t_i t_j (i<=j) basis
};
GermData germ_reduce(const SymDet& s, const std::vector<Rat>& p);

enum class CoverSmoothness { SmoothOnCover, SingularOnCover, NotOnY, Indeterminate };
const char* to_string(CoverSmoothness s);

// Corank 0: off Y. Corank 1: smooth when the gradient of det M is nonzero
// (Jacobi's formula), Indeterminate when it vanishes. Corank 2: smooth iff
// delta is surjective. Corank >= 3: always singular.
CoverSmoothness smoothness_test(const SymDet& s, const std::vector<Rat>& p);

// The two descriptions of the universal corank-3 cover: 2x2 minors of a
// generic 3x3 matrix vs the components of Psi ∘ T. Both quadric spans must
// have dimension 9 and coincide.
struct UniversalModel {
    Ideal minors;           // 9 quadrics in the 9 matrix entries
    Ideal cover_components; // 3 + 6 quadrics from Psi ∘ T
};
UniversalModel universal_model_ideals();
bool universal_model_check();

// Exact identities of the small resolutions X± and their flop:
// tau(mu) lies on the cover, phi ∘ tau(mu) = tau(mu^t), and the isomorphism
// X+ -> X- commutes with the projections.
bool flop_identity_check(SeededRng& rng, int trials);

} // namespace epwlab
