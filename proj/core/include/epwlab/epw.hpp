#pragma once

#include "epwlab/dcover.hpp"
#include "epwlab/lagrangian.hpp"
#include "epwlab/multipoly.hpp"

#include <optional>

namespace epwlab {

struct ZeroDeterminant : std::runtime_error {
    ZeroDeterminant() : std::runtime_error("sextic: determinant vanishes identically") {}
};
struct NotInF : std::runtime_error {
    NotInF() : std::runtime_error("pluecker_form: alpha not in F_v0") {}
};
struct WrongCorank : std::runtime_error {
    explicit WrongCorank(int got) : std::runtime_error("expected corank 3, got " + std::to_string(got)) {}
};
struct NotTransverse : std::runtime_error {
    NotTransverse() : std::runtime_error("A meets Λ³V0 nontrivially") {}
};
struct BadSupports : std::runtime_error {
    explicit BadSupports(const char* what) : std::runtime_error(what) {}
};
struct NotOnS : std::runtime_error {
    explicit NotOnS(const char* what) : std::runtime_error(what) {}
};

struct PointPV {
    std::vector<Rat> coords; // 6, not all zero
};
bool proj_equal(const std::vector<Rat>& a, const std::vector<Rat>& b);

// alpha in Λ²V0 (induced coordinates) with v0 ∧ alpha + beta ∈ A, for beta in
// induced Λ³V0 coordinates; exists iff beta lies in Ann K_A.
std::optional<std::vector<Rat>> graph_lift(const Lagrangian& a, const Decomposition& d,
                                           const std::vector<Rat>& beta10);

struct EPWSextic {
    MultiPoly poly; // normalized, homogeneous of degree 6 in x0..x5
    int chart = 0;
    std::string lagrangian_sha256;
};

// det of the chart-k trivialization of lambda_A: a 10x10 matrix with entries
// vol6(v ∧ e_i ∧ e_j ∧ alpha_a) over pairs (i,j) avoiding k, divided by
// x_k^4 and normalized.
EPWSextic sextic(const Lagrangian& a, int chart);
// First chart with a nonvanishing determinant.
EPWSextic sextic_any_chart(const Lagrangian& a);

int corank_at(const Lagrangian& a, const PointPV& p);

// phi^{v0}_v(alpha) = vol(v0 ∧ v ∧ beta ∧ beta) for any beta with
// alpha = v0 ∧ beta.
Rat pluecker_form(const PointPV& v0, const PointPV& v, const AltK& alpha);

// The EPW family as a symmetric 10x10 polynomial matrix over chart
// coordinates x1..x5 around [v0]: M(x) = Q - sum x_m Phi(b_m), where Q is the
// graph Gram of A and Phi the polarized Plücker pairing. Requires A ⋔ Λ³V0.
SymDet chart_family(const Lagrangian& a, const Decomposition& d);

struct TauMap {
    QMatrix matrix;  // 5x6: rows = V0 basis, cols = (k1^2,k1k2,k1k3,k2^2,k2k3,k3^2)
    QMatrix k_basis; // 3x20, basis of A ∩ F_v0
};
TauMap tau_map(const Lagrangian& a, const Decomposition& d);

// Restriction Sym²A^v -> Sym²K^v on the basis x_i x_j (i<=j) of quadratic
// forms on A; 55x6 and always of rank 6.
QMatrix theta_restriction(const Lagrangian& a, const Decomposition& d);

// Kernel of (q, v) -> theta(q) - tau(v) on Sym²A^v ⊕ V0; rows are a basis,
// 54 of them on a corank-3 instance.
QMatrix delta_tangent(const Lagrangian& a, const Decomposition& d);

enum class OrbitClass { OpenOrbit, ClosedOrbit, NonInjective, Anomalous };
const char* to_string(OrbitClass k);

struct OrbitResult {
    OrbitClass kind;
    int tau_rank;
    int annihilator_rank; // rank of the annihilator of im tau in Sym²K; 0 when non-injective
};
OrbitResult orbit_classify(const Lagrangian& a, const Decomposition& d);

// The spot check of the Hilbert-square map: given two decomposable beta,
// beta' in Λ³V0 (induced coordinates) lying on S_A with 1-dimensional support
// overlap, produce [c v0 + v1] and verify it lies on Y_A.
struct GmapResult {
    PointPV point;
    bool on_sextic;
    Rat c;
};
GmapResult gmap_point_check(const Lagrangian& a, const Decomposition& d, const AltK& beta,
                            const AltK& beta2, const MultiPoly* sextic_poly = nullptr);

// Rational points of the sextic on the line through p and q, found by scanning
// parameters t = a/b of bounded height (plus q itself); absence of hits is
// never evidence of emptiness.
std::vector<PointPV> sextic_line_roots(const MultiPoly& sextic_poly, const PointPV& p, const PointPV& q,
                                       long height = 20);

} // namespace epwlab
