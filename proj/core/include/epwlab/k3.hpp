#pragma once

#include "epwlab/epw.hpp"

namespace epwlab {

struct DegenerateK : std::runtime_error {
    DegenerateK() : std::runtime_error("restricted Plücker quadrics are dependent") {}
};
struct AsymmetryDetected : std::runtime_error {
    AsymmetryDetected() : std::runtime_error("r-form not symmetric (invariant violation)") {}
};
struct Degenerate : std::runtime_error {
    Degenerate() : std::runtime_error("r-form degenerate") {}
};
struct ContainsV0 : std::runtime_error {
    ContainsV0() : std::runtime_error("theta_point: v0 lies in W") {}
};
struct NotInvertible : std::runtime_error {
    NotInvertible() : std::runtime_error("lagrangian_from_quadric: quadric Gram not invertible") {}
};
struct BadCertificate : std::runtime_error {
    explicit BadCertificate(const char* what) : std::runtime_error(what) {}
};
struct NotAPlane : std::runtime_error {
    NotAPlane() : std::runtime_error("web_base_plane: section is not a plane") {}
};
struct NotAConic : std::runtime_error {
    NotAConic() : std::runtime_error("web_base_plane: restricted span is not a single conic") {}
};
struct LineInWK : std::runtime_error {
    LineInWK() : std::runtime_error("conic_through: the line lies inside W_K") {}
};

// The corank-3 pipeline record. All Λ²V0/Λ³V0 coordinates are on the bases
// induced by the decomposition; y0..y6 is the recorded annK frame.
struct K3Data {
    Lagrangian a;
    Decomposition d;
    QMatrix k;                    // 3x10
    QMatrix annk;                 // 7x10
    std::vector<QMatrix> wk_grams; // 5 Gram matrices, 7x7
    Ideal wk;                     // 5 quadrics in y0..y6
    QMatrix r;                    // 7x7 symmetric, nondegenerate
    Ideal s;                      // 6 quadrics
};

// K = rho(A ∩ F_v0) in induced Λ²V0 coordinates (canonical basis).
QMatrix kernel_plane(const Lagrangian& a, const Decomposition& d);

// Canonical basis of Ann K under the vol0 pairing (7x10).
QMatrix ann_basis(const QMatrix& k);

// The 5 Plücker quadrics of Gr(3, V0) restricted to the annK frame.
struct WkIdeal {
    QMatrix annk;
    std::vector<QMatrix> grams;
    Ideal ideal;
};
WkIdeal wk_ideal(const QMatrix& k);

// r(beta_i, beta_j) = vol6(v0 ∧ alpha_i ∧ beta_j) on the annK basis.
QMatrix r_form(const Lagrangian& a, const Decomposition& d, const QMatrix& annk);

K3Data make_k3(const Lagrangian& a, const Decomposition& d);

// Transport of the quadric spans along the change of complement (the
// projection V0 -> V0' along v0); true iff the s-ideal spans agree.
bool decomposition_independence(const Lagrangian& a, const Decomposition& d, const Decomposition& d2);

// [u1 ∧ u2 ∧ u3] in the y-frame for the generator (v0+u1) ∧ u2 ∧ u3 of Λ³W.
std::vector<Rat> theta_point(const K3Data& k3, const QMatrix& w);

enum class Tangency { Transverse, Tangent };
Tangency tangency_check(const K3Data& k3, const std::vector<Rat>& y);

// Inverse construction: the graph of the symmetric map Λ²V0 -> Λ³V0 obtained
// by inverting the polarization of the quadric on Ann K. Recovers K as its
// kernel plane and qmat as its r-form.
Lagrangian lagrangian_from_quadric(const QMatrix& k, const QMatrix& qmat, const Decomposition& d);

// Rational points of W_K whose support contains the given u1 (searched on
// the induced conic); y-frame rows.
std::vector<std::vector<Rat>> wk_points_through(const QMatrix& k, const std::vector<Rat>& u1,
                                                int count, long height = 20);

// Random-u1 sampling wrapper.
std::vector<std::vector<Rat>> wk_rational_points(const QMatrix& k, SeededRng& rng, int count);

struct SingularReport {
    int ker_nu_dim = 0;
    std::vector<Rat> sing_point; // y-frame
    int sing_jacobian_rank = 0;
    std::vector<std::pair<std::vector<Rat>, int>> sampled; // (point, jacobian rank)
    bool sing_point_singular = false;
    bool samples_smooth = false;
};

// Single-reduced-point case: ker(nu) = [kappa0], the predicted point is the
// unique singular point of W_K, sampled points are smooth.
SingularReport wk_singular_point_check(const QMatrix& k, const AltK& kappa0, SeededRng& rng, int samples = 20);

struct WebBasePlane {
    QMatrix r_l;     // 3x7 basis of the plane in the y-frame
    MultiPoly conic; // generator of the restricted quadric span, vars z0..z2
};
WebBasePlane web_base_plane(const QMatrix& k, const std::vector<Rat>& v);

struct ConicThrough {
    std::vector<Rat> v; // recovered direction in V0
    WebBasePlane web;
};
ConicThrough conic_through(const QMatrix& k, const std::vector<Rat>& p1, const std::vector<Rat>& p2);

// Certificate helpers.
bool k3_empty_certificate(const QMatrix& k, int dmax = 4);
bool k3_single_point_certificate(const QMatrix& k);

// A quadric Gram on the y-frame vanishing at the given points, sampled
// uniformly from the solution space; invertibility is up to the caller.
QMatrix random_quadric_through(const std::vector<std::vector<Rat>>& points, SeededRng& rng, long height);

// A corank-3 Lagrangian that also contains Λ³W for a planted 3-plane W not
// through v0 (a Sigma ∩ Delta instance): the graph map sends the decomposable
// b1∧b2 to b1∧b2∧b3, so (v0+b3)∧b1∧b2 lies in A.
struct SigmaDeltaInstance {
    Lagrangian a;
    ThetaCertificate theta;
    DeltaCertificate delta;
};
SigmaDeltaInstance build_sigma_delta_lagrangian(SeededRng& rng, long height, int retries = 200);

} // namespace epwlab
