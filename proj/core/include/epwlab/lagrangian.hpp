#pragma once

#include "epwlab/exterior.hpp"
#include "epwlab/ideal.hpp"
#include "epwlab/rng.hpp"

#include <optional>
#include <string>

namespace epwlab {

struct NotSymmetric : std::runtime_error {
    NotSymmetric() : std::runtime_error("expected a symmetric matrix") {}
};
struct SearchExhausted : std::runtime_error {
    explicit SearchExhausted(const char* what) : std::runtime_error(what) {}
};
struct BadDimension : std::runtime_error {
    explicit BadDimension(const char* what) : std::runtime_error(what) {}
};

// V = [v0] ⊕ V0 with a chosen basis of V0. The induced bases of Λ²V0 and
// Λ³V0 (pairs and triples of basis vectors, lex order) coordinatize all
// V0-internal computations; vol0 is the induced top form.
struct Decomposition {
    AltK v0;     // grade-1 vector of V
    QMatrix V0;  // 5x6 basis rows

    static Decomposition standard();
    bool valid() const;

    AltK embed2(const std::vector<Rat>& coords10) const; // Λ²V0 -> Λ²V
    AltK embed3(const std::vector<Rat>& coords10) const; // Λ³V0 -> Λ³V
    AltK embed1(const std::vector<Rat>& coords5) const;  // V0 -> V

    // 10x20 matrix whose rows are the induced Λ³V0 basis in Λ³V coordinates.
    QMatrix embedding3() const;
    // Coordinates of a in the induced Λ³V0 basis, if a lies in Λ³V0.
    std::optional<std::vector<Rat>> coords3(const AltK& a) const;
    // Solve v0 ∧ beta = a for beta in Λ²V0 (induced coordinates).
    std::optional<std::vector<Rat>> rho(const AltK& a) const;

    // vol6(v0 ∧ b1 ∧ ... ∧ b5), nonzero iff the decomposition is valid.
    Rat top_factor() const;
};

// vol0-pairing Λ²V0 x Λ³V0 -> Q on the induced bases (10x10, combinatorial).
const QMatrix& z0_pairing();

// Gram matrices of the 5 Plücker quadrics cutting Gr(2, V0) ⊂ P(Λ²V0):
// the components of α ∧ α on the Λ⁴V0 basis.
const std::vector<QMatrix>& gr2_plucker_grams();

// Gram matrices of the 5 Plücker quadrics cutting Gr(3, V0) ⊂ P(Λ³V0):
// q_f(ω) = vol0((f ⌟ ω) ∧ ω) for f over the dual basis of V0.
const std::vector<QMatrix>& gr3_plucker_grams();

// 10-dimensional isotropic subspace of Λ³V, rows in lex Λ³ coordinates.
struct Lagrangian {
    QMatrix basis; // 10x20
};

struct LagrangianCheck {
    bool ok = false;
    std::string reason;
    int i = -1, j = -1; // violating row pair for an isotropy failure
};

LagrangianCheck check_lagrangian(const QMatrix& m);
bool is_lagrangian(const QMatrix& m);
inline bool is_lagrangian(const Lagrangian& a) { return is_lagrangian(a.basis); }

struct ThetaCertificate {
    QMatrix W; // 3x6 basis of a 3-plane with Λ³W ⊂ A
};

struct DeltaCertificate {
    AltK v0;
    QMatrix K; // 3x10, Λ²V0 induced coordinates
    std::optional<int> emptiness_degree;
};

// A = {v0 ∧ α + q̃(α)}: q is the 10x10 Gram of the graph map against the
// vol0-pairing and must be symmetric; then A is Lagrangian and transverse
// to Λ³V0, with dim(A ∩ F_v0) = corank(q).
Lagrangian graph_lagrangian(const Decomposition& d, const QMatrix& q);

Lagrangian random_lagrangian(SeededRng& rng, long height);

std::pair<Lagrangian, DeltaCertificate> build_delta_lagrangian(SeededRng& rng, long height,
                                                               int retries = 200, int dmax = 4);

std::pair<Lagrangian, ThetaCertificate> build_sigma_lagrangian(SeededRng& rng, long height);

bool theta_check(const Lagrangian& a, const QMatrix& w);

// Ideal of the 5 Gr(2,V0) Plücker conics restricted to the plane P(K),
// K given by 3 rows of Λ²V0 coordinates; variables t0, t1, t2.
Ideal restricted_conics(const QMatrix& k);

// Symmetric 10x10 with radical exactly the rowspace of K.
QMatrix symmetric_with_kernel(SeededRng& rng, const QMatrix& k, long height);

// A = F_{v0} (the pathological Lagrangian with vanishing determinant).
Lagrangian pathological_lagrangian(const AltK& v0);

} // namespace epwlab
