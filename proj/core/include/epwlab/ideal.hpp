#pragma once

#include "epwlab/multipoly.hpp"
#include "epwlab/polymatrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace epwlab {

struct FitFailed : std::runtime_error {
    FitFailed() : std::runtime_error("hilbert_fit: values do not interpolate a numerical polynomial") {}
};

struct Ideal {
    std::vector<std::string> vars;
    std::vector<MultiPoly> gens;

    bool is_homogeneous() const;
};

// Monomials of total degree d in descending grlex order.
std::vector<Mono> monomials_of_degree(int nvars, int d);

// HF(d) = dim of the degree-d piece of the quotient ring: #monomials minus
// the rank of the Macaulay matrix (generators times complementary monomials).
int hilbert_function(const Ideal& ideal, int d);

struct HilbertProfile {
    std::vector<std::pair<int, int>> values;
    std::optional<int> fitted_dim;
    std::optional<int> fitted_degree;
};

// Interpolates HF on [window.first, window.second] by finite differences;
// dim = degree of the interpolating polynomial, degree = dim! * leading
// coefficient (the constant reached by the difference table).
std::pair<int, int> hilbert_fit(const Ideal& ideal, std::pair<int, int> window);
HilbertProfile hilbert_profile(const Ideal& ideal, std::pair<int, int> window);

struct Emptiness {
    bool empty;
    int degree; // certificate degree when empty
};

// One-sided: Empty(d) certifies HF(d) = 0 for some d <= dmax; otherwise
// Inconclusive (never asserts non-emptiness).
Emptiness is_empty_projective(const Ideal& ideal, int dmax = 6);

// Matrix of partial derivatives, rows = generators, cols = variables.
PolyMatrix jacobian(const Ideal& ideal);

// Rank of the span of a set of quadratic forms given by Gram matrices,
// via their coefficient vectors on the n(n+1)/2 quadric monomials.
int quadric_span_rank(const std::vector<QMatrix>& grams);

// Coefficient vector of a quadratic form q(y) = y^T G y on the monomials
// y_i y_j (i <= j), in lex order of (i, j).
std::vector<Rat> quadric_coeffs(const QMatrix& gram);

// The quadratic polynomial y^T G y over variables `vars`.
MultiPoly quadric_poly(const QMatrix& gram, const std::vector<std::string>& vars);

} // namespace epwlab
