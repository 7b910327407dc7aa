#include "epwlab/dcover.hpp"

#include "epwlab/lagrangian.hpp"

#include <stdexcept>

namespace epwlab {

SymDet SymDet::make(PolyMatrix pm) {
    if (!pm.is_symmetric()) throw NotSymmetric();
    return SymDet{std::move(pm)};
}

CoverIdeal cover_ideal(const SymDet& s) {
    int d = s.dim();
    std::vector<std::string> vars = s.m.vars();
    int base = int(vars.size());
    for (int i = 1; i <= d; ++i) vars.push_back("xi" + std::to_string(i));
    std::vector<int> emb(base);
    for (int i = 0; i < base; ++i) emb[i] = i;

    auto lift = [&](const MultiPoly& p) { return p.embed(vars, emb); };
    auto xi = [&](int i) { return MultiPoly::variable(vars, base + i); };

    CoverIdeal ci;
    ci.d = d;
    ci.ideal.vars = vars;
    // entries of M * xi
    for (int i = 0; i < d; ++i) {
        MultiPoly acc = MultiPoly::zero(vars);
        for (int j = 0; j < d; ++j) acc = acc + lift(s.m.at(i, j)) * xi(j);
        ci.ideal.gens.push_back(std::move(acc));
    }
    // entries of xi * xi^t - M^c (upper triangle)
    PolyMatrix adj = adjugate(s.m);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
            ci.ideal.gens.push_back(xi(i) * xi(j) - lift(adj.at(i, j)));
    return ci;
}

PolyMatrix product_table(const SymDet& s) {
    PolyMatrix adj = adjugate(s.m);
    if (!adj.is_symmetric()) throw std::logic_error("product_table: adjugate of symmetric matrix not symmetric");
    return adj;
}

namespace {

// 0-based sign table for the witness. The relation fixes the global sign;
// verified symbolically for d = 3, 4.
template <typename Mat, typename DetFn, typename Zero>
auto witness_x(const Mat& m, int d, int i, int j, int k, DetFn minor_det, Zero zero)
    -> std::vector<decltype(zero())> {
    using Val = decltype(zero());
    std::vector<Val> x(d, zero());
    if (i == k) return x;
    if (i > k) {
        auto neg = witness_x(m, d, k, j, i, minor_det, zero);
        for (int h = 0; h < d; ++h) x[h] = -neg[h];
        return x;
    }
    for (int h = 0; h < d; ++h) {
        if (h == j) continue;
        Val det = minor_det(i, k, j, h);
        int parity = (i + k + j + h) % 2;
        bool negate = (h < j) ? (parity == 0) : (parity == 1);
        x[h] = negate ? -det : det;
    }
    return x;
}

} // namespace

AssocWitness associativity_witness(const SymDet& s, int i, int j, int k) {
    int d = s.dim();
    if (d < 2 || i < 0 || j < 0 || k < 0 || i >= d || j >= d || k >= d) throw IndexError();
    const PolyMatrix& m = s.m;
    auto minor_det = [&](int r1, int r2, int c1, int c2) {
        PolyMatrix sub(m.vars(), d - 2, d - 2);
        for (int r = 0, sr = 0; r < d; ++r) {
            if (r == r1 || r == r2) continue;
            for (int c = 0, sc = 0; c < d; ++c) {
                if (c == c1 || c == c2) continue;
                sub.at(sr, sc) = m.at(r, c);
                ++sc;
            }
            ++sr;
        }
        return poly_det(sub);
    };
    auto zero = [&] { return MultiPoly::zero(m.vars()); };
    AssocWitness w;
    w.x = witness_x(m, d, i, j, k, minor_det, zero);
    PolyMatrix adj = adjugate(m);
    for (int row = 0; row < d; ++row) {
        MultiPoly r = MultiPoly::zero(m.vars());
        if (row == k) r = r + adj.at(i, j);
        if (row == i) r = r - adj.at(j, k);
        for (int h = 0; h < d; ++h) r = r - m.at(row, h) * w.x[h];
        w.residual.push_back(std::move(r));
    }
    return w;
}

std::vector<Rat> associativity_residual_q(const QMatrix& m, int i, int j, int k) {
    int d = m.rows();
    if (d < 2 || i < 0 || j < 0 || k < 0 || i >= d || j >= d || k >= d) throw IndexError();
    auto minor_det = [&](int r1, int r2, int c1, int c2) {
        QMatrix sub(d - 2, d - 2);
        for (int r = 0, sr = 0; r < d; ++r) {
            if (r == r1 || r == r2) continue;
            for (int c = 0, sc = 0; c < d; ++c) {
                if (c == c1 || c == c2) continue;
                sub.at(sr, sc) = m.at(r, c);
                ++sc;
            }
            ++sr;
        }
        return det_exact(sub);
    };
    auto zero = [] { return Rat(0); };
    std::vector<Rat> x = witness_x(m, d, i, j, k, minor_det, zero);
    QMatrix adj = adjugate_q(m);
    std::vector<Rat> residual(d, Rat(0));
    for (int row = 0; row < d; ++row) {
        if (row == k) residual[row] += adj.at(i, j);
        if (row == i) residual[row] -= adj.at(j, k);
        for (int h = 0; h < d; ++h) residual[row] -= m.at(row, h) * x[h];
    }
    return residual;
}

Ideal corank_stratum_ideal(const SymDet& s, int c) {
    int d = s.dim();
    if (c < 1 || c > d) throw IndexError();
    int msize = d + 1 - c;
    Ideal ideal{s.m.vars(), {}};
    const auto& rsets = basis_subsets(d, msize);
    for (const auto& rows : rsets)
        for (const auto& cols : rsets) {
            PolyMatrix sub(s.m.vars(), msize, msize);
            for (int r = 0; r < msize; ++r)
                for (int cc = 0; cc < msize; ++cc) sub.at(r, cc) = s.m.at(rows[r], cols[cc]);
            MultiPoly det = poly_det(sub);
            if (!det.is_zero()) ideal.gens.push_back(std::move(det));
        }
    return ideal;
}

GermData germ_reduce(const SymDet& s, const std::vector<Rat>& p) {
    int d = s.dim();
    int nv = int(s.m.vars().size());
    QMatrix mp = s.m.eval(p);
    QMatrix k = kernel_basis(mp);
    int kd = k.rows();
    GermData g{k, QMatrix(nv, kd * (kd + 1) / 2)};
    for (int v = 0; v < nv; ++v) {
        QMatrix dv(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) dv.at(i, j) = s.m.at(i, j).derivative(v).eval(p);
        QMatrix b = mul(mul(k, dv), transpose(k));
        int col = 0;
        for (int r = 0; r < kd; ++r)
            for (int c = r; c < kd; ++c) {
                g.delta.at(v, col) = (r == c) ? b.at(r, r) : b.at(r, c) + b.at(c, r);
                ++col;
            }
    }
    return g;
}

const char* to_string(CoverSmoothness s) {
    switch (s) {
        case CoverSmoothness::SmoothOnCover: return "SmoothOnCover";
        case CoverSmoothness::SingularOnCover: return "SingularOnCover";
        case CoverSmoothness::NotOnY: return "NotOnY";
        case CoverSmoothness::Indeterminate: return "Indeterminate";
    }
    return "?";
}

CoverSmoothness smoothness_test(const SymDet& s, const std::vector<Rat>& p) {
    int d = s.dim();
    QMatrix mp = s.m.eval(p);
    int corank = d - rank(mp);
    if (corank == 0) return CoverSmoothness::NotOnY;
    if (corank == 1) {
        // Jacobi: d(det M) = tr(adj(M) dM)
        QMatrix adj = adjugate_q(mp);
        for (int v = 0; v < int(s.m.vars().size()); ++v) {
            Rat tr(0);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) tr += adj.at(i, j) * s.m.at(j, i).derivative(v).eval(p);
            if (!is_zero(tr)) return CoverSmoothness::SmoothOnCover;
        }
        return CoverSmoothness::Indeterminate;
    }
    if (corank == 2) {
        GermData g = germ_reduce(s, p);
        return rank(g.delta) == 3 ? CoverSmoothness::SmoothOnCover : CoverSmoothness::SingularOnCover;
    }
    return CoverSmoothness::SingularOnCover;
}

UniversalModel universal_model_ideals() {
    // variables: entries of a generic 3x3 matrix eps
    std::vector<std::string> vars;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) vars.push_back("e" + std::to_string(i) + std::to_string(j));
    auto ev = [&](int i, int j) { return MultiPoly::variable(vars, 3 * i + j); };

    UniversalModel um;
    um.minors.vars = vars;
    for (int i = 0; i < 3; ++i)
        for (int k = i + 1; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                for (int l = j + 1; l < 3; ++l)
                    um.minors.gens.push_back(normalize(ev(i, j) * ev(k, l) - ev(i, l) * ev(k, j)));

    // alpha = eps + eps^t, w = axial vector of eps - eps^t
    std::vector<std::vector<MultiPoly>> alpha(3, std::vector<MultiPoly>(3, MultiPoly::zero(vars)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) alpha[i][j] = ev(i, j) + ev(j, i);
    std::vector<MultiPoly> w{ev(1, 2) - ev(2, 1), ev(2, 0) - ev(0, 2), ev(0, 1) - ev(1, 0)};

    um.cover_components.vars = vars;
    // alpha ∘ xi
    for (int i = 0; i < 3; ++i) {
        MultiPoly acc = MultiPoly::zero(vars);
        for (int j = 0; j < 3; ++j) acc = acc + alpha[i][j] * w[j];
        um.cover_components.gens.push_back(normalize(acc));
    }
    // xi^t ∘ xi - Λ²alpha: on the axial bases Λ²alpha is -adj(alpha), so the
    // components are w w^t + adj(alpha); these vanish on rank-1 matrices.
    auto adj_entry = [&](int i, int j) {
        int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        // cofactor with the cyclic convention keeps signs implicit
        return alpha[r0][c0] * alpha[r1][c1] - alpha[r0][c1] * alpha[r1][c0];
    };
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            um.cover_components.gens.push_back(normalize(w[i] * w[j] + adj_entry(i, j)));
    return um;
}

namespace {

QMatrix quadric_coeff_matrix(const Ideal& ideal) {
    // coefficient vectors over the 45 degree-2 monomials in 9 variables
    std::vector<Mono> monos = monomials_of_degree(int(ideal.vars.size()), 2);
    QMatrix m(int(ideal.gens.size()), int(monos.size()));
    for (int g = 0; g < int(ideal.gens.size()); ++g)
        for (int c = 0; c < int(monos.size()); ++c) m.at(g, c) = ideal.gens[g].coeff(monos[c]);
    return m;
}

} // namespace

bool universal_model_check() {
    UniversalModel um = universal_model_ideals();
    QMatrix a = quadric_coeff_matrix(um.minors);
    QMatrix b = quadric_coeff_matrix(um.cover_components);
    return rank(a) == 9 && rank(b) == 9 && rank(stack_rows(a, b)) == 9;
}

namespace {

QMatrix outer(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    QMatrix m(int(a.size()), int(b.size()));
    for (int i = 0; i < int(a.size()); ++i)
        for (int j = 0; j < int(b.size()); ++j) m.at(i, j) = a[i] * b[j];
    return m;
}

std::vector<Rat> axial(const QMatrix& m) {
    return {m.at(1, 2) - m.at(2, 1), m.at(2, 0) - m.at(0, 2), m.at(0, 1) - m.at(1, 0)};
}

// xi-part of tau(mu) together with the symmetric part; a point of the cover
// iff alpha*w = 0 and w w^t + adj(alpha) = 0.
bool on_cover(const QMatrix& mu) {
    QMatrix alpha = add(mu, transpose(mu));
    std::vector<Rat> w = axial(mu);
    for (int i = 0; i < 3; ++i) {
        Rat acc(0);
        for (int j = 0; j < 3; ++j) acc += alpha.at(i, j) * w[j];
        if (!is_zero(acc)) return false;
    }
    QMatrix rel = add(outer(w, w), adjugate_q(alpha));
    return is_zero(rel);
}

} // namespace

bool flop_identity_check(SeededRng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        std::vector<Rat> a(3), b(3);
        bool azero = true, bzero = true;
        for (int i = 0; i < 3; ++i) {
            a[i] = rng.next_height(10);
            b[i] = rng.next_height(10);
            azero = azero && is_zero(a[i]);
            bzero = bzero && is_zero(b[i]);
        }
        if (azero || bzero) continue; // not points of X±
        QMatrix mu = outer(a, b);
        QMatrix mut = transpose(mu);
        // tau(mu) and tau(mu^t) lie on the cover
        if (!on_cover(mu) || !on_cover(mut)) return false;
        // phi ∘ tau(mu) = tau(mu^t): same symmetric part, opposite xi-part
        QMatrix sym1 = add(mu, mut), sym2 = add(mut, mu);
        if (!(sym1 == sym2)) return false;
        std::vector<Rat> w1 = axial(mu), w2 = axial(mut);
        for (int i = 0; i < 3; ++i)
            if (w1[i] != -w2[i]) return false;
        // the X+ -> X- map sends ([b], mu) to ([b^t], mu^t); projections agree:
        // pi_-(image) = tau(mu^t) = phi(pi_+(source)), checked above. If mu is
        // symmetric the two coincide and phi fixes tau(mu).
        if (mu == mut)
            for (int i = 0; i < 3; ++i)
                if (!is_zero(w1[i])) return false;
    }
    return true;
}

} // namespace epwlab
