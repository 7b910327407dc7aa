#include "epwlab/epw.hpp"

#include "epwlab/digest.hpp"

#include <stdexcept>

namespace epwlab {

bool proj_equal(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) return false;
    // a = t b for some nonzero t
    Rat t(0);
    for (size_t i = 0; i < a.size(); ++i) {
        bool az = is_zero(a[i]), bz = is_zero(b[i]);
        if (az != bz) return false;
        if (!az) {
            Rat r = a[i] / b[i];
            if (is_zero(t))
                t = r;
            else if (r != t)
                return false;
        }
    }
    return !is_zero(t);
}

static std::vector<std::pair<int, int>> chart_pairs(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 6; ++i) {
        if (i == k) continue;
        for (int j = i + 1; j < 6; ++j) {
            if (j == k) continue;
            pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

EPWSextic sextic(const Lagrangian& a, int chart) {
    if (chart < 0 || chart > 5) throw std::invalid_argument("sextic: chart must be 0..5");
    std::vector<std::string> vars = default_vars("x", 6);
    auto pairs = chart_pairs(chart);
    PolyMatrix m(vars, 10, 10);
    for (int row = 0; row < 10; ++row) {
        AltK alpha = altk_from_row(6, 3, a.basis.row(row));
        for (int t = 0; t < 10; ++t) {
            AltK eij = wedge(AltK::e(6, pairs[t].first), AltK::e(6, pairs[t].second));
            std::vector<Term> terms;
            for (int v = 0; v < 6; ++v) {
                Rat c = vol6(wedge(wedge(AltK::e(6, v), eij), alpha));
                if (is_zero(c)) continue;
                Mono mo(6, 0);
                mo[v] = 1;
                terms.push_back({std::move(mo), c});
            }
            m.at(row, t) = MultiPoly::from_terms(vars, std::move(terms));
        }
    }
    MultiPoly det = poly_det(m);
    if (det.is_zero()) throw ZeroDeterminant();
    Mono xk4(6, 0);
    xk4[chart] = 4;
    MultiPoly den = MultiPoly::from_terms(vars, {{xk4, Rat(1)}});
    MultiPoly quo;
    try {
        quo = exact_divide(det, den);
    } catch (const NotDivisible&) {
        throw std::logic_error("sextic: chart determinant not divisible by x_k^4");
    }
    if (!quo.is_homogeneous() || quo.degree() != 6)
        throw std::logic_error("sextic: quotient not homogeneous of degree 6");
    return EPWSextic{normalize(quo), chart, matrix_digest(a.basis)};
}

EPWSextic sextic_any_chart(const Lagrangian& a) {
    for (int k = 0; k < 6; ++k) {
        try {
            return sextic(a, k);
        } catch (const ZeroDeterminant&) {
            continue;
        }
    }
    throw ZeroDeterminant();
}

int corank_at(const Lagrangian& a, const PointPV& p) {
    AltK v = AltK::vector(6, p.coords);
    QMatrix f = F_basis(v);
    return 10 + 10 - rank(stack_rows(a.basis, f));
}

Rat pluecker_form(const PointPV& v0, const PointPV& v, const AltK& alpha) {
    AltK v0a = AltK::vector(6, v0.coords);
    AltK va = AltK::vector(6, v.coords);
    if (!wedge(v0a, alpha).is_zero()) throw NotInF();
    // solve alpha = v0 ∧ beta over beta in Λ²V (any solution)
    QMatrix w(20, 15);
    for (int p = 0; p < 15; ++p) {
        AltK img = wedge(v0a, AltK::basis(6, 2, p));
        for (int r = 0; r < 20; ++r) w.at(r, p) = img.coords[r];
    }
    auto beta = solve(w, alpha.coords);
    if (!beta) throw NotInF();
    AltK b = altk_from_row(6, 2, *beta);
    return vol6(wedge(wedge(v0a, va), wedge(b, b)));
}

std::optional<std::vector<Rat>> graph_lift(const Lagrangian& a, const Decomposition& d,
                                           const std::vector<Rat>& beta10) {
    QMatrix sys(20, 20);
    for (int col = 0; col < 10; ++col) {
        std::vector<Rat> arow = a.basis.row(col);
        for (int r = 0; r < 20; ++r) sys.at(r, col) = arow[r];
    }
    for (int p = 0; p < 10; ++p) {
        std::vector<Rat> unit(10, Rat(0));
        unit[p] = 1;
        AltK img = wedge(d.v0, d.embed2(unit));
        for (int r = 0; r < 20; ++r) sys.at(r, 10 + p) = -img.coords[r];
    }
    std::vector<Rat> rhs = d.embed3(beta10).coords;
    auto x = solve(sys, rhs);
    if (!x) return std::nullopt;
    return std::vector<Rat>(x->begin() + 10, x->end());
}

namespace {

// Lifts of the canonical A ∩ F_v0 rows through v0 ∧ (·); row r corresponds
// to k20 row r, so tau and theta land in the same Sym²K^v coordinates.
QMatrix kernel_lifts(const QMatrix& k20, const Decomposition& d) {
    QMatrix lifts(k20.rows(), 10);
    for (int r = 0; r < k20.rows(); ++r) {
        auto kappa = d.rho(altk_from_row(6, 3, k20.row(r)));
        if (!kappa) throw std::logic_error("kernel_lifts: row not of the form v0 ∧ kappa");
        lifts.set_row(r, *kappa);
    }
    return lifts;
}

} // namespace

SymDet chart_family(const Lagrangian& a, const Decomposition& d) {
    if (rank(stack_rows(a.basis, d.embedding3())) != 20) throw NotTransverse();
    std::vector<std::string> vars = default_vars("x", 5);
    // graph map: beta_b in Λ³V0 with v0 ∧ kappa_b + beta_b ∈ A
    std::vector<AltK> beta_emb;
    std::vector<AltK> kappa_emb;
    for (int b = 0; b < 10; ++b) {
        std::vector<Rat> unit(10, Rat(0));
        unit[b] = 1;
        kappa_emb.push_back(d.embed2(unit));
        // solve for the beta part directly
        QMatrix sys(20, 20);
        for (int col = 0; col < 10; ++col) {
            std::vector<Rat> arow = a.basis.row(col);
            for (int r = 0; r < 20; ++r) sys.at(r, col) = arow[r];
        }
        QMatrix e3 = d.embedding3();
        for (int t = 0; t < 10; ++t)
            for (int r = 0; r < 20; ++r) sys.at(r, 10 + t) = -e3.at(t, r);
        std::vector<Rat> rhs = wedge(d.v0, kappa_emb.back()).coords;
        auto x = solve(sys, rhs);
        if (!x) throw NotTransverse();
        std::vector<Rat> beta10(x->begin() + 10, x->end());
        beta_emb.push_back(d.embed3(beta10));
    }
    PolyMatrix fam(vars, 10, 10);
    for (int c = 0; c < 10; ++c)
        for (int b = 0; b < 10; ++b) {
            std::vector<Term> ts;
            Rat c0 = vol6(wedge(wedge(d.v0, kappa_emb[c]), beta_emb[b]));
            if (!is_zero(c0)) ts.push_back({Mono(5, 0), c0});
            for (int m = 0; m < 5; ++m) {
                AltK bm = altk_from_row(6, 1, d.V0.row(m));
                Rat lin = -vol6(wedge(wedge(wedge(d.v0, bm), kappa_emb[c]), kappa_emb[b]));
                if (is_zero(lin)) continue;
                Mono mo(5, 0);
                mo[m] = 1;
                ts.push_back({std::move(mo), lin});
            }
            fam.at(c, b) = MultiPoly::from_terms(vars, std::move(ts));
        }
    return SymDet::make(std::move(fam));
}

TauMap tau_map(const Lagrangian& a, const Decomposition& d) {
    int corank = corank_at(a, PointPV{d.v0.coords});
    if (corank != 3) throw WrongCorank(corank);
    QMatrix k20 = rowspace_intersection(a.basis, F_basis(d.v0));
    QMatrix lifts = kernel_lifts(k20, d);
    std::vector<AltK> kappa;
    for (int r = 0; r < 3; ++r) kappa.push_back(d.embed2(lifts.row(r)));
    QMatrix tau(5, 6);
    for (int m = 0; m < 5; ++m) {
        AltK vm = altk_from_row(6, 1, d.V0.row(m));
        AltK head = wedge(d.v0, vm);
        QMatrix b(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s) b.at(r, s) = vol6(wedge(head, wedge(kappa[r], kappa[s])));
        int col = 0;
        for (int r = 0; r < 3; ++r)
            for (int s = r; s < 3; ++s) {
                tau.at(m, col) = (r == s) ? Rat(b.at(r, r)) : Rat(b.at(r, s) + b.at(s, r));
                ++col;
            }
    }
    return TauMap{tau, k20};
}

QMatrix theta_restriction(const Lagrangian& a, const Decomposition& d) {
    int corank = corank_at(a, PointPV{d.v0.coords});
    if (corank != 3) throw WrongCorank(corank);
    QMatrix k20 = rowspace_intersection(a.basis, F_basis(d.v0));
    // K rows in A coordinates
    QMatrix c(3, 10);
    for (int r = 0; r < 3; ++r) {
        auto x = coords_in_rows(a.basis, k20.row(r));
        if (!x) throw std::logic_error("theta_restriction: K not inside A");
        c.set_row(r, *x);
    }
    QMatrix theta(55, 6);
    int row = 0;
    for (int i = 0; i < 10; ++i)
        for (int j = i; j < 10; ++j) {
            // restriction of the form x_i x_j to K
            int col = 0;
            for (int r = 0; r < 3; ++r)
                for (int s = r; s < 3; ++s) {
                    Rat v = (r == s) ? Rat(c.at(r, i) * c.at(r, j))
                                     : Rat(c.at(r, i) * c.at(s, j) + c.at(s, i) * c.at(r, j));
                    theta.at(row, col) = v;
                    ++col;
                }
            ++row;
        }
    return theta;
}

QMatrix delta_tangent(const Lagrangian& a, const Decomposition& d) {
    QMatrix theta = theta_restriction(a, d);
    TauMap tau = tau_map(a, d);
    // map (q, v) -> theta(q) - tau(v), a 6x60 matrix
    QMatrix m(6, 60);
    for (int q = 0; q < 55; ++q)
        for (int c = 0; c < 6; ++c) m.at(c, q) = theta.at(q, c);
    for (int v = 0; v < 5; ++v)
        for (int c = 0; c < 6; ++c) m.at(c, 55 + v) = -tau.matrix.at(v, c);
    return kernel_basis(m);
}

const char* to_string(OrbitClass k) {
    switch (k) {
        case OrbitClass::OpenOrbit: return "OpenOrbit";
        case OrbitClass::ClosedOrbit: return "ClosedOrbit";
        case OrbitClass::NonInjective: return "NonInjective";
        case OrbitClass::Anomalous: return "Anomalous";
    }
    return "?";
}

OrbitResult orbit_classify(const Lagrangian& a, const Decomposition& d) {
    TauMap tau = tau_map(a, d);
    int r = rank(tau.matrix);
    if (r < 5) return OrbitResult{OrbitClass::NonInjective, r, 0};
    // the annihilator of im tau in Sym²K: kernel of the 5x6 matrix (the
    // monomial coordinates pair with symmetric tensors by the trace form)
    QMatrix ann = kernel_basis(tau.matrix);
    if (ann.rows() != 1) throw std::logic_error("orbit_classify: annihilator not a line");
    QMatrix s(3, 3);
    int col = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            s.at(i, j) = ann.at(0, col);
            s.at(j, i) = ann.at(0, col);
            ++col;
        }
    int sr = rank(s);
    OrbitClass kind = sr == 3   ? OrbitClass::OpenOrbit
                     : sr == 1 ? OrbitClass::ClosedOrbit
                               : OrbitClass::Anomalous;
    return OrbitResult{kind, r, sr};
}

GmapResult gmap_point_check(const Lagrangian& a, const Decomposition& d, const AltK& beta,
                            const AltK& beta2, const MultiPoly* sextic_poly) {
    if (beta.ambient != 5 || beta.grade != 3 || beta2.ambient != 5 || beta2.grade != 3)
        throw std::invalid_argument("gmap_point_check: need 3-vectors of Λ³V0");
    if (!is_decomposable(beta) || !is_decomposable(beta2)) throw NotOnS("beta not decomposable");
    std::vector<Rat> b1(beta.coords), b2(beta2.coords);
    auto alpha1 = graph_lift(a, d, b1);
    auto alpha2 = graph_lift(a, d, b2);
    if (!alpha1 || !alpha2) throw NotOnS("beta not in Ann K");
    // on the quadric: vol0(alpha ∧ beta) = 0
    auto pair05 = [](const std::vector<Rat>& al, const std::vector<Rat>& be) {
        return vol5(wedge(altk_from_row(5, 2, al), altk_from_row(5, 3, be)));
    };
    if (!is_zero(pair05(*alpha1, b1)) || !is_zero(pair05(*alpha2, b2)))
        throw NotOnS("beta not on the r-quadric");

    QMatrix u1 = support(beta).basis, u2 = support(beta2).basis;
    QMatrix overlap = rowspace_intersection(u1, u2);
    if (overlap.rows() != 1) throw BadSupports("support overlap not 1-dimensional");
    // a line inside the Grassmannian meets every Plücker quadric everywhere
    AltK mid1 = beta + beta2, mid2 = beta + beta2 * Rat(2);
    if (!mid1.is_zero() && !mid2.is_zero() && is_decomposable(mid1) && is_decomposable(mid2))
        throw BadSupports("the span of beta, beta2 lies in the Grassmannian");

    // basis v1..v5 of V0 with beta = v1∧v2∧v3, beta2 = v1∧v4∧v5, vol0 = 1
    std::vector<Rat> v1 = overlap.row(0);
    auto complete = [&](const QMatrix& u) {
        QMatrix acc = QMatrix::from_rows({v1}, 5);
        std::vector<std::vector<Rat>> extra;
        for (int r = 0; r < u.rows() && acc.rows() < 3; ++r) {
            QMatrix ext = stack_rows(acc, QMatrix::from_rows({u.row(r)}, 5));
            if (rank(ext) > acc.rows()) {
                acc = ext;
                extra.push_back(u.row(r));
            }
        }
        if (extra.size() != 2) throw BadSupports("support completion failed");
        return extra;
    };
    auto e1 = complete(u1), e2 = complete(u2);
    std::vector<Rat> v2 = e1[0], v3 = e1[1], v4 = e2[0], v5 = e2[1];

    auto scale_to = [&](const AltK& target, std::vector<Rat>& first, const std::vector<Rat>& a2,
                        const std::vector<Rat>& a3) {
        AltK w = wedge({altk_from_row(5, 1, v1), altk_from_row(5, 1, first), altk_from_row(5, 1, a2)});
        (void)a3;
        // proportionality factor target / w
        Rat lambda(0);
        for (size_t i = 0; i < w.coords.size(); ++i)
            if (!is_zero(w.coords[i])) { lambda = target.coords[i] / w.coords[i]; break; }
        if (is_zero(lambda)) throw BadSupports("degenerate support frame");
        for (Rat& x : first) x *= lambda;
    };
    scale_to(beta, v2, v3, v3);
    scale_to(beta2, v4, v5, v5);

    Rat s = vol5(wedge({altk_from_row(5, 1, v1), altk_from_row(5, 1, v2), altk_from_row(5, 1, v3),
                        altk_from_row(5, 1, v4), altk_from_row(5, 1, v5)}));
    if (is_zero(s)) throw BadSupports("v1..v5 do not span V0");
    for (Rat& x : v1) x *= s;
    for (Rat& x : v2) x /= s;
    for (Rat& x : v4) x /= s;

    // sanity: the normal form holds exactly
    AltK chk1 = wedge({altk_from_row(5, 1, v1), altk_from_row(5, 1, v2), altk_from_row(5, 1, v3)});
    AltK chk2 = wedge({altk_from_row(5, 1, v1), altk_from_row(5, 1, v4), altk_from_row(5, 1, v5)});
    if (!(chk1 == beta) || !(chk2 == beta2)) throw std::logic_error("gmap: normal form failed");

    Rat c = pair05(*alpha1, b2);
    Rat c_sym = pair05(*alpha2, b1);
    if (c != c_sym) throw std::logic_error("gmap: c not symmetric (A not Lagrangian?)");

    AltK point = d.v0 * c + d.embed1(v1);
    PointPV p{point.coords};
    bool ok = corank_at(a, p) >= 1;
    if (ok) {
        if (sextic_poly) {
            ok = is_zero(sextic_poly->eval(p.coords));
        } else {
            EPWSextic sx = sextic_any_chart(a);
            ok = is_zero(sx.poly.eval(p.coords));
        }
    }
    return GmapResult{std::move(p), ok, c};
}

std::vector<PointPV> sextic_line_roots(const MultiPoly& sextic_poly, const PointPV& p, const PointPV& q,
                                       long height) {
    std::vector<std::vector<Rat>> sub(6);
    for (int i = 0; i < 6; ++i) sub[i] = {p.coords[i], q.coords[i]};
    MultiPoly restricted = linear_substitute(sextic_poly, {"s", "t"}, sub);
    std::vector<PointPV> hits;
    auto push = [&](const Rat& s, const Rat& t) {
        PointPV pt;
        pt.coords.resize(6);
        bool nz = false;
        for (int i = 0; i < 6; ++i) {
            pt.coords[i] = s * p.coords[i] + t * q.coords[i];
            nz = nz || !is_zero(pt.coords[i]);
        }
        if (nz) hits.push_back(std::move(pt));
    };
    if (restricted.is_zero()) return hits; // the whole line lies on the sextic
    if (is_zero(restricted.eval({Rat(0), Rat(1)}))) push(Rat(0), Rat(1));
    for (long b = 1; b <= height; ++b)
        for (long a = -height; a <= height; ++a) {
            if (mpz_gcd_ui(nullptr, Int(a).get_mpz_t(), b) != 1) continue;
            Rat t(a, b);
            t.canonicalize();
            if (is_zero(restricted.eval({Rat(1), t}))) push(Rat(1), t);
        }
    return hits;
}

} // namespace epwlab
