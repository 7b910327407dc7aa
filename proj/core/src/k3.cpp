#include "epwlab/k3.hpp"

#include <algorithm>
#include <stdexcept>

namespace epwlab {

namespace {

AltK altk2(const std::vector<Rat>& c) { return altk_from_row(5, 2, c); }
AltK altk3(const std::vector<Rat>& c) { return altk_from_row(5, 3, c); }
AltK altk1(const std::vector<Rat>& c) { return altk_from_row(5, 1, c); }

std::vector<Rat> y_coords(const QMatrix& annk, const std::vector<Rat>& omega10) {
    auto y = coords_in_rows(annk, omega10);
    if (!y) throw std::logic_error("y_coords: vector not in the annK frame");
    return *y;
}

std::vector<Rat> frame_to_omega(const QMatrix& annk, const std::vector<Rat>& y) {
    std::vector<Rat> omega(10, Rat(0));
    for (int i = 0; i < annk.rows(); ++i)
        for (int j = 0; j < 10; ++j) omega[j] += y[i] * annk.at(i, j);
    return omega;
}

bool on_ideal(const Ideal& ideal, const std::vector<Rat>& p) {
    for (const MultiPoly& g : ideal.gens)
        if (!is_zero(g.eval(p))) return false;
    return true;
}

} // namespace

QMatrix kernel_plane(const Lagrangian& a, const Decomposition& d) {
    if (!d.valid()) throw std::invalid_argument("kernel_plane: invalid decomposition");
    if (rank(stack_rows(a.basis, d.embedding3())) != 20) throw NotTransverse();
    int corank = corank_at(a, PointPV{d.v0.coords});
    if (corank != 3) throw WrongCorank(corank);
    QMatrix k20 = rowspace_intersection(a.basis, F_basis(d.v0));
    QMatrix lifts(3, 10);
    for (int r = 0; r < 3; ++r) {
        auto kappa = d.rho(altk_from_row(6, 3, k20.row(r)));
        if (!kappa) throw std::logic_error("kernel_plane: intersection row not in v0 ∧ Λ²V0");
        lifts.set_row(r, *kappa);
    }
    return row_basis(lifts);
}

QMatrix ann_basis(const QMatrix& k) {
    if (k.cols() != 10) throw BadDimension("ann_basis: K must have 10 columns");
    return kernel_basis(mul(k, z0_pairing()));
}

WkIdeal wk_ideal(const QMatrix& k) {
    if (rank(k) != 3) throw BadDimension("wk_ideal: K must be a 3-plane");
    WkIdeal out;
    out.annk = ann_basis(k);
    out.ideal.vars = default_vars("y", 7);
    for (const QMatrix& g : gr3_plucker_grams()) {
        QMatrix restr = mul(mul(out.annk, g), transpose(out.annk));
        out.grams.push_back(restr);
        out.ideal.gens.push_back(normalize(quadric_poly(restr, out.ideal.vars)));
    }
    if (quadric_span_rank(out.grams) != 5) throw DegenerateK();
    return out;
}

QMatrix r_form(const Lagrangian& a, const Decomposition& d, const QMatrix& annk) {
    std::vector<std::vector<Rat>> alphas;
    for (int i = 0; i < annk.rows(); ++i) {
        auto alpha = graph_lift(a, d, annk.row(i));
        if (!alpha) throw std::logic_error("r_form: annK row admits no graph lift");
        alphas.push_back(*alpha);
    }
    int n = annk.rows();
    QMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.at(i, j) = vol6(wedge(wedge(d.v0, d.embed2(alphas[i])), d.embed3(annk.row(j))));
    if (!is_symmetric(r)) throw AsymmetryDetected();
    if (is_zero(det_exact(r))) throw Degenerate();
    return r;
}

K3Data make_k3(const Lagrangian& a, const Decomposition& d) {
    K3Data k3{a, d, {}, {}, {}, {}, {}, {}};
    k3.k = kernel_plane(a, d);
    WkIdeal wk = wk_ideal(k3.k);
    k3.annk = wk.annk;
    k3.wk_grams = std::move(wk.grams);
    k3.wk = std::move(wk.ideal);
    k3.r = r_form(a, d, k3.annk);
    k3.s = k3.wk;
    k3.s.gens.push_back(normalize(quadric_poly(k3.r, k3.s.vars)));
    std::vector<QMatrix> all = k3.wk_grams;
    all.push_back(k3.r);
    if (quadric_span_rank(all) != 6) throw Degenerate();
    return k3;
}

bool decomposition_independence(const Lagrangian& a, const Decomposition& d, const Decomposition& d2) {
    K3Data k1 = make_k3(a, d);
    K3Data k2 = make_k3(a, d2);
    // projection of V onto V0' along v0
    QMatrix sys(6, 6);
    for (int r = 0; r < 6; ++r) {
        sys.at(r, 0) = d2.v0.coords[r];
        for (int c = 0; c < 5; ++c) sys.at(r, 1 + c) = d2.V0.at(c, r);
    }
    auto project = [&](const std::vector<Rat>& w) {
        auto x = solve(sys, w);
        if (!x) throw std::logic_error("decomposition_independence: projection failed");
        AltK acc(6, 1);
        for (int c = 0; c < 5; ++c) acc = acc + altk_from_row(6, 1, d2.V0.row(c)) * (*x)[1 + c];
        return acc;
    };
    // phi = Λ³(projection) on the annK(D) frame, expressed in the annK(D2) frame
    std::vector<AltK> pimg;
    for (int i = 0; i < 5; ++i) pimg.push_back(project(d.V0.row(i)));
    QMatrix t(7, 7);
    const auto& triples = basis_subsets(5, 3);
    for (int col = 0; col < 7; ++col) {
        std::vector<Rat> beta = k1.annk.row(col);
        AltK acc(6, 3);
        for (int tr = 0; tr < 10; ++tr) {
            if (is_zero(beta[tr])) continue;
            AltK w = wedge({pimg[triples[tr][0]], pimg[triples[tr][1]], pimg[triples[tr][2]]});
            acc = acc + w * beta[tr];
        }
        auto c10 = d2.coords3(acc);
        if (!c10) throw std::logic_error("decomposition_independence: image not in Λ³V0'");
        std::vector<Rat> y2 = y_coords(k2.annk, *c10);
        for (int row = 0; row < 7; ++row) t.at(row, col) = y2[row];
    }
    // pull the D2 spans back to the D frame and compare
    QMatrix tt = transpose(t);
    std::vector<QMatrix> span1 = k1.wk_grams;
    span1.push_back(k1.r);
    std::vector<QMatrix> pulled;
    for (const QMatrix& g : k2.wk_grams) pulled.push_back(mul(mul(tt, g), t));
    pulled.push_back(mul(mul(tt, k2.r), t));
    std::vector<QMatrix> both = span1;
    both.insert(both.end(), pulled.begin(), pulled.end());
    return quadric_span_rank(span1) == 6 && quadric_span_rank(pulled) == 6 && quadric_span_rank(both) == 6;
}

std::vector<Rat> theta_point(const K3Data& k3, const QMatrix& w) {
    if (!theta_check(k3.a, w)) throw BadCertificate("theta_point: Λ³W not inside A");
    if (in_rowspace(w, k3.d.v0.coords)) throw ContainsV0();
    // split W along V = [v0] ⊕ V0: rows as (c, u) with u in V0 coordinates
    QMatrix sys(6, 6);
    for (int r = 0; r < 6; ++r) {
        sys.at(r, 0) = k3.d.v0.coords[r];
        for (int c = 0; c < 5; ++c) sys.at(r, 1 + c) = k3.d.V0.at(c, r);
    }
    std::vector<Rat> cpart;
    std::vector<std::vector<Rat>> upart;
    for (int r = 0; r < 3; ++r) {
        auto x = solve(sys, w.row(r));
        if (!x) throw std::logic_error("theta_point: split failed");
        cpart.push_back((*x)[0]);
        upart.push_back(std::vector<Rat>(x->begin() + 1, x->end()));
    }
    // u1 from a row with nonzero v0 part, u2, u3 span W ∩ V0
    int lead = -1;
    for (int r = 0; r < 3; ++r)
        if (!is_zero(cpart[r])) { lead = r; break; }
    if (lead < 0) throw std::logic_error("theta_point: W inside V0 but Λ³W ⊂ A");
    std::vector<Rat> u1 = upart[lead];
    for (Rat& c : u1) c /= cpart[lead];
    // the other two rows, with their v0 components cancelled, span W ∩ V0
    std::vector<std::vector<Rat>> v0rows;
    for (int r = 0; r < 3; ++r) {
        if (r == lead) continue;
        std::vector<Rat> u(5);
        for (int c = 0; c < 5; ++c) u[c] = upart[r][c] - cpart[r] / cpart[lead] * upart[lead][c];
        v0rows.push_back(u);
    }
    AltK point = wedge({altk1(u1), altk1(v0rows[0]), altk1(v0rows[1])});
    if (point.is_zero()) throw std::logic_error("theta_point: u1 ∧ u2 ∧ u3 vanished");
    std::vector<Rat> y = y_coords(k3.annk, point.coords);
    if (!on_ideal(k3.s, y)) throw std::logic_error("theta_point: image not on S");
    return y;
}

Tangency tangency_check(const K3Data& k3, const std::vector<Rat>& y) {
    if (!on_ideal(k3.s, y)) throw NotOnS("tangency_check: point not on S");
    std::vector<Rat> omega = frame_to_omega(k3.annk, y);
    AltK beta = altk3(omega);
    if (!is_decomposable(beta)) throw NotOnS("tangency_check: point not decomposable");
    QMatrix u = support(beta).basis; // 3x5
    auto alpha = graph_lift(k3.a, k3.d, omega);
    if (!alpha) throw NotOnS("tangency_check: no graph lift");
    // transverse iff Λ²U + <alpha> + K spans a 7-dimensional space
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            rows.push_back(wedge(altk1(u.row(i)), altk1(u.row(j))).coords);
    rows.push_back(*alpha);
    for (int i = 0; i < 3; ++i) rows.push_back(k3.k.row(i));
    return rank(QMatrix::from_rows(rows, 10)) == 7 ? Tangency::Transverse : Tangency::Tangent;
}

bool k3_empty_certificate(const QMatrix& k, int dmax) {
    return is_empty_projective(restricted_conics(k), dmax).empty;
}

bool k3_single_point_certificate(const QMatrix& k) {
    Ideal conics = restricted_conics(k);
    for (int d = 3; d <= 5; ++d)
        if (hilbert_function(conics, d) != 1) return false;
    return true;
}

Lagrangian lagrangian_from_quadric(const QMatrix& k, const QMatrix& qmat, const Decomposition& d) {
    if (rank(k) != 3) throw BadDimension("lagrangian_from_quadric: K must be a 3-plane");
    if (!k3_empty_certificate(k) && !k3_single_point_certificate(k))
        throw BadCertificate("lagrangian_from_quadric: P(K) ∩ Gr(2,V0) certificate missing");
    if (qmat.rows() != 7 || !is_symmetric(qmat)) throw NotSymmetric();
    if (is_zero(det_exact(qmat))) throw NotInvertible();
    QMatrix annk = ann_basis(k);
    // qtilde(alpha) = annk^t * (qmat/c_D)^{-1} * annk * Z0^t * alpha
    QMatrix minv(7, 7);
    {
        QMatrix id = QMatrix::identity(7);
        for (int col = 0; col < 7; ++col) {
            auto x = solve(qmat, id.row(col));
            if (!x) throw NotInvertible();
            for (int i = 0; i < 7; ++i) minv.at(i, col) = (*x)[i];
        }
    }
    Rat cd = d.top_factor();
    QMatrix m_map = mul(mul(transpose(annk), minv), mul(annk, transpose(z0_pairing())));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) m_map.at(i, j) *= cd;
    QMatrix gram = mul(z0_pairing(), m_map);
    return graph_lagrangian(d, gram);
}

std::vector<std::vector<Rat>> wk_points_through(const QMatrix& k, const std::vector<Rat>& u1,
                                                int count, long height) {
    WkIdeal wk = wk_ideal(k);
    AltK u1a = altk1(u1);
    if (u1a.is_zero()) throw BadDimension("wk_points_through: u1 = 0");
    // complete u1 to a basis of V0
    QMatrix frame = QMatrix::from_rows({u1}, 5);
    for (int i = 0; i < 5 && frame.rows() < 5; ++i) {
        QMatrix unit(1, 5);
        unit.at(0, i) = 1;
        QMatrix ext = stack_rows(frame, unit);
        if (rank(ext) > frame.rows()) frame = ext;
    }
    // bivectors on the complement of u1: pairs of frame rows 1..4
    std::vector<AltK> pair_forms;
    for (int i = 1; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            pair_forms.push_back(wedge(altk1(frame.row(i)), altk1(frame.row(j))));
    // conditions: vol0(kappa ∧ u1 ∧ B) = 0 for the K rows
    QMatrix cond(3, 6);
    for (int r = 0; r < 3; ++r)
        for (int p = 0; p < 6; ++p)
            cond.at(r, p) = vol5(wedge(altk2(k.row(r)), wedge(u1a, pair_forms[p])));
    QMatrix sspace = kernel_basis(cond);
    if (sspace.rows() != 3) return {}; // degenerate u1, caller resamples
    // primitive integer basis keeps the conic coefficients small
    for (int r = 0; r < 3; ++r) {
        Int lcm(1), gcd(0);
        for (int c = 0; c < 6; ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), sspace.at(r, c).get_den().get_mpz_t());
        for (int c = 0; c < 6; ++c) {
            sspace.at(r, c) *= lcm;
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), sspace.at(r, c).get_num().get_mpz_t());
        }
        if (gcd > 1)
            for (int c = 0; c < 6; ++c) sspace.at(r, c) /= Rat(gcd);
    }
    auto bivec = [&](const std::vector<Rat>& z) {
        AltK acc(5, 2);
        for (int s = 0; s < 3; ++s)
            for (int p = 0; p < 6; ++p) acc = acc + pair_forms[p] * (z[s] * sspace.at(s, p));
        return acc;
    };
    // conic on P(S): q(z) = vol0(u1 ∧ B(z) ∧ B(z))
    QMatrix conic(3, 3);
    for (int s = 0; s < 3; ++s) {
        std::vector<Rat> zs(3, Rat(0));
        zs[s] = 1;
        AltK bs = bivec(zs);
        for (int t = 0; t < 3; ++t) {
            std::vector<Rat> zt(3, Rat(0));
            zt[t] = 1;
            conic.at(s, t) = vol5(wedge(u1a, wedge(bs, bivec(zt))));
        }
    }
    auto conic_val = [&](const std::vector<Rat>& z) {
        Rat acc(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) acc += z[i] * conic.at(i, j) * z[j];
        return acc;
    };
    auto conic_polar = [&](const std::vector<Rat>& z, const std::vector<Rat>& w) {
        Rat acc(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) acc += z[i] * conic.at(i, j) * w[j];
        return acc;
    };
    // base point: pin two coordinates on a small grid and solve the third as
    // a quadratic, accepting rational roots (square discriminant)
    std::vector<Rat> base;
    {
        long grid = 6;
        for (int axis = 0; axis < 3 && base.empty(); ++axis) {
            int o1 = (axis + 1) % 3, o2 = (axis + 2) % 3;
            for (long p = -grid; p <= grid && base.empty(); ++p)
                for (long q = -grid; q <= grid; ++q) {
                    std::vector<Rat> z(3, Rat(0));
                    z[o1] = p;
                    z[o2] = q;
                    Rat aa = conic.at(axis, axis);
                    std::vector<Rat> zx(3, Rat(0));
                    zx[axis] = 1;
                    Rat bb = 2 * conic_polar(zx, z);
                    Rat cc = conic_val(z);
                    if (is_zero(aa)) {
                        if (is_zero(bb)) continue;
                        z[axis] = -cc / bb;
                    } else {
                        Rat disc = bb * bb - 4 * aa * cc;
                        if (sgn(disc) < 0) continue;
                        // disc is a square iff num and den are squares
                        if (!mpz_perfect_square_p(disc.get_num().get_mpz_t()) ||
                            !mpz_perfect_square_p(disc.get_den().get_mpz_t()))
                            continue;
                        Int sn, sd;
                        mpz_sqrt(sn.get_mpz_t(), disc.get_num().get_mpz_t());
                        mpz_sqrt(sd.get_mpz_t(), disc.get_den().get_mpz_t());
                        Rat root(sn, sd);
                        root.canonicalize();
                        z[axis] = (-bb + root) / (2 * aa);
                    }
                    bool nz = false;
                    for (const Rat& c : z) nz = nz || !is_zero(c);
                    if (!nz) continue;
                    base = z;
                    break;
                }
        }
    }
    if (base.empty()) return {};
    std::vector<std::vector<Rat>> out;
    auto emit = [&](const std::vector<Rat>& z) {
        AltK omega = wedge(u1a, bivec(z));
        if (omega.is_zero()) return;
        auto y = coords_in_rows(wk.annk, omega.coords);
        if (!y) throw std::logic_error("wk_points_through: point not in the annK frame");
        if (!on_ideal(wk.ideal, *y)) throw std::logic_error("wk_points_through: point off W_K");
        for (const auto& seen : out)
            if (proj_equal(seen, *y)) return;
        out.push_back(*y);
    };
    emit(base);
    // sweep lines through the base point; the second conic intersection is rational
    for (long d1 = -height; d1 <= height && int(out.size()) < count; ++d1)
        for (long d2 = -height; d2 <= height && int(out.size()) < count; ++d2) {
            std::vector<Rat> dir{Rat(1), Rat(d1), Rat(d2)};
            Rat qd = conic_val(dir);
            if (is_zero(qd)) continue;
            Rat tstar = -2 * conic_polar(base, dir) / qd;
            if (is_zero(tstar)) continue;
            std::vector<Rat> z(3);
            for (int i = 0; i < 3; ++i) z[i] = base[i] + tstar * dir[i];
            emit(z);
        }
    return out;
}

std::vector<std::vector<Rat>> wk_rational_points(const QMatrix& k, SeededRng& rng, int count) {
    std::vector<std::vector<Rat>> out;
    for (int attempt = 0; attempt < 200 && int(out.size()) < count; ++attempt) {
        std::vector<Rat> u1(5);
        bool nz = false;
        for (Rat& c : u1) {
            c = rng.next_height(7);
            nz = nz || !is_zero(c);
        }
        if (!nz) continue;
        for (auto& y : wk_points_through(k, u1, count - int(out.size()))) {
            bool dup = false;
            for (const auto& seen : out) dup = dup || proj_equal(seen, y);
            if (!dup) out.push_back(std::move(y));
        }
    }
    if (int(out.size()) < count) throw SearchExhausted("wk_rational_points: not enough rational points");
    return out;
}

SingularReport wk_singular_point_check(const QMatrix& k, const AltK& kappa0, SeededRng& rng, int samples) {
    if (kappa0.ambient != 5 || kappa0.grade != 2) throw BadCertificate("wk_singular_point: kappa0 must be a 2-form on V0");
    if (!in_rowspace(k, kappa0.coords)) throw BadCertificate("wk_singular_point: kappa0 not in K");
    if (!is_decomposable(kappa0)) throw BadCertificate("wk_singular_point: kappa0 not decomposable");
    if (!k3_single_point_certificate(k)) throw BadCertificate("wk_singular_point: no single-reduced-point certificate");
    WkIdeal wk = wk_ideal(k);
    SingularReport rep;

    QMatrix u2 = support(kappa0).basis; // 2x5
    // coset representatives of V0 / supp(kappa0)
    QMatrix frame = u2;
    std::vector<std::vector<Rat>> reps;
    for (int i = 0; i < 5 && frame.rows() < 5; ++i) {
        QMatrix unit(1, 5);
        unit.at(0, i) = 1;
        QMatrix ext = stack_rows(frame, unit);
        if (rank(ext) > frame.rows()) {
            frame = ext;
            reps.push_back(unit.row(0));
        }
    }
    // nu: K -> (V0/supp kappa0)^v, kappa -> (v -> vol0(v ∧ kappa0 ∧ kappa))
    QMatrix nu(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            nu.at(i, j) = vol5(wedge(altk1(reps[j]), wedge(kappa0, altk2(k.row(i)))));
    QMatrix kernu = kernel_basis(transpose(nu)); // kernel over K coordinates
    rep.ker_nu_dim = kernu.rows();
    if (rep.ker_nu_dim != 1) return rep;
    {
        // the kernel must be the kappa0 line
        std::vector<Rat> kap(10, Rat(0));
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 10; ++c) kap[c] += kernu.at(0, r) * k.at(r, c);
        if (!proj_equal(kap, kappa0.coords)) throw BadCertificate("wk_singular_point: ker(nu) differs from kappa0");
    }
    // predicted singular point: U = supp(kappa0) + the annihilator of im(nu)
    QMatrix annim = kernel_basis(nu); // z with nu z = 0 over the rep coordinates
    if (annim.rows() != 1) return rep;
    std::vector<Rat> lift(5, Rat(0));
    for (int j = 0; j < 3; ++j)
        for (int c = 0; c < 5; ++c) lift[c] += annim.at(0, j) * reps[j][c];
    AltK omega = wedge(wedge(altk1(u2.row(0)), altk1(u2.row(1))), altk1(lift));
    auto y = coords_in_rows(wk.annk, omega.coords);
    if (!y) throw BadCertificate("wk_singular_point: predicted point not on P(Ann K)");
    if (!on_ideal(wk.ideal, *y)) throw BadCertificate("wk_singular_point: predicted point not on W_K");
    rep.sing_point = *y;

    PolyMatrix jac = jacobian(wk.ideal);
    auto jac_rank = [&](const std::vector<Rat>& p) { return rank(jac.eval(p)); };
    rep.sing_jacobian_rank = jac_rank(rep.sing_point);
    rep.sing_point_singular = rep.sing_jacobian_rank < 3;

    rep.samples_smooth = true;
    int found = 0;
    for (int attempt = 0; attempt < 400 && found < samples; ++attempt) {
        std::vector<Rat> u1(5);
        bool nz = false;
        for (Rat& c : u1) {
            c = rng.next_height(7);
            nz = nz || !is_zero(c);
        }
        if (!nz) continue;
        for (auto& py : wk_points_through(k, u1, 2)) {
            if (proj_equal(py, rep.sing_point)) continue;
            bool dup = false;
            for (auto& [seen, r] : rep.sampled) dup = dup || proj_equal(seen, py);
            if (dup) continue;
            int r = jac_rank(py);
            rep.sampled.emplace_back(py, r);
            rep.samples_smooth = rep.samples_smooth && r == 3;
            if (++found >= samples) break;
        }
    }
    return rep;
}

WebBasePlane web_base_plane(const QMatrix& k, const std::vector<Rat>& v) {
    if (!k3_empty_certificate(k)) throw BadCertificate("web_base_plane: emptiness certificate required");
    WkIdeal wk = wk_ideal(k);
    AltK va = altk1(v);
    if (va.is_zero()) throw BadDimension("web_base_plane: v = 0");
    // {omega : v ∧ omega = 0} = v ∧ Λ²V0, a 6-dimensional space
    std::vector<std::vector<Rat>> rows;
    for (int p = 0; p < 10; ++p) rows.push_back(wedge(va, AltK::basis(5, 2, p)).coords);
    QMatrix killed = row_basis(QMatrix::from_rows(rows, 10));
    QMatrix plane = rowspace_intersection(wk.annk, killed);
    if (plane.rows() != 3) throw NotAPlane();
    QMatrix r_l(3, 7);
    for (int r = 0; r < 3; ++r) r_l.set_row(r, y_coords(wk.annk, plane.row(r)));
    // restrict the web to the plane; the span must be exactly one conic
    std::vector<QMatrix> restr;
    for (const QMatrix& g : wk.grams) restr.push_back(mul(mul(r_l, g), transpose(r_l)));
    std::vector<std::vector<Rat>> coeffs;
    for (const QMatrix& g : restr) coeffs.push_back(quadric_coeffs(g));
    QMatrix cm = row_basis(QMatrix::from_rows(coeffs, 6));
    if (cm.rows() != 1) throw NotAConic();
    std::vector<std::string> zvars = default_vars("z", 3);
    QMatrix gram(3, 3);
    {
        // rebuild the Gram from the canonical coefficient vector
        int idx = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                if (i == j)
                    gram.at(i, i) = cm.at(0, idx);
                else {
                    gram.at(i, j) = cm.at(0, idx) / 2;
                    gram.at(j, i) = gram.at(i, j);
                }
                ++idx;
            }
    }
    return WebBasePlane{r_l, normalize(quadric_poly(gram, zvars))};
}

ConicThrough conic_through(const QMatrix& k, const std::vector<Rat>& p1, const std::vector<Rat>& p2) {
    WkIdeal wk = wk_ideal(k);
    if (!on_ideal(wk.ideal, p1) || !on_ideal(wk.ideal, p2))
        throw NotOnS("conic_through: points must lie on W_K");
    if (proj_equal(p1, p2)) throw BadDimension("conic_through: points coincide");
    // v_m = polar of the m-th web quadric at (p1, p2); the hyperplane of
    // quadrics through the line corresponds to Ann(v)
    std::vector<Rat> v(5, Rat(0));
    bool all_zero = true;
    for (int m = 0; m < 5; ++m) {
        Rat acc(0);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) acc += p1[i] * wk.grams[m].at(i, j) * p2[j];
        v[m] = acc;
        all_zero = all_zero && is_zero(acc);
    }
    if (all_zero) throw LineInWK();
    WebBasePlane web = web_base_plane(k, v);
    for (const auto* p : {&p1, &p2}) {
        auto z = coords_in_rows(web.r_l, *p);
        if (!z) throw std::logic_error("conic_through: point not on the plane R_L");
        if (!is_zero(web.conic.eval(*z))) throw std::logic_error("conic_through: conic misses the point");
    }
    return ConicThrough{std::move(v), std::move(web)};
}

SigmaDeltaInstance build_sigma_delta_lagrangian(SeededRng& rng, long height, int retries) {
    Decomposition d = Decomposition::standard();
    // alpha0 = b1∧b2, omega0 = b1∧b2∧b3 (induced coordinates)
    std::vector<Rat> alpha0(10, Rat(0)), omega0(10, Rat(0));
    alpha0[subset_position(5, {0, 1})] = 1;
    omega0[subset_position(5, {0, 1, 2})] = 1;
    // z(x) = vol0(x ∧ omega0) on Λ²V0
    std::vector<Rat> z(10, Rat(0));
    const QMatrix& z0 = z0_pairing();
    for (int c = 0; c < 10; ++c)
        for (int t = 0; t < 10; ++t) z[c] += z0.at(c, t) * omega0[t];
    QMatrix zker(1, 10);
    zker.set_row(0, z);
    QMatrix zspace = kernel_basis(zker); // 9x10: K must pair to zero with omega0

    for (int attempt = 0; attempt < retries; ++attempt) {
        QMatrix mix = rng.random_matrix(3, zspace.rows(), height);
        QMatrix k = mul(mix, zspace);
        if (rank(k) != 3) continue;
        if (rank(stack_rows(k, QMatrix::from_rows({alpha0}, 10))) != 4) continue;
        Emptiness e = is_empty_projective(restricted_conics(k), 4);
        if (!e.empty) continue;
        // basis C = [K; alpha0; completion], Gram G in that basis
        QMatrix c = stack_rows(row_basis(k), QMatrix::from_rows({alpha0}, 10));
        for (int i = 0; i < 10 && c.rows() < 10; ++i) {
            QMatrix unit(1, 10);
            unit.at(0, i) = 1;
            QMatrix ext = stack_rows(c, unit);
            if (rank(ext) > c.rows()) c = ext;
        }
        QMatrix g(10, 10);
        for (int i = 3; i < 10; ++i) {
            Rat v(0);
            for (int cc = 0; cc < 10; ++cc) v += c.at(i, cc) * z[cc];
            g.at(i, 3) = v;
            g.at(3, i) = v;
        }
        bool ok = false;
        for (int t = 0; t < 32 && !ok; ++t) {
            QMatrix block = rng.random_symmetric(6, height);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) g.at(4 + i, 4 + j) = block.at(i, j);
            QMatrix sub(7, 7);
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) sub.at(i, j) = g.at(3 + i, 3 + j);
            ok = !is_zero(det_exact(sub));
        }
        if (!ok) continue;
        auto cinv = inverse(c);
        if (!cinv) continue;
        QMatrix q = mul(mul(*cinv, g), transpose(*cinv));
        Lagrangian a = graph_lagrangian(d, q);
        QMatrix w(3, 6);
        // W = <v0 + b3, b1, b2>
        for (int i = 0; i < 6; ++i) w.at(0, i) = d.v0.coords[i] + d.V0.at(2, i);
        w.set_row(1, d.V0.row(0));
        w.set_row(2, d.V0.row(1));
        if (!theta_check(a, w)) throw std::logic_error("build_sigma_delta: planted W missing");
        return SigmaDeltaInstance{std::move(a), ThetaCertificate{w},
                                  DeltaCertificate{d.v0, row_basis(k), e.degree}};
    }
    throw SearchExhausted("build_sigma_delta_lagrangian: no valid K found");
}

QMatrix random_quadric_through(const std::vector<std::vector<Rat>>& points, SeededRng& rng, long height) {
    // coefficient space of quadrics in 7 variables, conditions q(p) = 0
    QMatrix cond(int(points.size()), 28);
    for (int r = 0; r < int(points.size()); ++r) {
        int col = 0;
        for (int i = 0; i < 7; ++i)
            for (int j = i; j < 7; ++j) {
                cond.at(r, col) = points[r][i] * points[r][j];
                ++col;
            }
    }
    QMatrix sol = kernel_basis(cond);
    std::vector<Rat> coeff(28, Rat(0));
    for (int s = 0; s < sol.rows(); ++s) {
        Rat c(rng.next_height(height));
        for (int j = 0; j < 28; ++j) coeff[j] += c * sol.at(s, j);
    }
    QMatrix gram(7, 7);
    int col = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            if (i == j)
                gram.at(i, i) = coeff[col];
            else {
                gram.at(i, j) = coeff[col] / 2;
                gram.at(j, i) = gram.at(i, j);
            }
            ++col;
        }
    return gram;
}

} // namespace epwlab
