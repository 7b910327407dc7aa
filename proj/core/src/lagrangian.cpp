#include "epwlab/lagrangian.hpp"

#include <stdexcept>

namespace epwlab {

Decomposition Decomposition::standard() {
    Decomposition d;
    d.v0 = AltK::e(6, 0);
    d.V0 = QMatrix(5, 6);
    for (int i = 0; i < 5; ++i) d.V0.at(i, i + 1) = 1;
    return d;
}

bool Decomposition::valid() const {
    if (v0.is_zero()) return false;
    QMatrix all = stack_rows(V0, QMatrix::from_rows({v0.coords}, 6));
    return rank(all) == 6;
}

AltK Decomposition::embed1(const std::vector<Rat>& c) const {
    AltK acc(6, 1);
    for (int i = 0; i < 5; ++i)
        if (!is_zero(c[i])) acc = acc + altk_from_row(6, 1, V0.row(i)) * c[i];
    return acc;
}

AltK Decomposition::embed2(const std::vector<Rat>& c) const {
    AltK acc(6, 2);
    const auto& pairs = basis_subsets(5, 2);
    for (size_t p = 0; p < pairs.size(); ++p) {
        if (is_zero(c[p])) continue;
        AltK w = wedge(altk_from_row(6, 1, V0.row(pairs[p][0])), altk_from_row(6, 1, V0.row(pairs[p][1])));
        acc = acc + w * c[p];
    }
    return acc;
}

AltK Decomposition::embed3(const std::vector<Rat>& c) const {
    AltK acc(6, 3);
    const auto& triples = basis_subsets(5, 3);
    for (size_t t = 0; t < triples.size(); ++t) {
        if (is_zero(c[t])) continue;
        AltK w = wedge({altk_from_row(6, 1, V0.row(triples[t][0])), altk_from_row(6, 1, V0.row(triples[t][1])),
                        altk_from_row(6, 1, V0.row(triples[t][2]))});
        acc = acc + w * c[t];
    }
    return acc;
}

QMatrix Decomposition::embedding3() const {
    QMatrix e(10, 20);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rat> unit(10, Rat(0));
        unit[t] = 1;
        e.set_row(t, embed3(unit).coords);
    }
    return e;
}

std::optional<std::vector<Rat>> Decomposition::coords3(const AltK& a) const {
    return coords_in_rows(embedding3(), a.coords);
}

std::optional<std::vector<Rat>> Decomposition::rho(const AltK& a) const {
    // v0 ∧ beta = a, beta in Λ²V0: the map is injective on Λ²V0.
    QMatrix m(10, 20);
    for (int p = 0; p < 10; ++p) {
        std::vector<Rat> unit(10, Rat(0));
        unit[p] = 1;
        m.set_row(p, wedge(v0, embed2(unit)).coords);
    }
    return coords_in_rows(m, a.coords);
}

Rat Decomposition::top_factor() const {
    AltK acc = v0;
    for (int i = 0; i < 5; ++i) acc = wedge(acc, altk_from_row(6, 1, V0.row(i)));
    return vol6(acc);
}

const QMatrix& z0_pairing() {
    static QMatrix z = [] {
        QMatrix m(10, 10);
        for (int p = 0; p < 10; ++p)
            for (int t = 0; t < 10; ++t)
                m.at(p, t) = vol5(wedge(AltK::basis(5, 2, p), AltK::basis(5, 3, t)));
        return m;
    }();
    return z;
}

const std::vector<QMatrix>& gr2_plucker_grams() {
    static std::vector<QMatrix> grams = [] {
        std::vector<QMatrix> gs(5, QMatrix(10, 10));
        for (int p = 0; p < 10; ++p)
            for (int q = 0; q < 10; ++q) {
                AltK w = wedge(AltK::basis(5, 2, p), AltK::basis(5, 2, q));
                for (int i = 0; i < 5; ++i) gs[i].at(p, q) = w.coords[i];
            }
        return gs;
    }();
    return grams;
}

const std::vector<QMatrix>& gr3_plucker_grams() {
    static std::vector<QMatrix> grams = [] {
        std::vector<QMatrix> gs(5, QMatrix(10, 10));
        for (int m = 0; m < 5; ++m) {
            std::vector<Rat> f(5, Rat(0));
            f[m] = 1;
            for (int s = 0; s < 10; ++s)
                for (int t = 0; t < 10; ++t) {
                    Rat a = vol5(wedge(contract(f, AltK::basis(5, 3, s)), AltK::basis(5, 3, t)));
                    Rat b = vol5(wedge(contract(f, AltK::basis(5, 3, t)), AltK::basis(5, 3, s)));
                    gs[m].at(s, t) = (a + b) / 2;
                }
        }
        return gs;
    }();
    return grams;
}

LagrangianCheck check_lagrangian(const QMatrix& m) {
    LagrangianCheck c;
    if (m.rows() != 10 || m.cols() != 20) {
        c.reason = "expected a 10x20 matrix";
        return c;
    }
    if (rank(m) != 10) {
        c.reason = "rows are not independent";
        return c;
    }
    for (int i = 0; i < 10; ++i)
        for (int j = i; j < 10; ++j) {
            Rat s = symp(altk_from_row(6, 3, m.row(i)), altk_from_row(6, 3, m.row(j)));
            if (!is_zero(s)) {
                c.reason = "rows are not isotropic";
                c.i = i;
                c.j = j;
                return c;
            }
        }
    c.ok = true;
    return c;
}

bool is_lagrangian(const QMatrix& m) { return check_lagrangian(m).ok; }

Lagrangian graph_lagrangian(const Decomposition& d, const QMatrix& q) {
    if (q.rows() != 10 || q.cols() != 10 || !is_symmetric(q)) throw NotSymmetric();
    // q = Z0 * M with M the matrix of the graph map on induced bases.
    QMatrix z_inv_rows = z0_pairing();
    // Z0 is a signed permutation; invert by transpose of the sign pattern.
    QMatrix m_map(10, 10);
    {
        // solve Z0 * M = q column by column
        for (int col = 0; col < 10; ++col) {
            std::vector<Rat> rhs(10);
            for (int i = 0; i < 10; ++i) rhs[i] = q.at(i, col);
            auto x = solve(z_inv_rows, rhs);
            if (!x) throw std::logic_error("graph_lagrangian: pairing not invertible");
            for (int i = 0; i < 10; ++i) m_map.at(i, col) = (*x)[i];
        }
    }
    QMatrix rows(10, 20);
    for (int b = 0; b < 10; ++b) {
        std::vector<Rat> unit(10, Rat(0));
        unit[b] = 1;
        AltK head = wedge(d.v0, d.embed2(unit));
        std::vector<Rat> img(10);
        for (int t = 0; t < 10; ++t) img[t] = m_map.at(t, b);
        AltK tail = d.embed3(img);
        rows.set_row(b, (head + tail).coords);
    }
    return Lagrangian{rows};
}

Lagrangian random_lagrangian(SeededRng& rng, long height) {
    Decomposition d = Decomposition::standard();
    Lagrangian a = graph_lagrangian(d, rng.random_symmetric(10, height));
    // generic symplectic move: Λ³ of a random invertible g in GL(V)
    QMatrix g = rng.random_invertible(6, std::max(1L, std::min(height, 3L)));
    QMatrix out(10, 20);
    for (int r = 0; r < 10; ++r) {
        AltK acc(6, 3);
        const auto& triples = basis_subsets(6, 3);
        std::vector<Rat> row = a.basis.row(r);
        for (int t = 0; t < 20; ++t) {
            if (is_zero(row[t])) continue;
            AltK w = wedge({altk_from_row(6, 1, g.row(triples[t][0])), altk_from_row(6, 1, g.row(triples[t][1])),
                            altk_from_row(6, 1, g.row(triples[t][2]))});
            acc = acc + w * row[t];
        }
        out.set_row(r, acc.coords);
    }
    return Lagrangian{out};
}

Ideal restricted_conics(const QMatrix& k) {
    if (k.cols() != 10) throw BadDimension("restricted_conics: K must have 10 columns");
    QMatrix kt = transpose(k);
    Ideal ideal{default_vars("t", k.rows()), {}};
    for (const QMatrix& g : gr2_plucker_grams()) {
        QMatrix restr = mul(mul(k, g), kt);
        MultiPoly p = quadric_poly(restr, ideal.vars);
        if (!p.is_zero()) ideal.gens.push_back(normalize(p));
    }
    return ideal;
}

QMatrix symmetric_with_kernel(SeededRng& rng, const QMatrix& k, long height) {
    int kd = k.rows();
    if (k.cols() != 10 || rank(k) != kd) throw BadDimension("symmetric_with_kernel: K rows not independent");
    // complete K to a basis of Λ²V0 with standard basis vectors
    QMatrix c = k;
    for (int i = 0; i < 10 && c.rows() < 10; ++i) {
        QMatrix unit(1, 10);
        unit.at(0, i) = 1;
        QMatrix ext = stack_rows(c, unit);
        if (rank(ext) > c.rows()) c = ext;
    }
    QMatrix s = rng.random_symmetric(10 - kd, height);
    while (is_zero(det_exact(s))) s = rng.random_symmetric(10 - kd, height);
    QMatrix g(10, 10);
    for (int i = 0; i < 10 - kd; ++i)
        for (int j = 0; j < 10 - kd; ++j) g.at(kd + i, kd + j) = s.at(i, j);
    // bilinear form with Gram g on the c-basis, pushed to standard coordinates
    QMatrix c_inv(10, 10);
    {
        QMatrix id = QMatrix::identity(10);
        for (int col = 0; col < 10; ++col) {
            auto x = solve(c, id.row(col));
            if (!x) throw std::logic_error("symmetric_with_kernel: completion not invertible");
            for (int i = 0; i < 10; ++i) c_inv.at(i, col) = (*x)[i];
        }
    }
    // q = c_inv * g * c_inv^t satisfies (c q c^t) = g
    return mul(mul(c_inv, g), transpose(c_inv));
}

std::pair<Lagrangian, DeltaCertificate> build_delta_lagrangian(SeededRng& rng, long height, int retries,
                                                               int dmax) {
    Decomposition d = Decomposition::standard();
    for (int attempt = 0; attempt < retries; ++attempt) {
        QMatrix k = rng.random_matrix(3, 10, height);
        if (rank(k) != 3) continue;
        Ideal conics = restricted_conics(k);
        Emptiness e = is_empty_projective(conics, dmax);
        if (!e.empty) continue;
        QMatrix q = symmetric_with_kernel(rng, k, height);
        Lagrangian a = graph_lagrangian(d, q);
        DeltaCertificate cert{d.v0, row_basis(k), e.degree};
        return {std::move(a), std::move(cert)};
    }
    throw SearchExhausted("build_delta_lagrangian: no empty-certificate K found");
}

std::pair<Lagrangian, ThetaCertificate> build_sigma_lagrangian(SeededRng& rng, long height) {
    QMatrix w = rng.random_matrix(3, 6, height);
    while (rank(w) != 3) w = rng.random_matrix(3, 6, height);
    AltK gamma = wedge_rows(w);
    // complete the line [gamma] to a Lagrangian: repeatedly pick a random
    // vector of the symplectic orthogonal complement outside the current span
    QMatrix b = QMatrix::from_rows({gamma.coords}, 20);
    const QMatrix& j = symplectic_gram();
    while (b.rows() < 10) {
        QMatrix orth = kernel_basis(mul(b, j));
        bool grew = false;
        while (!grew) {
            std::vector<Rat> cand(20, Rat(0));
            for (int r = 0; r < orth.rows(); ++r) {
                Rat c(rng.next_height(std::max(1L, std::min(height, 3L))));
                for (int col = 0; col < 20; ++col) cand[col] += c * orth.at(r, col);
            }
            QMatrix ext = stack_rows(b, QMatrix::from_rows({cand}, 20));
            if (rank(ext) > b.rows()) {
                b = ext;
                grew = true;
            }
        }
    }
    return {Lagrangian{b}, ThetaCertificate{w}};
}

bool theta_check(const Lagrangian& a, const QMatrix& w) {
    if (w.rows() != 3 || w.cols() != 6 || rank(w) != 3) throw BadDimension("theta_check: W must be a 3-plane");
    AltK gamma = wedge_rows(w);
    return in_rowspace(a.basis, gamma.coords);
}

Lagrangian pathological_lagrangian(const AltK& v0) { return Lagrangian{F_basis(v0)}; }

} // namespace epwlab
