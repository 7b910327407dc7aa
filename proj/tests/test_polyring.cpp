#include <doctest.h>

#include "epwlab/ideal.hpp"
#include "epwlab/polymatrix.hpp"
#include "epwlab/rng.hpp"

using namespace epwlab;

namespace {

MultiPoly var(const std::vector<std::string>& vs, int i) { return MultiPoly::variable(vs, i); }

MultiPoly random_poly(SeededRng& rng, const std::vector<std::string>& vs, int terms, int maxdeg) {
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Mono m(vs.size(), 0);
        int d = rng.next_int(0, maxdeg);
        for (int i = 0; i < d; ++i) m[rng.next_int(0, int(vs.size()) - 1)]++;
        ts.push_back({std::move(m), Rat(rng.next_height(9))});
    }
    return MultiPoly::from_terms(vs, std::move(ts));
}

} // namespace

TEST_CASE("poly_det on the rank-two example matrix") {
    auto vs = std::vector<std::string>{"x", "y", "z"};
    PolyMatrix m(vs, 2, 2);
    m.at(0, 0) = var(vs, 0);
    m.at(0, 1) = var(vs, 1);
    m.at(1, 0) = var(vs, 1);
    m.at(1, 1) = var(vs, 2);
    MultiPoly det = poly_det(m);
    CHECK(det == var(vs, 0) * var(vs, 2) - var(vs, 1) * var(vs, 1));

    PolyMatrix adj = adjugate(m);
    CHECK(adj.at(0, 0) == var(vs, 2));
    CHECK(adj.at(0, 1) == -var(vs, 1));
    CHECK(adj.at(1, 0) == -var(vs, 1));
    CHECK(adj.at(1, 1) == var(vs, 0));
}

TEST_CASE("poly_det trivial cases") {
    auto vs = std::vector<std::string>{"x0"};
    PolyMatrix id(vs, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = MultiPoly::constant(vs, Rat(1));
    CHECK(poly_det(id) == MultiPoly::constant(vs, Rat(1)));

    PolyMatrix diag(vs, 10, 10);
    for (int i = 0; i < 10; ++i) diag.at(i, i) = var(vs, 0);
    MultiPoly d = poly_det(diag);
    REQUIRE(d.terms().size() == 1);
    CHECK(d.degree() == 10);
    CHECK(d.leading().c == Rat(1));
}

TEST_CASE("poly_det agrees with exact determinant at random points") {
    SeededRng rng(21);
    auto vs = default_vars("x", 3);
    PolyMatrix m(vs, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = random_poly(rng, vs, 3, 2);
    MultiPoly d = poly_det(m);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rat> p{Rat(rng.next_height(7)), Rat(rng.next_height(7)), Rat(rng.next_height(7))};
        CHECK(d.eval(p) == det_exact(m.eval(p)));
    }
}

TEST_CASE("adjugate satisfies the Cramer identity") {
    SeededRng rng(22);
    auto vs = default_vars("x", 2);
    PolyMatrix m(vs, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = random_poly(rng, vs, 2, 1);
    PolyMatrix adj = adjugate(m);
    MultiPoly det = poly_det(m);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            MultiPoly acc = MultiPoly::zero(vs);
            MultiPoly acc2 = MultiPoly::zero(vs);
            for (int k = 0; k < 3; ++k) {
                acc = acc + m.at(i, k) * adj.at(k, j);
                acc2 = acc2 + adj.at(i, k) * m.at(k, j);
            }
            MultiPoly want = (i == j) ? det : MultiPoly::zero(vs);
            CHECK(acc == want);
            CHECK(acc2 == want);
        }
    // 1x1 adjugate is the constant 1
    PolyMatrix one(vs, 1, 1);
    one.at(0, 0) = var(vs, 0);
    CHECK(adjugate(one).at(0, 0) == MultiPoly::constant(vs, Rat(1)));
}

TEST_CASE("adjugate identity at random points up to d = 10") {
    SeededRng rng(26);
    for (int d : {5, 10}) {
        QMatrix m = rng.random_matrix(d, d, 7);
        QMatrix adj = adjugate_q(m);
        Rat det = det_exact(m);
        QMatrix prod = mul(m, adj);
        QMatrix prod2 = mul(adj, m);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                CHECK(prod.at(i, j) == ((i == j) ? det : Rat(0)));
                CHECK(prod2.at(i, j) == ((i == j) ? det : Rat(0)));
            }
    }
}

TEST_CASE("exact_divide") {
    auto vs = std::vector<std::string>{"x", "y"};
    MultiPoly x = var(vs, 0), y = var(vs, 1);
    MultiPoly num = x * x * x * x * (y * y * y * y * y * y);
    MultiPoly den = x * x * x * x;
    CHECK(exact_divide(num, den) == y * y * y * y * y * y);
    CHECK_THROWS_AS(exact_divide(x * x + y * y, x), NotDivisible);

    SeededRng rng(23);
    for (int t = 0; t < 15; ++t) {
        MultiPoly q = random_poly(rng, vs, 4, 3);
        MultiPoly d = random_poly(rng, vs, 3, 2);
        if (d.is_zero()) continue;
        CHECK(exact_divide(q * d, d) == q);
    }
}

TEST_CASE("normalize") {
    auto vs = std::vector<std::string>{"x", "y"};
    MultiPoly x = var(vs, 0), y = var(vs, 1);
    MultiPoly p = x * Rat(-2) + y * Rat(4);
    CHECK(normalize(p) == x - y * Rat(2));
    CHECK(normalize(x) == x);
    CHECK(normalize(x * x * rat(3, 2)) == x * x);
    CHECK_THROWS_AS(normalize(MultiPoly::zero(vs)), ZeroPolynomial);

    SeededRng rng(24);
    for (int t = 0; t < 15; ++t) {
        MultiPoly p2 = random_poly(rng, vs, 4, 3);
        if (p2.is_zero()) continue;
        Rat c(rng.next_height(9), 1 + rng.next_int(1, 7));
        c.canonicalize();
        if (is_zero(c)) continue;
        CHECK(normalize(p2 * c) == normalize(p2));
        CHECK(normalize(normalize(p2)) == normalize(p2));
    }
}

TEST_CASE("hilbert function basics") {
    auto vs = default_vars("x", 3);
    Ideal zero_ideal{vs, {}};
    CHECK(hilbert_function(zero_ideal, 2) == 6);

    auto vs6 = default_vars("x", 6);
    MultiPoly q = MultiPoly::zero(vs6);
    for (int i = 0; i < 6; ++i) q = q + var(vs6, i) * var(vs6, i);
    Ideal quadric{vs6, {q}};
    CHECK(hilbert_function(quadric, 2) == 20);

    Ideal linear{vs, {var(vs, 0), var(vs, 1), var(vs, 2)}};
    CHECK(is_empty_projective(linear, 6).empty);
    CHECK(is_empty_projective(linear, 6).degree == 1);

    Ideal one_conic{vs, {var(vs, 0) * var(vs, 1)}};
    CHECK(!is_empty_projective(one_conic, 6).empty);
}

TEST_CASE("hilbert function monotone under generator growth") {
    SeededRng rng(25);
    auto vs = default_vars("x", 4);
    std::vector<MultiPoly> gens;
    int last = hilbert_function(Ideal{vs, gens}, 3);
    for (int t = 0; t < 4; ++t) {
        MultiPoly g = random_poly(rng, vs, 3, 1);
        g = g * var(vs, rng.next_int(0, 3)); // keep homogeneous of degree 2
        if (g.is_zero() || !g.is_homogeneous()) continue;
        gens.push_back(g);
        int h = hilbert_function(Ideal{vs, gens}, 3);
        CHECK(h <= last);
        last = h;
    }
}

TEST_CASE("hilbert_fit recovers dimension and degree") {
    auto vs = default_vars("x", 4);
    // line in P^3: two linear forms
    Ideal line{vs, {var(vs, 0) + var(vs, 1), var(vs, 2) - var(vs, 3)}};
    auto [dim_l, deg_l] = hilbert_fit(line, {1, 4});
    CHECK(dim_l == 1);
    CHECK(deg_l == 1);
    // quadric surface in P^3
    Ideal quad{vs, {var(vs, 0) * var(vs, 3) - var(vs, 1) * var(vs, 2)}};
    auto [dim_q, deg_q] = hilbert_fit(quad, {1, 4});
    CHECK(dim_q == 2);
    CHECK(deg_q == 2);
}

TEST_CASE("jacobian") {
    auto vs = std::vector<std::string>{"x", "y", "z"};
    MultiPoly f = var(vs, 0) * var(vs, 2) - var(vs, 1) * var(vs, 1);
    PolyMatrix j = jacobian(Ideal{vs, {f}});
    CHECK(j.at(0, 0) == var(vs, 2));
    CHECK(j.at(0, 1) == var(vs, 1) * Rat(-2));
    CHECK(j.at(0, 2) == var(vs, 0));
    MultiPoly cube = var(vs, 0) * var(vs, 0) * var(vs, 0);
    CHECK(cube.derivative(0).eval({Rat(0), Rat(0), Rat(0)}) == Rat(0));
}
