#include <doctest.h>

#include "epwlab/lagrangian.hpp"

using namespace epwlab;

namespace {

// dim(A ∩ F_v0) via the stacked-rank identity
int corank0(const Lagrangian& a, const AltK& v0) {
    QMatrix f = F_basis(v0);
    return 10 + 10 - rank(stack_rows(a.basis, f));
}

} // namespace

TEST_CASE("is_lagrangian basic instances") {
    Decomposition d = Decomposition::standard();
    // Λ³V0: rows = triples of e1..e5
    QMatrix l3(10, 20);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rat> unit(10, Rat(0));
        unit[t] = 1;
        l3.set_row(t, d.embed3(unit).coords);
    }
    CHECK(is_lagrangian(l3));
    CHECK(is_lagrangian(F_basis(AltK::e(6, 0))));

    SeededRng rng(41);
    QMatrix random10 = rng.random_matrix(10, 20, 5);
    LagrangianCheck c = check_lagrangian(random10);
    CHECK(!c.ok);
    CHECK(c.i >= 0); // reports a violating pair
}

TEST_CASE("graph lagrangian") {
    Decomposition d = Decomposition::standard();
    SeededRng rng(42);

    // q = 0 gives F_v0
    Lagrangian zero_graph = graph_lagrangian(d, QMatrix(10, 10));
    CHECK(rowspace_intersection(zero_graph.basis, F_basis(d.v0)).rows() == 10);

    // invertible q: trivial intersection with F_v0; corank(q) in general
    for (int t = 0; t < 30; ++t) {
        QMatrix q = rng.random_symmetric(10, 8);
        Lagrangian a = graph_lagrangian(d, q);
        CHECK(is_lagrangian(a));
        CHECK(corank0(a, d.v0) == 10 - rank(q));
    }

    // prescribed coranks 1..4, several instances each
    for (int rep = 0; rep < 5; ++rep)
        for (int k = 1; k <= 4; ++k) {
            QMatrix kk = rng.random_matrix(k, 10, 6);
            while (rank(kk) != k) kk = rng.random_matrix(k, 10, 6);
            QMatrix q = symmetric_with_kernel(rng, kk, 5);
            CHECK(rank(q) == 10 - k);
            Lagrangian a = graph_lagrangian(d, q);
            CHECK(is_lagrangian(a));
            CHECK(corank0(a, d.v0) == k);
        }

    QMatrix asym(10, 10);
    asym.at(0, 1) = 1;
    CHECK_THROWS_AS(graph_lagrangian(d, asym), NotSymmetric);
}

TEST_CASE("random lagrangian determinism") {
    SeededRng r1(42), r2(42);
    Lagrangian a = random_lagrangian(r1, 10);
    Lagrangian b = random_lagrangian(r2, 10);
    CHECK(a.basis == b.basis);
    CHECK(is_lagrangian(a));
}

TEST_CASE("delta construction certificate") {
    SeededRng rng(7);
    auto [a, cert] = build_delta_lagrangian(rng, 10);
    CHECK(is_lagrangian(a));
    CHECK(cert.emptiness_degree.has_value());
    CHECK(*cert.emptiness_degree <= 4);
    CHECK(corank0(a, cert.v0) == 3);
    // the certificate's K really is an emptiness instance
    Emptiness e = is_empty_projective(restricted_conics(cert.K), 4);
    CHECK(e.empty);
}

TEST_CASE("sigma construction certificate") {
    SeededRng rng(8);
    auto [a, cert] = build_sigma_lagrangian(rng, 6);
    CHECK(is_lagrangian(a));
    CHECK(theta_check(a, cert.W));
    CHECK(is_decomposable(wedge_rows(cert.W)));

    // negative: random W against a, and V0-internal W against an invertible graph
    SeededRng rng2(9);
    QMatrix w = rng2.random_matrix(3, 6, 5);
    while (rank(w) != 3) w = rng2.random_matrix(3, 6, 5);
    CHECK(!theta_check(a, w));

    Decomposition d = Decomposition::standard();
    QMatrix q = rng2.random_symmetric(10, 7);
    while (rank(q) != 10) q = rng2.random_symmetric(10, 7);
    Lagrangian g = graph_lagrangian(d, q);
    QMatrix w0(3, 6);
    w0.at(0, 1) = 1; w0.at(1, 2) = 1; w0.at(2, 3) = 1; // inside V0
    CHECK(!theta_check(g, w0));
}

TEST_CASE("pathological lagrangian") {
    Lagrangian f = pathological_lagrangian(AltK::e(6, 0));
    CHECK(is_lagrangian(f));
    CHECK(corank0(f, AltK::e(6, 0)) == 10);
}
