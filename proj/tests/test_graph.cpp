#include "fracon/graph.hpp"

#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace fracon;
using Catch::Matchers::WithinAbs;

namespace {

Matrix complete(std::size_t n) {
    Matrix a(n, n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = 0.0;
    }
    return a;
}

Matrix directed_cycle(std::size_t n) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a((i + 1) % n, i) = 1.0;
    }
    return a;
}

}  // namespace

TEST_CASE("DiGraph validation", "[graph]") {
    CHECK_THROWS_AS(DiGraph(Matrix{{0.0, 1.0}, {1.0, 1.0}}), std::invalid_argument);  // self-loop
    CHECK_THROWS_AS(DiGraph(Matrix{{0.0, -1.0}, {1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(DiGraph(Matrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(DiGraph(Matrix(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(DiGraph(Matrix{{0.0, NAN}, {1.0, 0.0}}), std::invalid_argument);
    CHECK_NOTHROW(DiGraph(Matrix{{0.0, 0.25}, {3.0, 0.0}}));

    try {
        DiGraph g(Matrix{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 2.0}});
        FAIL("expected throw");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("adjacency[2][2]") != std::string::npos);
    }
}

TEST_CASE("Laplacian bundle of the reference graph", "[graph]") {
    const DiGraph g(testing::paper_adjacency());
    const LaplacianBundle b = build_bundle(g);
    CHECK(b.degrees == Vector{2, 2, 2, 2, 1});
    CHECK(b.delta_max == 2.0);
    CHECK(norm_inf(b.laplacian * Vector(5, 1.0)) <= 1e-12);
    CHECK(norm_inf(b.laplacian.transposed() * Vector(5, 1.0)) <= 1e-12);
    CHECK(b.sym_part == b.sym_part.transposed());
    // independent bisection oracle and mpmath: spectrum of L_s is {0, 1, 2.5, 2.5, 3}
    CHECK_THAT(b.lambda2, WithinAbs(testing::kPaperLambda2, 1e-12));
    CHECK_THAT(b.lambda2, WithinAbs(testing::bisection_eigenvalue(b.sym_part, 1), 1e-9));
    const Vector expected{0.0, 1.0, 2.5, 2.5, 3.0};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK_THAT(b.sym_eigenvalues[i], WithinAbs(expected[i], 1e-12));
    }
}

TEST_CASE("complete graph on 3 nodes", "[graph]") {
    const LaplacianBundle b = build_bundle(DiGraph(complete(3)));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(b.laplacian(i, j) == (i == j ? 2.0 : -1.0));
        }
    }
    CHECK_THAT(b.lambda2, WithinAbs(3.0, 1e-12));
    CHECK_THAT(b.sym_eigenvalues[0], WithinAbs(0.0, 1e-12));
}

TEST_CASE("Jacobi eigenvalues match the inertia-bisection oracle", "[graph][property]") {
    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> w(0.0, 3.0);
    std::bernoulli_distribution edge(0.5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j && edge(rng)) {
                    a(i, j) = trial % 2 ? 1.0 : w(rng);
                }
            }
        }
        const LaplacianBundle b = build_bundle(DiGraph(a));
        REQUIRE(norm_inf(b.laplacian * Vector(n, 1.0)) <= 1e-12);
        for (std::size_t k = 0; k < n; ++k) {
            REQUIRE_THAT(b.sym_eigenvalues[k],
                         WithinAbs(testing::bisection_eigenvalue(b.sym_part, static_cast<int>(k)), 1e-9));
        }
    }
}

TEST_CASE("balance", "[graph]") {
    CHECK(is_balanced(DiGraph(testing::paper_adjacency())));
    CHECK_FALSE(is_balanced(DiGraph(Matrix{{0.0, 1.0}, {0.0, 0.0}})));
    CHECK(is_balanced(DiGraph(complete(4))));
    CHECK(is_balanced(DiGraph(Matrix{{0.0, 0.5, 2.0}, {0.5, 0.0, 1.0}, {2.0, 1.0, 0.0}})));
    CHECK(is_balanced(DiGraph(directed_cycle(5))));
}

TEST_CASE("balanced graphs have vanishing Laplacian column sums", "[graph][property]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const DiGraph g(testing::random_balanced_graph(rng, 2 + trial % 6, trial % 2 == 0));
        REQUIRE(is_balanced(g));
        REQUIRE(is_strongly_connected(g));
        const LaplacianBundle b = build_bundle(g);
        REQUIRE(norm_inf(b.laplacian.transposed() * Vector(g.size(), 1.0)) <= 1e-12);
        REQUIRE(b.lambda2 > 0.0);
    }
}

TEST_CASE("strong connectivity", "[graph]") {
    // Path enumeration on the reference graph: 1<-4<-2<-1, 1<-5<-4<-3<-1 etc.
    CHECK(is_strongly_connected(DiGraph(testing::paper_adjacency())));
    CHECK_FALSE(is_strongly_connected(DiGraph(Matrix(2, 2))));
    CHECK(is_strongly_connected(DiGraph(directed_cycle(3))));
    CHECK_FALSE(is_strongly_connected(DiGraph(Matrix{{0.0, 1.0}, {0.0, 0.0}})));
    // two 2-cycles joined one way only
    Matrix a(4, 4);
    a(0, 1) = a(1, 0) = a(2, 3) = a(3, 2) = 1.0;
    a(2, 1) = 1.0;
    CHECK_FALSE(is_strongly_connected(DiGraph(a)));
    a(1, 2) = 1.0;
    CHECK(is_strongly_connected(DiGraph(a)));
}

TEST_CASE("Perron matrix", "[graph]") {
    const LaplacianBundle b = build_bundle(DiGraph(testing::paper_adjacency()));
    CHECK(perron_matrix(b, 0.0) == Matrix::identity(5));

    const double eps = testing::kPaperEps;
    const Matrix p = perron_matrix(b, eps);
    const Vector diag{1 - 2 * eps, 1 - 2 * eps, 1 - 2 * eps, 1 - 2 * eps, 1 - eps};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK_THAT(p(i, i), WithinAbs(diag[i], 1e-15));
    }
    CHECK(norm_inf(p * Vector(5, 1.0)) - 1.0 <= 1e-14);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const DiGraph g(testing::random_balanced_graph(rng, 2 + trial % 6, false));
        const LaplacianBundle bb = build_bundle(g);
        const Matrix pp = perron_matrix(bb, unit(rng) / bb.delta_max);
        const Vector ones = pp * Vector(g.size(), 1.0);
        for (double v : ones) {
            REQUIRE_THAT(v, WithinAbs(1.0, 1e-14));
        }
    }
}

TEST_CASE("spectral consensus check", "[graph]") {
    const LaplacianBundle b = build_bundle(DiGraph(testing::paper_adjacency()));
    const Matrix p = perron_matrix(b, testing::kPaperEps);
    CHECK(spectral_consensus_check(p));
    CHECK_FALSE(spectral_consensus_check(Matrix::identity(5)));

    // 2-node mutual graph at eps = 1/Delta_max: P = [[0,1],[1,0]], eigenvalues +-1
    const LaplacianBundle two = build_bundle(DiGraph(Matrix{{0.0, 1.0}, {1.0, 0.0}}));
    const Matrix swap = perron_matrix(two, 1.0);
    CHECK_FALSE(spectral_consensus_check(swap));
    CHECK_THAT(subdominant_spectral_radius(swap), WithinAbs(1.0, 1e-9));
    CHECK(spectral_consensus_check(perron_matrix(two, 0.999)));

    // not strongly connected
    const LaplacianBundle chain = build_bundle(DiGraph(Matrix{{0.0, 0.0}, {1.0, 0.0}}));
    CHECK_FALSE(spectral_consensus_check(perron_matrix(chain, 0.5)));
}

TEST_CASE("subdominant spectral radius diagnostic", "[graph]") {
    const LaplacianBundle b = build_bundle(DiGraph(testing::paper_adjacency()));
    const Matrix p = perron_matrix(b, testing::kPaperEps);
    // numpy.linalg.eigvals moduli: 1, 0.74284074 (complex pair), 0.73051851, 0.59577776
    const double expected = 0.7428407357403428;
    CHECK_THAT(subdominant_spectral_radius(p), WithinAbs(expected, 1e-3));
    CHECK(subdominant_spectral_radius(p) < 1.0);
    CHECK_THAT(subdominant_spectral_radius(Matrix::identity(4)), WithinAbs(1.0, 1e-12));

    // K3 at eps: eigenvalues 1, 1-3eps (double)
    const LaplacianBundle k3 = build_bundle(DiGraph(complete(3)));
    CHECK_THAT(subdominant_spectral_radius(perron_matrix(k3, 0.1)), WithinAbs(0.7, 1e-9));
}

TEST_CASE("restricted contraction norm", "[graph]") {
    // symmetric case: equals max |1 - eps lambda_i| over i >= 2
    const LaplacianBundle k3 = build_bundle(DiGraph(complete(3)));
    CHECK_THAT(restricted_contraction_norm(perron_matrix(k3, 0.1)), WithinAbs(0.7, 1e-12));
    // reference graph: numpy SVD of U^T P U gives 0.8812927274781824
    const LaplacianBundle b = build_bundle(DiGraph(testing::paper_adjacency()));
    CHECK_THAT(restricted_contraction_norm(perron_matrix(b, testing::kPaperEps)),
               WithinAbs(0.8812927274781824, 1e-12));
}
