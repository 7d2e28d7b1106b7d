#include "gb/spectral.hpp"

#include "gb/families.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>

using namespace gb;

TEST_SUITE_BEGIN("spectral");

TEST_CASE("assemble: P2 Neumann matrix") {
    LaplacianOperator op = LaplacianOperator::neumann(make_path(2));
    Eigen::MatrixXd s = op.dense_symmetrized();
    CHECK(s(0, 0) == doctest::Approx(1.0));
    CHECK(s(0, 1) == doctest::Approx(-1.0));
    CHECK(s(1, 0) == doctest::Approx(-1.0));
    CHECK(s(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("assemble: Dirichlet keeps the full weighted degree") {
    Graph g = make_path(3);
    LaplacianOperator op = LaplacianOperator::dirichlet(g, SubsetSpec::from_omega(g, {1}));
    REQUIRE(op.dimension() == 1);
    CHECK(op.dense_symmetrized()(0, 0) == doctest::Approx(2.0));
}

TEST_CASE("assemble: scaling m by 4 scales the operator by 1/4") {
    Graph g = make_cycle(5);
    Graph scaled = g.with_measure(std::vector<double>(5, 4.0));
    Eigen::MatrixXd a = LaplacianOperator::neumann(g).dense_symmetrized();
    Eigen::MatrixXd b = LaplacianOperator::neumann(scaled).dense_symmetrized();
    CHECK((a - 4.0 * b).norm() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("assemble rejects empty omega") {
    Graph g = make_path(3);
    CHECK_THROWS_AS(LaplacianOperator::dirichlet(g, SubsetSpec::from_omega(g, {})),
                    std::invalid_argument);
}

TEST_CASE("lambda1 on P2, P3 and the cycle closed form") {
    CHECK(lambda1(make_path(2)).eigenvalue == doctest::Approx(2.0));
    CHECK(lambda1(make_path(3)).eigenvalue == doctest::Approx(1.0));
    for (int n : {3, 4, 8, 16, 64}) {
        double want = 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi / n));
        CHECK(lambda1(make_cycle(n)).eigenvalue == doctest::Approx(want).epsilon(1e-10));
    }
    CHECK_THROWS_AS(lambda1(make_path(1)), std::invalid_argument);
}

TEST_CASE("lambda1 eigenfunction is m-orthogonal to constants, residual small") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 25);
        SpectralResult r = lambda1(g);
        double inner = 0.0, norm2 = 0.0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            inner += r.eigenfunction[v] * g.measure(v);
            norm2 += r.eigenfunction[v] * r.eigenfunction[v] * g.measure(v);
        }
        CHECK(std::abs(inner) <= 1e-10);
        CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(r.residual <= kResidualGate * std::max(1.0, std::abs(r.eigenvalue)));
    }
}

TEST_CASE("lambda_dirichlet examples") {
    Graph p3 = make_path(3);
    CHECK(lambda_dirichlet(p3, SubsetSpec::from_omega(p3, {1})).eigenvalue == doctest::Approx(2.0));

    Graph p5 = make_path(5);
    CHECK(lambda_dirichlet(p5, SubsetSpec::from_omega(p5, {1, 2, 3})).eigenvalue ==
          doctest::Approx(2.0 - std::sqrt(2.0)));

    // omega split into two singleton components, each with one edge into D:
    // the operator is block-diagonal, so the minimum of the two values wins
    Graph::Builder b;
    b.add_vertex("a", 1.0);
    b.add_vertex("x", 1.0);
    b.add_vertex("y", 1.0);
    b.add_vertex("z", 1.0);
    b.add_edge("a", "x", 1.0);
    b.add_edge("x", "y", 1.0);
    b.add_edge("y", "z", 3.0);
    Graph split = b.build();
    CHECK(lambda_dirichlet(split, SubsetSpec::from_omega(split, {0, 3})).eigenvalue ==
          doctest::Approx(1.0));

    CHECK_THROWS_AS(lambda_dirichlet(p3, SubsetSpec::from_omega(p3, {0, 1, 2})),
                    std::invalid_argument);
}

TEST_CASE("dirichlet eigenvalue is strictly positive") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 20);
        auto omega = gbtest::random_proper_subset(rng, g.vertex_count());
        CHECK(lambda_dirichlet(g, SubsetSpec::from_omega(g, omega)).eigenvalue > 0.0);
    }
}

TEST_CASE("rayleigh quotient: extremal function, positivity, errors") {
    Graph p2 = make_path(2);
    VertexFunction f(2);
    f << 1, -1;
    CHECK(rayleigh(p2, f) == doctest::Approx(2.0));

    SpectralResult r = lambda1(make_cycle(6));
    CHECK(rayleigh(make_cycle(6), r.eigenfunction) == doctest::Approx(r.eigenvalue).epsilon(1e-9));

    VertexFunction zero = VertexFunction::Zero(2);
    CHECK_THROWS_AS(rayleigh(p2, zero), std::invalid_argument);

    Graph p3 = make_path(3);
    SubsetSpec spec = SubsetSpec::from_omega(p3, {1});
    VertexFunction bad(3);
    bad << 1, 1, 0;
    CHECK_THROWS_AS(rayleigh(p3, bad, &spec), std::invalid_argument);
}

TEST_CASE("rayleigh dominates the computed eigenvalues") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 3, 15);
        int n = g.vertex_count();

        // any f orthogonal to constants in l^2(m) sits above lambda1
        VertexFunction f = gbtest::random_function(rng, n);
        double inner = 0.0, total = 0.0;
        for (int v = 0; v < n; ++v) {
            inner += f[v] * g.measure(v);
            total += g.measure(v);
        }
        f.array() -= inner / total;
        if (f.norm() < 1e-9) continue;
        CHECK(rayleigh(g, f) >= lambda1(g).eigenvalue - 1e-9);

        // any f vanishing on D sits above lambda0^D
        auto omega = gbtest::random_proper_subset(rng, n);
        SubsetSpec spec = SubsetSpec::from_omega(g, omega);
        VertexFunction h = gbtest::random_function(rng, n);
        for (int v : spec.dirichlet()) h[v] = 0.0;
        if (h.norm() < 1e-9) continue;
        CHECK(rayleigh(g, h, &spec) >= lambda_dirichlet(g, spec).eigenvalue - 1e-9);
    }
}

TEST_CASE("kernel check on P2 and random graphs") {
    KernelCheck check = kernel_check(make_path(2));
    CHECK(check.ok);
    CHECK(check.second_eigenvalue == doctest::Approx(2.0));
    CHECK(check.constant_residual <= 1e-12);

    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 30);
        CHECK(kernel_check(g).ok);
    }
}

TEST_CASE("measure scaling moves every eigenvalue by 1/c") {
    std::mt19937_64 rng(55);
    for (double c : {0.5, 4.0}) {
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = gbtest::random_connected_graph(rng, 2, 15);
            std::vector<double> scaled = g.measures();
            for (double& m : scaled) m *= c;
            Graph h = g.with_measure(scaled);
            CHECK(lambda1(h).eigenvalue ==
                  doctest::Approx(lambda1(g).eigenvalue / c).epsilon(1e-10));

            if (g.vertex_count() >= 2) {
                auto omega = gbtest::random_proper_subset(rng, g.vertex_count());
                SubsetSpec spec = SubsetSpec::from_omega(g, omega);
                SubsetSpec spec_h = SubsetSpec::from_omega(h, omega);
                CHECK(lambda_dirichlet(h, spec_h).eigenvalue ==
                      doctest::Approx(lambda_dirichlet(g, spec).eigenvalue / c).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("enlarging D never decreases lambda0^D") {
    std::mt19937_64 rng(66);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 3, 18);
        int n = g.vertex_count();
        auto d_small = gbtest::random_proper_subset(rng, n);
        if (static_cast<int>(d_small.size()) >= n - 1) continue;
        std::vector<int> d_large = d_small;
        std::vector<char> in(n, 0);
        for (int v : d_small) in[v] = 1;
        for (int v = 0; v < n && d_large.size() + 1 < static_cast<std::size_t>(n); ++v)
            if (!in[v] && rng() % 2) d_large.push_back(v);
        if (d_large.size() == d_small.size()) continue;
        double small = lambda_dirichlet(g, SubsetSpec::from_dirichlet(g, d_small)).eigenvalue;
        double large = lambda_dirichlet(g, SubsetSpec::from_dirichlet(g, d_large)).eigenvalue;
        CHECK(large >= small - 1e-10);
    }
}

TEST_CASE("splitting the lambda1 eigenfunction never gains energy") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 20);
        VertexFunction f = lambda1(g).eigenfunction;
        VertexFunction fp = f.cwiseMax(0.0);
        VertexFunction fm = (-f).cwiseMax(0.0);
        CHECK(energy(g, f) >= energy(g, fp) + energy(g, fm) - 1e-10);
    }
}

TEST_CASE("iterative solver agrees with the dense path") {
    std::mt19937_64 rng(88);
    SolverOptions force;
    force.force_iterative = true;
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 40, 120, 0.05);
        SpectralResult dense = lambda1(g);
        SpectralResult iter = lambda1(g, force);
        CHECK(iter.solver == "iterative");
        CHECK(iter.eigenvalue == doctest::Approx(dense.eigenvalue).epsilon(1e-7));
        CHECK(iter.residual <= kResidualGate * std::max(1.0, iter.eigenvalue));

        auto omega = gbtest::random_proper_subset(rng, g.vertex_count());
        SubsetSpec spec = SubsetSpec::from_omega(g, omega);
        SpectralResult ddense = lambda_dirichlet(g, spec);
        SpectralResult diter = lambda_dirichlet(g, spec, force);
        CHECK(diter.eigenvalue == doctest::Approx(ddense.eigenvalue).epsilon(1e-7));
    }
}

TEST_CASE("iterative solver is deterministic for a fixed seed") {
    std::mt19937_64 rng(99);
    Graph g = gbtest::random_connected_graph(rng, 60, 60, 0.1);
    SolverOptions force;
    force.force_iterative = true;
    SpectralResult a = lambda1(g, force);
    SpectralResult b = lambda1(g, force);
    CHECK(a.eigenvalue == b.eigenvalue);
    CHECK((a.eigenfunction - b.eigenfunction).norm() == 0.0);
}

TEST_SUITE_END();
