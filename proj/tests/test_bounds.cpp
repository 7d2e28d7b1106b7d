#include "gb/bounds.hpp"

#include "gb/families.hpp"
#include "gb/metric.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gb;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("basic inequality: constants, sharpness, fuzz") {
    Graph p2 = make_path(2);
    VertexFunction constant = VertexFunction::Constant(2, 4.0);
    CHECK(basic_inequality_check(p2, constant, {0, 1}).ok);

    VertexFunction step(2);
    step << 0, 1;  // equality: 1 <= 1 * 1
    CHECK(basic_inequality_check(p2, step, {0, 1}).ok);

    std::mt19937_64 rng(919);
    for (int trial = 0; trial < 10000; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 10);
        VertexFunction f = gbtest::random_function(rng, g.vertex_count());
        DistanceOracle oracle(g);
        int x = static_cast<int>(rng() % g.vertex_count());
        int y = static_cast<int>(rng() % g.vertex_count());
        CHECK(basic_inequality_check(g, f, oracle.geodesic(x, y)).ok);
    }
}

TEST_CASE("neumann bound: P2 tight, P3, C4") {
    auto p2 = neumann_bound(make_path(2));
    CHECK(p2.bound == doctest::Approx(2.0));
    CHECK(p2.eigenvalue == doctest::Approx(2.0));
    CHECK(p2.ratio == doctest::Approx(1.0));
    CHECK(p2.holds);

    auto p3 = neumann_bound(make_path(3));
    CHECK(p3.bound == doctest::Approx(4.0 / 6.0));
    CHECK(p3.eigenvalue == doctest::Approx(1.0));
    CHECK(p3.holds);

    auto c4 = neumann_bound(make_cycle(4));
    CHECK(*c4.diameter == doctest::Approx(2.0));
    CHECK(c4.bound == doctest::Approx(0.5));
    CHECK(c4.eigenvalue == doctest::Approx(2.0));
    CHECK(c4.holds);

    CHECK_THROWS_AS(neumann_bound(make_path(1)), std::invalid_argument);
}

TEST_CASE("dirichlet bound: P3 center, P5 interior, star tightness") {
    Graph p3 = make_path(3);
    auto r3 = dirichlet_bound(p3, SubsetSpec::from_omega(p3, {1}));
    CHECK(r3.bound == doctest::Approx(1.0));
    CHECK(r3.eigenvalue == doctest::Approx(2.0));
    CHECK(r3.holds);

    Graph p5 = make_path(5);
    auto r5 = dirichlet_bound(p5, SubsetSpec::from_omega(p5, {1, 2, 3}));
    CHECK(r5.bound == doctest::Approx(1.0 / 6.0));
    CHECK(r5.eigenvalue == doctest::Approx(2.0 - std::sqrt(2.0)));
    CHECK(r5.holds);

    // omega = star center with k unit edges into D: bound 1, eigenvalue k
    for (int k : {1, 2, 5}) {
        Graph star = make_star(k);
        auto report = dirichlet_bound(star, SubsetSpec::from_omega(star, {0}));
        CHECK(report.bound == doctest::Approx(1.0));
        CHECK(report.eigenvalue == doctest::Approx(static_cast<double>(k)));
        CHECK(report.holds);
        if (k == 1) CHECK(report.ratio == doctest::Approx(1.0));
    }

    CHECK_THROWS_AS(dirichlet_bound(p3, SubsetSpec::from_omega(p3, {0, 1, 2})),
                    std::invalid_argument);
}

TEST_CASE("relative dirichlet bound on the line window") {
    Graph g = make_line_window(6);
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (std::stoi(g.name(v)) % 3 == 0) d.push_back(v);
    auto report = dirichlet_bound_relative(g, SubsetSpec::from_dirichlet(g, d));
    CHECK(*report.inradius == doctest::Approx(1.0));
    CHECK(*report.vol_sharp == doctest::Approx(3.0));
    CHECK(report.bound == doctest::Approx(1.0 / 3.0));
    CHECK(report.eigenvalue == doctest::Approx(1.0));
    CHECK(report.holds);
}

TEST_CASE("relative bound is weaker than the plain bound when vol# dominates") {
    Graph p3 = make_path(3);
    SubsetSpec spec = SubsetSpec::from_omega(p3, {1});
    auto plain = dirichlet_bound(p3, spec);
    auto relative = dirichlet_bound_relative(p3, spec);
    CHECK(relative.bound == doctest::Approx(1.0 / 3.0));
    CHECK(plain.bound == doctest::Approx(1.0));
    // shared quantities agree between the paired reports
    CHECK(*plain.inradius == *relative.inradius);
    CHECK(plain.eigenvalue == doctest::Approx(relative.eigenvalue));
}

TEST_CASE("all three bounds hold on random instances") {
    std::mt19937_64 rng(808017);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 20);
        CHECK(neumann_bound(g).holds);
        auto omega = gbtest::random_proper_subset(rng, g.vertex_count());
        SubsetSpec spec = SubsetSpec::from_omega(g, omega);
        auto plain = dirichlet_bound(g, spec);
        auto relative = dirichlet_bound_relative(g, spec);
        CHECK(plain.holds);
        CHECK(relative.holds);
        CHECK(*plain.inradius == *relative.inradius);
        CHECK(plain.eigenvalue == relative.eigenvalue);
    }
}

TEST_SUITE_END();
