#include "gb/metric.hpp"

#include "gb/families.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gb;

TEST_SUITE_BEGIN("metric");

TEST_CASE("distances on weighted P3 and C4") {
    Graph::Builder b;
    b.add_vertex("v0", 1.0);
    b.add_vertex("v1", 1.0);
    b.add_vertex("v2", 1.0);
    b.add_edge(0, 1, 2.0);
    b.add_edge(1, 2, 4.0);
    DistanceOracle oracle(b.build());
    CHECK(oracle.distance(0, 0) == 0.0);
    CHECK(oracle.distance(0, 2) == doctest::Approx(0.75));
    CHECK(oracle.distance(2, 0) == doctest::Approx(0.75));

    DistanceOracle c4(make_cycle(4));
    CHECK(c4.distance(0, 2) == doctest::Approx(2.0));
    CHECK_THROWS_AS(c4.distance(0, 9), std::invalid_argument);
}

TEST_CASE("oracle requires a connected graph") {
    Graph::Builder b;
    b.add_vertex("a", 1.0);
    b.add_vertex("b", 1.0);
    CHECK_THROWS_AS(DistanceOracle(b.build()), std::invalid_argument);
}

TEST_CASE("balls: strict and weak radii") {
    Graph g = make_path(3);
    DistanceOracle oracle(g);
    CHECK(ball(oracle, 1, 0.0, BallKind::open).members.empty());
    CHECK(ball(oracle, 1, 0.0, BallKind::closed).members == std::vector<int>{1});
    CHECK(ball(oracle, 1, 1.0, BallKind::open).members == std::vector<int>{1});
    CHECK(ball(oracle, 1, 1.0, BallKind::closed).members == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(ball(oracle, 1, -1.0, BallKind::open), std::invalid_argument);

    DistanceOracle window(make_line_window(4));
    int zero = window.graph().index("0");
    auto b1 = ball(window, zero, 1.0, BallKind::closed);
    std::vector<std::string> names;
    for (int v : b1.members) names.push_back(window.graph().name(v));
    CHECK(names == std::vector<std::string>{"-1", "0", "1"});
}

TEST_CASE("diameter: single vertex, P2, C4") {
    CHECK(diameter(DistanceOracle(make_path(1))) == 0.0);
    CHECK(diameter(DistanceOracle(make_path(2))) == doctest::Approx(1.0));
    CHECK(diameter(DistanceOracle(make_cycle(4))) == doctest::Approx(2.0));
}

TEST_CASE("inradius examples and errors") {
    Graph p3 = make_path(3);
    DistanceOracle o3(p3);
    CHECK(inradius(o3, SubsetSpec::from_omega(p3, {1})) == doctest::Approx(1.0));

    Graph p5 = make_path(5);
    DistanceOracle o5(p5);
    CHECK(inradius(o5, SubsetSpec::from_omega(p5, {1, 2, 3})) == doctest::Approx(2.0));

    // omega adjacent to D everywhere with unit weights
    CHECK(inradius(o5, SubsetSpec::from_omega(p5, {1, 3})) == doctest::Approx(1.0));

    CHECK_THROWS_AS(inradius(o3, SubsetSpec::from_omega(p3, {})), std::invalid_argument);
    CHECK_THROWS_AS(inradius(o3, SubsetSpec::from_omega(p3, {0, 1, 2})), std::invalid_argument);
}

TEST_CASE("vol_sharp on windows and singletons") {
    DistanceOracle window(make_line_window(6));
    CHECK(vol_sharp(window, 1.0) == doctest::Approx(3.0));

    Graph one = make_path(1);
    DistanceOracle single(one);
    CHECK(vol_sharp(single, 0.0) == doctest::Approx(1.0));
    CHECK(vol_sharp(single, 100.0) == doctest::Approx(1.0));

    DistanceOracle p3(make_path(3));
    CHECK(vol_sharp(p3, 1.0) == doctest::Approx(3.0));
}

TEST_CASE("diameter_via_inradius equals diameter") {
    CHECK(diameter_via_inradius(DistanceOracle(make_path(2))) == doctest::Approx(1.0));
    CHECK(diameter_via_inradius(DistanceOracle(make_cycle(4))) == doctest::Approx(2.0));
    CHECK(diameter_via_inradius(DistanceOracle(make_path(3))) == doctest::Approx(2.0));
    CHECK_THROWS_AS(diameter_via_inradius(DistanceOracle(make_path(1))), std::invalid_argument);

    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        DistanceOracle oracle(gbtest::random_connected_graph(rng, 2, 25));
        CHECK(std::abs(diameter_via_inradius(oracle) - diameter(oracle)) <= 1e-12);
    }
}

TEST_CASE("metric axioms on random graphs") {
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 30);
        DistanceOracle oracle(g);
        int n = g.vertex_count();
        for (int x = 0; x < n; ++x) {
            CHECK(oracle.distance(x, x) == 0.0);
            for (int y = 0; y < n; ++y) {
                CHECK(oracle.distance(x, y) == oracle.distance(y, x));
                for (int z = 0; z < n; ++z)
                    CHECK(oracle.distance(x, z) <=
                          oracle.distance(x, y) + oracle.distance(y, z) + 1e-12);
            }
        }
    }
}

TEST_CASE("geodesic witnesses attain the distance") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 20);
        DistanceOracle oracle(g);
        for (int x = 0; x < g.vertex_count(); ++x)
            for (int y = 0; y < g.vertex_count(); ++y) {
                Path w = oracle.geodesic(x, y);
                REQUIRE(w.front() == x);
                REQUIRE(w.back() == y);
                CHECK(std::abs(path_length(g, w) - oracle.distance(x, y)) <= 1e-12);
            }
    }
}

TEST_CASE("ball monotonicity and open-closed nesting") {
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 15);
        DistanceOracle oracle(g);
        std::uniform_real_distribution<double> radius(0.0, 5.0);
        for (int x = 0; x < g.vertex_count(); ++x) {
            double r1 = radius(rng), r2 = radius(rng);
            if (r1 > r2) std::swap(r1, r2);
            double m1 = volume(g, ball(oracle, x, r1, BallKind::closed).members);
            double m2 = volume(g, ball(oracle, x, r2, BallKind::closed).members);
            CHECK(m1 <= m2 + 1e-12);
            auto open_members = ball(oracle, x, r2, BallKind::open).members;
            auto closed_members = ball(oracle, x, r2, BallKind::closed).members;
            CHECK(std::includes(closed_members.begin(), closed_members.end(), open_members.begin(),
                                open_members.end()));
        }
    }
}

TEST_CASE("inradius of a proper subset never exceeds the diameter") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 20);
        DistanceOracle oracle(g);
        auto omega = gbtest::random_proper_subset(rng, g.vertex_count());
        CHECK(inradius(oracle, SubsetSpec::from_omega(g, omega)) <= diameter(oracle) + 1e-12);
    }
}

TEST_SUITE_END();
