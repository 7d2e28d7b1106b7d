#include "gb/optimality.hpp"

#include "gb/families.hpp"
#include "gb/resistance.hpp"
#include "gb/spectral.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gb;

TEST_SUITE_BEGIN("optimality");

namespace {

double lambda1_at(const Graph& g, const std::vector<double>& m) {
    return lambda1(g.with_measure(m)).eigenvalue;
}

// central finite difference of lambda1 in the raw measure coordinate
double fd_gradient(const Graph& g, const std::vector<double>& m, int x, double h) {
    std::vector<double> up = m, down = m;
    up[x] += h;
    down[x] -= h;
    return (lambda1_at(g, up) - lambda1_at(g, down)) / (2.0 * h);
}

}  // namespace

TEST_CASE("gradient on P2 at the uniform measure") {
    Graph g = make_path(2);
    auto grad = lambda1_measure_gradient(g, {0.5, 0.5});
    CHECK(grad.lambda1 == doctest::Approx(4.0));
    CHECK_FALSE(grad.degenerate);
    CHECK(grad.gradient[0] == doctest::Approx(-4.0).epsilon(1e-8));
    CHECK(grad.gradient[0] == doctest::Approx(grad.gradient[1]).epsilon(1e-10));
}

TEST_CASE("gradient is nonpositive everywhere") {
    std::mt19937_64 rng(135);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 12);
        std::vector<double> m(g.vertex_count());
        std::uniform_real_distribution<double> mass(0.2, 2.0);
        for (double& x : m) x = mass(rng);
        auto grad = lambda1_measure_gradient(g, m);
        for (double component : grad.gradient) CHECK(component <= 0.0);
    }
}

TEST_CASE("gradient matches central finite differences where lambda1 is simple") {
    std::mt19937_64 rng(246);
    int accepted = 0;
    while (accepted < 50) {
        Graph g = gbtest::random_connected_graph(rng, 2, 10, 0.25, 0.5, 2.0, 0.5, 2.0);
        std::vector<double> m(g.vertex_count());
        std::uniform_real_distribution<double> mass(0.5, 1.5);
        for (double& x : m) x = mass(rng);
        auto grad = lambda1_measure_gradient(g, m);
        if (grad.gap <= 1e-6) continue;
        ++accepted;
        for (int x = 0; x < g.vertex_count(); ++x)
            CHECK(std::abs(grad.gradient[x] - fd_gradient(g, m, x, 1e-6)) <= 1e-4);
    }
}

TEST_CASE("optimizer on P2 reaches the hand optimum") {
    OptimizeOptions opt;
    opt.tol = 1e-4;
    auto result = minimize_lambda1(make_path(2), opt);
    CHECK(result.target == doctest::Approx(4.0));
    CHECK(result.lambda1 <= 4.04);
    CHECK(result.measure[0] == doctest::Approx(0.5).epsilon(1e-2));
    CHECK(result.measure[1] == doctest::Approx(0.5).epsilon(1e-2));
}

TEST_CASE("optimizer on P3 approaches the grid-search optimum") {
    Graph g = make_path(3);
    auto result = minimize_lambda1(g);
    CHECK(result.target == doctest::Approx(2.0));
    CHECK(result.lambda1 <= 2.0 * 1.05);

    // independent oracle: exhaustive grid over the 2-simplex; the weighted
    // form matrix is fixed, only the measure scaling varies
    Eigen::Matrix3d quad;
    quad << 1, -1, 0, -1, 2, -1, 0, -1, 1;
    double grid_best = kInfDistance;
    const double step = 1e-3;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es;
    for (double m0 = step; m0 < 1.0; m0 += step)
        for (double m1 = step; m0 + m1 < 1.0; m1 += step) {
            double m2 = 1.0 - m0 - m1;
            if (m2 <= 0.0) continue;
            Eigen::Vector3d inv_sqrt(1.0 / std::sqrt(m0), 1.0 / std::sqrt(m1), 1.0 / std::sqrt(m2));
            Eigen::Matrix3d sym = inv_sqrt.asDiagonal() * quad * inv_sqrt.asDiagonal();
            es.computeDirect(sym);
            grid_best = std::min(grid_best, es.eigenvalues()(1));
        }
    CHECK(grid_best >= result.target - 1e-9);              // no grid point beats the target
    CHECK(result.lambda1 <= grid_best + 0.05 * grid_best);  // optimizer is as good as the grid
}

TEST_CASE("trace is nonincreasing and never undercuts the certified bound") {
    std::mt19937_64 rng(357);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = gbtest::random_connected_graph(rng, 2, 8);
        OptimizeOptions opt;
        opt.max_iters = 60;
        auto result = minimize_lambda1(g, opt);
        for (std::size_t i = 1; i < result.trace.size(); ++i)
            CHECK(result.trace[i].lambda1 <= result.trace[i - 1].lambda1);
        for (const auto& row : result.trace) CHECK(row.lambda1 >= result.target - 1e-9);
        for (double m : result.measure) CHECK(m >= opt.measure_floor * (1.0 - 1e-12));
        double total = 0.0;
        for (double m : result.measure) total += m;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("identical seeds reproduce identical traces") {
    Graph g = make_cycle(4);  // degenerate at the uniform start: exercises the fallback
    OptimizeOptions opt;
    opt.seed = 9;
    opt.max_iters = 40;
    auto a = minimize_lambda1(g, opt);
    auto b = minimize_lambda1(g, opt);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].lambda1 == b.trace[i].lambda1);
        CHECK(a.trace[i].gap_to_target == b.trace[i].gap_to_target);
    }
}

TEST_CASE("family targets: stars and cycles") {
    auto star = minimize_lambda1(make_star(3));
    CHECK(star.target == doctest::Approx(2.0));
    CHECK(star.lambda1 <= star.target * 1.05);

    auto c4 = minimize_lambda1(make_cycle(4));
    CHECK(c4.target == doctest::Approx(4.0));
    CHECK(c4.lambda1 <= c4.target * 1.05);
}

TEST_SUITE_END();
