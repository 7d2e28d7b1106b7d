#include "gb/resistance.hpp"

#include "gb/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>

#include <algorithm>
#include <cmath>

namespace gb {

namespace {

// b-Laplacian with row/column `ground` removed. The grounded matrix is
// positive definite on a connected graph.
Eigen::SparseMatrix<double> grounded_laplacian(const Graph& g, int ground) {
    int n = g.vertex_count();
    auto reduced = [&](int v) { return v < ground ? v : v - 1; };
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(4 * g.edge_count() + n);
    for (int v = 0; v < n; ++v) {
        if (v == ground) continue;
        double deg = 0.0;
        for (const auto& [u, w] : g.neighbors(v)) {
            if (u == v) continue;
            deg += w;
            if (u != ground) t.emplace_back(reduced(v), reduced(u), -w);
        }
        t.emplace_back(reduced(v), reduced(v), deg);
    }
    Eigen::SparseMatrix<double> K(n - 1, n - 1);
    K.setFromTriplets(t.begin(), t.end());
    return K;
}

constexpr int kGround = 0;  // canonical first vertex

}  // namespace

ResistanceOracle::ResistanceOracle(const Graph& g, int dense_threshold) : graph_(&g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("empty graph");
    if (!is_connected(g)) throw std::invalid_argument("resistance requires a connected graph");
    if (g.vertex_count() == 1) return;
    grounded_ = grounded_laplacian(g, kGround);
    if (g.vertex_count() <= dense_threshold) {
        Eigen::MatrixXd K(grounded_);
        green_ = K.ldlt().solve(Eigen::MatrixXd::Identity(K.rows(), K.cols()));
    }
}

double ResistanceOracle::resistance(int x, int y) const {
    int n = graph_->vertex_count();
    if (x < 0 || y < 0 || x >= n || y >= n) throw std::invalid_argument("resistance: vertex out of range");
    if (x == y) return 0.0;
    auto reduced = [&](int v) { return v < kGround ? v : v - 1; };
    if (green_.size() > 0) {
        if (x == kGround) return green_(reduced(y), reduced(y));
        if (y == kGround) return green_(reduced(x), reduced(x));
        int i = reduced(x), j = reduced(y);
        return green_(i, i) + green_(j, j) - 2.0 * green_(i, j);
    }
    VertexFunction u = unit_flow_potential(x, y);
    return u[x] - u[y];
}

VertexFunction ResistanceOracle::unit_flow_potential(int x, int y) const {
    int n = graph_->vertex_count();
    auto reduced = [&](int v) { return v < kGround ? v : v - 1; };
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n - 1);
    if (x != kGround) rhs[reduced(x)] += 1.0;
    if (y != kGround) rhs[reduced(y)] -= 1.0;

    Eigen::VectorXd sol;
    if (green_.size() > 0) {
        sol = green_ * rhs;
    } else {
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
        cg.setTolerance(1e-10);
        cg.compute(grounded_);
        sol = cg.solve(rhs);
        if (cg.info() != Eigen::Success) throw std::runtime_error("resistance solve did not converge");
    }
    VertexFunction u = VertexFunction::Zero(n);
    for (int v = 0; v < n; ++v)
        if (v != kGround) u[v] = sol[reduced(v)];
    return u;
}

VertexFunction ResistanceOracle::extremal_function(int x, int y) const {
    if (x == y) throw std::invalid_argument("extremal function needs distinct vertices");
    VertexFunction u = unit_flow_potential(x, y);
    double r = u[x] - u[y];
    return u / std::sqrt(r);
}

double ResistanceOracle::diameter_r() const {
    auto [x, y] = diameter_pair();
    return resistance(x, y);
}

std::pair<int, int> ResistanceOracle::diameter_pair() const {
    int n = graph_->vertex_count();
    if (n == 1) return {0, 0};
    std::pair<int, int> best{0, 1};
    double best_r = -1.0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            double r = resistance(x, y);
            if (r > best_r) {
                best_r = r;
                best = {x, y};
            }
        }
    return best;
}

MpiVerdict mpi_check(const ResistanceOracle& r, const DistanceOracle& d, const VertexFunction& f,
                     int x, int y) {
    MpiVerdict v;
    double growth = f[x] - f[y];
    v.growth_sq = growth * growth;
    v.energy = energy(r.graph(), f);
    v.path_metric = d.distance(x, y);
    v.resistance_metric = r.resistance(x, y);
    double slack = 1e-12 * std::max(1.0, v.growth_sq);
    v.path_ok = v.growth_sq <= v.path_metric * v.energy + slack;
    v.resistance_ok = v.growth_sq <= v.resistance_metric * v.energy + slack;
    return v;
}

double variation(const VertexFunction& f) {
    if (f.size() == 0) throw std::invalid_argument("variation of an empty function");
    return f.maxCoeff() - f.minCoeff();
}

double gvpi_constant(const ResistanceOracle& r) { return r.diameter_r(); }

CheckResult quarter_inequality_check(const std::vector<double>& mu, VertexFunction f) {
    if (mu.size() != static_cast<std::size_t>(f.size()))
        throw std::invalid_argument("measure/function size mismatch");
    double total = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (!(mu[i] > 0.0)) throw std::invalid_argument("nonpositive measure");
        total += mu[i];
        mean += f[i] * mu[i];
    }
    mean /= total;
    f.array() -= mean;  // the mu-projection onto the complement of constants

    double norm2 = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) norm2 += f[i] * f[i] * mu[i];
    double var = f.size() ? variation(f) : 0.0;
    double rhs = 0.25 * var * var * total;
    if (norm2 <= rhs * (1.0 + 1e-12) + 1e-300) return {};
    return {false, "norm^2 " + std::to_string(norm2) + " exceeds quarter bound " + std::to_string(rhs)};
}

BoundReport refined_neumann_bound(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("refined_neumann_bound requires >= 2 vertices");
    ResistanceOracle oracle(g);
    BoundReport report;
    report.inequality = "neumann-resistance";
    report.resistance_diameter = oracle.diameter_r();
    report.volume = total_volume(g);
    report.bound = 4.0 / (*report.resistance_diameter * *report.volume);
    report.eigenvalue = lambda1(g).eigenvalue;
    report.ratio = report.eigenvalue / report.bound;
    report.holds = bound_holds(report.eigenvalue, report.bound);
    return report;
}

}  // namespace gb
