#pragma once

#include "gb/bounds.hpp"
#include "gb/graph.hpp"
#include "gb/metric.hpp"

#include <Eigen/SparseCore>

#include <utility>

namespace gb {

/// Effective resistance r(x,y) of the network with conductances b; r is the
/// best constant in the pointwise Poincare inequality
/// (f(x)-f(y))^2 <= r(x,y) E(f), and r = rho^2 for the extremal distance
/// rho(x,y) = sup{f(x)-f(y) : E(f) <= 1}. Computed from a linear solve
/// against the b-Laplacian with one vertex grounded; cached for all pairs at
/// construction up to `dense_threshold`, solved per query (CG, residual
/// 1e-10) above it. Read-only after construction.
class ResistanceOracle {
public:
    explicit ResistanceOracle(const Graph& g, int dense_threshold = 2048);

    const Graph& graph() const { return *graph_; }

    double resistance(int x, int y) const;

    /// The potential-based extremizer: E(f) = 1 and f(x)-f(y) = rho(x,y).
    VertexFunction extremal_function(int x, int y) const;

    /// diam_r(X) = max over pairs of r.
    double diameter_r() const;
    std::pair<int, int> diameter_pair() const;

private:
    VertexFunction unit_flow_potential(int x, int y) const;  // A u = e_x - e_y, u(ground)=0

    const Graph* graph_;
    Eigen::MatrixXd green_;  // grounded inverse, dense path; empty when iterative
    Eigen::SparseMatrix<double> grounded_;  // grounded b-Laplacian, iterative path
};

struct MpiVerdict {
    double growth_sq = 0.0;       // (f(x)-f(y))^2
    double energy = 0.0;
    double path_metric = 0.0;     // d(x,y)
    double resistance_metric = 0.0;
    bool path_ok = false;
    bool resistance_ok = false;
    bool ok() const { return path_ok && resistance_ok; }
};

/// Checks (f(x)-f(y))^2 <= p(x,y) E(f) for both p = d and p = r.
MpiVerdict mpi_check(const ResistanceOracle& r, const DistanceOracle& d, const VertexFunction& f,
                     int x, int y);

/// Var(f) = sup f - inf f; equals 2 inf_t ||f - t||_inf (optimal t is the
/// midrange).
double variation(const VertexFunction& f);

/// Best constant C_P in Var(f)^2 <= C_P E(f); equals diam_r(X).
double gvpi_constant(const ResistanceOracle& r);

/// For f orthogonal to constants in l^2(mu):
/// ||f||^2 <= (1/4) sup_{x,y} (f(x)-f(y))^2 mu(total). The mu-projection is
/// applied before checking; verified within 1e-12 relative.
CheckResult quarter_inequality_check(const std::vector<double>& mu, VertexFunction f);

/// lambda1 >= 4 / (diam_r(X) vol(X)); never weaker than neumann_bound since
/// r <= d.
BoundReport refined_neumann_bound(const Graph& g);

}  // namespace gb
