#pragma once

#include "gb/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gb {

struct GradientResult {
    std::vector<double> gradient;  // d lambda1 / d m(x) = -lambda1 f(x)^2
    double lambda1 = 0.0;
    VertexFunction eigenfunction;  // m-normalized
    /// Set when the eigenvalue gap at m is <= 1e-10; the returned gradient
    /// is then one subgradient element.
    bool degenerate = false;
    double gap = 0.0;
};

/// First-order sensitivity of lambda1 with respect to the vertex measure,
/// from eigenvalue perturbation of the generalized problem A f = lambda M f.
GradientResult lambda1_measure_gradient(const Graph& g, const std::vector<double>& m);

struct OptimizeOptions {
    int max_iters = 500;
    double tol = 1e-3;            // relative gap to 4/diam_r at which to stop
    double measure_floor = 1e-8;  // simplex interior floor, keeps supp(m) = X
    std::uint64_t seed = 1;
};

struct TraceRow {
    int iter;
    double lambda1;
    double gap_to_target;  // (lambda1 - target) / target
};

struct OptimizeResult {
    std::vector<double> measure;   // probability measure, every entry >= floor
    double lambda1 = 0.0;          // achieved value (the infimum may be a limit)
    double target = 0.0;           // 4 / diam_r(X), computed independently
    std::vector<TraceRow> trace;   // accepted iterates; lambda1 nonincreasing
    bool converged = false;
    std::string status;
};

/// Projected gradient descent for inf{lambda1(X,b,m) : m a full-support
/// probability measure}: gradient step, clamp to the interior floor,
/// renormalize; step size by backtracking halving from 1.0 until lambda1
/// decreases. Non-convergence is reported in `status`, never thrown.
OptimizeResult minimize_lambda1(const Graph& g, const OptimizeOptions& options = {});

}  // namespace gb
