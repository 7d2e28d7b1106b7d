#include "gb/optimality.hpp"

#include "gb/resistance.hpp"
#include "gb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gb {

namespace {

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

void project_simplex(std::vector<double>& m, double floor) {
    double total = 0.0;
    for (double& x : m) {
        x = std::max(x, floor);
        total += x;
    }
    for (double& x : m) x /= total;
    // renormalization can push an entry back under the floor only when the
    // floor is within rounding of 1/n; not reachable with the defaults
}

SpectralResult solve_lambda1(const Graph& g, const std::vector<double>& m) {
    return lambda1(g.with_measure(m));
}

}  // namespace

GradientResult lambda1_measure_gradient(const Graph& g, const std::vector<double>& m) {
    SpectralResult sr = solve_lambda1(g, m);
    GradientResult out;
    out.lambda1 = sr.eigenvalue;
    out.eigenfunction = sr.eigenfunction;
    out.gap = sr.gap.value_or(kInfDistance);
    out.degenerate = out.gap <= 1e-10;
    out.gradient.resize(m.size());
    for (std::size_t x = 0; x < m.size(); ++x)
        out.gradient[x] = -sr.eigenvalue * sr.eigenfunction[x] * sr.eigenfunction[x];
    return out;
}

OptimizeResult minimize_lambda1(const Graph& g, const OptimizeOptions& options) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("minimize_lambda1 requires >= 2 vertices");

    OptimizeResult result;
    {
        ResistanceOracle r(g);
        result.target = 4.0 / r.diameter_r();
    }

    SplitMix rng{options.seed};
    std::vector<double> m(n, 1.0 / n);
    project_simplex(m, options.measure_floor);

    GradientResult cur = lambda1_measure_gradient(g, m);
    result.trace.push_back({0, cur.lambda1, (cur.lambda1 - result.target) / result.target});

    int iter = 0;
    while (iter < options.max_iters) {
        ++iter;
        double rel_gap = (cur.lambda1 - result.target) / result.target;
        if (rel_gap < options.tol) {
            result.converged = true;
            result.status = "reached target tolerance";
            break;
        }

        std::vector<double> next;
        GradientResult next_state;
        bool accepted = false;

        if (cur.degenerate) {
            // lambda1 is non-smooth at a crossing; try seeded perturbations
            // of shrinking size until one does not increase the objective.
            double scale = 1e-3;
            for (int attempt = 0; attempt < 40 && !accepted; ++attempt, scale *= 0.5) {
                std::vector<double> trial = m;
                for (double& x : trial) x *= 1.0 + scale * (rng.uniform() - 0.5);
                project_simplex(trial, options.measure_floor);
                GradientResult t = lambda1_measure_gradient(g, trial);
                if (t.lambda1 <= cur.lambda1) {
                    next = std::move(trial);
                    next_state = std::move(t);
                    accepted = true;
                }
            }
            if (!accepted) {
                result.status = "stalled at a degenerate eigenvalue";
                break;
            }
        } else {
            double step = 1.0;
            while (step >= 1e-14 && !accepted) {
                std::vector<double> trial(n);
                for (int x = 0; x < n; ++x) trial[x] = m[x] - step * cur.gradient[x];
                project_simplex(trial, options.measure_floor);
                GradientResult t = lambda1_measure_gradient(g, trial);
                if (t.lambda1 < cur.lambda1) {
                    next = std::move(trial);
                    next_state = std::move(t);
                    accepted = true;
                } else {
                    step *= 0.5;
                }
            }
            if (!accepted) {
                result.converged = true;
                result.status = "no descent step improves lambda1";
                break;
            }
        }

        double improvement = (cur.lambda1 - next_state.lambda1) / std::max(1.0, cur.lambda1);
        m = std::move(next);
        cur = std::move(next_state);
        result.trace.push_back({iter, cur.lambda1, (cur.lambda1 - result.target) / result.target});
        if (!cur.degenerate && improvement < 1e-12) {
            result.converged = true;
            result.status = "relative improvement below 1e-12";
            break;
        }
    }
    if (result.status.empty()) result.status = "iteration limit reached";

    result.measure = std::move(m);
    result.lambda1 = cur.lambda1;
    return result;
}

}  // namespace gb
