#pragma once

#include "gb/graph.hpp"
#include "gb/metric.hpp"

#include <optional>
#include <string>

namespace gb {

/// One evaluated lower-bound instance: the geometric quantities that enter,
/// the bound value, the computed eigenvalue, and the verdict. `holds` iff
/// eigenvalue >= bound - 1e-9 * max(1, bound).
struct BoundReport {
    std::string inequality;  // "neumann" | "dirichlet" | "dirichlet-relative" | "neumann-resistance"
    std::optional<double> diameter;
    std::optional<double> inradius;
    std::optional<double> volume;
    std::optional<double> vol_sharp;
    std::optional<double> resistance_diameter;
    double bound = 0.0;
    double eigenvalue = 0.0;
    double ratio = 0.0;  // eigenvalue / bound
    bool holds = false;
    bool window_values = false;  // geometric inputs are finite-window values
};

constexpr double kVerdictSlack = 1e-9;

inline bool bound_holds(double eigenvalue, double bound) {
    return eigenvalue >= bound - kVerdictSlack * std::max(1.0, bound);
}

struct CheckResult {
    bool ok = true;
    std::string detail;
};

/// (f(x)-f(y))^2 <= L(path) * E(f) for the path's endpoints, within 1e-12
/// absolute slack.
CheckResult basic_inequality_check(const Graph& g, const VertexFunction& f, const Path& path);

/// lambda1 >= 4 / (diam(X) vol(X)).
BoundReport neumann_bound(const Graph& g);

/// lambda0^D >= 1 / (R_Omega vol(Omega)).
BoundReport dirichlet_bound(const Graph& g, const SubsetSpec& subset);

/// lambda0^D >= 1 / (R_Omega vol#[R_Omega]); with `window_values` set the
/// report labels its geometric inputs as finite-window quantities.
BoundReport dirichlet_bound_relative(const Graph& g, const SubsetSpec& subset,
                                     bool window_values = false);

}  // namespace gb
