#include "gb/bounds.hpp"

#include "gb/spectral.hpp"

#include <cmath>
#include <sstream>

namespace gb {

CheckResult basic_inequality_check(const Graph& g, const VertexFunction& f, const Path& path) {
    double growth = f[path.front()] - f[path.back()];
    double lhs = growth * growth;
    double rhs = path_length(g, path) * energy(g, f);
    if (lhs <= rhs + 1e-12) return {};
    std::ostringstream ss;
    ss << "growth " << lhs << " exceeds length*energy " << rhs;
    return {false, ss.str()};
}

BoundReport neumann_bound(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("neumann_bound requires >= 2 vertices");
    DistanceOracle oracle(g);
    BoundReport report;
    report.inequality = "neumann";
    report.diameter = diameter(oracle);
    report.volume = total_volume(g);
    report.bound = 4.0 / (*report.diameter * *report.volume);
    report.eigenvalue = lambda1(g).eigenvalue;
    report.ratio = report.eigenvalue / report.bound;
    report.holds = bound_holds(report.eigenvalue, report.bound);
    return report;
}

BoundReport dirichlet_bound(const Graph& g, const SubsetSpec& subset) {
    DistanceOracle oracle(g);
    BoundReport report;
    report.inequality = "dirichlet";
    report.inradius = inradius(oracle, subset);
    report.volume = volume(g, subset.omega());
    report.bound = 1.0 / (*report.inradius * *report.volume);
    report.eigenvalue = lambda_dirichlet(g, subset).eigenvalue;
    report.ratio = report.eigenvalue / report.bound;
    report.holds = bound_holds(report.eigenvalue, report.bound);
    return report;
}

BoundReport dirichlet_bound_relative(const Graph& g, const SubsetSpec& subset, bool window_values) {
    DistanceOracle oracle(g);
    BoundReport report;
    report.inequality = "dirichlet-relative";
    report.window_values = window_values;
    report.inradius = inradius(oracle, subset);
    report.vol_sharp = vol_sharp(oracle, *report.inradius);
    report.bound = 1.0 / (*report.inradius * *report.vol_sharp);
    report.eigenvalue = lambda_dirichlet(g, subset).eigenvalue;
    report.ratio = report.eigenvalue / report.bound;
    report.holds = bound_holds(report.eigenvalue, report.bound);
    return report;
}

}  // namespace gb
