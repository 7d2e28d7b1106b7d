#include "gb/selftest.hpp"

#include "gb/bounds.hpp"
#include "gb/families.hpp"
#include "gb/graph.hpp"
#include "gb/lazy.hpp"
#include "gb/metric.hpp"
#include "gb/optimality.hpp"
#include "gb/resistance.hpp"
#include "gb/spectral.hpp"
#include "gb/voronoi.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gb {

namespace {

std::optional<std::string> expect_close(double got, double want, double tol, const char* what) {
    if (std::abs(got - want) <= tol * std::max(1.0, std::abs(want))) return std::nullopt;
    std::ostringstream ss;
    ss << what << ": got " << got << ", want " << want;
    return ss.str();
}

std::optional<std::string> expect(bool ok, const char* what) {
    if (ok) return std::nullopt;
    return std::string(what);
}

Graph weighted_p3() {
    Graph::Builder b;
    b.add_vertex("v0", 1.0);
    b.add_vertex("v1", 1.0);
    b.add_vertex("v2", 1.0);
    b.add_edge(0, 1, 2.0);
    b.add_edge(1, 2, 4.0);
    return b.build();
}

std::vector<SelftestCase> build_cases() {
    std::vector<SelftestCase> cases;
    auto add = [&](std::string name, std::function<std::optional<std::string>()> run) {
        cases.push_back({std::move(name), std::move(run)});
    };

    add("volume-hand-sum", [] {
        Graph::Builder b;
        b.add_vertex("v0", 0.5);
        b.add_vertex("v1", 2.0);
        b.add_vertex("v2", 0.25);
        b.add_edge(0, 1, 1.0);
        b.add_edge(1, 2, 1.0);
        Graph g = b.build();
        int subset[] = {0, 2};
        return expect_close(volume(g, subset), 0.75, 1e-15, "vol{v0,v2}");
    });
    add("path-length-reciprocals", [] {
        Graph g = weighted_p3();
        return expect_close(path_length(g, {0, 1, 2}), 0.75, 1e-15, "L(v0,v1,v2)");
    });
    add("energy-triangle", [] {
        Graph g = make_cycle(3);
        VertexFunction f(3);
        f << 0, 1, 2;
        return expect_close(energy(g, f), 6.0, 1e-15, "E(0,1,2)");
    });
    add("energy-bilinear-swap", [] {
        Graph g = make_path(2);
        VertexFunction f(2), h(2);
        f << 0, 1;
        h << 1, 0;
        return expect_close(energy_bilinear(g, f, h), -1.0, 1e-15, "E(f,g)");
    });
    add("distance-weighted-p3", [] {
        Graph g = weighted_p3();
        DistanceOracle oracle(g);
        return expect_close(oracle.distance(0, 2), 0.75, 1e-15, "d(v0,v2)");
    });
    add("distance-c4-opposite", [] {
        Graph g = make_cycle(4);
        DistanceOracle oracle(g);
        return expect_close(oracle.distance(0, 2), 2.0, 1e-15, "d across C4");
    });
    add("balls-p3", [] {
        Graph g = make_path(3);
        DistanceOracle oracle(g);
        auto open1 = ball(oracle, 1, 1.0, BallKind::open);
        auto closed1 = ball(oracle, 1, 1.0, BallKind::closed);
        if (open1.members != std::vector<int>{1}) return std::optional<std::string>("U_1(v1) != {v1}");
        if (closed1.members != std::vector<int>{0, 1, 2})
            return std::optional<std::string>("B_1(v1) != all");
        return std::optional<std::string>();
    });
    add("diameter-p2-c4", [] {
        DistanceOracle p2(make_path(2)), c4(make_cycle(4));
        if (auto e = expect_close(diameter(p2), 1.0, 1e-15, "diam P2")) return e;
        return expect_close(diameter(c4), 2.0, 1e-15, "diam C4");
    });
    add("diameter-via-inradius-p3", [] {
        Graph g = make_path(3);
        DistanceOracle oracle(g);
        return expect_close(diameter_via_inradius(oracle), diameter(oracle), 1e-12, "two routes");
    });
    add("inradius-p3-p5", [] {
        Graph p3 = make_path(3), p5 = make_path(5);
        DistanceOracle o3(p3), o5(p5);
        if (auto e = expect_close(inradius(o3, SubsetSpec::from_omega(p3, {1})), 1.0, 1e-15, "R P3"))
            return e;
        return expect_close(inradius(o5, SubsetSpec::from_omega(p5, {1, 2, 3})), 2.0, 1e-15, "R P5");
    });
    add("vol-sharp-p3", [] {
        Graph g = make_path(3);
        DistanceOracle oracle(g);
        return expect_close(vol_sharp(oracle, 1.0), 3.0, 1e-15, "vol#[1]");
    });
    add("vol-sharp-line-window", [] {
        Graph g = make_line_window(6);
        DistanceOracle oracle(g);
        return expect_close(vol_sharp(oracle, 1.0), 3.0, 1e-15, "vol#[1] on [-6,6]");
    });
    add("voronoi-p5-tie-break", [] {
        Graph g = make_path(5);
        auto dec = build_voronoi(g, {0, 4});
        if (dec.assignment[2] != 0) return std::optional<std::string>("v2 not assigned to v0 on tie");
        if (dec.cell_members(0) != std::vector<int>{0, 1, 2} || dec.cell_members(4) != std::vector<int>{3, 4})
            return std::optional<std::string>("cells differ from {v0,v1,v2},{v3,v4}");
        auto verdict = verify_voronoi(g, dec, dec.centers);
        return expect(verdict.ok(), "axioms fail on P5");
    });
    add("voronoi-cell-radii-p5", [] {
        Graph g = make_path(5);
        auto dec = build_voronoi(g, {0, 4});
        auto report = cell_radius_bound(g, dec, SubsetSpec::from_dirichlet(g, {0, 4}));
        if (auto e = expect_close(report.inradius, 2.0, 1e-15, "R")) return e;
        if (report.cell_radius != std::vector<double>{2.0, 1.0})
            return std::optional<std::string>("per-cell maxima differ from (2,1)");
        return expect(report.within_bound, "cell not inside B_R");
    });
    add("cell-constant-two-vertex", [] {
        Graph g = make_path(2);
        int cell[] = {0, 1};
        auto c = cellwise_dirichlet_constant(g, cell, 0);
        if (auto e = expect_close(c.value, 1.0, 1e-12, "c_p")) return e;
        return expect_close(c.exact_eigenvalue, 1.0, 1e-12, "exact eigenvalue");
    });
    add("cell-constant-p3-endpoint", [] {
        Graph g = make_path(3);
        int cell[] = {0, 1, 2};
        auto c = cellwise_dirichlet_constant(g, cell, 0);
        if (auto e = expect_close(c.value, 0.25, 1e-12, "c_p")) return e;
        return expect_close(c.exact_eigenvalue, (3.0 - std::sqrt(5.0)) / 2.0, 1e-10, "exact eigenvalue");
    });
    add("lambda1-p2-p3", [] {
        if (auto e = expect_close(lambda1(make_path(2)).eigenvalue, 2.0, 1e-10, "lambda1 P2")) return e;
        return expect_close(lambda1(make_path(3)).eigenvalue, 1.0, 1e-10, "lambda1 P3");
    });
    add("lambda1-c8-closed-form", [] {
        double want = 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi / 8.0));
        return expect_close(lambda1(make_cycle(8)).eigenvalue, want, 1e-10, "lambda1 C8");
    });
    add("lambda-dirichlet-p3-center", [] {
        Graph g = make_path(3);
        return expect_close(lambda_dirichlet(g, SubsetSpec::from_omega(g, {1})).eigenvalue, 2.0, 1e-10,
                            "lambda0 P3");
    });
    add("lambda-dirichlet-p5-interior", [] {
        Graph g = make_path(5);
        return expect_close(lambda_dirichlet(g, SubsetSpec::from_omega(g, {1, 2, 3})).eigenvalue,
                            2.0 - std::sqrt(2.0), 1e-10, "lambda0 P5");
    });
    add("rayleigh-p2-extremal", [] {
        Graph g = make_path(2);
        VertexFunction f(2);
        f << 1, -1;
        return expect_close(rayleigh(g, f), 2.0, 1e-12, "rayleigh (1,-1)");
    });
    add("kernel-check-p2", [] {
        auto check = kernel_check(make_path(2));
        if (auto e = expect(check.ok, "kernel check fails")) return e;
        return expect_close(check.second_eigenvalue, 2.0, 1e-10, "second eigenvalue");
    });
    add("neumann-bound-p2-tight", [] {
        auto report = neumann_bound(make_path(2));
        if (auto e = expect_close(report.bound, 2.0, 1e-12, "bound")) return e;
        if (auto e = expect_close(report.ratio, 1.0, 1e-9, "ratio")) return e;
        return expect(report.holds, "verdict");
    });
    add("neumann-bound-p3-c4", [] {
        auto p3 = neumann_bound(make_path(3));
        if (auto e = expect_close(p3.bound, 4.0 / 6.0, 1e-12, "P3 bound")) return e;
        if (auto e = expect(p3.holds, "P3 verdict")) return e;
        auto c4 = neumann_bound(make_cycle(4));
        if (auto e = expect_close(c4.bound, 0.5, 1e-12, "C4 bound")) return e;
        if (auto e = expect_close(c4.eigenvalue, 2.0, 1e-9, "C4 lambda1")) return e;
        return expect(c4.holds, "C4 verdict");
    });
    add("dirichlet-bound-p3-p5", [] {
        Graph p3 = make_path(3);
        auto r3 = dirichlet_bound(p3, SubsetSpec::from_omega(p3, {1}));
        if (auto e = expect_close(r3.bound, 1.0, 1e-12, "P3 bound")) return e;
        if (auto e = expect_close(r3.eigenvalue, 2.0, 1e-9, "P3 eigenvalue")) return e;
        Graph p5 = make_path(5);
        auto r5 = dirichlet_bound(p5, SubsetSpec::from_omega(p5, {1, 2, 3}));
        if (auto e = expect_close(r5.bound, 1.0 / 6.0, 1e-12, "P5 bound")) return e;
        return expect(r3.holds && r5.holds, "verdicts");
    });
    add("dirichlet-bound-single-edge-tight", [] {
        Graph g = make_star(1);  // omega = leaf, one unit edge to the center
        auto report = dirichlet_bound(g, SubsetSpec::from_omega(g, {1}));
        if (auto e = expect_close(report.bound, 1.0, 1e-12, "bound")) return e;
        return expect_close(report.ratio, 1.0, 1e-9, "ratio at k=1");
    });
    add("dirichlet-relative-p3", [] {
        Graph g = make_path(3);
        auto report = dirichlet_bound_relative(g, SubsetSpec::from_omega(g, {1}));
        if (auto e = expect_close(*report.vol_sharp, 3.0, 1e-12, "vol#")) return e;
        return expect_close(report.bound, 1.0 / 3.0, 1e-12, "bound");
    });
    add("resistance-p2-p3", [] {
        ResistanceOracle p2(make_path(2)), p3(make_path(3));
        if (auto e = expect_close(p2.resistance(0, 1), 1.0, 1e-10, "r P2")) return e;
        return expect_close(p3.resistance(0, 2), 2.0, 1e-10, "r P3 series");
    });
    add("resistance-c4-parallel", [] {
        ResistanceOracle c4(make_cycle(4));
        if (auto e = expect_close(c4.resistance(0, 2), 1.0, 1e-10, "opposite")) return e;
        if (auto e = expect_close(c4.resistance(0, 1), 0.75, 1e-10, "adjacent")) return e;
        return expect_close(c4.diameter_r(), 1.0, 1e-10, "diam_r C4");
    });
    add("resistance-extremal-function", [] {
        Graph g = make_path(3);
        ResistanceOracle oracle(g);
        VertexFunction f = oracle.extremal_function(0, 2);
        if (auto e = expect_close(energy(g, f), 1.0, 1e-9, "E(f)")) return e;
        return expect_close(f[0] - f[2], std::sqrt(2.0), 1e-9, "rho attained");
    });
    add("variation-midrange", [] {
        VertexFunction f(3);
        f << -1, 0, 5;
        return expect_close(variation(f), 6.0, 1e-15, "Var");
    });
    add("gvpi-p3", [] {
        Graph g = make_path(3);
        ResistanceOracle oracle(g);
        double cp = gvpi_constant(oracle);
        if (auto e = expect_close(cp, 2.0, 1e-10, "C_P")) return e;
        auto [x, y] = oracle.diameter_pair();
        VertexFunction f = oracle.extremal_function(x, y);
        double ratio = variation(f) * variation(f) / energy(g, f);
        return expect(ratio >= (1.0 - 1e-9) * cp, "extremal ratio below C_P");
    });
    add("quarter-inequality-sharp", [] {
        VertexFunction f(2);
        f << 1, -1;
        auto check = quarter_inequality_check({1.0, 1.0}, f);
        return expect(check.ok, check.detail.c_str());
    });
    add("refined-neumann-c4", [] {
        auto plain = neumann_bound(make_cycle(4));
        auto refined = refined_neumann_bound(make_cycle(4));
        if (auto e = expect_close(refined.bound, 1.0, 1e-10, "refined bound")) return e;
        return expect(refined.bound >= plain.bound && refined.holds, "refined weaker than plain");
    });
    add("measure-gradient-p2", [] {
        Graph g = make_path(2);
        auto grad = lambda1_measure_gradient(g, {0.5, 0.5});
        if (auto e = expect_close(grad.lambda1, 4.0, 1e-10, "lambda1 at (1/2,1/2)")) return e;
        if (auto e = expect_close(grad.gradient[0], -4.0, 1e-8, "gradient[0]")) return e;
        return expect_close(grad.gradient[0], grad.gradient[1], 1e-10, "symmetry");
    });
    add("optimize-measure-p2", [] {
        OptimizeOptions opt;
        opt.tol = 0.005;
        auto result = minimize_lambda1(make_path(2), opt);
        if (auto e = expect_close(result.target, 4.0, 1e-10, "target")) return e;
        return expect(result.lambda1 <= 4.04, "lambda1 not within 1% of 4");
    });
    add("window-line-radius-3", [] {
        auto window = extract_window(integer_line_generator(), 3.0);
        return expect(window.graph.vertex_count() == 7 && window.graph.edge_count() == 6,
                      "window differs from the 7-vertex path");
    });
    add("window-tree-k3-radius-2", [] {
        auto window = extract_window(regular_tree_generator(3), 2.0);
        return expect(window.graph.vertex_count() == 10, "tree ball count differs from 10");
    });
    add("window-radius-0", [] {
        auto window = extract_window(integer_line_generator(), 0.0);
        return expect(window.graph.vertex_count() == 1, "closed ball of radius 0");
    });
    add("truncation-line-mod3", [] {
        auto study = truncation_study(integer_line_generator(3), {6.0});
        const auto& row = study.rows.at(0);
        if (row.error) return std::optional<std::string>("row errored: " + row.error_message);
        if (auto e = expect_close(*row.report.inradius, 1.0, 1e-12, "R")) return e;
        if (auto e = expect_close(*row.report.vol_sharp, 3.0, 1e-12, "vol#")) return e;
        if (auto e = expect_close(row.report.bound, 1.0 / 3.0, 1e-12, "bound")) return e;
        if (auto e = expect_close(row.report.eigenvalue, 1.0, 1e-9, "lambda")) return e;
        return expect(row.report.holds, "verdict");
    });

    return cases;
}

}  // namespace

const std::vector<SelftestCase>& selftest_cases() {
    static const std::vector<SelftestCase> cases = build_cases();
    return cases;
}

}  // namespace gb
