#include "gb/cli.hpp"

#include "gb/bounds.hpp"
#include "gb/graph.hpp"
#include "gb/lazy.hpp"
#include "gb/metric.hpp"
#include "gb/optimality.hpp"
#include "gb/report.hpp"
#include "gb/resistance.hpp"
#include "gb/selftest.hpp"
#include "gb/spectral.hpp"
#include "gb/voronoi.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace gb::cli {

namespace {

std::string echo_args(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

Graph load_validated(const std::string& path) {
    Graph g = read_graph_file(path);
    ValidationReport report = validate(g);
    if (!report.ok()) {
        std::string msg = "invalid graph:";
        for (const auto& v : report.violations) msg += "\n  " + v;
        throw std::runtime_error(msg);
    }
    return g;
}

int check_neumann(const std::string& path, ReportWriter& w) {
    Graph g = load_validated(path);
    w.digest(g);
    BoundReport plain = neumann_bound(g);
    BoundReport refined = refined_neumann_bound(g);
    w.bound_report(plain);
    w.bound_report(refined);
    return plain.holds && refined.holds ? 0 : 2;
}

int check_dirichlet(const std::string& path, ReportWriter& w) {
    Graph g = load_validated(path);
    if (g.dirichlet_marks().empty()) throw std::runtime_error("empty Dirichlet set (no 'd' lines)");
    SubsetSpec spec = SubsetSpec::from_file_marks(g);
    if (spec.omega().empty()) throw std::runtime_error("empty omega ('d' lines cover every vertex)");
    w.digest(g);
    BoundReport plain = dirichlet_bound(g, spec);
    BoundReport relative = dirichlet_bound_relative(g, spec);
    w.bound_report(plain);
    w.bound_report(relative);
    return plain.holds && relative.holds ? 0 : 2;
}

int voronoi_command(const std::string& path, ReportWriter& w, std::ostream& out) {
    Graph g = load_validated(path);
    if (g.dirichlet_marks().empty()) throw std::runtime_error("empty center set (no 'd' lines)");
    w.digest(g);

    VoronoiDecomposition dec = build_voronoi(g, g.dirichlet_marks());
    VoronoiVerdict verdict = verify_voronoi(g, dec, dec.centers);

    w.section("voronoi");
    w.kv("centers", static_cast<int>(dec.centers.size()));
    w.kv("axiom-v1", verdict.v1.ok ? "ok" : "violated: " + verdict.v1.detail);
    w.kv("axiom-v2", verdict.v2.ok ? "ok" : "violated: " + verdict.v2.detail);
    w.kv("axiom-v3", verdict.v3.ok ? "ok" : "violated: " + verdict.v3.detail);
    w.verdict(verdict.ok());

    w.section("assignment");
    for (int v = 0; v < g.vertex_count(); ++v)
        out << g.name(v) << '\t' << g.name(dec.assignment[v]) << '\t'
            << fmt_real(dec.center_distance[v]) << '\n';

    w.section("cells");
    out << "center\tsize\tradius\tvolume\tconstant\teigenvalue\n";
    double min_constant = kInfDistance;
    for (int p : dec.centers) {
        auto members = dec.cell_members(p);
        auto c = cellwise_dirichlet_constant(g, members, p);
        out << g.name(p) << '\t' << members.size() << '\t';
        if (c.unbounded) {
            out << "0.00000000000\t0.00000000000\tunbounded\tunbounded\n";
        } else {
            out << fmt_real(c.cell_radius) << '\t' << fmt_real(c.cell_volume) << '\t'
                << fmt_real(c.value) << '\t' << fmt_real(c.exact_eigenvalue) << '\n';
            min_constant = std::min(min_constant, c.value);
        }
    }

    SubsetSpec spec = SubsetSpec::from_file_marks(g);
    w.section("summary");
    if (min_constant < kInfDistance)
        w.kv("min-cell-constant", min_constant);
    else
        w.kv("min-cell-constant", "unbounded");
    if (!spec.omega().empty()) {
        double lam = lambda_dirichlet(g, spec).eigenvalue;
        w.kv("lambda-dirichlet", lam);
        if (min_constant < kInfDistance)
            w.kv("cell-bound-holds", min_constant <= lam + 1e-9 ? "yes" : "no");
    }
    return verdict.ok() ? 0 : 2;
}

int resistance_command(const std::string& path, const std::string& pairs, bool diam,
                       ReportWriter& w, std::ostream& out) {
    Graph g = load_validated(path);
    w.digest(g);
    ResistanceOracle oracle(g);
    w.section("resistance");
    if (diam) w.kv("resistance-diameter", oracle.diameter_r());
    if (pairs == "all") {
        for (int x = 0; x < g.vertex_count(); ++x)
            for (int y = x + 1; y < g.vertex_count(); ++y)
                out << g.name(x) << '\t' << g.name(y) << '\t' << fmt_real(oracle.resistance(x, y))
                    << '\n';
    } else {
        auto comma = pairs.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("--pairs expects 'all' or '<id>,<id>'");
        int x = g.index(pairs.substr(0, comma));
        int y = g.index(pairs.substr(comma + 1));
        out << g.name(x) << '\t' << g.name(y) << '\t' << fmt_real(oracle.resistance(x, y)) << '\n';
    }
    return 0;
}

int optimize_command(const std::string& path, int iters, double tol, std::uint64_t seed,
                     ReportWriter& w, std::ostream& out) {
    Graph g = load_validated(path);
    w.digest(g);
    if (const char* env = std::getenv("GB_SEED")) seed = std::strtoull(env, nullptr, 10);

    OptimizeOptions opt;
    opt.max_iters = iters;
    opt.tol = tol;
    opt.seed = seed;
    OptimizeResult result = minimize_lambda1(g, opt);

    w.section("trace");
    out << "iter\tlambda1\tgap_to_target\n";
    for (const auto& row : result.trace)
        out << row.iter << '\t' << fmt_real(row.lambda1) << '\t' << fmt_real(row.gap_to_target)
            << '\n';

    w.section("optimum");
    w.kv("target", result.target);
    w.kv("achieved", result.lambda1);
    w.kv("gap", (result.lambda1 - result.target) / result.target);
    w.kv("converged", result.converged ? "yes" : "no");
    w.kv("status", result.status);
    for (int v = 0; v < g.vertex_count(); ++v) out << "m " << g.name(v) << ' ' << fmt_real(result.measure[v]) << '\n';
    return 0;
}

GraphGenerator make_generator(const std::string& name, const std::map<std::string, std::string>& params) {
    auto int_param = [&](const std::string& key, int fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : std::stoi(it->second);
    };
    if (name == "line") return integer_line_generator(int_param("dmod", 0));
    if (name == "lattice2d") return square_lattice_generator(int_param("dmod", 0));
    if (name == "tree") return regular_tree_generator(int_param("k", 3), int_param("dmod", 0));
    if (name == "fan") {
        auto it = params.find("convention");
        EdgeLengthConvention convention = EdgeLengthConvention::reciprocal_weight;
        if (it != params.end()) {
            if (it->second == "direct")
                convention = EdgeLengthConvention::direct_weight;
            else if (it->second != "recip")
                throw std::runtime_error("convention must be 'recip' or 'direct'");
        }
        return fan_line_generator(convention);
    }
    throw std::runtime_error("unknown generator '" + name + "' (line, lattice2d, tree, fan)");
}

int lazy_command(const std::string& generator, const std::vector<std::string>& params,
                 const std::string& radii_arg, const std::string& dump_file, ReportWriter& w,
                 std::ostream& out) {
    std::map<std::string, std::string> kv;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw std::runtime_error("--param expects key=value, got '" + p + "'");
        kv[p.substr(0, eq)] = p.substr(eq + 1);
    }
    GraphGenerator gen = make_generator(generator, kv);

    std::vector<double> radii;
    std::stringstream ss(radii_arg);
    for (std::string tok; std::getline(ss, tok, ',');) radii.push_back(std::stod(tok));
    if (radii.empty()) throw std::runtime_error("--radii expects a comma-separated list");

    w.section("truncation-study");
    w.kv("generator", gen.name);
    out << "radius\tvertices\tedges\tinradius\tvol_sharp\tbound\tlambda\tverdict\tboundary_affected\n";
    TruncationStudy study = truncation_study(gen, radii);
    for (const auto& row : study.rows) {
        out << fmt_real(row.radius) << '\t';
        if (row.error) {
            out << "error: " << row.error_message << '\n';
            continue;
        }
        out << row.vertices << '\t' << row.edges << '\t' << fmt_real(*row.report.inradius) << '\t'
            << fmt_real(*row.report.vol_sharp) << '\t' << fmt_real(row.report.bound) << '\t'
            << fmt_real(row.report.eigenvalue) << '\t' << (row.report.holds ? "holds" : "violated")
            << '\t' << row.boundary_affected << '\n';
    }

    // hub geometry per window: which Dirichlet vertex is nearest, and how far
    if (generator == "fan") {
        w.section("hub-distances");
        out << "radius\tnearest\tdistance\n";
        for (double radius : radii) {
            try {
                WindowExtract window = extract_window(gen, radius);
                if (window.dirichlet.empty()) {
                    out << fmt_real(radius) << "\tnone\tnan\n";
                    continue;
                }
                DistanceOracle oracle(window.graph);
                int hub = window.graph.index("h");
                int nearest = -1;
                double dist = kInfDistance;
                for (int v : window.dirichlet) {
                    double d = oracle.distance(hub, v);
                    if (d < dist) {
                        dist = d;
                        nearest = v;
                    }
                }
                out << fmt_real(radius) << '\t' << window.graph.name(nearest) << '\t' << fmt_real(dist)
                    << '\n';
            } catch (const std::exception& e) {
                out << fmt_real(radius) << "\terror: " << e.what() << '\n';
            }
        }
    }

    if (!dump_file.empty()) {
        // dump the largest window that extracts successfully
        for (auto it = radii.rbegin(); it != radii.rend(); ++it) {
            try {
                WindowExtract window = extract_window(gen, *it);
                std::ofstream f(dump_file);
                if (!f) throw std::runtime_error("cannot write '" + dump_file + "'");
                write_graph(f, window.graph);
                w.kv("dumped-radius", fmt_real(*it));
                w.kv("dumped-file", dump_file);
                break;
            } catch (const WindowCapExceeded&) {
                continue;
            }
        }
    }
    return 0;
}

int selftest_command(std::ostream& out) {
    int failures = 0;
    for (const auto& test : selftest_cases()) {
        auto error = test.run();
        if (error) {
            ++failures;
            out << "FAIL " << test.name << ": " << *error << '\n';
        } else {
            out << "ok   " << test.name << '\n';
        }
    }
    out << (failures == 0 ? "selftest: all " : "selftest: FAILED ") << selftest_cases().size()
        << " examples" << (failures ? " (" + std::to_string(failures) + " failing)" : " passed")
        << '\n';
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"eigenvalue lower bounds for weighted graph Laplacians"};
    app.require_subcommand(1);

    std::string graph_file, pairs = "all", dump_file, radii, generator;
    std::vector<std::string> params;
    bool diam = false;
    int iters = 500;
    double tol = 1e-3;
    std::uint64_t seed = 1;

    auto* cn = app.add_subcommand("check-neumann", "diameter-volume lower bound for lambda1");
    cn->add_option("graph-file", graph_file)->required();

    auto* cd = app.add_subcommand("check-dirichlet", "inradius-volume lower bounds for lambda0^D");
    cd->add_option("graph-file", graph_file)->required();

    auto* vo = app.add_subcommand("voronoi", "build and verify a Voronoi decomposition with centers from D");
    vo->add_option("graph-file", graph_file)->required();

    auto* re = app.add_subcommand("resistance", "effective resistance table");
    re->add_option("graph-file", graph_file)->required();
    re->add_option("--pairs", pairs, "'all' or '<id>,<id>'");
    re->add_flag("--diam", diam, "print the resistance diameter");

    auto* om = app.add_subcommand("optimize-measure", "minimize lambda1 over probability measures");
    om->add_option("graph-file", graph_file)->required();
    om->add_option("--iters", iters);
    om->add_option("--tol", tol);
    om->add_option("--seed", seed);

    auto* la = app.add_subcommand("lazy", "finite-window study of a generated graph");
    la->add_option("generator", generator, "line | lattice2d | tree | fan")->required();
    la->add_option("--param", params, "generator parameter key=value");
    la->add_option("--radii", radii, "comma-separated window radii")->required();
    la->add_option("--dump-window", dump_file, "write the largest window in graph format");

    auto* st = app.add_subcommand("selftest", "run the embedded desk-example suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 1;
    }

    ReportWriter w(out);
    w.command(echo_args(args));
    try {
        if (cn->parsed()) return check_neumann(graph_file, w);
        if (cd->parsed()) return check_dirichlet(graph_file, w);
        if (vo->parsed()) return voronoi_command(graph_file, w, out);
        if (re->parsed()) return resistance_command(graph_file, pairs, diam, w, out);
        if (om->parsed()) return optimize_command(graph_file, iters, tol, seed, w, out);
        if (la->parsed()) return lazy_command(generator, params, radii, dump_file, w, out);
        if (st->parsed()) return selftest_command(out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace gb::cli
