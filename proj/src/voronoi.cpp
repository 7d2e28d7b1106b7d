#include "gb/voronoi.hpp"

#include "gb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gb {

std::vector<int> VoronoiDecomposition::cell_members(int center) const {
    std::vector<int> cell;
    for (int v = 0; v < static_cast<int>(assignment.size()); ++v)
        if (assignment[v] == center) cell.push_back(v);
    return cell;
}

VoronoiDecomposition build_voronoi(const Graph& g, std::vector<int> centers) {
    if (centers.empty()) throw std::invalid_argument("build_voronoi: empty center set");
    if (!is_connected(g)) throw std::invalid_argument("build_voronoi: disconnected graph");
    for (int c : centers)
        if (c < 0 || c >= g.vertex_count()) throw std::invalid_argument("center out of range");

    ShortestPaths sp = shortest_paths(g, centers);

    VoronoiDecomposition dec;
    dec.centers = std::move(centers);
    int n = g.vertex_count();
    dec.assignment.resize(n);
    dec.center_distance = sp.dist;
    dec.certificates.resize(n);
    for (int v = 0; v < n; ++v) {
        dec.assignment[v] = dec.centers[sp.label[v]];
        Path rev;
        for (int x = v; x != -1; x = sp.pred[x]) rev.push_back(x);
        std::reverse(rev.begin(), rev.end());
        dec.certificates[v] = std::move(rev);
    }
    return dec;
}

namespace {

std::string vname(const Graph& g, int v) { return "'" + g.name(v) + "'"; }

}  // namespace

VoronoiVerdict verify_voronoi(const Graph& g, const VoronoiDecomposition& dec,
                              std::span<const int> centers) {
    VoronoiVerdict verdict;
    int n = g.vertex_count();
    if (static_cast<int>(dec.assignment.size()) != n) {
        verdict.v3 = {false, "assignment does not cover the vertex set"};
        return verdict;
    }

    // (V3) partition: every vertex assigned to exactly one declared center.
    std::vector<char> is_center(n, 0);
    for (int c : centers) is_center[c] = 1;
    for (int v = 0; v < n && verdict.v3.ok; ++v) {
        int p = dec.assignment[v];
        if (p < 0 || p >= n || !is_center[p])
            verdict.v3 = {false, "vertex " + vname(g, v) + " assigned to a non-center"};
    }

    // (V2) against a fresh distance table from all centers.
    std::vector<std::vector<double>> dist;
    dist.reserve(centers.size());
    for (int c : centers) {
        int src[1] = {c};
        dist.push_back(shortest_paths(g, src).dist);
    }
    for (int v = 0; v < n && verdict.v2.ok && verdict.v3.ok; ++v) {
        int p = dec.assignment[v];
        double dp = kInfDistance;
        double best = kInfDistance;
        for (std::size_t i = 0; i < centers.size(); ++i) {
            best = std::min(best, dist[i][v]);
            if (centers[i] == p) dp = dist[i][v];
        }
        if (!(dp <= best + 1e-12)) {
            std::ostringstream ss;
            ss << "vertex " << vname(g, v) << " assigned to " << vname(g, p) << " at distance " << dp
               << " but a center at distance " << best << " exists";
            verdict.v2 = {false, ss.str()};
        }
    }

    // (V1) restricted shortest paths, certificates not trusted: within the
    // induced subgraph on each cell, the center must reach every member at
    // the unrestricted distance.
    if (verdict.v3.ok) {
        for (std::size_t i = 0; i < centers.size() && verdict.v1.ok; ++i) {
            int p = centers[i];
            if (dec.assignment[p] != p) {
                verdict.v1 = {false, "center " + vname(g, p) + " is not in its own cell"};
                break;
            }
            std::vector<char> in_cell(n, 0);
            for (int v = 0; v < n; ++v) in_cell[v] = dec.assignment[v] == p;
            int src[1] = {p};
            ShortestPaths restricted = shortest_paths(g, src, &in_cell);
            for (int v = 0; v < n && verdict.v1.ok; ++v) {
                if (!in_cell[v]) continue;
                if (!(std::abs(restricted.dist[v] - dist[i][v]) <= 1e-12 * std::max(1.0, dist[i][v]))) {
                    std::ostringstream ss;
                    ss << "cell of " << vname(g, p) << ": no in-cell geodesic to " << vname(g, v)
                       << " (restricted " << restricted.dist[v] << " vs ambient " << dist[i][v] << ")";
                    verdict.v1 = {false, ss.str()};
                }
            }
        }
    }
    return verdict;
}

CellRadiusReport cell_radius_bound(const Graph& g, const VoronoiDecomposition& dec,
                                   const SubsetSpec& subset) {
    DistanceOracle oracle(g);
    CellRadiusReport report;
    report.inradius = inradius(oracle, subset);
    report.within_bound = true;
    for (int p : dec.centers) {
        double radius = 0.0;
        for (int v : dec.cell_members(p)) radius = std::max(radius, oracle.distance(p, v));
        report.cell_radius.push_back(radius);
        if (radius > report.inradius + 1e-12) report.within_bound = false;
    }
    return report;
}

CellConstant cellwise_dirichlet_constant(const Graph& g, std::span<const int> cell, int center) {
    if (std::find(cell.begin(), cell.end(), center) == cell.end())
        throw std::invalid_argument("center not contained in cell");

    CellConstant out;
    if (cell.size() == 1) {
        out.unbounded = true;
        return out;
    }

    // Induced subgraph on the cell, center first-class.
    Graph::Builder builder;
    std::vector<int> sorted(cell.begin(), cell.end());
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) builder.add_vertex(g.name(v), g.measure(v));
    for (const auto& e : g.edges()) {
        int u = builder.find(g.name(e.u));
        int v = builder.find(g.name(e.v));
        if (u >= 0 && v >= 0) builder.add_edge(u, v, e.weight);
    }
    Graph cell_graph = builder.build();
    int local_center = cell_graph.index(g.name(center));

    DistanceOracle oracle(cell_graph);  // throws if the cell is not connected
    out.cell_radius = oracle.eccentricity(local_center);

    std::vector<int> omega;
    for (int v = 0; v < cell_graph.vertex_count(); ++v)
        if (v != local_center) omega.push_back(v);
    out.cell_volume = volume(cell_graph, omega);
    out.value = 1.0 / (out.cell_radius * out.cell_volume);

    SubsetSpec spec = SubsetSpec::from_dirichlet(cell_graph, {local_center});
    out.exact_eigenvalue = lambda_dirichlet(cell_graph, spec).eigenvalue;
    return out;
}

}  // namespace gb
