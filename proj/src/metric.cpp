#include "gb/metric.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

namespace gb {

namespace {

struct HeapEntry {
    double dist;
    int label;       // source rank
    int pred_order;  // canonical order of predecessor, -1 for sources
    int vertex;
    int pred;
};

struct HeapAfter {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        return std::tie(a.dist, a.label, a.pred_order, a.vertex) >
               std::tie(b.dist, b.label, b.pred_order, b.vertex);
    }
};

}  // namespace

ShortestPaths shortest_paths(const Graph& g, std::span<const int> sources,
                             const std::vector<char>* allowed) {
    int n = g.vertex_count();
    ShortestPaths out;
    out.dist.assign(n, kInfDistance);
    out.pred.assign(n, -1);
    out.label.assign(n, -1);

    std::vector<char> done(n, 0);
    std::vector<double> best(n, kInfDistance);  // prunes strictly worse pushes
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapAfter> heap;

    for (std::size_t i = 0; i < sources.size(); ++i) {
        int s = sources[i];
        if (s < 0 || s >= n) throw std::invalid_argument("source vertex out of range");
        if (allowed && !(*allowed)[s]) continue;
        best[s] = 0.0;
        heap.push({0.0, static_cast<int>(i), -1, s, -1});
    }

    while (!heap.empty()) {
        HeapEntry top = heap.top();
        heap.pop();
        int v = top.vertex;
        if (done[v]) continue;
        done[v] = 1;
        out.dist[v] = top.dist;
        out.label[v] = top.label;
        out.pred[v] = top.pred;
        for (const auto& [u, w] : g.neighbors(v)) {
            if (u == v || !(w > 0.0)) continue;
            if (allowed && !(*allowed)[u]) continue;
            if (done[u]) continue;
            double nd = top.dist + 1.0 / w;
            // Equal-distance candidates must all reach the heap so the
            // comparator can settle the (source, predecessor) tie.
            if (nd <= best[u]) {
                best[u] = nd;
                heap.push({nd, top.label, v, u, v});
            }
        }
    }
    return out;
}

DistanceOracle::DistanceOracle(const Graph& g) : graph_(&g) {
    int n = g.vertex_count();
    dist_.resize(n);
    pred_.resize(n);
    for (int s = 0; s < n; ++s) {
        int src[1] = {s};
        ShortestPaths sp = shortest_paths(g, src);
        for (double d : sp.dist)
            if (!std::isfinite(d)) throw std::invalid_argument("distance oracle requires a connected graph");
        dist_[s] = std::move(sp.dist);
        pred_[s] = std::move(sp.pred);
    }
}

double DistanceOracle::distance(int x, int y) const {
    if (x < 0 || y < 0 || x >= graph_->vertex_count() || y >= graph_->vertex_count())
        throw std::invalid_argument("distance: vertex out of range");
    return dist_[x][y];
}

Path DistanceOracle::geodesic(int x, int y) const {
    distance(x, y);  // range check
    Path rev;
    for (int v = y; v != -1; v = pred_[x][v]) rev.push_back(v);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

double DistanceOracle::distance_to_set(int x, std::span<const int> set) const {
    if (set.empty()) throw std::invalid_argument("distance to empty set");
    double d = kInfDistance;
    for (int p : set) d = std::min(d, distance(x, p));
    return d;
}

double DistanceOracle::eccentricity(int x) const {
    double d = 0.0;
    for (double v : dist_[x]) d = std::max(d, v);
    return d;
}

Ball ball(const DistanceOracle& oracle, int x, double r, BallKind kind) {
    if (r < 0.0) throw std::invalid_argument("negative ball radius");
    Ball b{x, r, kind, {}};
    int n = oracle.graph().vertex_count();
    for (int y = 0; y < n; ++y) {
        double d = oracle.distance(x, y);
        if (kind == BallKind::open ? d < r : d <= r) b.members.push_back(y);
    }
    return b;
}

double diameter(const DistanceOracle& oracle) {
    double d = 0.0;
    for (int x = 0; x < oracle.graph().vertex_count(); ++x)
        d = std::max(d, oracle.eccentricity(x));
    return d;
}

double inradius(const DistanceOracle& oracle, const SubsetSpec& subset) {
    if (subset.omega().empty()) throw std::invalid_argument("inradius: empty omega");
    if (subset.dirichlet().empty()) throw std::invalid_argument("inradius: empty dirichlet set");
    double r = 0.0;
    for (int x : subset.omega())
        r = std::max(r, oracle.distance_to_set(x, subset.dirichlet()));
    return r;
}

double vol_sharp(const DistanceOracle& oracle, double r) {
    if (r < 0.0) throw std::invalid_argument("vol_sharp: negative radius");
    const Graph& g = oracle.graph();
    double sup = 0.0;
    for (int x = 0; x < g.vertex_count(); ++x) {
        double mass = 0.0;
        for (int y = 0; y < g.vertex_count(); ++y)
            if (oracle.distance(x, y) <= r) mass += g.measure(y);
        sup = std::max(sup, mass);
    }
    return sup;
}

double diameter_via_inradius(const DistanceOracle& oracle) {
    const Graph& g = oracle.graph();
    if (g.vertex_count() < 2)
        throw std::invalid_argument("diameter_via_inradius requires >= 2 vertices");
    double best = 0.0;
    for (int x = 0; x < g.vertex_count(); ++x) {
        SubsetSpec spec = SubsetSpec::from_dirichlet(g, {x});
        best = std::max(best, inradius(oracle, spec));
    }
    return best;
}

}  // namespace gb
