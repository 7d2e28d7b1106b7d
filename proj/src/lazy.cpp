#include "gb/lazy.hpp"

#include "gb/metric.hpp"
#include "gb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <tuple>

namespace gb {

namespace {

long long to_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer vertex id '" + s + "'");
    return v;
}

bool divides(int mod, long long v) {
    return ((v % mod) + mod) % mod == 0;
}

}  // namespace

GraphGenerator integer_line_generator(int dirichlet_mod) {
    GraphGenerator gen;
    gen.name = "line";
    gen.root = "0";
    gen.neighbors = [](const std::string& id, double) {
        long long n = to_int(id);
        return NeighborSlice{{{std::to_string(n - 1), 1.0}, {std::to_string(n + 1), 1.0}}, false};
    };
    gen.measure = [](const std::string&) { return 1.0; };
    if (dirichlet_mod > 0)
        gen.dirichlet = [dirichlet_mod](const std::string& id) { return divides(dirichlet_mod, to_int(id)); };
    return gen;
}

GraphGenerator square_lattice_generator(int dirichlet_mod) {
    GraphGenerator gen;
    gen.name = "lattice2d";
    gen.root = "0,0";
    auto parse = [](const std::string& id) {
        auto comma = id.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad lattice vertex id '" + id + "'");
        return std::pair<long long, long long>{to_int(id.substr(0, comma)), to_int(id.substr(comma + 1))};
    };
    gen.neighbors = [parse](const std::string& id, double) {
        auto [i, j] = parse(id);
        auto key = [](long long a, long long b) { return std::to_string(a) + "," + std::to_string(b); };
        return NeighborSlice{{{key(i - 1, j), 1.0}, {key(i + 1, j), 1.0}, {key(i, j - 1), 1.0},
                              {key(i, j + 1), 1.0}},
                             false};
    };
    gen.measure = [](const std::string&) { return 1.0; };
    if (dirichlet_mod > 0)
        gen.dirichlet = [dirichlet_mod, parse](const std::string& id) {
            auto [i, j] = parse(id);
            return divides(dirichlet_mod, i) && divides(dirichlet_mod, j);
        };
    return gen;
}

GraphGenerator regular_tree_generator(int k, int dirichlet_depth_mod) {
    if (k < 2) throw std::invalid_argument("regular tree needs k >= 2");
    GraphGenerator gen;
    gen.name = "tree";
    gen.root = "r";
    // ids are dot-separated child paths from the root: "r", "r.0", "r.0.2", ...
    auto depth = [](const std::string& id) {
        return static_cast<int>(std::count(id.begin(), id.end(), '.'));
    };
    gen.neighbors = [k](const std::string& id, double) {
        NeighborSlice slice;
        if (id != "r") slice.edges.emplace_back(id.substr(0, id.rfind('.')), 1.0);
        int children = id == "r" ? k : k - 1;
        for (int c = 0; c < children; ++c) slice.edges.emplace_back(id + "." + std::to_string(c), 1.0);
        return slice;
    };
    gen.measure = [](const std::string&) { return 1.0; };
    if (dirichlet_depth_mod > 0)
        gen.dirichlet = [dirichlet_depth_mod, depth](const std::string& id) {
            return depth(id) % dirichlet_depth_mod == 0;
        };
    return gen;
}

GraphGenerator fan_line_generator(EdgeLengthConvention convention) {
    GraphGenerator gen;
    const bool reciprocal = convention == EdgeLengthConvention::reciprocal_weight;
    gen.name = reciprocal ? "fan" : "fan-direct";
    gen.root = "h";
    // stated weights; under direct_weight the oracle serves 1/stated so the
    // stated numbers become the edge lengths
    const double line_weight = reciprocal ? 2.0 : 0.5;
    auto spoke_weight = [reciprocal](long long n) {
        double stated = 1.0 + 1.0 / static_cast<double>(n);
        return reciprocal ? stated : 1.0 / stated;
    };
    gen.neighbors = [line_weight, spoke_weight, reciprocal](const std::string& id,
                                                            double max_len) -> NeighborSlice {
        if (id == "h") {
            NeighborSlice slice;
            slice.truncated = true;  // the omitted spoke tail is always infinite
            if (reciprocal) {
                // spoke to n has length n/(n+1) < 1
                if (max_len >= 1.0)
                    throw WindowCapExceeded("hub has infinitely many edges of length < 1");
                if (max_len > 0.0) {
                    long long n_max = static_cast<long long>(std::floor(max_len / (1.0 - max_len) + 1e-12));
                    for (long long n = 1; n <= n_max; ++n)
                        slice.edges.emplace_back(std::to_string(n), spoke_weight(n));
                }
            } else {
                // spoke to n has length 1 + 1/n > 1
                if (max_len > 1.0)
                    throw WindowCapExceeded("hub has infinitely many edges of length <= max_len");
            }
            return slice;
        }
        long long n = to_int(id);
        if (n < 1) throw std::invalid_argument("fan line vertices start at 1");
        NeighborSlice slice;
        if (n > 1) slice.edges.emplace_back(std::to_string(n - 1), line_weight);
        slice.edges.emplace_back(std::to_string(n + 1), line_weight);
        slice.edges.emplace_back("h", spoke_weight(n));
        return slice;
    };
    gen.measure = [](const std::string&) { return 1.0; };
    gen.dirichlet = [](const std::string& id) { return id != "h"; };
    return gen;
}

namespace {

struct Frontier {
    double dist;
    std::string id;
    bool operator>(const Frontier& o) const { return std::tie(dist, id) > std::tie(o.dist, o.id); }
};

}  // namespace

WindowExtract extract_window(const GraphGenerator& gen, double radius, int vertex_cap) {
    if (radius < 0.0) throw std::invalid_argument("negative window radius");

    std::map<std::string, double> dist;  // finalized distances
    std::priority_queue<Frontier, std::vector<Frontier>, std::greater<>> heap;
    std::map<std::string, double> best;
    best[gen.root] = 0.0;
    heap.push({0.0, gen.root});

    // Edge lengths along a geodesic never exceed the remaining budget, so
    // serving only edges of length <= radius - d keeps distances exact.
    while (!heap.empty()) {
        auto [d, id] = heap.top();
        heap.pop();
        if (dist.count(id)) continue;
        dist.emplace(id, d);
        if (static_cast<int>(dist.size()) > vertex_cap)
            throw WindowCapExceeded("window around '" + gen.root + "' exceeds " +
                                    std::to_string(vertex_cap) + " vertices");
        for (const auto& [nbr, w] : gen.neighbors(id, radius - d).edges) {
            if (!(w > 0.0))
                throw std::runtime_error("generator produced nonpositive weight at '" + id + "'");
            double nd = d + 1.0 / w;
            if (nd > radius) continue;
            auto it = best.find(nbr);
            if (it == best.end() || nd < it->second) {
                best[nbr] = nd;
                heap.push({nd, nbr});
            }
        }
    }

    // symmetry spot-check: every served neighbor must list the vertex back
    // with the same weight when probed just past the edge length; a probe
    // landing on an infinite slice cannot be enumerated and is skipped
    for (const auto& [id, d] : dist) {
        for (const auto& [nbr, w] : gen.neighbors(id, radius - d).edges) {
            NeighborSlice back_slice;
            try {
                back_slice = gen.neighbors(nbr, (1.0 / w) * (1.0 + 1e-9));
            } catch (const WindowCapExceeded&) {
                continue;
            }
            bool found = false;
            for (const auto& [back, bw] : back_slice.edges) {
                if (back == id) {
                    if (bw != w)
                        throw std::runtime_error("asymmetric oracle between '" + id + "' and '" + nbr + "'");
                    found = true;
                }
            }
            if (!found)
                throw std::runtime_error("asymmetric oracle: '" + nbr + "' does not list '" + id + "' back");
        }
    }

    // canonical order: by (distance from root, id)
    std::vector<std::pair<double, std::string>> order;
    order.reserve(dist.size());
    for (const auto& [id, d] : dist) order.emplace_back(d, id);
    std::sort(order.begin(), order.end());

    WindowExtract out;
    out.radius = radius;
    Graph::Builder builder;
    for (const auto& [d, id] : order) {
        double m = gen.measure(id);
        if (!(m > 0.0)) throw std::runtime_error("generator produced nonpositive measure at '" + id + "'");
        builder.add_vertex(id, m);
        out.root_distance.push_back(d);
    }
    std::set<std::pair<int, int>> seen;
    std::set<int> boundary;
    for (const auto& [d, id] : order) {
        int u = builder.find(id);
        NeighborSlice slice = gen.neighbors(id, radius - d);
        if (slice.truncated) boundary.insert(u);  // infinite omitted tail, finite window
        for (const auto& [nbr, w] : slice.edges) {
            int v = builder.find(nbr);
            if (v < 0) {
                boundary.insert(u);
                continue;
            }
            if (seen.emplace(std::min(u, v), std::max(u, v)).second) builder.add_edge(u, v, w);
        }
    }
    out.boundary.assign(boundary.begin(), boundary.end());
    if (gen.dirichlet) {
        for (const auto& [d, id] : order)
            if (gen.dirichlet(id)) builder.mark_dirichlet(id);
    }
    out.graph = builder.build();
    out.dirichlet = out.graph.dirichlet_marks();

    // omega vertices whose bound data could differ in a larger window
    if (!out.dirichlet.empty() && !out.boundary.empty() &&
        static_cast<int>(out.dirichlet.size()) < out.graph.vertex_count()) {
        SubsetSpec spec = SubsetSpec::from_dirichlet(out.graph, out.dirichlet);
        DistanceOracle oracle(out.graph);
        double r = inradius(oracle, spec);
        for (int v : spec.omega())
            if (oracle.distance_to_set(v, out.boundary) <= r) out.boundary_affected.push_back(v);
    }
    return out;
}

TruncationStudy truncation_study(const GraphGenerator& gen, const std::vector<double>& radii,
                                 int vertex_cap) {
    if (!gen.dirichlet) throw std::invalid_argument("truncation study needs a dirichlet predicate");
    TruncationStudy study;
    for (double radius : radii) {
        TruncationRow row;
        row.radius = radius;
        try {
            WindowExtract window = extract_window(gen, radius, vertex_cap);
            row.vertices = window.graph.vertex_count();
            row.edges = window.graph.edge_count();
            row.boundary_affected = static_cast<int>(window.boundary_affected.size());
            if (window.dirichlet.empty()) throw std::invalid_argument("window has empty Dirichlet set");
            if (static_cast<int>(window.dirichlet.size()) == window.graph.vertex_count())
                throw std::invalid_argument("window has empty omega");
            SubsetSpec spec = SubsetSpec::from_dirichlet(window.graph, window.dirichlet);
            row.report = dirichlet_bound_relative(window.graph, spec, /*window_values=*/true);
        } catch (const std::exception& e) {
            row.error = true;
            row.error_message = e.what();
        }
        study.rows.push_back(std::move(row));
    }
    return study;
}

}  // namespace gb
