#include "gb/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace gb {

int Graph::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

int Graph::index(const std::string& id) const {
    int v = find(id);
    if (v < 0) throw std::invalid_argument("unknown vertex '" + id + "'");
    return v;
}

double Graph::edge_weight(int u, int v) const {
    for (const auto& [w, weight] : adjacency_.at(u))
        if (w == v) return weight;
    return 0.0;
}

double Graph::weighted_degree(int v) const {
    double s = 0.0;
    for (const auto& [w, weight] : adjacency_.at(v)) {
        (void)w;
        s += weight;
    }
    return s;
}

Graph Graph::with_measure(std::vector<double> m) const {
    if (static_cast<int>(m.size()) != vertex_count())
        throw std::invalid_argument("measure size does not match vertex count");
    Graph g = *this;
    g.measure_ = std::move(m);
    return g;
}

namespace {
std::uint64_t pair_key(int u, int v) {
    auto a = static_cast<std::uint64_t>(std::min(u, v));
    auto b = static_cast<std::uint64_t>(std::max(u, v));
    return (a << 32) | b;
}
}  // namespace

int Graph::Builder::add_vertex(std::string id, double m) {
    if (g_.index_.count(id)) throw std::invalid_argument("duplicate vertex '" + id + "'");
    int v = g_.vertex_count();
    g_.index_.emplace(id, v);
    g_.names_.push_back(std::move(id));
    g_.measure_.push_back(m);
    g_.adjacency_.emplace_back();
    return v;
}

void Graph::Builder::add_edge(int u, int v, double w) {
    if (u < 0 || v < 0 || u >= g_.vertex_count() || v >= g_.vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    auto [it, inserted] = edge_seen_.emplace(pair_key(u, v), static_cast<int>(g_.edges_.size()));
    if (!inserted)
        throw std::invalid_argument("duplicate edge {" + g_.names_[u] + "," + g_.names_[v] + "}");
    g_.edges_.push_back({std::min(u, v), std::max(u, v), w});
}

void Graph::Builder::add_edge(const std::string& a, const std::string& b, double w) {
    int u = find(a);
    if (u < 0) throw std::invalid_argument("unknown vertex '" + a + "'");
    int v = find(b);
    if (v < 0) throw std::invalid_argument("unknown vertex '" + b + "'");
    add_edge(u, v, w);
}

void Graph::Builder::mark_dirichlet(int v) {
    if (v < 0 || v >= g_.vertex_count()) throw std::invalid_argument("dirichlet vertex out of range");
    if (std::find(g_.dirichlet_marks_.begin(), g_.dirichlet_marks_.end(), v) == g_.dirichlet_marks_.end())
        g_.dirichlet_marks_.push_back(v);
}

void Graph::Builder::mark_dirichlet(const std::string& id) {
    int v = find(id);
    if (v < 0) throw std::invalid_argument("unknown vertex '" + id + "'");
    mark_dirichlet(v);
}

int Graph::Builder::find(const std::string& id) const { return g_.find(id); }

Graph Graph::Builder::build() {
    for (const auto& e : g_.edges_) {
        g_.adjacency_[e.u].emplace_back(e.v, e.weight);
        if (e.v != e.u) g_.adjacency_[e.v].emplace_back(e.u, e.weight);
    }
    for (auto& nbrs : g_.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    std::sort(g_.dirichlet_marks_.begin(), g_.dirichlet_marks_.end());
    return std::move(g_);
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& [u, w] : g.neighbors(v)) {
            if (w > 0 && !seen[u]) {
                seen[u] = 1;
                ++count;
                queue.push_back(u);
            }
        }
    }
    return count == n;
}

ValidationReport validate(const Graph& g) {
    ValidationReport report;
    if (g.vertex_count() == 0) {
        report.violations.push_back("empty vertex set");
        return report;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!(g.measure(v) > 0.0) || !std::isfinite(g.measure(v)))
            report.violations.push_back("nonpositive measure at '" + g.name(v) + "'");
    }
    for (const auto& e : g.edges()) {
        if (e.u == e.v)
            report.violations.push_back("self-loop at '" + g.name(e.u) + "'");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            report.violations.push_back("nonpositive weight on {" + g.name(e.u) + "," + g.name(e.v) + "}");
    }
    if (!is_connected(g)) report.violations.push_back("disconnected");
    return report;
}

SubsetSpec SubsetSpec::from_dirichlet(const Graph& g, std::vector<int> dirichlet) {
    int n = g.vertex_count();
    SubsetSpec s;
    s.mask_.assign(n, 0);
    for (int v : dirichlet) {
        if (v < 0 || v >= n) throw std::invalid_argument("dirichlet vertex out of range");
        if (s.mask_[v]) throw std::invalid_argument("duplicate dirichlet vertex");
        s.mask_[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        (s.mask_[v] ? s.dirichlet_ : s.omega_).push_back(v);
    return s;
}

SubsetSpec SubsetSpec::from_omega(const Graph& g, std::vector<int> omega) {
    int n = g.vertex_count();
    std::vector<char> in_omega(n, 0);
    for (int v : omega) {
        if (v < 0 || v >= n) throw std::invalid_argument("omega vertex out of range");
        in_omega[v] = 1;
    }
    std::vector<int> dirichlet;
    for (int v = 0; v < n; ++v)
        if (!in_omega[v]) dirichlet.push_back(v);
    return from_dirichlet(g, std::move(dirichlet));
}

SubsetSpec SubsetSpec::from_file_marks(const Graph& g) {
    return from_dirichlet(g, g.dirichlet_marks());
}

double volume(const Graph& g, std::span<const int> subset) {
    double s = 0.0;
    for (int v : subset) {
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("volume: vertex out of range");
        s += g.measure(v);
    }
    return s;
}

double total_volume(const Graph& g) {
    double s = 0.0;
    for (double m : g.measures()) s += m;
    return s;
}

double path_length(const Graph& g, const Path& path) {
    if (path.empty()) throw std::invalid_argument("empty path");
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        double w = g.edge_weight(path[i], path[i + 1]);
        if (!(w > 0.0))
            throw std::invalid_argument("path step {" + g.name(path[i]) + "," + g.name(path[i + 1]) +
                                        "} is not an edge");
        len += 1.0 / w;
    }
    return len;
}

double energy(const Graph& g, const VertexFunction& f) {
    if (f.size() != g.vertex_count()) throw std::invalid_argument("function domain mismatch");
    double e = 0.0;
    for (const auto& edge : g.edges()) {
        double diff = f[edge.u] - f[edge.v];
        e += edge.weight * diff * diff;
    }
    return e;
}

double energy_bilinear(const Graph& g, const VertexFunction& f, const VertexFunction& h) {
    if (f.size() != g.vertex_count() || h.size() != g.vertex_count())
        throw std::invalid_argument("function domain mismatch");
    double e = 0.0;
    for (const auto& edge : g.edges())
        e += edge.weight * (f[edge.u] - f[edge.v]) * (h[edge.u] - h[edge.v]);
    return e;
}

std::vector<int> support(const VertexFunction& f) {
    std::vector<int> s;
    for (int i = 0; i < f.size(); ++i)
        if (f[i] != 0.0) s.push_back(i);
    return s;
}

namespace {

double parse_real(const std::string& tok, int line, const char* what) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
    return x;
}

}  // namespace

Graph read_graph(std::istream& in) {
    Graph::Builder builder;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        try {
            if (tok[0] == "v") {
                if (tok.size() != 3) throw ParseError(line, "expected: v <id> <m>");
                builder.add_vertex(tok[1], parse_real(tok[2], line, "measure"));
            } else if (tok[0] == "e") {
                if (tok.size() != 4) throw ParseError(line, "expected: e <id> <id> <b>");
                builder.add_edge(tok[1], tok[2], parse_real(tok[3], line, "weight"));
            } else if (tok[0] == "d") {
                if (tok.size() != 2) throw ParseError(line, "expected: d <id>");
                builder.mark_dirichlet(tok[1]);
            } else {
                throw ParseError(line, "unknown directive '" + tok[0] + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ParseError(line, e.what());
        }
    }
    return builder.build();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_graph(in);
}

namespace {
std::string real_token(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}
}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "v " << g.name(v) << ' ' << real_token(g.measure(v)) << '\n';
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end(),
              [](const EdgeRecord& a, const EdgeRecord& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (const auto& e : edges)
        out << "e " << g.name(e.u) << ' ' << g.name(e.v) << ' ' << real_token(e.weight) << '\n';
    for (int v : g.dirichlet_marks()) out << "d " << g.name(v) << '\n';
}

std::string canonical_text(const Graph& g) {
    std::ostringstream ss;
    write_graph(ss, g);
    return ss.str();
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace gb
