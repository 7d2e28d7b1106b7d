#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gb {

/// A real-valued function on the vertices of a Graph, indexed by the
/// canonical vertex order. Its size must equal the graph's vertex count.
using VertexFunction = Eigen::VectorXd;

/// A walk (x_0, ..., x_k) of canonical vertex indices; consecutive vertices
/// must be joined by positive-weight edges.
using Path = std::vector<int>;

struct EdgeRecord {
    int u;
    int v;
    double weight;
};

/// Error raised while reading the graph file format. `line` is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

/// A weighted graph: vertex set with positive measure m, symmetric edge
/// weight b stored once per unordered pair. Vertex insertion order defines
/// the canonical total order used for all tie-breaking. Immutable after
/// construction; all operations on it are pure and safe to share across
/// threads.
class Graph {
public:
    class Builder;

    Graph() = default;  // the empty graph; validate() rejects it

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& name(int v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    /// Canonical index of a vertex id, or -1 if unknown.
    int find(const std::string& id) const;
    /// Canonical index of a vertex id; throws std::invalid_argument if unknown.
    int index(const std::string& id) const;

    double measure(int v) const { return measure_.at(v); }
    const std::vector<double>& measures() const { return measure_; }

    const std::vector<EdgeRecord>& edges() const { return edges_; }
    /// Neighbors of v as (vertex, weight) pairs, in canonical order.
    const std::vector<std::pair<int, double>>& neighbors(int v) const { return adjacency_.at(v); }
    /// b(u,v); 0 when the pair is not an edge.
    double edge_weight(int u, int v) const;

    /// Weighted degree sum_y b(v,y).
    double weighted_degree(int v) const;

    /// Vertices marked with `d` lines in the input file, canonical order.
    const std::vector<int>& dirichlet_marks() const { return dirichlet_marks_; }

    /// Copy of this graph with the measure replaced (same vertices/edges).
    Graph with_measure(std::vector<double> m) const;

private:
    friend class Builder;

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<double> measure_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::vector<std::pair<int, double>>> adjacency_;
    std::vector<int> dirichlet_marks_;
};

/// Incremental construction; enforces unique vertex ids and one record per
/// unordered vertex pair. Violations of the graph axioms (nonpositive
/// weights or measures, self-loops, disconnectedness) are representable and
/// left to validate().
class Graph::Builder {
public:
    /// Returns the canonical index of the new vertex.
    int add_vertex(std::string id, double m);
    void add_edge(int u, int v, double w);
    void add_edge(const std::string& a, const std::string& b, double w);
    void mark_dirichlet(int v);
    void mark_dirichlet(const std::string& id);

    int find(const std::string& id) const;
    int vertex_count() const { return g_.vertex_count(); }

    Graph build();

private:
    Graph g_;
    std::unordered_map<std::uint64_t, int> edge_seen_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the graph axioms: symmetric positive weights, no self-loops,
/// positive measure, connectedness. Violations are reported, not thrown.
ValidationReport validate(const Graph& g);

bool is_connected(const Graph& g);

/// Partition of the vertex set into omega (free vertices) and
/// dirichlet = complement.
class SubsetSpec {
public:
    static SubsetSpec from_dirichlet(const Graph& g, std::vector<int> dirichlet);
    static SubsetSpec from_omega(const Graph& g, std::vector<int> omega);
    /// Uses the `d` marks recorded in the graph file.
    static SubsetSpec from_file_marks(const Graph& g);

    const std::vector<int>& omega() const { return omega_; }
    const std::vector<int>& dirichlet() const { return dirichlet_; }
    bool is_dirichlet(int v) const { return mask_.at(v) != 0; }

private:
    std::vector<int> omega_;
    std::vector<int> dirichlet_;
    std::vector<char> mask_;
};

/// vol(S) = sum of m over the subset; 0 for the empty set.
double volume(const Graph& g, std::span<const int> subset);
double total_volume(const Graph& g);

/// L(path) = sum of reciprocal edge weights along the path; 0 for a
/// single-vertex path. Throws if consecutive vertices are not adjacent.
double path_length(const Graph& g, const Path& path);

/// Energy E(f) = (1/2) sum_{x,y} b(x,y)(f(x)-f(y))^2; each unordered edge
/// contributes once.
double energy(const Graph& g, const VertexFunction& f);

/// Symmetric bilinear form with energy_bilinear(f,f) = energy(f).
double energy_bilinear(const Graph& g, const VertexFunction& f, const VertexFunction& g2);

/// Support {x : f(x) != 0}.
std::vector<int> support(const VertexFunction& f);

// --- graph file format -----------------------------------------------------
//
// Line-oriented text, UTF-8, '#' starts a comment:
//   v <vertex-id> <m>        vertex with measure m
//   e <id-a> <id-b> <b>      undirected edge with weight b
//   d <vertex-id>            marks the vertex as Dirichlet
// Vertex order in the file defines the canonical order. A duplicate edge
// line for the same unordered pair is an error; vertices must be declared
// before they are referenced.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

/// Canonical serialization used for digests: deterministic for a given
/// graph value regardless of construction route.
std::string canonical_text(const Graph& g);

std::uint64_t fnv1a64(std::string_view s);

}  // namespace gb
