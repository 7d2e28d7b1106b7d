#pragma once

#include "gb/bounds.hpp"
#include "gb/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gb {

/// Raised when a requested metric ball of an implicit graph is not finite
/// (a vertex with infinitely many short enough edges, or more vertices than
/// the cap allows).
struct WindowCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One vertex's neighbor list as served by a generator. `truncated` means
/// infinitely many neighbors, all with edge length 1/b > the requested
/// max_len, were omitted; a finite-degree vertex must return its complete
/// list with truncated = false regardless of max_len.
struct NeighborSlice {
    std::vector<std::pair<std::string, double>> edges;  // (neighbor id, weight b)
    bool truncated = false;
};

/// Neighborhood oracle for an implicitly defined (possibly infinite) graph.
/// Oracles must be pure (same vertex, same list) and symmetric: y lists x
/// back with the same weight. Symmetry and positivity of the measure are
/// hard-checked on every extracted window. `neighbors` must throw
/// WindowCapExceeded when even the within-max_len slice is infinite.
struct GraphGenerator {
    std::string name;
    std::function<NeighborSlice(const std::string&, double max_len)> neighbors;
    std::function<double(const std::string&)> measure;
    std::string root;
    std::function<bool(const std::string&)> dirichlet;  // may be null
};

/// Integer line, b = m = 1. dirichlet_mod > 0 marks multiples of that modulus.
GraphGenerator integer_line_generator(int dirichlet_mod = 0);

/// 2D square lattice, b = m = 1, vertex ids "i,j". dirichlet_mod > 0 marks
/// vertices with both coordinates divisible by it.
GraphGenerator square_lattice_generator(int dirichlet_mod = 0);

/// Rooted tree in which every vertex has degree k (the root has k children,
/// every other vertex k-1), b = m = 1. dirichlet_depth_mod > 0 marks depths
/// divisible by it.
GraphGenerator regular_tree_generator(int k, int dirichlet_depth_mod = 0);

enum class EdgeLengthConvention {
    reciprocal_weight,  // edge length 1/b (the convention used everywhere else)
    direct_weight,      // documented variant: the stated weights read as lengths
};

/// Half-line 1,2,3,... with consecutive weights 2, plus a hub adjacent to
/// every line vertex n with weight 1 + 1/n; the line is the Dirichlet set.
/// Under the default convention the hub-to-line lengths n/(n+1) accumulate
/// at 1 from below and the nearest line vertex to the hub is attained at
/// n = 1; under `direct_weight` the stated weights are read as lengths
/// (realized by serving inverted weights), they accumulate at 1 from above,
/// and no nearest line vertex exists. Windows report whichever convention
/// was selected; the two give genuinely different geometries.
GraphGenerator fan_line_generator(EdgeLengthConvention convention = EdgeLengthConvention::reciprocal_weight);

struct WindowExtract {
    Graph graph;                   // induced graph on the closed metric ball
    double radius = 0.0;
    std::vector<int> dirichlet;    // predicate restricted to the window
    std::vector<double> root_distance;
    std::vector<int> boundary;            // vertices with a neighbor outside the window
    std::vector<int> boundary_affected;   // omega vertices within the window inradius of the boundary
};

/// Induced finite graph on B_radius(root). Aborts with WindowCapExceeded
/// past `vertex_cap`; throws std::runtime_error on oracle asymmetry or a
/// nonpositive measure.
WindowExtract extract_window(const GraphGenerator& gen, double radius, int vertex_cap = 1000000);

struct TruncationRow {
    double radius = 0.0;
    int vertices = 0;
    int edges = 0;
    bool error = false;
    std::string error_message;
    BoundReport report;            // inequality "dirichlet-relative", window values
    int boundary_affected = 0;
};

struct TruncationStudy {
    std::vector<TruncationRow> rows;
};

/// Evaluates the relative Dirichlet bound on a sequence of finite windows.
/// Every quantity is a window value; nothing is claimed about the ambient
/// graph. Rows with empty D or empty omega are reported as errors.
TruncationStudy truncation_study(const GraphGenerator& gen, const std::vector<double>& radii,
                                 int vertex_cap = 1000000);

}  // namespace gb
