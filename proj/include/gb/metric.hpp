#pragma once

#include "gb/graph.hpp"

#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace gb {

constexpr double kInfDistance = std::numeric_limits<double>::infinity();

/// Result of a (multi-source) shortest-path sweep with edge lengths 1/b.
/// label[v] is the index into `sources` whose tree reached v first, with
/// ties broken by source order, then by predecessor canonical order.
/// Unreached vertices have dist = inf, pred = label = -1.
struct ShortestPaths {
    std::vector<double> dist;
    std::vector<int> pred;
    std::vector<int> label;
};

/// Dijkstra from one or more sources. `allowed`, when given, restricts the
/// sweep to the induced subgraph on the masked vertices (sources outside the
/// mask are ignored). Deterministic: equal-distance conflicts settle toward
/// the earlier source, then the earlier predecessor.
ShortestPaths shortest_paths(const Graph& g, std::span<const int> sources,
                             const std::vector<char>* allowed = nullptr);

enum class BallKind { open, closed };

struct Ball {
    int center;
    double radius;
    BallKind kind;
    std::vector<int> members;  // canonical order
};

/// All-pairs distances for the path pseudo-metric d (edge lengths 1/b) with
/// geodesic witnesses. Built eagerly at construction; read-only afterwards,
/// safe for concurrent queries. Requires a connected graph.
class DistanceOracle {
public:
    explicit DistanceOracle(const Graph& g);

    const Graph& graph() const { return *graph_; }

    double distance(int x, int y) const;
    /// A geodesic from x to y: path_length(geodesic) == distance(x,y).
    Path geodesic(int x, int y) const;

    double distance_to_set(int x, std::span<const int> set) const;
    double eccentricity(int x) const;

private:
    const Graph* graph_;
    std::vector<std::vector<double>> dist_;
    std::vector<std::vector<int>> pred_;  // pred_[source][v]
};

Ball ball(const DistanceOracle& oracle, int x, double r, BallKind kind);

/// diam(X) = max over pairs; 0 for a single vertex.
double diameter(const DistanceOracle& oracle);

/// Inradius of omega relative to dirichlet: max over x in omega of d(x, D).
/// Throws when omega or dirichlet is empty.
double inradius(const DistanceOracle& oracle, const SubsetSpec& subset);

/// vol#[r] = inf_{s>r} sup_x m(U_s(x)); on a finite graph this equals
/// sup_x m(B_r(x)) with the closed ball, which is what is evaluated here.
double vol_sharp(const DistanceOracle& oracle, double r);

/// diam(X) recomputed as max over x of the inradius of X minus {x};
/// agrees with diameter() on every finite graph with >= 2 vertices.
double diameter_via_inradius(const DistanceOracle& oracle);

}  // namespace gb
