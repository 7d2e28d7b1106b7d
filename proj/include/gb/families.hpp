#pragma once

#include "gb/graph.hpp"

namespace gb {

/// Path on n vertices v0..v{n-1}, unit weights and measure.
Graph make_path(int n, double b = 1.0, double m = 1.0);

/// Cycle on n >= 3 vertices, unit weights and measure.
Graph make_cycle(int n, double b = 1.0, double m = 1.0);

/// Star with one center c and k leaves l1..lk.
Graph make_star(int k, double b = 1.0, double m = 1.0);

/// Integer-line window on {-n, ..., n}, unit data; vertices named by value.
Graph make_line_window(int n);

}  // namespace gb
