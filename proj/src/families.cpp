#include "gb/families.hpp"

namespace gb {

Graph make_path(int n, double b, double m) {
    if (n < 1) throw std::invalid_argument("path needs >= 1 vertex");
    Graph::Builder builder;
    for (int i = 0; i < n; ++i) builder.add_vertex("v" + std::to_string(i), m);
    for (int i = 0; i + 1 < n; ++i) builder.add_edge(i, i + 1, b);
    return builder.build();
}

Graph make_cycle(int n, double b, double m) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    Graph::Builder builder;
    for (int i = 0; i < n; ++i) builder.add_vertex("v" + std::to_string(i), m);
    for (int i = 0; i < n; ++i) builder.add_edge(i, (i + 1) % n, b);
    return builder.build();
}

Graph make_star(int k, double b, double m) {
    if (k < 1) throw std::invalid_argument("star needs >= 1 leaf");
    Graph::Builder builder;
    builder.add_vertex("c", m);
    for (int i = 1; i <= k; ++i) {
        builder.add_vertex("l" + std::to_string(i), m);
        builder.add_edge(0, i, b);
    }
    return builder.build();
}

Graph make_line_window(int n) {
    if (n < 0) throw std::invalid_argument("negative window");
    Graph::Builder builder;
    for (int i = -n; i <= n; ++i) builder.add_vertex(std::to_string(i), 1.0);
    for (int i = -n; i < n; ++i)
        builder.add_edge(std::to_string(i), std::to_string(i + 1), 1.0);
    return builder.build();
}

}  // namespace gb
