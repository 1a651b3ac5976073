#pragma once

#include <random>
#include <vector>

#include "vpht/graph.hpp"
#include "vpht/persistence.hpp"

namespace vpht::fixtures {

// Simple colliding pair whose union is the single 6-cycle 1>4>3>6>2>5>1.
inline VerticalGraph fig2_red() { return make_vertical_graph(6, {{1, 4}, {2, 5}, {3, 6}}); }
inline VerticalGraph fig2_blue() { return make_vertical_graph(6, {{4, 3}, {6, 2}, {5, 1}}); }

// Colliding pair with distinct up diagrams; the union is a 6-cycle plus the
// doubled edge (1,6).
inline VerticalGraph fig4_g1() { return make_vertical_graph(6, {{1, 3}, {2, 6}, {4, 5}, {1, 6}}); }
inline VerticalGraph fig4_g2() { return make_vertical_graph(6, {{3, 2}, {6, 4}, {5, 1}, {6, 1}}); }

inline VerticalGraph fig4_union() { return edge_union(fig4_g1(), fig4_g2()); }
inline VerticalGraph fig2_union() { return edge_union(fig2_red(), fig2_blue()); }

inline PersistencePoint pt(Height b, Height d) { return {b, d}; }
inline PersistencePoint inf(Height b) { return {b, kInfinity}; }

inline VerticalGraph random_graph(std::mt19937_64& rng, std::uint32_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return make_vertical_graph(n, edges);
}

}  // namespace vpht::fixtures
