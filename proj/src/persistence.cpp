#include "vpht/persistence.hpp"

#include <algorithm>

namespace vpht {

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) noexcept {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t value) {
  out.push_back(static_cast<std::uint8_t>(value));
  out.push_back(static_cast<std::uint8_t>(value >> 8));
  out.push_back(static_cast<std::uint8_t>(value >> 16));
  out.push_back(static_cast<std::uint8_t>(value >> 24));
}

void append_points(std::vector<std::uint8_t>& out, const std::vector<PersistencePoint>& points) {
  for (const auto& p : points) {
    append_u32(out, p.birth);
    append_u32(out, p.death);
  }
}

}  // namespace

const char* to_string(Direction d) noexcept { return d == Direction::Up ? "up" : "down"; }

Height height_of(Vertex v, std::uint32_t n, Direction d) noexcept {
  return d == Direction::Up ? v : n + 1 - v;
}

Filtration build_filtration(const VerticalGraph& g, Direction d) {
  const std::uint32_t n = g.vertex_count();
  Filtration f;
  f.direction = d;
  f.vertex_order.reserve(n);
  for (Vertex v = 1; v <= n; ++v) f.vertex_order.push_back({v, height_of(v, n, d)});
  std::sort(f.vertex_order.begin(), f.vertex_order.end(),
            [](const FiltrationVertex& a, const FiltrationVertex& b) { return a.height < b.height; });

  // Edge multiplicities between vertices, indexed by (vertex - 1).
  std::vector<std::uint32_t> count(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    ++count[(e.lo - 1) * n + (e.hi - 1)];
    ++count[(e.hi - 1) * n + (e.lo - 1)];
  }

  f.edge_order.reserve(g.edge_count());
  for (std::uint32_t i = n; i-- > 1;) {
    const auto [u, h_u] = f.vertex_order[i];
    for (std::uint32_t j = 0; j < i; ++j) {
      const Vertex v = f.vertex_order[j].vertex;
      for (auto c = count[(u - 1) * n + (v - 1)]; c > 0; --c) {
        f.edge_order.push_back({i, j, h_u});
      }
    }
  }
  std::reverse(f.edge_order.begin(), f.edge_order.end());
  return f;
}

VerboseDiagram compute_verbose_diagram(const Filtration& f) {
  const auto n = static_cast<std::uint32_t>(f.vertex_order.size());
  VerboseDiagram diagram;
  diagram.direction = f.direction;

  // Each component is rooted at its oldest vertex, i.e. the smallest index.
  std::vector<std::uint32_t> parent(n);
  std::vector<Height> death(n, kInfinity);
  for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;

  for (const FiltrationEdge& e : f.edge_order) {
    const auto a = find_root(parent, e.upper);
    const auto b = find_root(parent, e.lower);
    if (a == b) {
      diagram.dim1.push_back({e.birth, kInfinity});
      continue;
    }
    const auto older = std::min(a, b);
    const auto younger = std::max(a, b);
    death[younger] = e.birth;
    parent[younger] = older;
  }

  diagram.dim0.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    diagram.dim0.push_back({f.vertex_order[i].height, death[i]});
  }
  std::sort(diagram.dim0.begin(), diagram.dim0.end());
  std::sort(diagram.dim1.begin(), diagram.dim1.end());
  return diagram;
}

VphtSignature vpht_signature(const VerticalGraph& g) {
  return {compute_verbose_diagram(build_filtration(g, Direction::Up)),
          compute_verbose_diagram(build_filtration(g, Direction::Down))};
}

std::vector<std::uint8_t> serialize(const VphtSignature& s) {
  std::vector<std::uint8_t> out;
  out.reserve(8 * (s.up.dim0.size() + s.up.dim1.size() + s.down.dim0.size() + s.down.dim1.size()));
  append_points(out, s.up.dim0);
  append_points(out, s.up.dim1);
  append_points(out, s.down.dim0);
  append_points(out, s.down.dim1);
  return out;
}

std::uint64_t fnv1a_64(std::span<const std::uint8_t> bytes) noexcept {
  std::uint64_t hash = kFnvOffsetBasis;
  for (std::uint8_t b : bytes) {
    hash ^= b;
    hash *= kFnvPrime;
  }
  return hash;
}

std::uint64_t hash_signature(const VphtSignature& s) { return fnv1a_64(serialize(s)); }

std::uint32_t off_diagonal_points(const VphtSignature& s) noexcept {
  std::uint32_t count = 0;
  for (const auto* points : {&s.up.dim0, &s.up.dim1, &s.down.dim0, &s.down.dim1}) {
    for (const auto& p : *points) count += p.on_diagonal() ? 0 : 1;
  }
  return count;
}

}  // namespace vpht
