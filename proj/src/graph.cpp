#include "vpht/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vpht/error.hpp"

namespace vpht {

namespace {

void require_vertices(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "a vertical graph needs at least one vertex");
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

bool VerticalGraph::is_simple() const noexcept {
  return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

std::size_t VerticalGraph::multiplicity(Edge e) const noexcept {
  auto [first, last] = std::equal_range(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(last - first);
}

VerticalGraph VerticalGraph::from_canonical_edges(std::uint32_t n, std::vector<Edge> edges,
                                                  bool allow_multi) {
  VerticalGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.multi_ = allow_multi;
  return g;
}

VerticalGraph make_vertical_graph(std::uint32_t n,
                                  std::span<const std::pair<Vertex, Vertex>> edges,
                                  bool allow_multi) {
  require_vertices(n);
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 1 || a > n) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(a));
    if (b < 1 || b > n) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(b));
    if (a == b) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(a));
    normalized.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(normalized.begin(), normalized.end());
  if (!allow_multi) {
    auto dup = std::adjacent_find(normalized.begin(), normalized.end());
    if (dup != normalized.end()) {
      throw Error(ErrorCode::DuplicateEdge,
                  "(" + std::to_string(dup->lo) + "," + std::to_string(dup->hi) + ")");
    }
  }
  return VerticalGraph::from_canonical_edges(n, std::move(normalized), allow_multi);
}

VerticalGraph make_vertical_graph(std::uint32_t n,
                                  std::initializer_list<std::pair<Vertex, Vertex>> edges,
                                  bool allow_multi) {
  return make_vertical_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()),
                             allow_multi);
}

VerticalGraph edge_union(const VerticalGraph& a, const VerticalGraph& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw Error(ErrorCode::VertexCountMismatch,
                std::to_string(a.vertex_count()) + " vs " + std::to_string(b.vertex_count()));
  }
  std::vector<Edge> merged;
  merged.reserve(a.edge_count() + b.edge_count());
  std::merge(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
             std::back_inserter(merged));
  return VerticalGraph::from_canonical_edges(a.vertex_count(), std::move(merged), true);
}

DegreeProfile degree_profile(const VerticalGraph& g) {
  DegreeProfile profile;
  profile.ldeg.assign(g.vertex_count(), 0);
  profile.hdeg.assign(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++profile.hdeg[e.lo - 1];
    ++profile.ldeg[e.hi - 1];
  }
  return profile;
}

std::uint32_t connected_components(const VerticalGraph& g) {
  std::vector<std::uint32_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0u);
  std::uint32_t components = g.vertex_count();
  for (const Edge& e : g.edges()) {
    auto a = find_root(parent, e.lo - 1);
    auto b = find_root(parent, e.hi - 1);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  return components;
}

std::uint32_t circuit_rank(const VerticalGraph& g) {
  return static_cast<std::uint32_t>(g.edge_count()) - g.vertex_count() + connected_components(g);
}

OrientedUnion oriented_union(const VerticalGraph& g1, const VerticalGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw Error(ErrorCode::VertexCountMismatch,
                std::to_string(g1.vertex_count()) + " vs " + std::to_string(g2.vertex_count()));
  }
  OrientedUnion u;
  u.vertex_count = g1.vertex_count();
  u.up_arcs.reserve(g1.edge_count());
  for (const Edge& e : g1.edges()) u.up_arcs.push_back({e.lo, e.hi});
  u.down_arcs.reserve(g2.edge_count());
  for (const Edge& e : g2.edges()) u.down_arcs.push_back({e.hi, e.lo});
  std::sort(u.down_arcs.begin(), u.down_arcs.end());
  return u;
}

std::vector<Edge> forget_orientation(const OrientedUnion& u) {
  std::vector<Edge> edges;
  edges.reserve(u.arc_count());
  for (const Arc& a : u.up_arcs) edges.push_back(a.edge());
  for (const Arc& a : u.down_arcs) edges.push_back(a.edge());
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::size_t canonical_pair_index(std::uint32_t n, Edge e) noexcept {
  // Pairs with lower endpoint below e.lo come first: sum_{i<lo} (n - i).
  std::size_t lo = e.lo;
  std::size_t before = (lo - 1) * n - (lo - 1) * lo / 2;
  return before + (e.hi - e.lo - 1);
}

GraphUniverse::GraphUniverse(std::uint32_t n, std::span<const Edge> base_edges,
                             bool ignore_dangling)
    : n_(n), ignore_dangling_(ignore_dangling) {
  require_vertices(n);
  if (n > kMaxSearchVertices) {
    throw Error(ErrorCode::TooManyVertices,
                std::to_string(n) + " vertices exceeds the limit of " +
                    std::to_string(kMaxSearchVertices));
  }
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  pair_is_base_.assign(pairs, 0);
  for (const Edge& e : base_edges) {
    if (e.lo < 1 || e.hi > n || e.lo >= e.hi) {
      throw Error(ErrorCode::OutOfRange,
                  "base edge (" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")");
    }
    auto& slot = pair_is_base_[canonical_pair_index(n, e)];
    if (slot) {
      throw Error(ErrorCode::DuplicateEdge,
                  "base edge (" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")");
    }
    slot = 1;
  }
  for (Vertex i = 1; i <= n; ++i) {
    all_vertices_ |= std::uint64_t{1} << (i - 1);
    for (Vertex j = i + 1; j <= n; ++j) {
      if (pair_is_base_[canonical_pair_index(n, {i, j})]) {
        base_.push_back({i, j});
        base_cover_ |= (std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (j - 1));
      } else {
        free_.push_back({i, j});
      }
    }
  }
  if (free_.size() > 63) {
    throw Error(ErrorCode::ResourceLimit,
                std::to_string(free_.size()) + " free vertex pairs cannot be enumerated");
  }
}

bool GraphUniverse::admits(std::uint64_t index) const noexcept {
  if (!ignore_dangling_) return true;
  std::uint64_t cover = base_cover_;
  for (std::size_t k = 0; index != 0; ++k, index >>= 1) {
    if (index & 1u) {
      cover |= (std::uint64_t{1} << (free_[k].lo - 1)) | (std::uint64_t{1} << (free_[k].hi - 1));
    }
  }
  return cover == all_vertices_;
}

void GraphUniverse::edges_at(std::uint64_t index, std::vector<Edge>& out) const {
  out.clear();
  std::size_t free_k = 0;
  for (Vertex i = 1; i <= n_; ++i) {
    for (Vertex j = i + 1; j <= n_; ++j) {
      if (pair_is_base_[canonical_pair_index(n_, {i, j})]) {
        out.push_back({i, j});
      } else {
        if ((index >> free_k) & 1u) out.push_back({i, j});
        ++free_k;
      }
    }
  }
}

VerticalGraph GraphUniverse::graph_at(std::uint64_t index) const {
  std::vector<Edge> edges;
  edges_at(index, edges);
  return VerticalGraph::from_canonical_edges(n_, std::move(edges), false);
}

std::optional<std::uint64_t> GraphUniverse::index_of(const VerticalGraph& g) const {
  if (g.vertex_count() != n_ || !g.is_simple()) return std::nullopt;
  if (!std::includes(g.edges().begin(), g.edges().end(), base_.begin(), base_.end())) {
    return std::nullopt;
  }
  std::uint64_t index = 0;
  for (const Edge& e : g.edges()) {
    auto it = std::lower_bound(free_.begin(), free_.end(), e);
    if (it != free_.end() && *it == e) {
      index |= std::uint64_t{1} << static_cast<std::size_t>(it - free_.begin());
    }
  }
  return index;
}

GraphUniverse::iterator::iterator(const GraphUniverse* universe, std::uint64_t index)
    : universe_(universe), index_(index) {
  settle();
}

void GraphUniverse::iterator::settle() {
  const auto end = universe_->index_count();
  while (index_ < end && !universe_->admits(index_)) ++index_;
  if (index_ < end) current_ = universe_->graph_at(index_);
}

GraphUniverse::iterator& GraphUniverse::iterator::operator++() {
  ++index_;
  settle();
  return *this;
}

std::vector<VerticalGraph> enumerate_graphs(std::uint32_t n, std::span<const Edge> base_edges,
                                            bool ignore_dangling) {
  GraphUniverse universe(n, base_edges, ignore_dangling);
  return {universe.begin(), universe.end()};
}

}  // namespace vpht
