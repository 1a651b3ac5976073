#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace vpht {

// Hard limit of the brute-force searches; the graph model itself is unbounded.
inline constexpr std::uint32_t kMaxSearchVertices = 32;

// Vertices are 1-based ranks along the vertical line; vertex i sits at up-height i.
using Vertex = std::uint32_t;

// Undirected edge stored as (lo, hi) with lo < hi.
struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Orientation : std::uint8_t { Up, Down };

// Directed edge of an oriented union. Up-arcs ascend, down-arcs descend.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  Orientation orientation() const noexcept {
    return tail < head ? Orientation::Up : Orientation::Down;
  }
  Edge edge() const noexcept {
    return tail < head ? Edge{tail, head} : Edge{head, tail};
  }

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class VerticalGraph {
 public:
  VerticalGraph() = default;

  std::uint32_t vertex_count() const noexcept { return n_; }
  // Sorted in canonical pair order; repeated edges appear consecutively.
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool allows_multi() const noexcept { return multi_; }
  bool is_simple() const noexcept;
  std::size_t multiplicity(Edge e) const noexcept;

  // Trusted constructor for edge lists that are already canonical and in range.
  static VerticalGraph from_canonical_edges(std::uint32_t n, std::vector<Edge> edges,
                                            bool allow_multi);

  // Equality ignores the multigraph flag: two graphs are equal when their edge
  // multisets on the same vertex set coincide.
  friend bool operator==(const VerticalGraph& a, const VerticalGraph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<Edge> edges_;
  bool multi_ = false;
};

// Validates and normalizes an edge list. Pairs may be given in either order.
VerticalGraph make_vertical_graph(std::uint32_t n,
                                  std::span<const std::pair<Vertex, Vertex>> edges,
                                  bool allow_multi = false);
VerticalGraph make_vertical_graph(std::uint32_t n,
                                  std::initializer_list<std::pair<Vertex, Vertex>> edges,
                                  bool allow_multi = false);

// Multiset union of two graphs on the same vertex set (a multigraph).
VerticalGraph edge_union(const VerticalGraph& a, const VerticalGraph& b);

// Index 0 holds vertex 1.
struct DegreeProfile {
  std::vector<std::uint32_t> ldeg;
  std::vector<std::uint32_t> hdeg;

  std::uint32_t lower(Vertex v) const { return ldeg.at(v - 1); }
  std::uint32_t upper(Vertex v) const { return hdeg.at(v - 1); }
};

DegreeProfile degree_profile(const VerticalGraph& g);

std::uint32_t connected_components(const VerticalGraph& g);
// |E| - |V| + components.
std::uint32_t circuit_rank(const VerticalGraph& g);

// Edges of g1 oriented up, edges of g2 oriented down.
struct OrientedUnion {
  std::uint32_t vertex_count = 0;
  std::vector<Arc> up_arcs;    // tail < head, canonical order
  std::vector<Arc> down_arcs;  // tail > head, sorted by (tail, head)

  std::size_t arc_count() const noexcept { return up_arcs.size() + down_arcs.size(); }
};

OrientedUnion oriented_union(const VerticalGraph& g1, const VerticalGraph& g2);

// Sorted undirected edge multiset of all arcs.
std::vector<Edge> forget_orientation(const OrientedUnion& u);

// Position of (lo, hi) in the lexicographic pair order (1,2),(1,3),...,(n-1,n).
std::size_t canonical_pair_index(std::uint32_t n, Edge e) noexcept;

// All simple graphs on n vertices containing base_edges, in ascending bitmask
// order over the canonical pair ordering. The index of a graph is its bitmask
// restricted to the free (non-base) pairs, so index order is enumeration order.
class GraphUniverse {
 public:
  GraphUniverse(std::uint32_t n, std::span<const Edge> base_edges, bool ignore_dangling);
  GraphUniverse(std::uint32_t n, const VerticalGraph& base, bool ignore_dangling)
      : GraphUniverse(n, base.edges(), ignore_dangling) {}

  std::uint32_t vertex_count() const noexcept { return n_; }
  bool ignore_dangling() const noexcept { return ignore_dangling_; }
  std::span<const Edge> base_edges() const noexcept { return base_; }
  std::size_t free_pair_count() const noexcept { return free_.size(); }

  // Number of indices, before the dangling filter is applied.
  std::uint64_t index_count() const noexcept { return std::uint64_t{1} << free_.size(); }

  // False when the dangling filter rejects the graph at this index.
  bool admits(std::uint64_t index) const noexcept;

  void edges_at(std::uint64_t index, std::vector<Edge>& out) const;
  VerticalGraph graph_at(std::uint64_t index) const;

  // Index of g in this universe, if g is a simple graph containing the base edges.
  std::optional<std::uint64_t> index_of(const VerticalGraph& g) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = VerticalGraph;
    using difference_type = std::ptrdiff_t;
    using pointer = const VerticalGraph*;
    using reference = const VerticalGraph&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    std::uint64_t index() const noexcept { return index_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.index_ == b.index_;
    }

   private:
    friend class GraphUniverse;
    iterator(const GraphUniverse* universe, std::uint64_t index);
    void settle();

    const GraphUniverse* universe_ = nullptr;
    std::uint64_t index_ = 0;
    VerticalGraph current_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, index_count()); }

 private:
  std::uint32_t n_;
  bool ignore_dangling_;
  std::vector<Edge> base_;
  std::vector<Edge> free_;
  std::vector<std::uint8_t> pair_is_base_;  // indexed by canonical pair index
  std::uint64_t base_cover_ = 0;
  std::uint64_t all_vertices_ = 0;
};

// Materialized form of the universe stream, for small n.
std::vector<VerticalGraph> enumerate_graphs(std::uint32_t n, std::span<const Edge> base_edges,
                                            bool ignore_dangling);

}  // namespace vpht
