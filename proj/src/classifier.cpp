#include "vpht/classifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "vpht/error.hpp"
#include "vpht/persistence.hpp"

namespace vpht {

namespace {

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Removes one occurrence of each edge in `remove` from `from`; false if one is missing.
bool subtract(std::vector<Edge>& from, const std::vector<Edge>& remove) {
  for (const Edge& e : remove) {
    auto it = std::lower_bound(from.begin(), from.end(), e);
    if (it == from.end() || *it != e) return false;
    from.erase(it);
  }
  return true;
}

bool within_degree_bound(const DegreeProfile& d, std::uint32_t bound) {
  return std::all_of(d.ldeg.begin(), d.ldeg.end(), [&](auto x) { return x <= bound; }) &&
         std::all_of(d.hdeg.begin(), d.hdeg.end(), [&](auto x) { return x <= bound; });
}

std::uint32_t uniform(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

}  // namespace

std::optional<Vertex> first_odd_degree_vertex(const VerticalGraph& g) {
  const auto d = degree_profile(g);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (d.lower(v) % 2 != 0 || d.upper(v) % 2 != 0) return v;
  }
  return std::nullopt;
}

TypeGVerdict is_type_g(const VerticalGraph& g) {
  TypeGVerdict verdict;
  verdict.odd_vertex = first_odd_degree_vertex(g);
  if (verdict.odd_vertex) return verdict;
  verdict.partition = alternating_decomposition(g);
  if (!verdict.partition) {
    throw std::logic_error("even-degree graph without an alternating-cycle partition");
  }
  verdict.type_g = true;
  return verdict;
}

bool is_special_type_g(const VerticalGraph& g) {
  return !first_odd_degree_vertex(g) && within_degree_bound(degree_profile(g), 2);
}

std::optional<Vertex> first_unbalanced_vertex(const VerticalGraph& g1, const VerticalGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw Error(ErrorCode::VertexCountMismatch,
                std::to_string(g1.vertex_count()) + " vs " + std::to_string(g2.vertex_count()));
  }
  const auto a = degree_profile(g1);
  const auto b = degree_profile(g2);
  for (Vertex v = 1; v <= g1.vertex_count(); ++v) {
    if (a.lower(v) != b.lower(v) || a.upper(v) != b.upper(v)) return v;
  }
  return std::nullopt;
}

PairVerdict certify_pair(const VerticalGraph& g1, const VerticalGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw Error(ErrorCode::VertexCountMismatch,
                std::to_string(g1.vertex_count()) + " vs " + std::to_string(g2.vertex_count()));
  }
  PairVerdict verdict;
  verdict.signatures_equal = vpht_signature(g1) == vpht_signature(g2);
  if (auto partition = minimal_partition(g1, g2, false)) {
    verdict.is_colliding = true;
    verdict.witness = std::move(*partition);
    return verdict;
  }
  auto vertex = first_unbalanced_vertex(g1, g2);
  if (!vertex) throw std::logic_error("balanced pair without an alternating-cycle partition");
  verdict.witness = *vertex;
  return verdict;
}

std::pair<VerticalGraph, VerticalGraph> split_type_g(const VerticalGraph& g,
                                                     const CyclePartition& partition) {
  std::vector<Edge> up, down, all;
  for (const auto& c : partition.cycles) {
    if (!is_alternating_cycle(c)) throw Error(ErrorCode::InvalidPartition, "cycle is not alternating");
    for (const Arc& a : c.arcs) {
      if (a.tail > g.vertex_count() || a.head > g.vertex_count()) {
        throw Error(ErrorCode::InvalidPartition, "arc leaves the vertex set");
      }
      (a.orientation() == Orientation::Up ? up : down).push_back(a.edge());
      all.push_back(a.edge());
    }
  }
  if (sorted_edges(std::move(all)) != std::vector<Edge>(g.edges().begin(), g.edges().end())) {
    throw Error(ErrorCode::InvalidPartition, "cycles do not cover the edge multiset exactly");
  }
  up = sorted_edges(std::move(up));
  down = sorted_edges(std::move(down));
  const bool up_multi = std::adjacent_find(up.begin(), up.end()) != up.end();
  const bool down_multi = std::adjacent_find(down.begin(), down.end()) != down.end();
  return {VerticalGraph::from_canonical_edges(g.vertex_count(), std::move(up), up_multi),
          VerticalGraph::from_canonical_edges(g.vertex_count(), std::move(down), down_multi)};
}

std::pair<VerticalGraph, VerticalGraph> duplicate_cycle(const VerticalGraph& g1,
                                                        const VerticalGraph& g2,
                                                        const AlternatingCycle& c) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw Error(ErrorCode::VertexCountMismatch,
                std::to_string(g1.vertex_count()) + " vs " + std::to_string(g2.vertex_count()));
  }
  if (!is_alternating_cycle(c)) throw Error(ErrorCode::CycleNotInUnion, "not an alternating cycle");
  std::vector<Edge> up, down;
  for (const Arc& a : c.arcs) {
    if (a.tail > g1.vertex_count() || a.head > g1.vertex_count()) {
      throw Error(ErrorCode::CycleNotInUnion, "arc leaves the vertex set");
    }
    (a.orientation() == Orientation::Up ? up : down).push_back(a.edge());
  }
  std::vector<Edge> rest1(g1.edges().begin(), g1.edges().end());
  std::vector<Edge> rest2(g2.edges().begin(), g2.edges().end());
  if (!subtract(rest1, up) || !subtract(rest2, down)) {
    throw Error(ErrorCode::CycleNotInUnion, "cycle uses arcs the union does not have");
  }
  const auto n = g1.vertex_count();
  auto remainder = oriented_union(VerticalGraph::from_canonical_edges(n, std::move(rest1), true),
                                  VerticalGraph::from_canonical_edges(n, std::move(rest2), true));
  if (!minimal_partition(remainder)) {
    throw Error(ErrorCode::CycleNotInUnion, "no alternating partition of the union contains the cycle");
  }

  std::vector<Edge> e1(g1.edges().begin(), g1.edges().end());
  std::vector<Edge> e2(g2.edges().begin(), g2.edges().end());
  e1.insert(e1.end(), up.begin(), up.end());
  e2.insert(e2.end(), down.begin(), down.end());
  return {VerticalGraph::from_canonical_edges(n, sorted_edges(std::move(e1)), true),
          VerticalGraph::from_canonical_edges(n, sorted_edges(std::move(e2)), true)};
}

std::optional<AlternatingCycle> random_alternating_cycle(std::mt19937_64& rng, std::uint32_t n,
                                                         std::uint32_t max_peaks) {
  if (n < 2 || max_peaks == 0) return std::nullopt;
  const auto peaks = uniform(rng, 1, std::min(max_peaks, n - 1));
  std::vector<Vertex> valley(peaks), peak(peaks);
  for (auto& v : valley) v = uniform(rng, 1, n);
  for (auto& p : peak) p = uniform(rng, 1, n);
  auto distinct = [](std::vector<Vertex> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
  };
  if (!distinct(valley) || !distinct(peak)) return std::nullopt;
  AlternatingCycle c;
  for (std::uint32_t i = 0; i < peaks; ++i) {
    const Vertex next_valley = valley[(i + 1) % peaks];
    if (peak[i] <= valley[i] || peak[i] <= next_valley) return std::nullopt;
    c.arcs.push_back({valley[i], peak[i]});
    c.arcs.push_back({peak[i], next_valley});
  }
  return canonical_form(c);
}

GeneratedTypeG random_special_type_g(std::mt19937_64& rng, std::uint32_t max_vertices) {
  const auto n = uniform(rng, 2, std::max<std::uint32_t>(2, max_vertices));
  const auto target = uniform(rng, 1, 4);
  std::vector<Edge> edges;
  CyclePartition partition;
  for (int attempt = 0; attempt < 200 && partition.cycles.size() < target; ++attempt) {
    auto c = random_alternating_cycle(rng, n, 3);
    if (!c) continue;
    std::vector<Edge> candidate = edges;
    for (const Arc& a : c->arcs) candidate.push_back(a.edge());
    candidate = sorted_edges(std::move(candidate));
    auto g = VerticalGraph::from_canonical_edges(n, candidate, true);
    if (!within_degree_bound(degree_profile(g), 2)) continue;
    edges = std::move(candidate);
    partition.cycles.push_back(std::move(*c));
  }
  return {VerticalGraph::from_canonical_edges(n, std::move(edges), true), std::move(partition)};
}

GeneratedPair random_colliding_pair(std::mt19937_64& rng, std::uint32_t max_vertices) {
  const auto n = uniform(rng, 2, std::max<std::uint32_t>(2, max_vertices));
  const auto target = uniform(rng, 1, 4);
  std::vector<Edge> up, down;
  CyclePartition partition;
  for (int attempt = 0; attempt < 200 && partition.cycles.size() < target; ++attempt) {
    auto c = random_alternating_cycle(rng, n, 4);
    if (!c) continue;
    auto next_up = up;
    auto next_down = down;
    for (const Arc& a : c->arcs) {
      (a.orientation() == Orientation::Up ? next_up : next_down).push_back(a.edge());
    }
    next_up = sorted_edges(std::move(next_up));
    next_down = sorted_edges(std::move(next_down));
    if (std::adjacent_find(next_up.begin(), next_up.end()) != next_up.end() ||
        std::adjacent_find(next_down.begin(), next_down.end()) != next_down.end()) {
      continue;
    }
    up = std::move(next_up);
    down = std::move(next_down);
    partition.cycles.push_back(std::move(*c));
  }
  return {VerticalGraph::from_canonical_edges(n, std::move(up), false),
          VerticalGraph::from_canonical_edges(n, std::move(down), false), std::move(partition)};
}

}  // namespace vpht
