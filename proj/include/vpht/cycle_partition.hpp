#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vpht/graph.hpp"

namespace vpht {

// Closed arc sequence alternating up and down arcs; each head is the next tail.
struct AlternatingCycle {
  std::vector<Arc> arcs;

  std::size_t length() const noexcept { return arcs.size(); }

  friend auto operator<=>(const AlternatingCycle&, const AlternatingCycle&) = default;
};

bool is_alternating_cycle(const AlternatingCycle& c) noexcept;

// Rotation starting at the up-arc leaving the lowest vertex of the cycle
// (lexicographically smallest such rotation if that vertex repeats).
AlternatingCycle canonical_form(const AlternatingCycle& c);

struct CyclePartition {
  std::vector<AlternatingCycle> cycles;

  // Cycle lengths in descending order.
  std::vector<std::uint32_t> length_tuple() const;
  std::size_t arc_count() const noexcept;
};

// Lexicographic order on descending length tuples with implicit zero padding.
// Throws RejectUnsorted if either tuple is not non-increasing.
std::strong_ordering compare_partitions(std::span<const std::uint32_t> p,
                                        std::span<const std::uint32_t> q);

// Used-flags per arc of an oriented union, indexed like up_arcs / down_arcs.
struct ArcUsage {
  std::vector<bool> up;
  std::vector<bool> down;

  static ArcUsage none(const OrientedUnion& u);
};

// Every alternating cycle through up_arcs[start_up_arc] built from unused
// arcs, in canonical form. Cycles close when a down-arc returns to the start
// arc's tail. Arc copies with equal endpoints are interchangeable, so each
// cycle is reported once by vertex sequence.
std::vector<AlternatingCycle> cycle_dfs(const OrientedUnion& u, std::size_t start_up_arc,
                                        const ArcUsage& used);

// Lexicographically minimal partition of the union's arcs into alternating
// cycles, or nullopt when no partition exists.
std::optional<CyclePartition> minimal_partition(const OrientedUnion& u);
std::optional<CyclePartition> minimal_partition(const VerticalGraph& g1, const VerticalGraph& g2,
                                                bool exclude_common);

// Same search with free orientation: any edge may be traversed up or down, and
// a cycle's ascending edges are reported as up-arcs. Decides type G.
std::optional<CyclePartition> alternating_decomposition(const VerticalGraph& g);

// True when the partition's cycles are alternating and their arcs are exactly
// the union's arc multiset.
bool covers_exactly(const OrientedUnion& u, const CyclePartition& p);

// Multiset intersection of the two edge sets.
std::vector<Edge> common_edges(const VerticalGraph& g1, const VerticalGraph& g2);
std::pair<VerticalGraph, VerticalGraph> without_common_edges(const VerticalGraph& g1,
                                                             const VerticalGraph& g2);

}  // namespace vpht
