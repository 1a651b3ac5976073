#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <variant>

#include "vpht/cycle_partition.hpp"
#include "vpht/graph.hpp"

namespace vpht {

// Lowest vertex whose ldeg or hdeg is odd.
std::optional<Vertex> first_odd_degree_vertex(const VerticalGraph& g);

struct TypeGVerdict {
  bool type_g = false;
  std::optional<CyclePartition> partition;  // set when type_g
  std::optional<Vertex> odd_vertex;         // set otherwise
};

// Even-degree test on the undirected edge multiset. A positive answer comes
// with an explicit alternating-cycle partition.
TypeGVerdict is_type_g(const VerticalGraph& g);

// type G with every ldeg and hdeg at most 2.
bool is_special_type_g(const VerticalGraph& g);

// Lowest vertex where g1 and g2 disagree on ldeg or hdeg. The oriented union
// of (g1, g2) partitions into alternating cycles exactly when there is none.
std::optional<Vertex> first_unbalanced_vertex(const VerticalGraph& g1, const VerticalGraph& g2);

struct PairVerdict {
  bool is_colliding = false;
  bool signatures_equal = false;
  // Minimal partition when colliding, otherwise an unbalanced vertex.
  std::variant<CyclePartition, Vertex> witness;
};

PairVerdict certify_pair(const VerticalGraph& g1, const VerticalGraph& g2);

// Up-arcs of the partition's cycles form the first graph, down-arcs the second.
std::pair<VerticalGraph, VerticalGraph> split_type_g(const VerticalGraph& g,
                                                     const CyclePartition& partition);

// Adds one more copy of c's up-arcs to g1 and down-arcs to g2. c must be a
// cycle of some alternating partition of the pair's oriented union.
std::pair<VerticalGraph, VerticalGraph> duplicate_cycle(const VerticalGraph& g1,
                                                        const VerticalGraph& g2,
                                                        const AlternatingCycle& c);

struct GeneratedTypeG {
  VerticalGraph graph;
  CyclePartition partition;
};

// Random alternating cycle on vertices 1..n with between 1 and max_peaks
// peaks, or nullopt when the draw is rejected.
std::optional<AlternatingCycle> random_alternating_cycle(std::mt19937_64& rng, std::uint32_t n,
                                                         std::uint32_t max_peaks);

// Union of random alternating cycles whose vertices keep ldeg <= 2 and
// hdeg <= 2, together with the partition it was built from. n in [2, max_vertices].
GeneratedTypeG random_special_type_g(std::mt19937_64& rng, std::uint32_t max_vertices);

struct GeneratedPair {
  VerticalGraph g1;
  VerticalGraph g2;
  CyclePartition partition;
};

// Colliding pair of simple graphs assembled from random alternating cycles.
GeneratedPair random_colliding_pair(std::mt19937_64& rng, std::uint32_t max_vertices);

}  // namespace vpht
