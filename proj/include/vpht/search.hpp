#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vpht/graph.hpp"
#include "vpht/persistence.hpp"

namespace vpht {

struct SetMetrics {
  std::uint32_t components = 0;
  std::uint32_t cycle_count = 0;  // circuit rank
  std::uint32_t off_diagonal_points = 0;
  std::uint32_t longest_cycle = 0;
  bool has_nonpartitionable_pair = false;

  friend bool operator==(const SetMetrics&, const SetMetrics&) = default;
};

// Graphs sharing one signature. Members are in enumeration order and
// member_indices holds their indices in the universe they came from.
struct CollisionSet {
  std::vector<VerticalGraph> members;
  std::vector<std::uint64_t> member_indices;
  std::uint64_t signature_hash = 0;
  VphtSignature signature;
  std::optional<SetMetrics> metrics;
};

struct CollidingGraphs {
  std::vector<VerticalGraph> graphs;
  // The dangling filter removed the query graph, so nothing can match it.
  bool input_excluded = false;
};

// Every graph on g's vertex set whose signature equals g's, g included.
CollidingGraphs colliding_graphs(const VerticalGraph& g, bool ignore_dangling, unsigned jobs = 1);

// Non-singleton signature classes of the universe (n, base_edges, ignore_dangling),
// ordered by signature hash and then by first member. The result does not
// depend on the worker count.
std::vector<CollisionSet> collision_sets(std::uint32_t n, std::span<const Edge> base_edges,
                                         bool ignore_dangling, unsigned jobs = 1);

// Throws MetricsInconsistent when members disagree on signature, component
// count, or circuit rank.
SetMetrics compute_metrics(const CollisionSet& s, bool exclude_common);
void compute_metrics(std::vector<CollisionSet>& sets, bool exclude_common, unsigned jobs = 1);

enum class Metric { Components, CycleCount, OffDiagonalPoints, LongestCycle, HasNonpartitionablePair };

const char* to_string(Metric m) noexcept;
Metric parse_metric(std::string_view name);  // throws UnknownMetric
std::uint64_t metric_value(const SetMetrics& m, Metric metric) noexcept;

enum class Comparison { Less, LessEqual, Equal, NotEqual, GreaterEqual, Greater };

struct MetricConstraint {
  Metric metric = Metric::Components;
  Comparison op = Comparison::Equal;
  std::uint64_t value = 0;

  bool accepts(const SetMetrics& m) const noexcept;
};

// Parses "name<op>value", e.g. "longest_cycle>=6" or "has_nonpartitionable_pair=true".
MetricConstraint parse_constraint(std::string_view text);

// Stable filter, then sort by key; ties keep enumeration order of the first member.
std::vector<CollisionSet> filter_sort(std::vector<CollisionSet> sets,
                                      std::span<const MetricConstraint> constraints,
                                      std::optional<Metric> key, bool descending);

// Worker count from VPHT_JOBS, else the hardware concurrency.
unsigned default_jobs();

}  // namespace vpht
