#include "vpht/cycle_partition.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "vpht/error.hpp"

namespace vpht {

namespace {

// An edge of the search. Colored search: up-arcs may only ascend, down-arcs
// only descend. Free search: every edge may do both.
struct Slot {
  Vertex lo = 0;
  Vertex hi = 0;
  bool can_ascend = false;
  bool can_descend = false;
};

struct Step {
  std::uint32_t slot = 0;
  bool ascending = true;
};

using StepCycle = std::vector<Step>;

// Backtracking over alternating cycles. A cycle visits each vertex at most
// once as a valley (entered from above) and at most once as a peak (entered
// from below): a repeat in the same role splits into two shorter alternating
// cycles, which never lose existence and always lower the length tuple.
class PartitionEngine {
 public:
  PartitionEngine(std::uint32_t n, std::vector<Slot> slots)
      : slots_(std::move(slots)), used_(slots_.size(), 0), ascend_(n + 1), descend_(n + 1),
        valley_(n + 1, 0), peak_(n + 1, 0) {
    for (std::uint32_t s = 0; s < slots_.size(); ++s) {
      if (slots_[s].can_ascend) {
        ascend_[slots_[s].lo].push_back(s);
        start_order_.push_back(s);
      }
      if (slots_[s].can_descend) descend_[slots_[s].hi].push_back(s);
    }
    auto by_target_up = [this](std::uint32_t a, std::uint32_t b) {
      return std::pair(slots_[a].hi, a) < std::pair(slots_[b].hi, b);
    };
    auto by_target_down = [this](std::uint32_t a, std::uint32_t b) {
      return std::pair(slots_[a].lo, a) < std::pair(slots_[b].lo, b);
    };
    for (auto& list : ascend_) std::sort(list.begin(), list.end(), by_target_up);
    for (auto& list : descend_) std::sort(list.begin(), list.end(), by_target_down);
    std::sort(start_order_.begin(), start_order_.end(), [this](std::uint32_t a, std::uint32_t b) {
      return std::tuple(slots_[a].lo, slots_[a].hi, a) < std::tuple(slots_[b].lo, slots_[b].hi, b);
    });
  }

  const Slot& slot(std::uint32_t s) const { return slots_[s]; }
  void mark(std::uint32_t s) {
    used_[s] = 1;
    ++used_count_;
  }

  std::vector<StepCycle> cycles_from(std::uint32_t start) {
    std::vector<StepCycle> found;
    start_vertex_ = slots_[start].lo;
    const Vertex top = slots_[start].hi;
    used_[start] = 1;
    valley_[start_vertex_] = 1;
    peak_[top] = 1;
    path_.push_back({start, true});
    extend_from_peak(top, found);
    path_.pop_back();
    peak_[top] = 0;
    valley_[start_vertex_] = 0;
    used_[start] = 0;
    return found;
  }

  std::optional<std::vector<StepCycle>> minimal() {
    best_.reset();
    best_tuple_.clear();
    chosen_.clear();
    tuple_.clear();
    finished_ = false;
    search();
    return best_;
  }

 private:
  void extend_from_peak(Vertex w, std::vector<StepCycle>& found) {
    Vertex last = 0;
    for (std::uint32_t s : descend_[w]) {
      if (used_[s]) continue;
      const Vertex x = slots_[s].lo;
      if (x == last) continue;
      last = x;
      if (x != start_vertex_ && valley_[x]) continue;
      used_[s] = 1;
      path_.push_back({s, false});
      if (x == start_vertex_) {
        found.push_back(path_);
      } else {
        valley_[x] = 1;
        extend_from_valley(x, found);
        valley_[x] = 0;
      }
      path_.pop_back();
      used_[s] = 0;
    }
  }

  void extend_from_valley(Vertex x, std::vector<StepCycle>& found) {
    Vertex last = 0;
    for (std::uint32_t s : ascend_[x]) {
      if (used_[s]) continue;
      const Vertex y = slots_[s].hi;
      if (y == last) continue;
      last = y;
      if (peak_[y]) continue;
      used_[s] = 1;
      peak_[y] = 1;
      path_.push_back({s, true});
      extend_from_peak(y, found);
      path_.pop_back();
      peak_[y] = 0;
      used_[s] = 0;
    }
  }

  static std::vector<std::uint32_t> with_length(const std::vector<std::uint32_t>& tuple,
                                                std::uint32_t length) {
    std::vector<std::uint32_t> out;
    out.reserve(tuple.size() + 1);
    auto pos = std::find_if(tuple.begin(), tuple.end(), [&](std::uint32_t l) { return l < length; });
    out.insert(out.end(), tuple.begin(), pos);
    out.push_back(length);
    out.insert(out.end(), pos, tuple.end());
    return out;
  }

  void search() {
    if (used_count_ == slots_.size()) {
      if (!best_ || compare_partitions(tuple_, best_tuple_) < 0) {
        best_ = chosen_;
        best_tuple_ = tuple_;
        // All 2-cycles is the least tuple for a given arc count.
        finished_ = best_tuple_.empty() || best_tuple_.front() == 2;
      }
      return;
    }
    auto start = std::find_if(start_order_.begin(), start_order_.end(),
                              [this](std::uint32_t s) { return !used_[s]; });
    if (start == start_order_.end()) return;  // only descending arcs remain

    auto cycles = cycles_from(*start);
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const StepCycle& a, const StepCycle& b) { return a.size() < b.size(); });
    for (const auto& c : cycles) {
      auto next_tuple = with_length(tuple_, static_cast<std::uint32_t>(c.size()));
      // Adding cycles never lowers a tuple, and longer cycles give larger tuples.
      if (best_ && compare_partitions(next_tuple, best_tuple_) >= 0) break;
      for (const Step& step : c) used_[step.slot] = 1;
      used_count_ += c.size();
      std::swap(tuple_, next_tuple);
      chosen_.push_back(c);
      search();
      chosen_.pop_back();
      std::swap(tuple_, next_tuple);
      used_count_ -= c.size();
      for (const Step& step : c) used_[step.slot] = 0;
      if (finished_) return;
    }
  }

  std::vector<Slot> slots_;
  std::vector<std::uint8_t> used_;
  std::size_t used_count_ = 0;
  std::vector<std::vector<std::uint32_t>> ascend_;   // by lower endpoint
  std::vector<std::vector<std::uint32_t>> descend_;  // by upper endpoint
  std::vector<std::uint32_t> start_order_;

  Vertex start_vertex_ = 0;
  std::vector<std::uint8_t> valley_;
  std::vector<std::uint8_t> peak_;
  StepCycle path_;

  std::vector<StepCycle> chosen_;
  std::vector<std::uint32_t> tuple_;
  std::optional<std::vector<StepCycle>> best_;
  std::vector<std::uint32_t> best_tuple_;
  bool finished_ = false;
};

std::vector<Slot> colored_slots(const OrientedUnion& u) {
  std::vector<Slot> slots;
  slots.reserve(u.arc_count());
  for (const Arc& a : u.up_arcs) slots.push_back({a.tail, a.head, true, false});
  for (const Arc& a : u.down_arcs) slots.push_back({a.head, a.tail, false, true});
  return slots;
}

AlternatingCycle to_cycle(const PartitionEngine& engine, const StepCycle& steps) {
  AlternatingCycle c;
  c.arcs.reserve(steps.size());
  for (const Step& step : steps) {
    const Slot& s = engine.slot(step.slot);
    c.arcs.push_back(step.ascending ? Arc{s.lo, s.hi} : Arc{s.hi, s.lo});
  }
  return canonical_form(c);
}

CyclePartition to_partition(const PartitionEngine& engine, const std::vector<StepCycle>& cycles) {
  CyclePartition p;
  p.cycles.reserve(cycles.size());
  for (const auto& c : cycles) p.cycles.push_back(to_cycle(engine, c));
  std::sort(p.cycles.begin(), p.cycles.end(), [](const AlternatingCycle& a, const AlternatingCycle& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.arcs < b.arcs;
  });
  return p;
}

void check_sorted(std::span<const std::uint32_t> t) {
  if (!std::is_sorted(t.begin(), t.end(), std::greater<>{})) {
    throw Error(ErrorCode::RejectUnsorted, "length tuple is not in descending order");
  }
}

}  // namespace

bool is_alternating_cycle(const AlternatingCycle& c) noexcept {
  const auto len = c.arcs.size();
  if (len < 2 || len % 2 != 0) return false;
  for (std::size_t k = 0; k < len; ++k) {
    const Arc& a = c.arcs[k];
    const Arc& next = c.arcs[(k + 1) % len];
    if (a.tail == a.head || a.tail == 0 || a.head == 0) return false;
    if (a.head != next.tail) return false;
    if (a.orientation() == next.orientation()) return false;
  }
  return true;
}

AlternatingCycle canonical_form(const AlternatingCycle& c) {
  if (c.arcs.empty()) return c;
  Vertex lowest = c.arcs.front().tail;
  for (const Arc& a : c.arcs) lowest = std::min(lowest, a.tail);
  std::optional<AlternatingCycle> best;
  const auto len = c.arcs.size();
  for (std::size_t k = 0; k < len; ++k) {
    if (c.arcs[k].tail != lowest || c.arcs[k].orientation() != Orientation::Up) continue;
    AlternatingCycle rotated;
    rotated.arcs.reserve(len);
    for (std::size_t i = 0; i < len; ++i) rotated.arcs.push_back(c.arcs[(k + i) % len]);
    if (!best || rotated.arcs < best->arcs) best = std::move(rotated);
  }
  return best ? *best : c;
}

std::vector<std::uint32_t> CyclePartition::length_tuple() const {
  std::vector<std::uint32_t> t;
  t.reserve(cycles.size());
  for (const auto& c : cycles) t.push_back(static_cast<std::uint32_t>(c.length()));
  std::sort(t.begin(), t.end(), std::greater<>{});
  return t;
}

std::size_t CyclePartition::arc_count() const noexcept {
  std::size_t total = 0;
  for (const auto& c : cycles) total += c.length();
  return total;
}

std::strong_ordering compare_partitions(std::span<const std::uint32_t> p,
                                        std::span<const std::uint32_t> q) {
  check_sorted(p);
  check_sorted(q);
  const auto len = std::max(p.size(), q.size());
  for (std::size_t k = 0; k < len; ++k) {
    const std::uint32_t a = k < p.size() ? p[k] : 0;
    const std::uint32_t b = k < q.size() ? q[k] : 0;
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

ArcUsage ArcUsage::none(const OrientedUnion& u) {
  return {std::vector<bool>(u.up_arcs.size(), false), std::vector<bool>(u.down_arcs.size(), false)};
}

std::vector<AlternatingCycle> cycle_dfs(const OrientedUnion& u, std::size_t start_up_arc,
                                        const ArcUsage& used) {
  if (start_up_arc >= u.up_arcs.size()) {
    throw Error(ErrorCode::InvalidInput, "start arc " + std::to_string(start_up_arc) + " is not an up-arc");
  }
  if (used.up.size() != u.up_arcs.size() || used.down.size() != u.down_arcs.size()) {
    throw Error(ErrorCode::InvalidInput, "arc usage does not match the union");
  }
  if (used.up[start_up_arc]) throw Error(ErrorCode::InvalidInput, "start arc is already used");

  PartitionEngine engine(u.vertex_count, colored_slots(u));
  for (std::size_t k = 0; k < u.up_arcs.size(); ++k) {
    if (used.up[k]) engine.mark(static_cast<std::uint32_t>(k));
  }
  for (std::size_t k = 0; k < u.down_arcs.size(); ++k) {
    if (used.down[k]) engine.mark(static_cast<std::uint32_t>(u.up_arcs.size() + k));
  }
  std::vector<AlternatingCycle> cycles;
  for (const auto& steps : engine.cycles_from(static_cast<std::uint32_t>(start_up_arc))) {
    cycles.push_back(to_cycle(engine, steps));
  }
  return cycles;
}

std::optional<CyclePartition> minimal_partition(const OrientedUnion& u) {
  PartitionEngine engine(u.vertex_count, colored_slots(u));
  auto best = engine.minimal();
  if (!best) return std::nullopt;
  return to_partition(engine, *best);
}

std::optional<CyclePartition> minimal_partition(const VerticalGraph& g1, const VerticalGraph& g2,
                                                bool exclude_common) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw Error(ErrorCode::VertexCountMismatch,
                std::to_string(g1.vertex_count()) + " vs " + std::to_string(g2.vertex_count()));
  }
  if (exclude_common) {
    auto [a, b] = without_common_edges(g1, g2);
    return minimal_partition(oriented_union(a, b));
  }
  return minimal_partition(oriented_union(g1, g2));
}

std::optional<CyclePartition> alternating_decomposition(const VerticalGraph& g) {
  std::vector<Slot> slots;
  slots.reserve(g.edge_count());
  for (const Edge& e : g.edges()) slots.push_back({e.lo, e.hi, true, true});
  PartitionEngine engine(g.vertex_count(), std::move(slots));
  auto best = engine.minimal();
  if (!best) return std::nullopt;
  return to_partition(engine, *best);
}

bool covers_exactly(const OrientedUnion& u, const CyclePartition& p) {
  std::vector<Arc> expected;
  expected.reserve(u.arc_count());
  expected.insert(expected.end(), u.up_arcs.begin(), u.up_arcs.end());
  expected.insert(expected.end(), u.down_arcs.begin(), u.down_arcs.end());
  std::vector<Arc> actual;
  actual.reserve(p.arc_count());
  for (const auto& c : p.cycles) {
    if (!is_alternating_cycle(c)) return false;
    actual.insert(actual.end(), c.arcs.begin(), c.arcs.end());
  }
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  return expected == actual;
}

std::vector<Edge> common_edges(const VerticalGraph& g1, const VerticalGraph& g2) {
  std::vector<Edge> common;
  std::set_intersection(g1.edges().begin(), g1.edges().end(), g2.edges().begin(), g2.edges().end(),
                        std::back_inserter(common));
  return common;
}

std::pair<VerticalGraph, VerticalGraph> without_common_edges(const VerticalGraph& g1,
                                                             const VerticalGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw Error(ErrorCode::VertexCountMismatch,
                std::to_string(g1.vertex_count()) + " vs " + std::to_string(g2.vertex_count()));
  }
  std::vector<Edge> a, b;
  std::set_difference(g1.edges().begin(), g1.edges().end(), g2.edges().begin(), g2.edges().end(),
                      std::back_inserter(a));
  std::set_difference(g2.edges().begin(), g2.edges().end(), g1.edges().begin(), g1.edges().end(),
                      std::back_inserter(b));
  return {VerticalGraph::from_canonical_edges(g1.vertex_count(), std::move(a), g1.allows_multi()),
          VerticalGraph::from_canonical_edges(g2.vertex_count(), std::move(b), g2.allows_multi())};
}

}  // namespace vpht
