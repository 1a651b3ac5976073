#include "vpht/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "vpht/cycle_partition.hpp"
#include "vpht/error.hpp"

namespace vpht {

namespace {

constexpr std::uint32_t kNoClass = std::numeric_limits<std::uint32_t>::max();

// Lossless fixed-width encoding of a simple graph's signature. dim0 births are
// exactly the heights 1..n, so each direction is its n deaths followed by the
// dim1 birth count at each height.
void compact_key(const VphtSignature& s, std::uint32_t n, std::vector<std::uint8_t>& out) {
  out.assign(4 * static_cast<std::size_t>(n), 0);
  std::size_t offset = 0;
  for (const VerboseDiagram* d : {&s.up, &s.down}) {
    for (std::size_t i = 0; i < d->dim0.size(); ++i) {
      const auto death = d->dim0[i].death;
      out[offset + i] = death == kInfinity ? 0xFF : static_cast<std::uint8_t>(death);
    }
    offset += n;
    for (const auto& p : d->dim1) ++out[offset + p.birth - 1];
    offset += n;
  }
}

std::uint64_t bucket_count_for(std::uint64_t expected) {
  std::uint64_t size = 1;
  while (size < 2 * std::max<std::uint64_t>(expected, 1)) size <<= 1;
  return size;
}

// Array of bucket lists indexed by the low bits of the signature hash. Each
// list is searched for an exact key match before a new class is appended.
class ClassTable {
 public:
  ClassTable(std::uint64_t expected, std::size_t key_width)
      : mask_(bucket_count_for(expected) - 1), heads_(mask_ + 1, kNoClass), key_width_(key_width) {}

  std::uint32_t find_or_insert(std::uint64_t hash, std::span<const std::uint8_t> key) {
    auto& head = heads_[hash & mask_];
    for (auto c = head; c != kNoClass; c = next_[c]) {
      if (hashes_[c] == hash && std::equal(key.begin(), key.end(), keys_.begin() + c * key_width_)) {
        return c;
      }
    }
    const auto c = static_cast<std::uint32_t>(hashes_.size());
    hashes_.push_back(hash);
    next_.push_back(head);
    keys_.insert(keys_.end(), key.begin(), key.end());
    head = c;
    return c;
  }

  std::size_t size() const noexcept { return hashes_.size(); }
  std::uint64_t hash(std::uint32_t c) const { return hashes_[c]; }
  std::span<const std::uint8_t> key(std::uint32_t c) const {
    return {keys_.data() + c * key_width_, key_width_};
  }

 private:
  std::uint64_t mask_;
  std::vector<std::uint32_t> heads_;
  std::vector<std::uint32_t> next_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint8_t> keys_;
  std::size_t key_width_;
};

struct Chunk {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

std::vector<Chunk> split_range(std::uint64_t total, unsigned jobs) {
  jobs = std::max(1u, jobs);
  std::vector<Chunk> chunks;
  const std::uint64_t base = total / jobs;
  const std::uint64_t extra = total % jobs;
  std::uint64_t begin = 0;
  for (unsigned k = 0; k < jobs; ++k) {
    const std::uint64_t len = base + (k < extra ? 1 : 0);
    chunks.push_back({begin, begin + len});
    begin += len;
  }
  return chunks;
}

// Runs body(k) for every k in [0, count) on up to `jobs` threads and rethrows
// the first exception.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct LocalClasses {
  ClassTable table;
  std::vector<std::uint32_t> class_of;  // per index in the chunk
};

}  // namespace

CollidingGraphs colliding_graphs(const VerticalGraph& g, bool ignore_dangling, unsigned jobs) {
  if (!g.is_simple()) throw Error(ErrorCode::InvalidInput, "colliding-graph search needs a simple graph");
  GraphUniverse universe(g.vertex_count(), std::span<const Edge>{}, ignore_dangling);
  CollidingGraphs result;
  result.input_excluded = !universe.admits(*universe.index_of(g));
  if (result.input_excluded) return result;

  const auto target = vpht_signature(g);
  const auto chunks = split_range(universe.index_count(), jobs);
  std::vector<std::vector<VerticalGraph>> found(chunks.size());
  parallel_for(chunks.size(), jobs, [&](std::size_t k) {
    std::vector<Edge> edges;
    for (auto i = chunks[k].begin; i < chunks[k].end; ++i) {
      if (!universe.admits(i)) continue;
      universe.edges_at(i, edges);
      auto candidate = VerticalGraph::from_canonical_edges(g.vertex_count(), edges, false);
      if (vpht_signature(candidate) == target) found[k].push_back(std::move(candidate));
    }
  });
  for (auto& part : found) {
    for (auto& graph : part) result.graphs.push_back(std::move(graph));
  }
  return result;
}

std::vector<CollisionSet> collision_sets(std::uint32_t n, std::span<const Edge> base_edges,
                                         bool ignore_dangling, unsigned jobs) {
  GraphUniverse universe(n, base_edges, ignore_dangling);
  const std::uint64_t total = universe.index_count();
  const std::size_t key_width = 4 * static_cast<std::size_t>(n);
  const auto chunks = split_range(total, jobs);

  std::vector<std::optional<LocalClasses>> locals(chunks.size());
  parallel_for(chunks.size(), jobs, [&](std::size_t k) {
    const Chunk chunk = chunks[k];
    LocalClasses local{ClassTable(chunk.end - chunk.begin, key_width),
                       std::vector<std::uint32_t>(chunk.end - chunk.begin, kNoClass)};
    std::vector<Edge> edges;
    std::vector<std::uint8_t> key;
    for (auto i = chunk.begin; i < chunk.end; ++i) {
      if (!universe.admits(i)) continue;
      universe.edges_at(i, edges);
      const auto sig = vpht_signature(VerticalGraph::from_canonical_edges(n, edges, false));
      compact_key(sig, n, key);
      local.class_of[i - chunk.begin] = local.table.find_or_insert(hash_signature(sig), key);
    }
    locals[k] = std::move(local);
  });

  // Merge in chunk order, so global classes are created in first-member order.
  ClassTable global(total, key_width);
  std::vector<std::uint32_t> class_size;
  std::vector<std::vector<std::uint32_t>> to_global(chunks.size());
  for (std::size_t k = 0; k < chunks.size(); ++k) {
    const auto& table = locals[k]->table;
    to_global[k].resize(table.size());
    for (std::uint32_t c = 0; c < table.size(); ++c) {
      const auto g = global.find_or_insert(table.hash(c), table.key(c));
      if (g == class_size.size()) class_size.push_back(0);
      to_global[k][c] = g;
    }
    for (auto local_class : locals[k]->class_of) {
      if (local_class != kNoClass) ++class_size[to_global[k][local_class]];
    }
  }

  std::vector<std::uint32_t> slot_of(class_size.size(), kNoClass);
  std::vector<CollisionSet> sets;
  for (std::size_t k = 0; k < chunks.size(); ++k) {
    const auto& class_of = locals[k]->class_of;
    for (std::uint64_t offset = 0; offset < class_of.size(); ++offset) {
      if (class_of[offset] == kNoClass) continue;
      const auto g = to_global[k][class_of[offset]];
      if (class_size[g] < 2) continue;
      if (slot_of[g] == kNoClass) {
        slot_of[g] = static_cast<std::uint32_t>(sets.size());
        sets.emplace_back();
        sets.back().signature_hash = global.hash(g);
      }
      auto& set = sets[slot_of[g]];
      const auto index = chunks[k].begin + offset;
      set.member_indices.push_back(index);
      set.members.push_back(universe.graph_at(index));
    }
    locals[k].reset();
  }
  for (auto& set : sets) set.signature = vpht_signature(set.members.front());

  std::sort(sets.begin(), sets.end(), [](const CollisionSet& a, const CollisionSet& b) {
    return std::pair(a.signature_hash, a.member_indices.front()) <
           std::pair(b.signature_hash, b.member_indices.front());
  });
  return sets;
}

SetMetrics compute_metrics(const CollisionSet& s, bool exclude_common) {
  if (s.members.empty()) throw Error(ErrorCode::InvalidInput, "metrics of an empty collision set");
  SetMetrics m;
  const auto& first = s.members.front();
  m.components = connected_components(first);
  m.cycle_count = circuit_rank(first);
  m.off_diagonal_points = off_diagonal_points(s.signature);
  for (const auto& member : s.members) {
    if (vpht_signature(member) != s.signature) {
      throw Error(ErrorCode::MetricsInconsistent, "member signature differs from the set signature");
    }
    if (connected_components(member) != m.components || circuit_rank(member) != m.cycle_count) {
      throw Error(ErrorCode::MetricsInconsistent, "component or cycle count varies within a set");
    }
  }
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    for (std::size_t j = i + 1; j < s.members.size(); ++j) {
      auto p = minimal_partition(s.members[i], s.members[j], exclude_common);
      if (!p) {
        m.has_nonpartitionable_pair = true;
        continue;
      }
      const auto tuple = p->length_tuple();
      if (!tuple.empty()) m.longest_cycle = std::max(m.longest_cycle, tuple.front());
    }
  }
  return m;
}

void compute_metrics(std::vector<CollisionSet>& sets, bool exclude_common, unsigned jobs) {
  parallel_for(sets.size(), jobs,
               [&](std::size_t k) { sets[k].metrics = compute_metrics(sets[k], exclude_common); });
}

const char* to_string(Metric m) noexcept {
  switch (m) {
    case Metric::Components: return "components";
    case Metric::CycleCount: return "cycle_count";
    case Metric::OffDiagonalPoints: return "off_diagonal_points";
    case Metric::LongestCycle: return "longest_cycle";
    case Metric::HasNonpartitionablePair: return "has_nonpartitionable_pair";
  }
  return "unknown";
}

Metric parse_metric(std::string_view name) {
  for (Metric m : {Metric::Components, Metric::CycleCount, Metric::OffDiagonalPoints,
                   Metric::LongestCycle, Metric::HasNonpartitionablePair}) {
    if (name == to_string(m)) return m;
  }
  throw Error(ErrorCode::UnknownMetric, std::string(name));
}

std::uint64_t metric_value(const SetMetrics& m, Metric metric) noexcept {
  switch (metric) {
    case Metric::Components: return m.components;
    case Metric::CycleCount: return m.cycle_count;
    case Metric::OffDiagonalPoints: return m.off_diagonal_points;
    case Metric::LongestCycle: return m.longest_cycle;
    case Metric::HasNonpartitionablePair: return m.has_nonpartitionable_pair ? 1 : 0;
  }
  return 0;
}

bool MetricConstraint::accepts(const SetMetrics& m) const noexcept {
  const auto v = metric_value(m, metric);
  switch (op) {
    case Comparison::Less: return v < value;
    case Comparison::LessEqual: return v <= value;
    case Comparison::Equal: return v == value;
    case Comparison::NotEqual: return v != value;
    case Comparison::GreaterEqual: return v >= value;
    case Comparison::Greater: return v > value;
  }
  return false;
}

MetricConstraint parse_constraint(std::string_view text) {
  static constexpr std::pair<std::string_view, Comparison> kOps[] = {
      {"<=", Comparison::LessEqual}, {">=", Comparison::GreaterEqual}, {"!=", Comparison::NotEqual},
      {"==", Comparison::Equal},     {"<", Comparison::Less},          {">", Comparison::Greater},
      {"=", Comparison::Equal},
  };
  for (const auto& [token, op] : kOps) {
    const auto pos = text.find(token);
    if (pos == std::string_view::npos) continue;
    MetricConstraint c;
    c.metric = parse_metric(text.substr(0, pos));
    c.op = op;
    const auto value = text.substr(pos + token.size());
    if (value == "true") {
      c.value = 1;
    } else if (value == "false") {
      c.value = 0;
    } else {
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), c.value);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw Error(ErrorCode::InvalidInput, "bad constraint value in '" + std::string(text) + "'");
      }
    }
    return c;
  }
  throw Error(ErrorCode::InvalidInput, "constraint '" + std::string(text) + "' has no comparison");
}

std::vector<CollisionSet> filter_sort(std::vector<CollisionSet> sets,
                                      std::span<const MetricConstraint> constraints,
                                      std::optional<Metric> key, bool descending) {
  for (const auto& s : sets) {
    if (!s.metrics) throw Error(ErrorCode::InvalidInput, "collision set metrics were not computed");
  }
  std::erase_if(sets, [&](const CollisionSet& s) {
    return !std::all_of(constraints.begin(), constraints.end(),
                        [&](const MetricConstraint& c) { return c.accepts(*s.metrics); });
  });
  std::stable_sort(sets.begin(), sets.end(), [&](const CollisionSet& a, const CollisionSet& b) {
    if (key) {
      const auto va = metric_value(*a.metrics, *key);
      const auto vb = metric_value(*b.metrics, *key);
      if (va != vb) return descending ? va > vb : va < vb;
    }
    return a.member_indices.front() < b.member_indices.front();
  });
  return sets;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("VPHT_JOBS")) {
    unsigned jobs = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), jobs);
    if (ec == std::errc{} && ptr == text.data() + text.size() && jobs > 0) return jobs;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace vpht
