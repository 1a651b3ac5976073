#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "vpht/graph.hpp"

namespace vpht {

enum class Direction : std::uint8_t { Up, Down };

const char* to_string(Direction d) noexcept;

// Heights are vertex ranks in the chosen direction. Down uses n + 1 - i.
using Height = std::uint32_t;
inline constexpr Height kInfinity = 0xFFFFFFFFu;

Height height_of(Vertex v, std::uint32_t n, Direction d) noexcept;

struct FiltrationVertex {
  Vertex vertex = 0;
  Height height = 0;

  friend bool operator==(const FiltrationVertex&, const FiltrationVertex&) = default;
};

// upper/lower index into Filtration::vertex_order.
struct FiltrationEdge {
  std::uint32_t upper = 0;
  std::uint32_t lower = 0;
  Height birth = 0;

  friend bool operator==(const FiltrationEdge&, const FiltrationEdge&) = default;
};

struct Filtration {
  Direction direction = Direction::Up;
  std::vector<FiltrationVertex> vertex_order;  // strictly increasing height
  std::vector<FiltrationEdge> edge_order;      // non-decreasing birth
};

// Sweep-line construction: vertices ascending by height, edges grouped by upper
// vertex ascending and, within a group, by lower vertex descending.
Filtration build_filtration(const VerticalGraph& g, Direction d);

struct PersistencePoint {
  Height birth = 0;
  Height death = kInfinity;

  bool is_infinite() const noexcept { return death == kInfinity; }
  bool on_diagonal() const noexcept { return birth == death; }

  friend auto operator<=>(const PersistencePoint&, const PersistencePoint&) = default;
};

// Both dimensions are kept sorted by (birth, death), with infinity largest.
struct VerboseDiagram {
  Direction direction = Direction::Up;
  std::vector<PersistencePoint> dim0;
  std::vector<PersistencePoint> dim1;

  friend bool operator==(const VerboseDiagram&, const VerboseDiagram&) = default;
};

// Elder-rule pairing over the compatible index order given by the filtration:
// each vertex at its height, followed by the edges born there in edge_order.
VerboseDiagram compute_verbose_diagram(const Filtration& f);

// Up and down diagrams; together they determine the whole transform of a
// vertical graph.
struct VphtSignature {
  VerboseDiagram up;
  VerboseDiagram down;

  friend bool operator==(const VphtSignature&, const VphtSignature&) = default;
};

VphtSignature vpht_signature(const VerticalGraph& g);

// Canonical bytes: up.dim0, up.dim1, down.dim0, down.dim1, each point as
// birth then death, 32-bit little-endian, infinity as 0xFFFFFFFF.
std::vector<std::uint8_t> serialize(const VphtSignature& s);

std::uint64_t fnv1a_64(std::span<const std::uint8_t> bytes) noexcept;

inline constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

std::uint64_t hash_signature(const VphtSignature& s);

// Count of points with birth != death over both directions and dimensions.
std::uint32_t off_diagonal_points(const VphtSignature& s) noexcept;

}  // namespace vpht
