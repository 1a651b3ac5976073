#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vpht/persistence.hpp"

namespace vpht::cli {

enum class Command { Diagram, Signature, Collide, Sets, Partition, Classify, Bench };

struct RunConfig {
  Command command = Command::Diagram;

  // A graph comes from a JSON file or from --n plus an inline edge list.
  std::optional<std::string> graph_path;
  std::optional<std::string> g1_path;
  std::optional<std::string> g2_path;
  std::optional<std::string> edges;
  std::optional<std::string> g1_edges;
  std::optional<std::string> g2_edges;
  std::optional<std::uint32_t> n;
  std::string base_edges;

  Direction direction = Direction::Up;
  bool ignore_dangling = false;
  bool exclude_common = false;
  bool force = false;
  unsigned jobs = 1;
  std::optional<std::string> out_path;

  // sets only
  std::vector<std::string> filters;
  std::optional<std::string> sort_key;
  bool descending = false;
  bool show_cycles = false;  // add the pairwise minimal partitions of each set
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitResource = 2;

// Executes one command. JSON goes to `out` (or --out), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace vpht::cli
