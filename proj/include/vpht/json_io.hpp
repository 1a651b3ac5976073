#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vpht/classifier.hpp"
#include "vpht/cycle_partition.hpp"
#include "vpht/graph.hpp"
#include "vpht/persistence.hpp"
#include "vpht/search.hpp"

namespace vpht {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"n": int, "edges": [[i, j], ...], "multi": bool}
Json to_json(const VerticalGraph& g);
VerticalGraph graph_from_json(const Json& j);
VerticalGraph read_graph_file(const std::filesystem::path& path);

Json edges_to_json(const VerticalGraph& g);

// {"direction": "up"|"down", "dim0": [[b, d], ...], "dim1": [[b, "inf"], ...]}
Json to_json(const VerboseDiagram& d);
VerboseDiagram diagram_from_json(const Json& j);

// {"up": diagram, "down": diagram, "hash": "0x..."}
Json to_json(const VphtSignature& s);

// {"cycles": [[[t, h, "up"], ...], ...], "tuple": [...]} or {"partitionable": false}
Json to_json(const std::optional<CyclePartition>& p);
Json to_json(const AlternatingCycle& c);
AlternatingCycle cycle_from_json(const Json& j);

// {"colliding": bool, "signatures_equal": bool, "witness": partition-or-vertex}
Json to_json(const PairVerdict& v);

Json to_json(const SetMetrics& m);

// One results line: members as edge lists, metrics when computed, hash in hex.
Json to_json(const CollisionSet& s);

std::string hex64(std::uint64_t value);

// "1-4,2-5" or a JSON array "[[1,4],[2,5]]".
std::vector<std::pair<Vertex, Vertex>> parse_edge_list(std::string_view text);

}  // namespace vpht
