#include "vpht/json_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "vpht/error.hpp"

namespace vpht {

namespace {

Json height_json(Height h) { return h == kInfinity ? Json("inf") : Json(h); }

Height height_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInfinity;
  if (j.is_number_unsigned()) return j.get<Height>();
  throw Error(ErrorCode::InvalidInput, "bad height " + j.dump());
}

std::vector<PersistencePoint> points_from_json(const Json& j) {
  std::vector<PersistencePoint> points;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::InvalidInput, "bad point " + p.dump());
    points.push_back({height_from_json(p[0]), height_from_json(p[1])});
  }
  return points;
}

Vertex parse_vertex(std::string_view text) {
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidInput, "bad vertex '" + std::string(text) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Json edges_to_json(const VerticalGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.lo, e.hi});
  return edges;
}

Json to_json(const VerticalGraph& g) {
  return Json{{"n", g.vertex_count()}, {"edges", edges_to_json(g)}, {"multi", g.allows_multi()}};
}

VerticalGraph graph_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::uint32_t>();
    const bool multi = j.contains("multi") ? j.at("multi").get<bool>() : false;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidInput, "bad edge " + e.dump());
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return make_vertical_graph(n, edges, multi);
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::InvalidInput, std::string("graph JSON: ") + ex.what());
  }
}

VerticalGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
  try {
    return graph_from_json(Json::parse(in));
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::InvalidInput, path.string() + ": " + ex.what());
  }
}

Json to_json(const VerboseDiagram& d) {
  Json dim0 = Json::array();
  for (const auto& p : d.dim0) dim0.push_back({height_json(p.birth), height_json(p.death)});
  Json dim1 = Json::array();
  for (const auto& p : d.dim1) dim1.push_back({height_json(p.birth), height_json(p.death)});
  return Json{{"direction", to_string(d.direction)}, {"dim0", dim0}, {"dim1", dim1}};
}

VerboseDiagram diagram_from_json(const Json& j) {
  try {
    VerboseDiagram d;
    const auto dir = j.at("direction").get<std::string>();
    if (dir != "up" && dir != "down") throw Error(ErrorCode::InvalidInput, "direction " + dir);
    d.direction = dir == "up" ? Direction::Up : Direction::Down;
    d.dim0 = points_from_json(j.at("dim0"));
    d.dim1 = points_from_json(j.at("dim1"));
    return d;
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::InvalidInput, std::string("diagram JSON: ") + ex.what());
  }
}

Json to_json(const VphtSignature& s) {
  return Json{{"up", to_json(s.up)}, {"down", to_json(s.down)}, {"hash", hex64(hash_signature(s))}};
}

Json to_json(const AlternatingCycle& c) {
  Json arcs = Json::array();
  for (const Arc& a : c.arcs) {
    arcs.push_back({a.tail, a.head, a.orientation() == Orientation::Up ? "up" : "down"});
  }
  return arcs;
}

AlternatingCycle cycle_from_json(const Json& j) {
  AlternatingCycle c;
  try {
    for (const auto& a : j) {
      const Arc arc{a.at(0).get<Vertex>(), a.at(1).get<Vertex>()};
      const auto label = a.at(2).get<std::string>();
      if ((label == "up") != (arc.orientation() == Orientation::Up) || (label != "up" && label != "down")) {
        throw Error(ErrorCode::InvalidInput, "arc label does not match its direction: " + a.dump());
      }
      c.arcs.push_back(arc);
    }
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::InvalidInput, std::string("cycle JSON: ") + ex.what());
  }
  return c;
}

Json to_json(const std::optional<CyclePartition>& p) {
  if (!p) return Json{{"partitionable", false}};
  Json cycles = Json::array();
  for (const auto& c : p->cycles) cycles.push_back(to_json(c));
  return Json{{"cycles", cycles}, {"tuple", p->length_tuple()}};
}

Json to_json(const PairVerdict& v) {
  Json witness = std::holds_alternative<CyclePartition>(v.witness)
                     ? to_json(std::optional<CyclePartition>(std::get<CyclePartition>(v.witness)))
                     : Json(std::get<Vertex>(v.witness));
  return Json{{"colliding", v.is_colliding}, {"signatures_equal", v.signatures_equal}, {"witness", witness}};
}

Json to_json(const SetMetrics& m) {
  return Json{{"components", m.components},
              {"cycle_count", m.cycle_count},
              {"off_diagonal_points", m.off_diagonal_points},
              {"longest_cycle", m.longest_cycle},
              {"has_nonpartitionable_pair", m.has_nonpartitionable_pair}};
}

Json to_json(const CollisionSet& s) {
  Json members = Json::array();
  for (const auto& g : s.members) members.push_back(edges_to_json(g));
  Json out{{"hash", hex64(s.signature_hash)},
           {"n", s.members.empty() ? 0u : s.members.front().vertex_count()},
           {"members", members}};
  if (s.metrics) out["metrics"] = to_json(*s.metrics);
  return out;
}

std::string hex64(std::uint64_t value) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::vector<std::pair<Vertex, Vertex>> parse_edge_list(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  text = trim(text);
  if (text.empty()) return edges;
  if (text.front() == '[') {
    try {
      for (const auto& e : Json::parse(text)) {
        if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidInput, "bad edge " + e.dump());
        edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
      }
    } catch (const Json::exception& ex) {
      throw Error(ErrorCode::InvalidInput, std::string("edge list: ") + ex.what());
    }
    return edges;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto dash = item.find_first_of("-:");
    if (dash == std::string_view::npos) {
      throw Error(ErrorCode::InvalidInput, "edge '" + std::string(item) + "' needs the form i-j");
    }
    edges.emplace_back(parse_vertex(trim(item.substr(0, dash))), parse_vertex(trim(item.substr(dash + 1))));
  }
  return edges;
}

}  // namespace vpht
