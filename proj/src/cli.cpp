#include "vpht/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vpht/classifier.hpp"
#include "vpht/error.hpp"
#include "vpht/json_io.hpp"
#include "vpht/search.hpp"

namespace vpht::cli {

namespace {

constexpr std::uint32_t kBenchMaxVertices = 8;

void check_vertex_limit(std::uint32_t n) {
  if (n > kMaxSearchVertices) {
    throw Error(ErrorCode::TooManyVertices,
                std::to_string(n) + " vertices exceeds the limit of " + std::to_string(kMaxSearchVertices));
  }
}

VerticalGraph load_graph(const std::optional<std::string>& path, const std::optional<std::string>& edges,
                         const std::optional<std::uint32_t>& n, const char* what) {
  VerticalGraph g;
  if (path) {
    g = read_graph_file(*path);
  } else if (edges && n) {
    check_vertex_limit(*n);
    g = make_vertical_graph(*n, parse_edge_list(*edges), false);
  } else {
    throw Error(ErrorCode::InvalidInput, std::string("missing ") + what + " (a JSON file, or --n with an edge list)");
  }
  check_vertex_limit(g.vertex_count());
  return g;
}

Json with_schema(Json body) {
  Json out{{"schema", kSchemaVersion}};
  out.update(body);
  return out;
}

Json run_diagram(const RunConfig& c) {
  const auto g = load_graph(c.graph_path, c.edges, c.n, "--graph");
  return with_schema(to_json(compute_verbose_diagram(build_filtration(g, c.direction))));
}

Json run_signature(const RunConfig& c) {
  const auto g = load_graph(c.graph_path, c.edges, c.n, "--graph");
  return with_schema(to_json(vpht_signature(g)));
}

Json run_collide(const RunConfig& c, std::ostream& err) {
  const auto g = load_graph(c.graph_path, c.edges, c.n, "--graph");
  const auto result = colliding_graphs(g, c.ignore_dangling, c.jobs);
  Json graphs = Json::array();
  for (const auto& h : result.graphs) graphs.push_back(edges_to_json(h));
  Json out{{"n", g.vertex_count()}, {"count", result.graphs.size()}, {"graphs", graphs}};
  if (result.input_excluded) {
    out["warning"] = "the input graph has an isolated vertex and ignore-dangling is set; no results";
    err << "warning: " << out["warning"].get<std::string>() << "\n";
  }
  return with_schema(out);
}

Json run_partition(const RunConfig& c) {
  const auto g1 = load_graph(c.g1_path, c.g1_edges, c.n, "--g1");
  const auto g2 = load_graph(c.g2_path, c.g2_edges, c.n, "--g2");
  return with_schema(to_json(minimal_partition(g1, g2, c.exclude_common)));
}

Json run_classify(const RunConfig& c) {
  const bool pair = c.g1_path || c.g1_edges || c.g2_path || c.g2_edges;
  if (pair) {
    const auto g1 = load_graph(c.g1_path, c.g1_edges, c.n, "--g1");
    const auto g2 = load_graph(c.g2_path, c.g2_edges, c.n, "--g2");
    return with_schema(to_json(certify_pair(g1, g2)));
  }
  const auto g = load_graph(c.graph_path, c.edges, c.n, "--graph");
  const auto verdict = is_type_g(g);
  Json out{{"type_g", verdict.type_g}, {"special", is_special_type_g(g)}};
  if (verdict.partition) out["partition"] = to_json(verdict.partition);
  if (verdict.odd_vertex) out["odd_vertex"] = *verdict.odd_vertex;
  return with_schema(out);
}

std::vector<Edge> base_edges_of(const RunConfig& c, std::uint32_t n) {
  const auto base = make_vertical_graph(n, parse_edge_list(c.base_edges), false);
  return {base.edges().begin(), base.edges().end()};
}

Json pairwise_partitions(const CollisionSet& s, bool exclude_common) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    for (std::size_t j = i + 1; j < s.members.size(); ++j) {
      pairs.push_back(Json{{"i", i}, {"j", j},
                           {"partition", to_json(minimal_partition(s.members[i], s.members[j], exclude_common))}});
    }
  }
  return pairs;
}

void run_sets(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.n) throw Error(ErrorCode::InvalidInput, "sets needs --n");
  check_vertex_limit(*c.n);
  std::vector<MetricConstraint> constraints;
  for (const auto& f : c.filters) constraints.push_back(parse_constraint(f));
  std::optional<Metric> key;
  if (c.sort_key) key = parse_metric(*c.sort_key);

  auto sets = collision_sets(*c.n, base_edges_of(c, *c.n), c.ignore_dangling, c.jobs);
  compute_metrics(sets, c.exclude_common, c.jobs);
  if (!constraints.empty() || key) sets = filter_sort(std::move(sets), constraints, key, c.descending);
  for (const auto& s : sets) {
    Json line = with_schema(to_json(s));
    if (c.show_cycles) line["partitions"] = pairwise_partitions(s, c.exclude_common);
    out << line.dump() << "\n";
  }
  err << sets.size() << " collision sets\n";
}

Json run_bench(const RunConfig& c) {
  if (!c.n) throw Error(ErrorCode::InvalidInput, "bench needs --n");
  check_vertex_limit(*c.n);
  if (*c.n < 3) throw Error(ErrorCode::InvalidInput, "bench needs --n of at least 3");
  if (*c.n > kBenchMaxVertices && !c.force) {
    throw Error(ErrorCode::ResourceLimit, "bench above 8 vertices needs --force");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto sets = collision_sets(*c.n, std::span<const Edge>{}, false, c.jobs);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  const double graphs = static_cast<double>(std::uint64_t{1} << (*c.n * (*c.n - 1) / 2));
  return with_schema(Json{{"n", *c.n},
                          {"jobs", c.jobs},
                          {"graphs", static_cast<std::uint64_t>(graphs)},
                          {"collision_sets", sets.size()},
                          {"seconds", elapsed.count()},
                          {"graphs_per_second", elapsed.count() > 0 ? graphs / elapsed.count() : 0.0}});
}

void dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::Diagram: out << run_diagram(c).dump() << "\n"; return;
    case Command::Signature: out << run_signature(c).dump() << "\n"; return;
    case Command::Collide: out << run_collide(c, err).dump() << "\n"; return;
    case Command::Sets: run_sets(c, out, err); return;
    case Command::Partition: out << run_partition(c).dump() << "\n"; return;
    case Command::Classify: out << run_classify(c).dump() << "\n"; return;
    case Command::Bench: out << run_bench(c).dump() << "\n"; return;
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.jobs == 0) throw Error(ErrorCode::InvalidInput, "--jobs must be positive");
    if (config.out_path) {
      // Build the whole output first so a failed run leaves no partial file.
      std::ostringstream buffer;
      dispatch(config, buffer, err);
      std::ofstream file(*config.out_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::InvalidInput, "cannot write " + *config.out_path);
      file << buffer.str();
    } else {
      dispatch(config, out, err);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_resource_limit() ? kExitResource : kExitInvalid;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verbose persistent homology transforms of vertical graphs"};
  app.require_subcommand(1);
  RunConfig config;
  config.jobs = default_jobs();

  std::string direction = "up";
  auto graph_options = [&](CLI::App* sub) {
    sub->add_option("--graph", config.graph_path, "Graph JSON file");
    sub->add_option("--edges", config.edges, "Inline edge list, e.g. 1-4,2-5 (needs --n)");
    sub->add_option("--n", config.n, "Vertex count");
  };
  auto pair_options = [&](CLI::App* sub) {
    sub->add_option("--g1", config.g1_path, "First graph JSON file");
    sub->add_option("--g2", config.g2_path, "Second graph JSON file");
    sub->add_option("--g1-edges", config.g1_edges, "Inline edges of the first graph (needs --n)");
    sub->add_option("--g2-edges", config.g2_edges, "Inline edges of the second graph (needs --n)");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--jobs", config.jobs, "Worker count (default: VPHT_JOBS or all cores)");
    sub->add_option("--out", config.out_path, "Write output to this file");
  };

  auto* diagram = app.add_subcommand("diagram", "Verbose diagram in one direction");
  graph_options(diagram);
  diagram->add_option("--direction", direction, "up or down")->check(CLI::IsMember({"up", "down"}));
  common(diagram);

  auto* signature = app.add_subcommand("signature", "Up and down diagrams with the signature hash");
  graph_options(signature);
  common(signature);

  auto* collide = app.add_subcommand("collide", "All graphs sharing the signature of a graph");
  graph_options(collide);
  collide->add_flag("--ignore-dangling", config.ignore_dangling, "Skip graphs with isolated vertices");
  common(collide);

  auto* sets = app.add_subcommand("sets", "Collision sets of all graphs on n vertices (JSON lines)");
  sets->add_option("--n", config.n, "Vertex count")->required();
  sets->add_option("--base-edges", config.base_edges, "Edges every graph must contain");
  sets->add_flag("--ignore-dangling", config.ignore_dangling, "Skip graphs with isolated vertices");
  sets->add_flag("--exclude-common", config.exclude_common, "Drop common edges before the cycle search");
  sets->add_option("--filter", config.filters, "Metric constraint such as longest_cycle>=6 (repeatable)");
  sets->add_option("--sort", config.sort_key, "Metric to sort by");
  sets->add_flag("--descending", config.descending, "Sort in descending order");
  sets->add_flag("--show-cycles", config.show_cycles, "Include the minimal partition of every member pair");
  common(sets);

  auto* partition = app.add_subcommand("partition", "Minimal alternating-cycle partition of a pair");
  pair_options(partition);
  partition->add_option("--n", config.n, "Vertex count for inline edges");
  partition->add_flag("--exclude-common", config.exclude_common, "Drop common edges before the search");
  common(partition);

  auto* classify = app.add_subcommand("classify", "Type G test for a graph, or pair certification");
  graph_options(classify);
  pair_options(classify);
  common(classify);

  auto* bench = app.add_subcommand("bench", "Time a full collision-set run");
  bench->add_option("--n", config.n, "Vertex count (3..8)")->required();
  bench->add_flag("--force", config.force, "Allow more than 8 vertices");
  common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
  }

  config.direction = direction == "down" ? Direction::Down : Direction::Up;
  if (diagram->parsed()) config.command = Command::Diagram;
  else if (signature->parsed()) config.command = Command::Signature;
  else if (collide->parsed()) config.command = Command::Collide;
  else if (sets->parsed()) config.command = Command::Sets;
  else if (partition->parsed()) config.command = Command::Partition;
  else if (classify->parsed()) config.command = Command::Classify;
  else config.command = Command::Bench;
  return run(config, out, err);
}

}  // namespace vpht::cli
