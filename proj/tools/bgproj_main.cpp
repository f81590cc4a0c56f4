// Command-line front end: project / stats / verify / gen / bench.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 I/O error. Diagnostics go to stderr; data goes to stdout or --output.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bgproj/bench.hpp"
#include "bgproj/core.hpp"
#include "bgproj/generator.hpp"
#include "bgproj/io.hpp"
#include "bgproj/projection.hpp"
#include "bgproj/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading input file: " + path);
  return ss.str();
}

// Writes through a callback so output goes to --output when given, else stdout.
void write_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  emit(out);
  out.flush();
  if (!out) throw IoError("failed writing output file: " + path);
}

bgproj::GraphFormat format_from_flag(const std::string& flag) {
  if (flag == "biadj") return bgproj::GraphFormat::BiAdjacency;
  if (flag == "edgelist") return bgproj::GraphFormat::EdgeList;
  return bgproj::GraphFormat::Auto;
}

struct ProjectArgs {
  std::string input;
  std::string side = "u";
  bool weighted = false;
  std::string algo = "sparse";
  std::string format = "auto";
  std::string output;
  bool as_matrix = false;
};

int cmd_project(const ProjectArgs& args) {
  const bgproj::BipartiteGraph g =
      bgproj::parse_graph(read_file(args.input), format_from_flag(args.format));
  const bgproj::Side side = args.side == "s" ? bgproj::Side::S : bgproj::Side::U;

  if (args.weighted) {
    // the weighted projection has a single implementation path
    const auto wproj = bgproj::project_weighted(g, side);
    write_output(args.output, [&](std::ostream& out) { bgproj::write_weighted_projection(out, wproj); });
    return kExitOk;
  }

  bgproj::UnipartiteGraph proj;
  if (args.algo == "matrix") {
    const bgproj::BipartiteGraph oriented = side == bgproj::Side::S ? bgproj::transpose(g) : g;
    proj = bgproj::project_matrix(bgproj::to_biadjacency(oriented));
  } else {
    proj = bgproj::project_sparse(g, side);
  }
  write_output(args.output, [&](std::ostream& out) {
    if (args.as_matrix)
      bgproj::write_projection_matrix(out, proj);
    else
      bgproj::write_projection(out, proj);
  });
  return kExitOk;
}

struct InputArgs {
  std::string input;
  std::string format = "auto";
  std::string output;
};

int cmd_stats(const InputArgs& args) {
  const bgproj::BipartiteGraph g =
      bgproj::parse_graph(read_file(args.input), format_from_flag(args.format));
  const bgproj::DegreeSums ds = bgproj::degree_sums(g);
  const bgproj::DensityStats st = bgproj::density_stats(g);
  std::size_t min_u = g.n2, max_u = 0, min_s = g.n1, max_s = 0;
  for (std::size_t u = 0; u < g.n1; ++u) {
    min_u = std::min(min_u, g.adj_u[u].size());
    max_u = std::max(max_u, g.adj_u[u].size());
  }
  for (std::size_t s = 0; s < g.n2; ++s) {
    min_s = std::min(min_s, g.adj_s[s].size());
    max_s = std::max(max_s, g.adj_s[s].size());
  }
  const bool connected = bgproj::is_connected(g);
  write_output(args.output, [&](std::ostream& out) {
    out << "n1=" << st.n1 << "\n"
        << "n2=" << st.n2 << "\n"
        << "m=" << st.m << "\n"
        << "sum_deg_u=" << ds.sum_u << "\n"
        << "sum_deg_s=" << ds.sum_s << "\n"
        << "min_deg_u=" << min_u << "\n"
        << "max_deg_u=" << max_u << "\n"
        << "min_deg_s=" << min_s << "\n"
        << "max_deg_s=" << max_s << "\n"
        << "max_edges=" << st.max_edges << "\n"
        << "density=" << st.density << "\n"
        << "linear_budget=" << st.linear_budget << "\n"
        << "connected=" << (connected ? "true" : "false") << "\n";
  });
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  std::string format = "auto";
  std::string output;
  std::string json_path;
  bool debug_corrupt = false;
};

int cmd_verify(const VerifyArgs& args) {
  const bgproj::BipartiteGraph g =
      bgproj::parse_graph(read_file(args.input), format_from_flag(args.format));

  bgproj::UnipartiteGraph proj = bgproj::project_sparse(g, bgproj::Side::U);
  bgproj::WeightedUnipartiteGraph wproj = bgproj::project_weighted(g, bgproj::Side::U);
  if (args.debug_corrupt) {
    // tamper with the honestly computed projections so the checks trip
    if (!proj.edges.empty()) proj.edges.pop_back();
    if (!wproj.edges.empty()) wproj.edges.front().weight = 0;
    std::cerr << "warning: verifying intentionally corrupted projections\n";
  }
  const auto reports = bgproj::run_checks(g, proj, wproj);

  write_output(args.output, [&](std::ostream& out) {
    for (const auto& r : reports) out << bgproj::report_line(r) << "\n";
  });
  if (!args.json_path.empty())
    write_output(args.json_path,
                 [&](std::ostream& out) { out << bgproj::reports_to_json(reports) << "\n"; });

  for (const auto& r : reports)
    if (!r.passed()) return kExitVerifyFail;
  return kExitOk;
}

struct GenArgs {
  std::size_t n1 = 1;
  std::size_t n2 = 1;
  std::string model = "gnp";
  double p = 0.5;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  bool connected = false;
  bool pendant_pair = false;
  std::string output;
};

int cmd_gen(const GenArgs& args) {
  bgproj::GenSpec spec;
  spec.n1 = args.n1;
  spec.n2 = args.n2;
  spec.p = args.p;
  spec.m = args.m;
  spec.seed = args.seed;
  spec.require_connected = args.connected;
  if (args.model == "fixedm")
    spec.model = bgproj::GenModel::FixedM;
  else if (args.model == "complete")
    spec.model = bgproj::GenModel::Complete;
  else
    spec.model = bgproj::GenModel::Gnp;

  const bgproj::BipartiteGraph g =
      args.pendant_pair ? bgproj::generate_with_pendant_pair(spec) : bgproj::generate(spec);
  write_output(args.output, [&](std::ostream& out) { bgproj::write_edge_list(out, g); });
  return kExitOk;
}

struct BenchArgs {
  std::string sizes;
  std::string model = "gnp";
  double p = 0.5;
  double m_factor = 2.0;
  std::uint64_t seed = 0;
  int reps = 5;
  std::string output;
};

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= item.size())
      throw CLI::ValidationError("--sizes", "expected a comma list of n1xn2 entries");
    sizes.emplace_back(std::stoull(item.substr(0, x)), std::stoull(item.substr(x + 1)));
  }
  if (sizes.empty()) throw CLI::ValidationError("--sizes", "expected at least one n1xn2 entry");
  return sizes;
}

int cmd_bench(const BenchArgs& args) {
  bgproj::BenchConfig config;
  config.sizes = parse_sizes(args.sizes);
  config.p = args.p;
  config.m_factor = args.m_factor;
  config.seed = args.seed;
  config.repetitions = args.reps;
  if (args.model == "fixedm")
    config.model = bgproj::BenchModel::FixedM;
  else if (args.model == "complete")
    config.model = bgproj::BenchModel::Complete;
  else if (args.model == "blocks")
    config.model = bgproj::BenchModel::Blocks;
  else
    config.model = bgproj::BenchModel::Gnp;

  const auto records = bgproj::run_bench(config, &std::cerr);
  write_output(args.output, [&](std::ostream& out) { bgproj::write_bench_csv(out, records); });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite graph one-mode projection toolkit"};
  app.require_subcommand(1);

  ProjectArgs project_args;
  auto* project = app.add_subcommand("project", "compute a one-mode projection");
  project->add_option("input", project_args.input, "input graph file")->required();
  project->add_option("--side", project_args.side, "which side survives: u or s")
      ->check(CLI::IsMember({"u", "s"}));
  project->add_flag("--weighted", project_args.weighted, "emit shared-neighbor counts");
  project->add_option("--algo", project_args.algo, "unweighted algorithm: matrix or sparse")
      ->check(CLI::IsMember({"matrix", "sparse"}));
  project->add_option("--format", project_args.format, "input format: auto, biadj or edgelist")
      ->check(CLI::IsMember({"auto", "biadj", "edgelist"}));
  project->add_flag("--as-matrix", project_args.as_matrix,
                    "write a dense 0/1 adjacency matrix instead of an edge list");
  project->add_option("--output", project_args.output, "output file (default stdout)");

  InputArgs stats_args;
  auto* stats = app.add_subcommand("stats", "print size, degree and density figures");
  stats->add_option("input", stats_args.input, "input graph file")->required();
  stats->add_option("--format", stats_args.format, "input format: auto, biadj or edgelist")
      ->check(CLI::IsMember({"auto", "biadj", "edgelist"}));
  stats->add_option("--output", stats_args.output, "output file (default stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check the projection properties");
  verify->add_option("input", verify_args.input, "input graph file")->required();
  verify->add_option("--format", verify_args.format, "input format: auto, biadj or edgelist")
      ->check(CLI::IsMember({"auto", "biadj", "edgelist"}));
  verify->add_option("--output", verify_args.output, "report file (default stdout)");
  verify->add_option("--json", verify_args.json_path, "also write a JSON report here");
  verify->add_flag("--debug-corrupt", verify_args.debug_corrupt,
                   "tamper with the projections first (exercises FAIL paths)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a seeded random graph");
  gen->add_option("--n1", gen_args.n1, "U-side vertex count")->required();
  gen->add_option("--n2", gen_args.n2, "S-side vertex count")->required();
  gen->add_option("--model", gen_args.model, "gnp, fixedm or complete")
      ->check(CLI::IsMember({"gnp", "fixedm", "complete"}));
  gen->add_option("--p", gen_args.p, "gnp edge probability");
  gen->add_option("--m", gen_args.m, "fixedm edge count");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_flag("--connected", gen_args.connected, "reject disconnected draws");
  gen->add_flag("--pendant-pair", gen_args.pendant_pair,
                "attach an isolated pendant edge to a connected base");
  gen->add_option("--output", gen_args.output, "output file (default stdout)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time both projection algorithms");
  bench->add_option("--sizes", bench_args.sizes, "comma list of n1xn2 workload sizes")
      ->required();
  bench->add_option("--model", bench_args.model, "gnp, fixedm, complete or blocks")
      ->check(CLI::IsMember({"gnp", "fixedm", "complete", "blocks"}));
  bench->add_option("--p", bench_args.p, "gnp edge probability");
  bench->add_option("--m-factor", bench_args.m_factor,
                    "fixedm: edges per vertex, m = m_factor * (n1 + n2)");
  bench->add_option("--seed", bench_args.seed, "generator seed");
  bench->add_option("--reps", bench_args.reps, "repetitions per measurement (>= 3)")
      ->check(CLI::Range(3, 1000));
  bench->add_option("--output", bench_args.output, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*project) return cmd_project(project_args);
    if (*stats) return cmd_stats(stats_args);
    if (*verify) return cmd_verify(verify_args);
    if (*gen) return cmd_gen(gen_args);
    if (*bench) return cmd_bench(bench_args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const bgproj::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
