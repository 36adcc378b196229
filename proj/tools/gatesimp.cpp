// gatesimp: gate-vertex discovery, gate graphs and their verification.
//
// Exit codes: 0 success, 2 usage or argument error, 3 verification failure,
// 4 resource guard hit.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gatesimp/gatesimp.hpp"
#include "gatesimp/report_json.hpp"

namespace fs = std::filesystem;
using namespace gatesimp;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitResource = 4;

struct InputSpec {
  std::string input;
  std::string family;
  std::size_t n = 0;
  double density = 2;
  std::uint64_t seed = 1;
};

struct Options {
  InputSpec in;
  std::string mode = "gate";
  std::optional<Hops> epsilon;
  std::optional<Hops> k;
  std::string method = "sc";
  std::string gates_file;
  std::string out_dir = ".";
  std::string name = "graph";
  std::string dump_instance;
  std::string u, v;
  bool no_sparsify = false;
  bool no_self_check = false;
  bool precompute_balls = false;
  bool omit_timing = false;
  std::size_t sample = 0;
  std::size_t apsp_max = ApspGuard{}.max_vertices;

  // bench
  std::vector<std::string> graph_specs;
  std::vector<std::string> inputs;
  std::vector<Hops> epsilons{3};
  std::vector<std::string> methods{"sc", "fs"};
  bool verify = false;
  bool doubled_edges = false;
  std::string csv_out;
};

void add_input_options(CLI::App* app, InputSpec& in) {
  app->add_option("--input", in.input, "Edge-list file");
  app->add_option("--family", in.family, "Generator family: er|sf|path|cycle|star|complete");
  app->add_option("--n", in.n, "Vertex count for --family");
  app->add_option("--density", in.density, "Edges per vertex for er/sf");
  app->add_option("--seed", in.seed, "Generator seed");
}

Graph make_family(const std::string& family, std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw ArgumentError("--n must be positive for --family " + family);
  if (family == "er") return gen_er(n, density, seed);
  if (family == "sf" || family == "scale_free") return gen_scale_free(n, density, seed);
  if (family == "path") return fixtures::path(n);
  if (family == "cycle") return fixtures::cycle(n);
  if (family == "star") return fixtures::star(n - 1);
  if (family == "complete") return fixtures::complete(n);
  throw ArgumentError("unknown family '" + family + "'");
}

Graph load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open " + path);
  return load_edge_list(f).graph;
}

Graph load_input(const InputSpec& in) {
  if (in.input.empty() == in.family.empty())
    throw ArgumentError("give exactly one of --input FILE or --family NAME");
  if (!in.input.empty()) return load_file(in.input);
  return make_family(in.family, in.n, in.density, in.seed);
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream f(p);
  if (!f) throw ArgumentError("cannot write " + p.string());
  return f;
}

DiscoverOptions discover_options(const Options& o) {
  DiscoverOptions d;
  d.self_check = !o.no_self_check;
  d.guard.max_vertices = o.apsp_max;
  return d;
}

Hops require_param(const std::optional<Hops>& p, const char* flag) {
  if (!p) throw ArgumentError(std::string("missing ") + flag);
  return *p;
}

GateVertexSet discover(const Graph& g, const Options& o) {
  const auto method = parse_method(o.method);
  const auto mode = parse_cover_mode(o.mode);
  const auto opt = discover_options(o);
  if (mode == CoverMode::kKSkip) return discover_kskip(g, require_param(o.k, "--k"), method, opt);
  const Hops eps = require_param(o.epsilon, "--epsilon");
  switch (method) {
    case DiscoveryMethod::kSetCover: return discover_sc(g, eps, opt);
    case DiscoveryMethod::kSampling: return discover_fs(g, eps, opt);
    case DiscoveryMethod::kExact: return discover_exact_gates(g, eps, opt);
  }
  throw ArgumentError("unreachable");
}

// Gate set from --gates FILE, else discovered in gate mode at --epsilon.
GateVertexSet obtain_gates(const Graph& g, Options& o) {
  if (!o.gates_file.empty()) {
    std::ifstream f(o.gates_file);
    if (!f) throw ArgumentError("cannot open " + o.gates_file);
    auto gs = read_gate_set(f, g);
    if (gs.mode != CoverMode::kGate)
      throw ArgumentError("gate file holds a k-skip cover; gate graphs need a gate set");
    if (o.epsilon && *o.epsilon != gs.param)
      throw ArgumentError("--epsilon " + std::to_string(*o.epsilon) +
                          " disagrees with gate file epsilon " + std::to_string(gs.param));
    o.epsilon = gs.param;
    return gs;
  }
  if (o.mode != "gate") throw ArgumentError("gate graphs need --mode gate");
  return discover(g, o);
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

VertexId resolve(const Graph& g, const std::string& label) {
  auto id = g.find_label(label);
  if (!id) throw ArgumentError("unknown vertex '" + label + "'");
  return *id;
}

GraphStats stats_for(const Graph& g, std::uint64_t seed) {
  const bool exact = g.num_vertices() <= 5000;
  return graph_stats(g, {.exact = exact, .samples = 64, .seed = seed});
}

// ---- subcommands ---------------------------------------------------------

int cmd_generate(Options& o) {
  if (o.in.family.empty()) throw ArgumentError("generate needs --family");
  auto g = make_family(o.in.family, o.in.n, o.in.density, o.in.seed);
  const fs::path dir(o.out_dir);
  auto edges_path = dir / (o.name + ".edges");
  auto labels_path = dir / (o.name + ".labels");
  {
    auto f = open_out(edges_path);
    write_edge_list(f, g);
  }
  {
    auto f = open_out(labels_path);
    write_label_table(f, g);
  }
  json j = to_json(stats_for(g, o.in.seed));
  j["family"] = o.in.family;
  j["seed"] = o.in.seed;
  j["edges_file"] = edges_path.string();
  j["labels_file"] = labels_path.string();
  print(j);
  return 0;
}

int cmd_discover(Options& o) {
  auto g = load_input(o.in);
  auto gs = discover(g, o);
  if (!o.dump_instance.empty()) {
    const auto mode = parse_cover_mode(o.mode);
    auto inst = mode == CoverMode::kGate
                    ? build_instance_bfs(g, gs.param)
                    : build_instance_oracle(g, gs.param, mode, {o.apsp_max});
    auto f = open_out(o.dump_instance);
    write_instance(f, inst);
  }
  const auto gates_path = fs::path(o.out_dir) / "gates.txt";
  {
    auto f = open_out(gates_path);
    write_gate_set(f, g, gs);
  }
  json j = to_json(g, gs, !o.omit_timing);
  j["gates_file"] = gates_path.string();
  print(j);
  return 0;
}

int cmd_gategraph(Options& o) {
  auto g = load_input(o.in);
  auto gs = obtain_gates(g, o);
  const Hops eps = *o.epsilon;
  auto stage1 = build_local_gate_graph(g, gs, eps);
  const fs::path dir(o.out_dir);
  {
    auto f = open_out(dir / "stage1.wedges");
    write_weighted_edges(f, g, stage1);
  }
  json j = {{"epsilon", eps}, {"gates", gs.size()}, {"edges_stage1", stage1.num_edges()}};
  if (o.no_sparsify) {
    std::error_code ec;
    fs::remove(dir / "sparsified.wedges", ec);
    j["edges_sparsified"] = nullptr;
    j["removed"] = nullptr;
    j["sparsify"] = "skipped";
  } else {
    auto sparse = sparsify(stage1);
    auto f = open_out(dir / "sparsified.wedges");
    write_weighted_edges(f, g, sparse);
    j["edges_sparsified"] = sparse.num_edges();
    j["removed"] = stage1.num_edges() - sparse.num_edges();
    j["sparsify"] = "done";
  }
  print(j);
  return 0;
}

int cmd_query(Options& o) {
  auto g = load_input(o.in);
  auto gs = obtain_gates(g, o);
  const Hops eps = *o.epsilon;
  const VertexId u = resolve(g, o.u), v = resolve(g, o.v);
  auto wg = build_local_gate_graph(g, gs, eps);
  if (!o.no_sparsify) wg = sparsify(wg);
  DistanceQuery q(g, wg, eps, o.precompute_balls);
  json j = to_json(g, q.query(u, v));
  j["u"] = o.u;
  j["v"] = o.v;
  j["epsilon"] = eps;
  print(j);
  return 0;
}

int cmd_verify(Options& o) {
  auto g = load_input(o.in);
  const ApspGuard guard{o.apsp_max};
  auto dist = apsp_oracle(g, guard);
  o.no_self_check = true;  // the checks below subsume it

  GateVertexSet gs;
  Hops eps = 0;
  std::vector<VerificationReport> reports;
  if (o.gates_file.empty() && o.mode == "kskip") {
    gs = discover(g, o);
    reports.push_back(check_kskip_cover(dist, gs.param, gs.vertices));
    eps = gs.param + 1;  // a k-skip cover is a gate set at k+1
    reports.push_back(check_gate_cover(dist, eps, gs.vertices));
    gs.mode = CoverMode::kGate;
    gs.param = eps;
  } else {
    gs = obtain_gates(g, o);
    eps = gs.param;
    reports.push_back(check_gate_cover(dist, eps, gs.vertices));
    reports.push_back(check_kskip_cover(dist, eps + 1, gs.vertices));
    if (gs.method == DiscoveryMethod::kSampling)
      reports.push_back(check_kskip_cover(dist, eps - 1, gs.vertices));
  }
  auto stage1 = build_local_gate_graph(g, gs, eps);
  auto sparse = sparsify(stage1);
  const RecoveryOptions ropt{.sample = o.sample, .seed = o.in.seed};
  auto r1 = check_recovery(g, dist, eps, gs.vertices, stage1, ropt);
  r1.check = "recovery_stage1";
  auto r2 = check_recovery(g, dist, eps, gs.vertices, sparse, ropt);
  r2.check = "recovery_sparsified";
  reports.push_back(std::move(r1));
  reports.push_back(std::move(r2));
  reports.push_back(check_sparsify_preserves(stage1, sparse));
  reports.push_back(check_sparsify_minimal(sparse));

  bool pass = true;
  json list = json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    list.push_back(to_json(r, !o.omit_timing));
  }
  json j = {{"pass", pass},
            {"epsilon", eps},
            {"method", to_string(gs.method)},
            {"gates", gs.size()},
            {"edges_stage1", stage1.num_edges()},
            {"edges_sparsified", sparse.num_edges()},
            {"size_bound_shape", size_bound_shape(g.num_vertices(), eps)},
            {"reports", list}};
  print(j);
  return pass ? 0 : kExitVerify;
}

struct Dataset {
  std::string label;
  Graph graph;
  std::uint64_t seed = 1;
};

// "family:n[:density[:seed]]"
Dataset parse_graph_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() < 2 || parts.size() > 4)
    throw ArgumentError("graph spec '" + spec + "' is not family:n[:density[:seed]]");
  try {
    const std::size_t n = std::stoul(parts[1]);
    const double density = parts.size() > 2 ? std::stod(parts[2]) : 2.0;
    const std::uint64_t seed = parts.size() > 3 ? std::stoull(parts[3]) : 1;
    return {spec, make_family(parts[0], n, density, seed), seed};
  } catch (const std::logic_error&) {
    throw ArgumentError("graph spec '" + spec + "' has a non-numeric field");
  }
}

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

int cmd_bench(Options& o) {
  std::vector<Dataset> datasets;
  for (const auto& spec : o.graph_specs) datasets.push_back(parse_graph_spec(spec));
  for (const auto& path : o.inputs)
    datasets.push_back({fs::path(path).stem().string(), load_file(path), 1});
  if (datasets.empty()) throw ArgumentError("bench needs at least one --graph or --input");
  std::vector<DiscoveryMethod> methods;
  for (const auto& m : o.methods) methods.push_back(parse_method(m));

  struct Row {
    std::string dataset;
    Hops eps;
    std::string method;
    std::string line;
  };
  std::vector<Row> rows;
  bool all_verified = true;
  for (const auto& ds : datasets) {
    const auto& g = ds.graph;
    const auto st = stats_for(g, ds.seed);
    std::optional<DistanceOracle> dist;
    if (o.verify) dist = apsp_oracle(g, {o.apsp_max});
    for (Hops eps : o.epsilons)
      for (auto method : methods) {
        Stopwatch clock;
        DiscoverOptions dopt{.self_check = false, .guard = {o.apsp_max}};
        GateVertexSet gs = method == DiscoveryMethod::kSetCover   ? discover_sc(g, eps, dopt)
                           : method == DiscoveryMethod::kSampling ? discover_fs(g, eps, dopt)
                                                                  : discover_exact_gates(g, eps, dopt);
        auto stage1 = build_local_gate_graph(g, gs, eps);
        auto sparse = sparsify(stage1);
        const double ms = clock.ms();
        std::string verified = "skipped";
        if (dist) {
          bool ok = check_gate_cover(*dist, eps, gs.vertices).pass &&
                    check_recovery(g, *dist, eps, gs.vertices, stage1).pass &&
                    check_recovery(g, *dist, eps, gs.vertices, sparse).pass &&
                    check_sparsify_preserves(stage1, sparse).pass;
          verified = ok ? "true" : "false";
          all_verified = all_verified && ok;
        }
        std::ostringstream line;
        line << ds.label << ',' << g.num_vertices() << ','
             << (o.doubled_edges ? 2 * g.num_edges() : g.num_edges()) << ',' << st.diameter << ','
             << fixed(st.avg_dist, 4) << ',' << eps << ',' << to_string(method) << ',' << gs.size()
             << ',' << stage1.num_edges() << ',' << sparse.num_edges() << ','
             << fixed(o.omit_timing ? 0.0 : ms, 3) << ',' << verified;
        rows.push_back({ds.label, eps, to_string(method), line.str()});
      }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.dataset, a.eps, a.method) < std::tie(b.dataset, b.eps, b.method);
  });

  std::ofstream file;
  if (!o.csv_out.empty()) file = open_out(o.csv_out);
  std::ostream& out = o.csv_out.empty() ? std::cout : file;
  out << "dataset,n,m,diameter,avg_dist,epsilon,method,gates,edges_stage1,edges_sparsified,"
         "build_ms,verified\n";
  for (const auto& r : rows) out << r.line << '\n';
  return all_verified ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gate-vertex sets, k-skip covers and distance-preserving gate graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--omit-timing", o.omit_timing, "Write 0 for all timing fields");
  app.add_option("--apsp-max", o.apsp_max, "Largest n allowed for all-pairs tables");

  auto* gen = app.add_subcommand("generate", "Write a generated graph as an edge list");
  add_input_options(gen, o.in);
  gen->add_option("--out", o.out_dir, "Output directory");
  gen->add_option("--name", o.name, "Base file name");

  auto add_discovery = [&](CLI::App* sub) {
    add_input_options(sub, o.in);
    sub->add_option("--mode", o.mode, "gate|kskip")->check(CLI::IsMember({"gate", "kskip"}));
    sub->add_option("--epsilon", o.epsilon, "Locality parameter");
    sub->add_option("--k", o.k, "k for --mode kskip");
    sub->add_option("--method", o.method, "sc|fs|exact")->check(CLI::IsMember({"sc", "fs", "exact"}));
    sub->add_flag("--no-self-check", o.no_self_check, "Skip the cover check on the result");
  };

  auto* disc = app.add_subcommand("discover", "Find a gate-vertex set or k-skip cover");
  add_discovery(disc);
  disc->add_option("--out", o.out_dir, "Output directory for gates.txt");
  disc->add_option("--dump-instance", o.dump_instance, "Write the set-cover instance here");

  auto* gg = app.add_subcommand("gategraph", "Build the local gate graph and sparsify it");
  add_discovery(gg);
  gg->add_option("--gates", o.gates_file, "Gate set file (otherwise discovered)");
  gg->add_option("--out", o.out_dir, "Output directory");
  gg->add_flag("--no-sparsify", o.no_sparsify, "Keep only the Stage-1 graph");

  auto* qry = app.add_subcommand("query", "Distance query through the gate graph");
  add_discovery(qry);
  qry->add_option("--gates", o.gates_file, "Gate set file (otherwise discovered)");
  qry->add_option("--u", o.u, "Source vertex label")->required();
  qry->add_option("--v", o.v, "Target vertex label")->required();
  qry->add_flag("--no-sparsify", o.no_sparsify, "Query the Stage-1 graph");
  qry->add_flag("--precompute-balls", o.precompute_balls, "Materialize every gate ball first");

  auto* ver = app.add_subcommand("verify", "Check every distance-preservation property");
  add_discovery(ver);
  ver->add_option("--gates", o.gates_file, "Gate set file (otherwise discovered)");
  ver->add_option("--sample", o.sample, "Check only this many seeded sources");

  auto* bench = app.add_subcommand("bench", "Sweep datasets x epsilon x method into CSV");
  bench->add_option("--graph", o.graph_specs, "family:n[:density[:seed]], repeatable");
  bench->add_option("--input", o.inputs, "Edge-list file, repeatable");
  bench->add_option("--epsilons", o.epsilons, "Comma-separated epsilons")->delimiter(',');
  bench->add_option("--methods", o.methods, "Comma-separated methods")->delimiter(',');
  bench->add_flag("--verify", o.verify, "Run full verification per cell");
  bench->add_flag("--doubled-edges", o.doubled_edges, "Report m counting both directions");
  bench->add_option("--out", o.csv_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*disc) return cmd_discover(o);
    if (*gg) return cmd_gategraph(o);
    if (*qry) return cmd_query(o);
    if (*ver) return cmd_verify(o);
    if (*bench) return cmd_bench(o);
  } catch (const SelfCheckError& e) {
    std::cerr << "self-check failed: " << e.what() << '\n';
    return kExitVerify;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
