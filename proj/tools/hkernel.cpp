// hkernel: command line front end. Every subcommand prints one JSON document.
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include "hyperkernel/error.hpp"
#include "hyperkernel/generators.hpp"
#include "hyperkernel/graph.hpp"
#include "hyperkernel/harness.hpp"
#include "hyperkernel/io.hpp"
#include "hyperkernel/kernels.hpp"
#include "hyperkernel/oracles.hpp"
#include "hyperkernel/planar_kernel.hpp"
#include "hyperkernel/planarity.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace hk = hyperkernel;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;

json big_to_json(const hk::big_int& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max()) {
    return value.convert_to<long long>();
  }
  return value.str();
}

json labels(std::span<const hk::vertex_id> vertices) {
  json out = json::array();
  for (auto v : vertices) out.push_back(v + 1);
  return out;
}

// Derived-graph vertices: "v<label>" for hypergraph vertices, "B<index>" for
// hyperedges, both 1-based.
std::string derived_label(const hk::tagged_graph& g, hk::vertex_id x) {
  if (g.sides[x] == hk::side::v1) return "v" + std::to_string(g.vertex_of[x] + 1);
  return "B" + std::to_string(g.edge_of[x] + 1);
}

std::string_view kuratowski_name(hk::kuratowski_kind kind) {
  switch (kind) {
    case hk::kuratowski_kind::k5: return "K5";
    case hk::kuratowski_kind::k33: return "K3,3";
    case hk::kuratowski_kind::none: break;
  }
  return "none";
}

int analyze(const std::string& path) {
  const auto h = hk::io::read_hypergraph_file(path);
  const auto report = hk::validate(h);
  json out;
  out["file"] = path;
  out["n"] = h.num_vertices();
  out["m"] = h.num_edges();
  out["uniform"] = report.uniform;
  out["simple"] = report.simple;
  out["isolated"] = labels(report.isolated);
  out["max_degree"] = report.max_degree;

  const auto incidence = hk::incidence_graph(h);
  const auto planar = hk::planarity(incidence.graph);
  out["planar"] = planar.planar;
  if (planar.planar) {
    out["embedding_verified"] = hk::verify_embedding(incidence.graph, planar.rotation);
  } else {
    json witness;
    witness["kind"] = kuratowski_name(planar.witness_kind);
    json edges = json::array();
    for (auto [u, v] : planar.witness) edges.push_back({derived_label(incidence, u), derived_label(incidence, v)});
    witness["edges"] = edges;
    out["kuratowski"] = witness;
  }

  out["fractional_cover"] = hk::oracles::fractional_cover(h).value.str();
  if (const auto mu = hk::oracles::quasi_regular_multiplicities(h)) {
    out["quasi_regularizable"] = true;
    json k = json::array();
    for (const auto& value : mu->per_edge) k.push_back(big_to_json(value));
    out["multiplicities"] = {{"r", big_to_json(mu->degree)}, {"k", k}};
  } else {
    out["quasi_regularizable"] = false;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int solve(const std::string& path, const std::string& problem) {
  const auto h = hk::io::read_hypergraph_file(path);
  json out;
  out["file"] = path;
  out["problem"] = problem;
  if (problem == "vc") {
    const auto s = hk::oracles::min_hitting_set(h);
    out["size"] = s.size;
    out["witness"] = labels(s.witness);
  } else if (problem == "is") {
    const auto s = hk::oracles::max_strong_independent_set(h);
    out["size"] = s.size;
    out["witness"] = labels(s.witness);
  } else if (problem == "ds") {
    const auto g = hk::local_complete_graph(h);
    const auto s = hk::oracles::min_dominating_set(g.graph);
    out["size"] = s.size;
    json w = json::array();
    for (auto x : s.witness) w.push_back(derived_label(g, x));
    out["witness"] = w;
  } else {
    const auto g = hk::local_complete_graph(h);
    const auto s = hk::oracles::max_induced_matching(g.graph);
    out["size"] = s.size;
    json w = json::array();
    for (auto [u, v] : s.witness) w.push_back({derived_label(g, u), derived_label(g, v)});
    out["witness"] = w;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct kernelize_args {
  std::string path;
  std::int64_t k = 0;
  std::string method;
  std::string problem = "vc";
  std::optional<std::int64_t> d;
  std::string trace_path;
  bool verify = false;
};

int kernelize(const kernelize_args& args) {
  const auto h = hk::io::read_hypergraph_file(args.path);
  const auto problem = args.problem == "is" ? hk::problem_kind::independent_set : hk::problem_kind::vertex_cover;
  const hk::instance inst(h, args.k, problem);

  hk::harness::method m = hk::harness::method::planar;
  if (args.method == "qr") m = hk::harness::method::quasi_regular;
  if (args.method == "bd") {
    m = problem == hk::problem_kind::independent_set ? hk::harness::method::bounded_degree_is
                                                     : hk::harness::method::bounded_degree_vc;
  }

  const auto report = args.verify ? hk::harness::verify_preservation(inst, m, args.path, {.degree = args.d})
                                  : hk::harness::run_kernel(inst, m, args.path, args.d);
  json out = hk::harness::to_json(report);

  const auto outcome = hk::harness::run_method(inst, m, args.d);
  if (const auto* d = std::get_if<hk::decided>(&outcome)) {
    out["reason"] = d->reason;
  } else {
    const auto& k = std::get<hk::kernel>(outcome);
    out["note"] = k.stats.note;
    out["kernel_file"] = hk::io::emit_hypergraph(k.reduced.graph);
    out["kernel_vertices"] = labels(k.reduced.graph.vertices());
  }
  if (!args.trace_path.empty() && m == hk::harness::method::planar) {
    const auto run = hk::kernelize_planar_vc_traced(inst);
    std::ofstream(args.trace_path) << hk::serialize_trace(run.fixpoint.trace);
    out["trace_steps"] = run.fixpoint.trace.steps.size();
  }
  std::cout << out.dump(2) << '\n';
  return report.oracle == hk::harness::oracle_status::fail ? exit_verification_failed : 0;
}

struct generate_args {
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> r, d, m;
  std::uint64_t seed = 0;
  std::string out_path;
};

int generate(const generate_args& args) {
  const auto f = *hk::gen::parse_family(args.family);
  hk::hypergraph h;
  switch (f) {
    case hk::gen::family::regular:
      if (!args.r) throw hk::error(hk::errc::invalid_argument, "--r is required for the regular family");
      h = hk::gen::regular(args.n, *args.r, args.seed);
      break;
    case hk::gen::family::bounded_degree:
      if (!args.d || !args.m) throw hk::error(hk::errc::invalid_argument, "--d and --m are required for bd");
      h = hk::gen::bounded_degree(args.n, *args.d, *args.m, args.seed);
      break;
    case hk::gen::family::planar:
      h = hk::gen::planar(args.n, args.seed, args.m);
      break;
  }
  const std::string text = hk::io::emit_hypergraph(h);
  if (!args.out_path.empty()) std::ofstream(args.out_path) << text;
  json out;
  out["family"] = hk::gen::to_string(f);
  out["seed"] = args.seed;
  out["n"] = h.num_vertices();
  out["m"] = h.num_edges();
  out["max_degree"] = h.max_degree();
  out["file"] = text;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int verify(const std::string& family, std::size_t count, std::uint64_t seed, bool timing) {
  const auto f = *hk::gen::parse_family(family);
  const auto result = hk::harness::verify_sweep(f, count, seed);
  std::cout << hk::harness::to_json(result, f, count, seed, timing).dump(2) << '\n';
  return result.failures == 0 ? 0 : exit_verification_failed;
}

int bounds(const std::string& alpha_d, const std::string& alpha) {
  std::optional<hk::rational> primal;
  if (!alpha.empty()) primal = hk::rational::parse(alpha);
  const auto b = hk::duality_lower_bound(hk::rational::parse(alpha_d), primal);
  json out;
  out["alpha_d"] = b.alpha_d.str();
  out["lower_bound"] = b.lower_bound.str();
  out["product"] = ((b.lower_bound - 1) * (b.alpha_d - 1)).str();
  if (b.alpha) {
    out["alpha"] = b.alpha->str();
    out["consistent"] = *b.consistent;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernelization toolkit for vertex cover on 3-uniform hypergraphs"};
  app.require_subcommand(1);

  std::string path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Structure, planarity, fractional cover, quasi-regularity");
  analyze_cmd->add_option("file", path, "Hypergraph file")->required();

  std::string problem = "vc";
  auto* solve_cmd = app.add_subcommand("solve", "Exact optimum by exhaustive search");
  solve_cmd->add_option("file", path, "Hypergraph file")->required();
  solve_cmd->add_option("--problem", problem)->check(CLI::IsMember({"vc", "is", "ds", "im"}))->required();

  kernelize_args kargs;
  auto* kernel_cmd = app.add_subcommand("kernelize", "Run a kernelization");
  kernel_cmd->add_option("file", kargs.path, "Hypergraph file")->required();
  kernel_cmd->add_option("--k", kargs.k, "Parameter")->required();
  kernel_cmd->add_option("--method", kargs.method)->check(CLI::IsMember({"qr", "bd", "planar"}))->required();
  kernel_cmd->add_option("--problem", kargs.problem)->check(CLI::IsMember({"vc", "is"}));
  kernel_cmd->add_option("--d", kargs.d, "Degree bound (default: actual max degree)");
  kernel_cmd->add_option("--trace", kargs.trace_path, "Write the planar reduction trace here");
  kernel_cmd->add_flag("--verify", kargs.verify, "Compare with the exact oracle");

  generate_args gargs;
  auto* gen_cmd = app.add_subcommand("generate", "Seeded instance generator");
  gen_cmd->add_option("--family", gargs.family)->check(CLI::IsMember({"regular", "bd", "planar"}))->required();
  gen_cmd->add_option("--n", gargs.n)->required();
  gen_cmd->add_option("--r", gargs.r);
  gen_cmd->add_option("--d", gargs.d);
  gen_cmd->add_option("--m", gargs.m);
  gen_cmd->add_option("--seed", gargs.seed)->required();
  gen_cmd->add_option("--out", gargs.out_path, "Also write the hypergraph file here");

  std::string family;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  bool no_timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Oracle-checked sweep over generated instances");
  verify_cmd->add_option("--family", family)->check(CLI::IsMember({"regular", "bd", "planar"}))->required();
  verify_cmd->add_option("--count", count)->required();
  verify_cmd->add_option("--seed", seed)->required();
  verify_cmd->add_flag("--no-timing", no_timing, "Omit timing fields");

  std::string alpha_d, alpha;
  auto* bounds_cmd = app.add_subcommand("bounds", "Parametric duality arithmetic");
  bounds_cmd->add_option("--alpha-d", alpha_d, "Dual kernel constant, e.g. 40 or 21/20")->required();
  bounds_cmd->add_option("--alpha", alpha, "Primal constant to test for consistency");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*analyze_cmd) return analyze(path);
    if (*solve_cmd) return solve(path, problem);
    if (*kernel_cmd) return kernelize(kargs);
    if (*gen_cmd) return generate(gargs);
    if (*verify_cmd) return verify(family, count, seed, !no_timing);
    if (*bounds_cmd) return bounds(alpha_d, alpha);
  } catch (const hk::error& e) {
    std::cout << json{{"error", std::string(hk::to_string(e.code()))}, {"message", e.what()}}.dump(2) << '\n';
    return exit_usage;
  }
  return exit_usage;
}
