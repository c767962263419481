#include "cli.hpp"

#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gdf/error.hpp"
#include "gdf/generators.hpp"
#include "gdf/graph_io.hpp"
#include "gdf/instance_io.hpp"
#include "gdf/orderings.hpp"
#include "gdf/problems.hpp"
#include "gdf/solvers.hpp"
#include "gdf/transforms.hpp"
#include "selftest/acceptance.hpp"

namespace gdf::cli {
namespace {

/// Unreadable files are usage errors, like bad flags.
class FileError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string provenance(const std::vector<std::string>& args) {
  std::string line = "c produced-by";
  for (const auto& a : args) line += ' ' + a;
  return line + '\n';
}

void write_reduction(std::ostream& out, const std::vector<std::string>& args, const Reduction& red) {
  out << provenance(args) << value_map_header(red.value_map);
  for (const auto& line : red.lift.describe()) out << "# " << line << '\n';
  out << serialize_instance(red.output);
}

struct SolveArgs {
  std::string instance;
  std::string order;
  bool oracle = false;
  std::uint64_t budget = OracleOptions{}.budget;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const GenInstance inst = parse_instance(read_file(a.instance));
  std::optional<EliminationOrder> order;
  if (!a.order.empty()) order = parse_order(read_file(a.order), inst.size(), OrderKind::StrongElimination);
  SolveOptions options;
  options.force_oracle = a.oracle;
  options.oracle.budget = a.budget;
  const Solution s = solve(inst, order, options);
  out << "optimum " << s.optimum << '\n' << "method " << to_string(s.method) << '\n';
  for (Vertex v = 0; v < inst.size(); ++v) out << "f " << v + 1 << ' ' << s.assignment[v] << '\n';
  return kOk;
}

struct TransformArgs {
  std::string kind;
  std::string instance;
  Value ell = 1;
  Value max_cap = 1;
};

int cmd_transform(const TransformArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  const std::string text = read_file(a.instance);
  if (a.kind == "w0") {
    const ParsedLabelled parsed = parse_labelled(text);
    write_reduction(out, args, from_labelled(parsed.instance, parsed.sense));
    return kOk;
  }
  const GenInstance inst = parse_instance(text);
  if (a.kind == "free") {
    write_reduction(out, args, free_reduction(inst, a.ell));
  } else if (a.kind == "uniformize") {
    write_reduction(out, args, uniformize_packing(inst));
  } else {
    write_reduction(out, args, flatten_capacities(inst, a.max_cap));
  }
  return kOk;
}

struct VerifyArgs {
  std::string graph;
  std::string order;
  std::string kind = "strong";
};

int cmd_verify_order(const VerifyArgs& a, std::ostream& out) {
  const Graph g = parse_graph_block(read_file(a.graph));
  const OrderKind kind = a.kind == "maxnbr" ? OrderKind::MaxNeighborhood : OrderKind::StrongElimination;
  const EliminationOrder order = parse_order(read_file(a.order), g.vertex_count(), kind);
  const OrderCheck check =
      kind == OrderKind::StrongElimination ? verify_strong_elimination(g, order) : verify_max_neighborhood(g, order);
  if (check) {
    out << "accept " << to_string(kind) << '\n';
    return kOk;
  }
  out << "reject " << to_string(kind) << ": " << check.violation->describe(order) << '\n';
  return kDomain;
}

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double p = 0.5;
};

int cmd_gen(const GenArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  Graph g = a.family == "tree"       ? gen_random_tree(a.n, a.seed)
            : a.family == "interval" ? gen_random_interval_graph(a.n, a.seed)
                                     : gen_random_graph(a.n, a.p, a.seed);
  out << provenance(args) << serialize_graph(g);
  return kOk;
}

int cmd_selftest(std::uint64_t seed, bool skip_timing, std::ostream& out) {
  selftest::AcceptanceOptions options;
  options.seed = seed;
  options.skip_timing = skip_timing;
  const auto results = selftest::run_acceptance(options);
  selftest::print_results(out, results);
  return selftest::all_passed(results) ? kOk : kDomain;
}

int usage_kind(ErrorKind kind) {
  return kind == ErrorKind::Parse || kind == ErrorKind::Input ? kUsage : kDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized domination and packing functions"};
  app.name("gdf");
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance (greedy on a strong elimination ordering, else brute force)");
  solve_cmd->add_option("--instance", solve_args.instance, "Instance file")->required();
  solve_cmd->add_option("--order", solve_args.order, "Strong elimination ordering file");
  solve_cmd->add_flag("--oracle", solve_args.oracle, "Force the brute-force oracle");
  solve_cmd->add_option("--budget", solve_args.budget, "Oracle trial budget")->check(CLI::PositiveNumber);

  std::string dual_instance;
  auto* dual_cmd = app.add_subcommand("dualize", "Swap dominate and pack via k' = u(N[v]) - k");
  dual_cmd->add_option("--instance", dual_instance, "Instance file")->required();

  TransformArgs transform_args;
  auto* transform_cmd = app.add_subcommand("transform", "Apply a value-preserving reduction");
  transform_cmd->add_option("kind", transform_args.kind, "w0 | free | uniformize | flatten")
      ->required()
      ->check(CLI::IsMember({"w0", "free", "uniformize", "flatten"}));
  transform_cmd->add_option("--instance", transform_args.instance, "Instance file (labelled file for w0)")->required();
  transform_cmd->add_option("--ell", transform_args.ell, "Number of levels for free")->check(CLI::NonNegativeNumber);
  transform_cmd->add_option("--max-cap", transform_args.max_cap, "Cap bound for flatten")->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-order", "Check an elimination ordering");
  verify_cmd->add_option("--graph", verify_args.graph, "Graph or instance file")->required();
  verify_cmd->add_option("--order", verify_args.order, "Order file")->required();
  verify_cmd->add_option("--kind", verify_args.kind, "strong | maxnbr")->check(CLI::IsMember({"strong", "maxnbr"}));

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random graph");
  gen_cmd->add_option("family", gen_args.family, "tree | interval | gnp")
      ->required()
      ->check(CLI::IsMember({"tree", "interval", "gnp"}));
  gen_cmd->add_option("n", gen_args.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_args.seed, "Random seed")->required();
  gen_cmd->add_option("--p", gen_args.p, "Edge probability for gnp")->check(CLI::Range(0.0, 1.0));

  std::uint64_t selftest_seed = selftest::AcceptanceOptions{}.seed;
  bool skip_timing = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest_cmd->add_option("--seed", selftest_seed, "Base seed");
  selftest_cmd->add_flag("--skip-timing", skip_timing, "Do not check the wall-clock scaling ratio");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;  // --help
    err << "error: usage\n";
    return kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out);
    if (*dual_cmd) {
      const auto red = dualize(parse_instance(read_file(dual_instance)));
      out << provenance(args) << value_map_header(red.value_map) << serialize_instance(red.output);
      return kOk;
    }
    if (*transform_cmd) return cmd_transform(transform_args, args, out);
    if (*verify_cmd) return cmd_verify_order(verify_args, out);
    if (*gen_cmd) return cmd_gen(gen_args, args, out);
    if (*selftest_cmd) return cmd_selftest(selftest_seed, skip_timing, out);
  } catch (const FileError& e) {
    err << e.what() << "\nerror: io\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\nerror: " << to_string(e.kind()) << '\n';
    return usage_kind(e.kind());
  }
  return kUsage;
}

}  // namespace gdf::cli
