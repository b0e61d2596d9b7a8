#include "cvc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cvc/bb.hpp"
#include "cvc/dimacs.hpp"
#include "cvc/errors.hpp"
#include "cvc/mip.hpp"
#include "cvc/oracle.hpp"
#include "cvc/random.hpp"
#include "json.hpp"

namespace cvc::cli {
namespace {

namespace fs = std::filesystem;

struct GenArgs {
  std::string model;
  int n = 0;
  std::optional<int> n2;
  double p = 0;
  std::uint64_t seed = 0;
  bool connected = false;
  int max_reseeds = 1000;
  std::string out = ".";
};

struct SolveArgs {
  std::string file;
  std::string algo = "bb";
  std::optional<double> time_limit;
  bool no_warm_start = false;
  bool no_bipartite_bound = false;
  bool no_coloring_reuse = false;
  std::string format = "text";
};

struct EmitArgs {
  std::string file;
  std::string formulation = "parb";
  std::optional<int> root;
  std::optional<int> root2;
  std::string out = "-";
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> max_n;
  std::optional<int> instances;
  std::uint64_t seed = 42;
  std::optional<std::string> dump;
};

struct BenchArgs {
  std::string suite = "both";
  int n = 100;
  std::vector<double> densities;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::optional<double> time_limit;
  int repeats = 1;
  int jobs = 1;
  std::string solver = "bb";
  int max_reseeds = 10000;
  std::string out = "-";
  std::string format = "csv";
};

std::vector<std::string> dimacs_comments(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("c ", 0) == 0) out.push_back(line.substr(2));
  }
  return out;
}

Graph load(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  Graph g = read_dimacs_file(path, &warnings);
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << "\n";
  return g;
}

// Writes to `path`, or to `out` when path is "-".
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
  if (!file) throw InputError("failed writing '" + path + "'");
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  if (a.model == "gnp" && a.n2) {
    err << "error: --n2 only applies to --model bipartite\n";
    return kUsage;
  }
  if (a.model == "bipartite" && !a.n2) {
    err << "error: --model bipartite requires --n2\n";
    return kUsage;
  }
  const int n2 = a.n2.value_or(0);
  std::uint64_t seed = a.seed;
  Graph g;
  for (int attempt = 0;; ++attempt, ++seed) {
    g = a.model == "gnp" ? gnp_random(a.n, a.p, seed) : bipartite_random(a.n, n2, a.p, seed).graph;
    if (!a.connected || is_connected(g)) break;
    err << "seed " << seed << ": disconnected, trying seed " << seed + 1 << "\n";
    if (attempt + 1 >= a.max_reseeds) {
      err << "error: no connected instance after " << a.max_reseeds << " reseeds\n";
      return kInput;
    }
  }
  fs::create_directories(a.out);
  const fs::path path = fs::path(a.out) / gen_file_name(a.model, a.n, n2, a.p, seed);
  std::ostringstream text;
  text << "c generator: " << a.model << " n=" << a.n;
  if (a.n2) text << " n2=" << n2;
  text << " p=" << a.p << "\n";
  text << "c seed: " << seed << "\n";
  text << write_dimacs(g);
  write_output(path.string(), text.str(), out);
  out << path.string() << "\n";
  return kOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = load(a.file, err);
  SolveReport report;
  if (a.algo == "oracle") {
    auto start = std::chrono::steady_clock::now();
    auto opt = oracle::brute_force_cvc(g);
    report.cover = opt.cover;
    report.cover_size = opt.size;
    report.best_bound = g.order() - opt.size;
    report.bound_kind = "exhaustive";
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  } else {
    SolverConfig cfg;
    cfg.time_limit = a.time_limit;
    cfg.use_russian_doll = a.algo == "rds";
    cfg.warm_start = !a.no_warm_start;
    cfg.use_bipartite_bound = !a.no_bipartite_bound;
    cfg.coloring_reuse = !a.no_coloring_reuse;
    report = solve_cvc_bb(g, cfg);
  }
  if (!oracle::check_cvc(g, report.cover).valid()) {
    err << "internal error: solver returned an invalid cover\n";
    return kVerifyFailed;
  }

  const std::string name = fs::path(a.file).stem().string();
  const auto cover = report.cover.to_vector();
  if (a.format == "json") {
    nlohmann::json j{{"instance", a.file},
                     {"n", g.order()},
                     {"m", g.size()},
                     {"algo", a.algo},
                     {"status", to_string(report.status)},
                     {"cover_size", report.cover_size},
                     {"cover", cover},
                     {"nodes", report.node_count},
                     {"time_s", report.wall_time},
                     {"best_bound", report.best_bound},
                     {"bound_kind", report.bound_kind},
                     {"bound_evaluations", report.bound_evaluations},
                     {"coloring_recomputations", report.coloring_recomputations},
                     {"prunes", report.prunes}};
    out << j.dump(2) << "\n";
  } else if (a.format == "csv") {
    BenchRecord rec{name, g.order(), g.size(), std::nullopt, report.cover_size,
                    a.algo == "oracle" ? "oracle" : a.algo, report.wall_time, report.node_count,
                    to_string(report.status), std::nullopt};
    out << kCsvHeader << "\n" << to_csv_row(rec) << "\n";
  } else {
    out << "instance: " << a.file << "\n"
        << "n: " << g.order() << " m: " << g.size() << "\n"
        << "algo: " << a.algo << "\n"
        << "status: " << to_string(report.status) << "\n"
        << "cvc: " << report.cover_size << "\n"
        << "cover: " << join(cover) << "\n"
        << "nodes: " << report.node_count << "\n"
        << "time_s: " << report.wall_time << "\n"
        << "best_bound: " << report.best_bound << "\n"
        << "bound: " << report.bound_kind << "\n";
  }
  return report.status == SolveStatus::optimal ? kOk : kTimeLimit;
}

int cmd_emit(const EmitArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = load(a.file, err);
  const int n = g.order();
  auto in_range = [&](std::optional<int> v, const char* flag) {
    if (v && (*v < 0 || *v >= n)) {
      err << "error: " << flag << " " << *v << " is not a vertex (0.." << n - 1 << ")\n";
      return false;
    }
    return true;
  };
  if (!in_range(a.root, "--root") || !in_range(a.root2, "--root2")) return kUsage;

  mip::MipModel model;
  std::string selection = "user";
  if (a.formulation == "pstp") {
    if (n > mip::kPstpCap) {
      err << "error: pstp refused for n = " << n << ": the subtour rows grow as 2^n, cap is "
          << mip::kPstpCap << " vertices; use --formulation parb\n";
      return kInput;
    }
    model = mip::build_pstp(g);
  } else if (a.formulation == "qr") {
    int r = a.root.value_or(-1);
    if (r < 0) {
      selection = "default";
      r = n > 0 && g.size() > 0 ? mip::default_roots(g).first : 0;
    }
    model = mip::build_qr(mip::bidirected_rooted(g, r));
  } else {
    if (g.size() == 0) {
      err << "error: parb needs at least one edge for its roots\n";
      return kInput;
    }
    auto [r, r1] = mip::default_roots(g);
    if (a.root) {
      r = *a.root;
      if (!a.root2) {
        if (g.degree(r) == 0) {
          err << "error: root " << r << " has no neighbors\n";
          return kUsage;
        }
        r1 = g.neighbors(r).front();
        for (int w : g.neighbors(r))
          if (g.degree(w) > g.degree(r1)) r1 = w;
      }
    }
    if (a.root2) r1 = *a.root2;
    if (!a.root && !a.root2) selection = "default";
    if (!g.adjacent(r, r1)) {
      err << "error: --root2 " << r1 << " is not adjacent to root " << r
          << "; valid choices: " << join(g.neighbors(r)) << "\n";
      return kUsage;
    }
    model = mip::build_parb(g, r, r1);
  }
  model.add_comment("root selection: " + (a.formulation == "pstp" ? std::string("none") : selection));
  model.add_comment("source: " + fs::path(a.file).filename().string());
  for (const auto& c : dimacs_comments(a.file)) model.add_comment(c);
  write_output(a.out, mip::write_lp(model), out);
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const bool all = a.suite == "all";
  int code = kOk;
  auto options = [&](int default_min, int default_max, int default_count) {
    VerifyOptions o;
    o.min_n = default_min;
    o.max_n = a.max_n.value_or(default_max);
    o.instances = a.instances.value_or(default_count);
    o.seed = a.seed;
    if (o.max_n < o.min_n) o.min_n = o.max_n;
    return o;
  };
  auto cap = [&](VerifyOptions o, int limit) {
    if (o.max_n > limit) {
      err << "note: --max-n capped at " << limit << " for this suite\n";
      o.max_n = limit;
      o.min_n = std::min(o.min_n, limit);
    }
    return o;
  };
  if (all || a.suite == "parb")
    code = std::max(code, report_suite(verify_parb_suite(cap(options(2, 8, 100), 10)), out, err, a.dump));
  if (all || a.suite == "pstp")
    code = std::max(code, report_suite(verify_pstp_suite(cap(options(2, 8, 100), 10)), out, err, a.dump));
  if (all || a.suite == "bb")
    code = std::max(code, report_suite(verify_bb_suite(cap(options(4, 12, 100), oracle::kDefaultCap)), out, err, a.dump));
  return code;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchParams params;
  params.suites = a.suite == "both" ? std::vector<std::string>{"gnp", "bipartite"}
                                    : std::vector<std::string>{a.suite};
  params.n = a.n;
  if (!a.densities.empty()) params.gnp_densities = params.bipartite_densities = a.densities;
  params.seeds = a.seeds;
  params.time_limit = a.time_limit;
  params.repeats = a.repeats;
  params.jobs = a.jobs;
  params.solver = a.solver;
  params.max_reseeds = a.max_reseeds;

  // Fail on an unwritable destination before spending time on the solves.
  if (a.out != "-") {
    std::ofstream probe(a.out, std::ios::app);
    if (!probe) throw InputError("cannot write '" + a.out + "'");
  }
  auto rows = run_bench(params, err);
  std::string text;
  if (a.format == "json") {
    text = to_json(rows);
  } else {
    text = std::string(kCsvHeader) + "\n";
    for (const auto& r : rows) text += to_csv_row(r) + "\n";
  }
  write_output(a.out, text, out);
  return kOk;
}

}  // namespace

int report_suite(const SuiteResult& result, std::ostream& out, std::ostream& err,
                 const std::optional<std::string>& dump_dir) {
  out << result.suite << ": " << (result.passed ? "PASS" : "FAIL") << " (" << result.instances
      << " instances)";
  if (!result.passed) out << " " << result.detail;
  out << "\n";
  if (result.passed) return kOk;
  if (result.counterexample) {
    const std::string text = write_dimacs(*result.counterexample);
    err << "counterexample (" << result.suite << "):\n" << text;
    if (dump_dir) {
      fs::create_directories(*dump_dir);
      const fs::path path = fs::path(*dump_dir) / (result.suite + "_counterexample.col");
      write_output(path.string(), text, out);
      err << "written to " << path.string() << "\n";
    }
  }
  return kVerifyFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact connected vertex cover toolkit", "cvc"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance as DIMACS");
  gen_cmd->add_option("--model", gen.model, "gnp or bipartite")
      ->required()
      ->check(CLI::IsMember({"gnp", "bipartite"}));
  gen_cmd->add_option("--n", gen.n, "Vertices (left side for bipartite)")->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--n2", gen.n2, "Right side size (bipartite)")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--p", gen.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_flag("--connected", gen.connected, "Step the seed by +1 until connected");
  gen_cmd->add_option("--max-reseeds", gen.max_reseeds, "Attempts allowed with --connected")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", gen.out, "Output directory");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a DIMACS instance");
  solve_cmd->add_option("file", solve.file, "DIMACS edge file")->required();
  solve_cmd->add_option("--algo", solve.algo, "bb, rds or oracle")->check(CLI::IsMember({"bb", "rds", "oracle"}));
  solve_cmd->add_option("--time-limit", solve.time_limit, "Seconds")
      ->envname(kTimeLimitEnv)
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--no-warm-start", solve.no_warm_start);
  solve_cmd->add_flag("--no-bipartite-bound", solve.no_bipartite_bound);
  solve_cmd->add_flag("--no-coloring-reuse", solve.no_coloring_reuse);
  solve_cmd->add_option("--format", solve.format)->check(CLI::IsMember({"text", "csv", "json"}));

  EmitArgs emit;
  auto* emit_cmd = app.add_subcommand("emit", "Write a formulation as an LP file");
  emit_cmd->add_option("file", emit.file, "DIMACS edge file")->required();
  emit_cmd->add_option("--formulation", emit.formulation)->check(CLI::IsMember({"parb", "pstp", "qr"}));
  emit_cmd->add_option("--root", emit.root, "Main root (0-based)");
  emit_cmd->add_option("--root2", emit.root2, "Secondary root, adjacent to --root (0-based)");
  emit_cmd->add_option("--out", emit.out, "Output path, - for stdout");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive self-checks");
  verify_cmd->add_option("--suite", verify.suite)->check(CLI::IsMember({"parb", "pstp", "bb", "all"}));
  verify_cmd->add_option("--max-n", verify.max_n)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--instances", verify.instances)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--dump", verify.dump, "Directory for counterexample files");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark table over seeded random instances");
  bench_cmd->add_option("--suite", bench.suite)->check(CLI::IsMember({"gnp", "bipartite", "both"}));
  bench_cmd->add_option("--n", bench.n, "Vertices per instance")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--densities", bench.densities)->delimiter(',')->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--seeds", bench.seeds)->delimiter(',');
  bench_cmd->add_option("--time-limit", bench.time_limit, "Seconds per solve")
      ->envname(kTimeLimitEnv)
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeats", bench.repeats)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--jobs", bench.jobs)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--solver", bench.solver)->check(CLI::IsMember({"bb", "rds", "oracle"}));
  bench_cmd->add_option("--max-reseeds", bench.max_reseeds)->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--out", bench.out, "CSV/JSON path, - for stdout");
  bench_cmd->add_option("--format", bench.format)->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
    if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
    if (emit_cmd->parsed()) return cmd_emit(emit, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}

}  // namespace cvc::cli
