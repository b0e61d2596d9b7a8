#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <set>
#include <ostream>
#include <thread>

#include "cvc/bb.hpp"
#include "cvc/cli.hpp"
#include "cvc/errors.hpp"
#include "cvc/oracle.hpp"
#include "cvc/random.hpp"
#include "json.hpp"

namespace cvc::cli {

std::string density_tag(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  std::string tag;
  for (char ch : std::string(buf))
    if (ch != '.') tag += ch;
  return tag;
}

std::string gen_file_name(const std::string& model, int n, int n2, double p, std::uint64_t seed) {
  if (model == "gnp")
    return "G_gnp_" + std::to_string(n) + "_" + density_tag(p) + "_s" + std::to_string(seed) + ".col";
  return "G_bip_" + std::to_string(n) + "x" + std::to_string(n2) + "_" + density_tag(p) + "_s" +
         std::to_string(seed) + ".col";
}

std::string to_csv_row(const BenchRecord& r) {
  char time_buf[32];
  std::snprintf(time_buf, sizeof time_buf, "%.4f", r.time_s);
  std::string row = r.name + "," + std::to_string(r.n) + "," + std::to_string(r.m) + ",";
  row += (r.vc ? std::to_string(*r.vc) : "") + ",";
  row += (r.status == "disconnected" ? "" : std::to_string(r.cvc)) + ",";
  row += r.solver + "," + time_buf + "," + std::to_string(r.nodes) + "," + r.status + ",";
  row += r.seed ? std::to_string(*r.seed) : "";
  return row;
}

std::string to_json(const std::vector<BenchRecord>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"name", r.name},     {"n", r.n},         {"m", r.m},
                     {"cvc", r.cvc},       {"solver", r.solver}, {"time_s", r.time_s},
                     {"nodes", r.nodes},   {"status", r.status}};
    j["vc"] = r.vc ? nlohmann::json(*r.vc) : nlohmann::json(nullptr);
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    if (r.status == "disconnected") j["cvc"] = nullptr;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

namespace {

struct Instance {
  std::string family;
  double p = 0;
  std::uint64_t requested_seed = 0;
  std::optional<std::uint64_t> seed;  // first connected seed
  Graph graph;
};

// Steps the seed by +1 until the instance is connected, skipping seeds
// already taken by earlier rows of the same (family, p) series.
Instance make_instance(const std::string& family, int n, double p, std::uint64_t seed,
                       int max_reseeds, std::set<std::uint64_t>& taken) {
  Instance inst{family, p, seed, std::nullopt, {}};
  for (int k = 0; k <= max_reseeds; ++k) {
    const std::uint64_t s = seed + k;
    if (taken.count(s)) continue;
    Graph g = family == "gnp" ? gnp_random(n, p, s) : bipartite_random(n / 2, n - n / 2, p, s).graph;
    if (is_connected(g)) {
      taken.insert(s);
      inst.seed = s;
      inst.graph = std::move(g);
      return inst;
    }
    if (k == 0) inst.graph = std::move(g);
  }
  return inst;
}

BenchRecord solve_instance(const Instance& inst, const BenchParams& params) {
  BenchRecord rec;
  const Graph& g = inst.graph;
  rec.name = std::string(inst.family == "gnp" ? "gnp" : "bip") + "_" + std::to_string(g.order()) +
             "_" + density_tag(inst.p) + "_s" + std::to_string(inst.seed.value_or(inst.requested_seed));
  rec.n = g.order();
  rec.m = g.size();
  rec.solver = params.solver;
  rec.seed = inst.seed.value_or(inst.requested_seed);
  if (!inst.seed) {
    rec.status = "disconnected";
    return rec;
  }

  SolverConfig cfg;
  cfg.time_limit = params.time_limit;
  cfg.use_russian_doll = params.solver == "rds";
  if (g.order() <= params.oracle_cap) {
    rec.vc = oracle::brute_force_vc(g, params.oracle_cap);
  } else {
    auto vc = solve_vc_bb(g, cfg);
    if (vc.status == SolveStatus::optimal) rec.vc = vc.cover_size;
  }

  double total_time = 0;
  std::optional<long long> nodes;
  bool consistent = true;
  SolveStatus status = SolveStatus::optimal;
  for (int rep = 0; rep < params.repeats; ++rep) {
    if (params.solver == "oracle") {
      auto start = std::chrono::steady_clock::now();
      auto opt = oracle::brute_force_cvc(g, params.oracle_cap);
      total_time += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rec.cvc = opt.size;
      nodes = 0;
      continue;
    }
    auto report = solve_cvc_bb(g, cfg);
    total_time += report.wall_time;
    rec.cvc = report.cover_size;
    if (nodes && *nodes != report.node_count) consistent = false;
    nodes = report.node_count;
    if (report.status == SolveStatus::time_limit) status = SolveStatus::time_limit;
  }
  rec.time_s = total_time / params.repeats;
  rec.nodes = nodes.value_or(0);
  // Node counts only match across repeats when no run hit the time limit.
  rec.status = to_string(status);
  if (!consistent && status == SolveStatus::optimal) rec.status = "nondeterministic";
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchParams& params, std::ostream& log) {
  if (params.repeats < 1) throw InputError("--repeats must be at least 1");
  if (params.jobs < 1) throw InputError("--jobs must be at least 1");
  if (params.solver == "oracle" && params.n > params.oracle_cap)
    throw InputError("oracle solver refused: n = " + std::to_string(params.n) + " exceeds cap " +
                     std::to_string(params.oracle_cap));

  std::vector<Instance> instances;
  for (const auto& suite : params.suites) {
    const auto& densities = suite == "gnp" ? params.gnp_densities : params.bipartite_densities;
    for (double p : densities) {
      // Requested seeds are reserved so stepping never lands on a later one.
      std::set<std::uint64_t> taken(params.seeds.begin(), params.seeds.end());
      for (auto seed : params.seeds) {
        taken.erase(seed);
        auto inst = make_instance(suite, params.n, p, seed, params.max_reseeds, taken);
        if (!inst.seed)
          log << suite << " p=" << p << " seed " << seed << ": no connected instance within "
              << params.max_reseeds << " reseeds\n";
        else if (*inst.seed != seed)
          log << suite << " p=" << p << " seed " << seed << " disconnected, using seed "
              << *inst.seed << "\n";
        instances.push_back(std::move(inst));
      }
    }
  }

  std::vector<BenchRecord> rows(instances.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&]() {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      rows[i] = solve_instance(instances[i], params);
      std::lock_guard lock(log_mutex);
      log << rows[i].name << ": cvc " << rows[i].cvc << ", " << rows[i].nodes << " nodes, "
          << rows[i].time_s << " s, " << rows[i].status << "\n";
    }
  };
  if (params.jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < params.jobs; ++j) pool.emplace_back(worker);
  }
  return rows;
}

}  // namespace cvc::cli
