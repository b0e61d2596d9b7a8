#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvc/verify.hpp"

namespace cvc::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,          // optimal / pass
  kUsage = 2,       // bad flags
  kInput = 3,       // unreadable, malformed or disconnected input; refusals
  kTimeLimit = 4,   // solve stopped by the time limit
  kVerifyFailed = 5 // a self-check failed
};

/// Default time limit (seconds) for `solve` and `bench` when no flag is given.
inline constexpr const char* kTimeLimitEnv = "CVC_TIME_LIMIT";

/// Runs `cvc <args...>`; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// File name written by `gen`, e.g. G_gnp_100_005_s1.col.
std::string gen_file_name(const std::string& model, int n, int n2, double p, std::uint64_t seed);

/// Density as it appears in instance names: decimal point dropped, so
/// 0.05 -> "005" and 1 -> "1".
std::string density_tag(double p);

/// One row of a benchmark table.
struct BenchRecord {
  std::string name;
  int n = 0;
  int m = 0;
  std::optional<int> vc;
  int cvc = 0;
  std::string solver;  // bb, rds or oracle
  double time_s = 0;
  long long nodes = 0;
  std::string status;  // optimal, time_limit or nondeterministic
  std::optional<std::uint64_t> seed;
};

inline constexpr const char* kCsvHeader = "name,n,m,vc,cvc,solver,time_s,nodes,status,seed";

std::string to_csv_row(const BenchRecord& r);
std::string to_json(const std::vector<BenchRecord>& rows);

struct BenchParams {
  std::vector<std::string> suites;  // "gnp" and/or "bipartite"
  int n = 100;
  std::vector<double> gnp_densities{0.05};
  std::vector<double> bipartite_densities{0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::optional<double> time_limit;
  int repeats = 1;
  int jobs = 1;
  std::string solver = "bb";
  int max_reseeds = 10000;
  /// VC column comes from the oracle up to this size, from the stable set
  /// branch and bound above it.
  int oracle_cap = 20;
};

/// Builds the instances (connected, reseeded by +1 steps) and solves each
/// one. Rows follow suite, density, seed order regardless of `jobs`.
std::vector<BenchRecord> run_bench(const BenchParams& params, std::ostream& log);

/// Prints a suite's PASS/FAIL line; on failure writes the counterexample as
/// DIMACS to `err` and, if given, to dump_dir/<suite>_counterexample.col.
/// Returns kOk or kVerifyFailed.
int report_suite(const SuiteResult& result, std::ostream& out, std::ostream& err,
                 const std::optional<std::string>& dump_dir);

}  // namespace cvc::cli
