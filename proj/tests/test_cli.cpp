#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cvc/cli.hpp"
#include "cvc/dimacs.hpp"
#include "cvc/mip.hpp"
#include "cvc/random.hpp"
#include "support/graphs.hpp"

using namespace cvc;
using namespace cvc::cli;
using namespace cvc::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cvc_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::path(CVC_BINARY_DIR) / "cli_scratch" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string write_graph(const fs::path& dir, const std::string& name, const Graph& g) {
  auto path = (dir / name).string();
  std::ofstream(path, std::ios::binary) << write_dimacs(g);
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("instance names") {
  CHECK(gen_file_name("gnp", 100, 0, 0.05, 1) == "G_gnp_100_005_s1.col");
  CHECK(density_tag(0.2) == "02");
  CHECK(density_tag(1) == "1");
}

TEST_CASE("gen") {
  auto dir = scratch("gen");
  auto r = cvc_run({"gen", "--model", "gnp", "--n", "100", "--p", "0.05", "--seed", "1", "--out", dir.string()});
  REQUIRE(r.code == kOk);
  auto file = dir / "G_gnp_100_005_s1.col";
  REQUIRE(fs::exists(file));
  CHECK(parse_dimacs(slurp(file)) == gnp_random(100, 0.05, 1));

  r = cvc_run({"gen", "--model", "bipartite", "--n", "50", "--n2", "50", "--p", "0.2", "--seed", "0", "--out",
               dir.string()});
  REQUIRE(r.code == kOk);
  auto bip = parse_dimacs(slurp(dir / gen_file_name("bipartite", 50, 50, 0.2, 0)));
  CHECK(bip == bipartite_random(50, 50, 0.2, 0).graph);

  r = cvc_run({"gen", "--model", "gnp", "--n", "5", "--p", "0", "--connected", "--seed", "7", "--out", dir.string()});
  CHECK(r.code == kInput);
  CHECK(r.err.find("1000") != std::string::npos);

  std::uint64_t unlucky = 0;
  while (is_connected(gnp_random(30, 0.12, unlucky))) ++unlucky;
  r = cvc_run({"gen", "--model", "gnp", "--n", "30", "--p", "0.12", "--connected", "--seed",
               std::to_string(unlucky), "--out", dir.string()});
  REQUIRE(r.code == kOk);
  CHECK(r.err.find("disconnected") != std::string::npos);

  CHECK(cvc_run({"gen", "--model", "gnp", "--n", "5", "--n2", "3", "--p", "0.5"}).code == kUsage);
  CHECK(cvc_run({"gen", "--model", "bipartite", "--n", "5", "--p", "0.5"}).code == kUsage);
  CHECK(cvc_run({"gen", "--model", "tree", "--n", "5", "--p", "0.5"}).code == kUsage);
  CHECK(cvc_run({"gen", "--n", "5", "--p", "1.5"}).code == kUsage);
  CHECK(cvc_run({}).code == kUsage);
  CHECK(cvc_run({"frobnicate"}).code == kUsage);
}

TEST_CASE("solve") {
  auto dir = scratch("solve");
  auto k44 = write_graph(dir, "k44.col", complete_bipartite(4, 4));
  auto r = cvc_run({"solve", k44, "--algo", "bb"});
  REQUIRE(r.code == kOk);
  CHECK(r.out.find("cvc: 5\n") != std::string::npos);
  CHECK(r.out.find("status: optimal") != std::string::npos);

  for (const char* algo : {"bb", "rds", "oracle"}) {
    auto j = nlohmann::json::parse(cvc_run({"solve", k44, "--algo", algo, "--format", "json"}).out);
    CHECK(j["cover_size"] == 5);
    CHECK(j["cover"].size() == 5);
  }
  auto csv = lines(cvc_run({"solve", k44, "--format", "csv", "--no-warm-start", "--no-bipartite-bound",
                            "--no-coloring-reuse"}).out);
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == kCsvHeader);
  CHECK(csv[1].rfind("k44,8,16,,5,bb,", 0) == 0);

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto g = gnp_random(12, 0.35, seed);
    if (!is_connected(g)) continue;
    auto f = write_graph(dir, "g" + std::to_string(seed) + ".col", g);
    auto a = nlohmann::json::parse(cvc_run({"solve", f, "--algo", "oracle", "--format", "json"}).out);
    auto b = nlohmann::json::parse(cvc_run({"solve", f, "--algo", "bb", "--format", "json"}).out);
    CHECK(a["cover_size"] == b["cover_size"]);
  }

  Graph big;
  for (std::uint64_t seed = 1;; ++seed) {
    big = gnp_random(100, 0.05, seed);
    if (is_connected(big)) break;
  }
  auto bigf = write_graph(dir, "big.col", big);
  r = cvc_run({"solve", bigf, "--time-limit", "0.001"});
  CHECK(r.code == kTimeLimit);
  CHECK(r.out.find("status: time_limit") != std::string::npos);
  CHECK(r.out.find("cover: ") != std::string::npos);

  std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK(cvc_run({"solve", write_graph(dir, "two.col", Graph::from_edges(4, two))}).code == kInput);
  CHECK(cvc_run({"solve", (dir / "missing.col").string()}).code == kInput);
  std::ofstream(dir / "bad.col") << "p edge 2 1\ne 1 5\n";
  r = cvc_run({"solve", (dir / "bad.col").string()});
  CHECK(r.code == kInput);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(cvc_run({"solve", k44, "--algo", "magic"}).code == kUsage);
  CHECK(cvc_run({"solve", k44, "--time-limit", "0"}).code == kUsage);
}

TEST_CASE("emit") {
  auto dir = scratch("emit");
  auto k2 = write_graph(dir, "k2.col", complete(2));
  auto r = cvc_run({"emit", k2, "--formulation", "parb"});
  REQUIRE(r.code == kOk);
  // Same model as the library fixture, with provenance comments on top.
  std::ifstream golden(std::string(CVC_GOLDEN_DIR) + "/k2_parb.lp");
  std::ostringstream g;
  g << golden.rdbuf();
  CHECK(r.out.find("\\ root selection: default") != std::string::npos);
  auto strip = [](const std::string& text) {
    std::string out;
    for (auto& l : lines(text))
      if (l.rfind("\\", 0) != 0) out += l + "\n";
    return out;
  };
  CHECK(strip(r.out) == strip(g.str()));
  CHECK(r.out.find("\\ roots: r=0 r1=1") != std::string::npos);

  auto out_file = dir / "k2.lp";
  CHECK(cvc_run({"emit", k2, "--out", out_file.string()}).code == kOk);
  CHECK(slurp(out_file) == r.out);

  auto p20 = write_graph(dir, "p20.col", path(20));
  r = cvc_run({"emit", p20, "--formulation", "pstp"});
  CHECK(r.code == kInput);
  CHECK(r.err.find("15") != std::string::npos);
  CHECK(cvc_run({"emit", write_graph(dir, "p5.col", path(5)), "--formulation", "pstp"}).code == kOk);
  CHECK(cvc_run({"emit", p20, "--formulation", "qr", "--root", "3"}).code == kOk);

  r = cvc_run({"emit", p20, "--root", "4", "--root2", "9"});
  CHECK(r.code == kUsage);
  CHECK(r.err.find("3") != std::string::npos);
  CHECK(r.err.find("5") != std::string::npos);
  CHECK(cvc_run({"emit", p20, "--root", "40"}).code == kUsage);
  r = cvc_run({"emit", p20, "--root", "4", "--root2", "5"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("\\ roots: r=4 r1=5") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = cvc_run({"verify", "--suite", "parb", "--max-n", "7", "--instances", "30", "--seed", "42"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(cvc_run({"verify", "--suite", "pstp", "--max-n", "7", "--instances", "30"}).code == kOk);
  CHECK(cvc_run({"verify", "--suite", "bb", "--max-n", "12", "--instances", "30"}).code == kOk);

  // A formulation missing its cover rows must be caught.
  VerifyOptions opts;
  opts.max_n = 6;
  opts.instances = 30;
  auto mutant = verify_parb_suite(opts, [](const Graph& g, int r, int r1) {
    auto m = mip::build_parb(g, r, r1);
    m.remove_constraints([](const mip::Constraint& c) { return c.name.rfind("cover_", 0) == 0; });
    return m;
  });
  REQUIRE_FALSE(mutant.passed);
  REQUIRE(mutant.counterexample);
  auto dir = scratch("verify");
  std::ostringstream out, err;
  CHECK(report_suite(mutant, out, err, dir.string()) == kVerifyFailed);
  CHECK(out.str().find("FAIL") != std::string::npos);
  auto dumped = dir / "parb_counterexample.col";
  REQUIRE(fs::exists(dumped));
  CHECK(parse_dimacs(slurp(dumped)) == *mutant.counterexample);
  CHECK(err.str().find("p edge") != std::string::npos);
}

TEST_CASE("bench") {
  auto dir = scratch("bench");
  auto out_file = dir / "table.csv";
  auto r = cvc_run({"bench", "--suite", "bipartite", "--n", "30", "--densities", "0.1,0.3,0.5", "--seeds", "0,1",
                    "--repeats", "3", "--out", out_file.string()});
  REQUIRE(r.code == kOk);
  auto rows = lines(slurp(out_file));
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "name,n,m,vc,cvc,solver,time_s,nodes,status,seed");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<std::string> f;
    std::istringstream cells(rows[i]);
    for (std::string c; std::getline(cells, c, ',');) f.push_back(c);
    REQUIRE(f.size() >= 9);
    CAPTURE(rows[i]);
    CHECK(f[1] == "30");
    if (f[8] != "optimal") continue;
    REQUIRE_FALSE(f[3].empty());
    CHECK(std::stoi(f[4]) >= std::stoi(f[3]));
    CHECK(std::stod(f[6]) >= 0);
  }

  // Deterministic apart from timing, whatever the job count.
  auto strip_time = [](const std::string& text) {
    std::string out;
    for (auto& l : lines(text)) {
      std::vector<std::string> f;
      std::istringstream cells(l);
      for (std::string c; std::getline(cells, c, ',');) f.push_back(c);
      if (f.size() > 6) f[6] = "";
      for (auto& c : f) out += c + ",";
      out += "\n";
    }
    return out;
  };
  auto a = cvc_run({"bench", "--suite", "both", "--n", "16", "--seeds", "1,2", "--densities", "0.3"});
  auto b = cvc_run({"bench", "--suite", "both", "--n", "16", "--seeds", "1,2", "--densities", "0.3", "--jobs", "3"});
  REQUIRE(a.code == kOk);
  REQUIRE(b.code == kOk);
  CHECK(strip_time(a.out) == strip_time(b.out));
  CHECK(lines(a.out).size() == 5);

  auto j = cvc_run({"bench", "--suite", "gnp", "--n", "12", "--seeds", "3", "--densities", "0.4", "--format", "json"});
  REQUIRE(j.code == kOk);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.is_array());

  CHECK(cvc_run({"bench", "--suite", "gnp", "--n", "10", "--out", (dir / "no/such/dir/x.csv").string()}).code ==
        kInput);
}
