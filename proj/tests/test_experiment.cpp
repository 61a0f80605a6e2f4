#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vaxnet/experiment.hpp"

using namespace vaxnet;
namespace fs = std::filesystem;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.seed = 17;
  cfg.networks = {{"er", {Family::ErdosRenyi, 80, 0.1}},
                  {"ba", {Family::BarabasiAlbert, 80, 0.4, 3}}};
  cfg.replicates = 4;
  cfg.k = 8;
  cfg.herd.graphs = 2;
  cfg.simulate.runs = 3;
  cfg.simulate.k = 8;
  cfg.simulate.params.t_max = 20.0;
  return cfg;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(VAXNET_CLI) + " " + args + " 2>" +
                          (fs::temp_directory_path() / "vaxnet_cli_err.txt").string();
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("config JSON round trip") {
  ExperimentConfig cfg = small_config();
  cfg.replicate_mode = ReplicateMode::Shuffle;
  cfg.metrics = {Metric::Closeness};
  cfg.simulate.strategies = {"none", "eigenvector"};
  const auto doc = cfg.to_json();
  const ExperimentConfig back = ExperimentConfig::from_json(doc);
  CHECK(back.to_json() == doc);
  CHECK(back.replicate_mode == ReplicateMode::Shuffle);
  CHECK(back.networks.at(1).gen.m == 3);

  const auto defaults = ExperimentConfig::from_json(nlohmann::json::object());
  CHECK(defaults.networks.size() == 5);
  CHECK(defaults.replicates == 100);
  CHECK(defaults.k == 100);

  CHECK_THROWS_AS(ExperimentConfig::from_json({{"replicate_mode", "twice"}}),
                  InvalidArgument);
  CHECK_THROWS_AS(ExperimentConfig::from_json({{"replicates", 0}}).validate(),
                  InvalidArgument);
  CHECK_THROWS_AS(ExperimentConfig::load("/nonexistent/config.json"), IoError);
}

TEST_CASE("table1 is deterministic and independent of threading") {
  const ExperimentConfig cfg = small_config();
  const TableResult a = run_table1(cfg, Execution::Serial);
  const TableResult b = run_table1(cfg, Execution::Parallel);
  std::ostringstream ca, cb, ra, rb;
  write_table_csv(ca, a);
  write_table_csv(cb, b);
  write_replicates_csv(ra, a);
  write_replicates_csv(rb, b);
  CHECK(ca.str() == cb.str());
  CHECK(ra.str() == rb.str());
  REQUIRE(a.rows.size() == 6);
  for (const TableRow& row : a.rows) {
    CHECK(row.error.empty());
    CHECK(row.replicates == 4);
    CHECK(row.topk.mean <= row.original.mean + 1e-9);
    CHECK(row.random.mean <= row.original.mean + 1e-9);
    REQUIRE(row.two_sided.has_value());
    const double two = row.two_sided->p_value, one = row.one_sided->p_value;
    if (row.two_sided->t_stat < 0) CHECK(one == doctest::Approx(two / 2));
    else CHECK(one == doctest::Approx(1 - two / 2));
  }
  CHECK(a.replicates.size() == 4 * 6);
  CHECK(ca.str().rfind("family,metric,k,replicates,seed,original_mean", 0) == 0);

  ExperimentConfig other = cfg;
  other.seed = 18;
  std::ostringstream co;
  write_table_csv(co, run_table1(other));
  CHECK(co.str() != ca.str());
}

TEST_CASE("single replicate reports no p-value") {
  ExperimentConfig cfg = small_config();
  cfg.replicates = 1;
  cfg.networks.resize(1);
  cfg.metrics = {Metric::Degree};
  const TableResult t = run_table1(cfg);
  REQUIRE(t.rows.size() == 1);
  CHECK_FALSE(t.rows[0].two_sided.has_value());
  CHECK(t.rows[0].topk.std == 0.0);
  CHECK_FALSE(t.warnings.empty());
}

TEST_CASE("k larger than n is a row error, not a crash") {
  ExperimentConfig cfg = small_config();
  cfg.k = 500;
  cfg.metrics = {Metric::Degree};
  const TableResult t = run_table1(cfg);
  for (const TableRow& row : t.rows) CHECK_FALSE(row.error.empty());
}

TEST_CASE("shuffle replicates keep the base degree sequence") {
  ExperimentConfig cfg = small_config();
  cfg.replicate_mode = ReplicateMode::Shuffle;
  const NetworkSpec& net = cfg.networks[1];
  const Graph g0 = replicate_graph(cfg, net, 0);
  const Graph g1 = replicate_graph(cfg, net, 1);
  CHECK(g0.degree_sequence() == g1.degree_sequence());
  CHECK_FALSE(g0 == g1);
  cfg.replicate_mode = ReplicateMode::Regenerate;
  CHECK(replicate_graph(cfg, net, 2) == replicate_graph(cfg, net, 2));
}

TEST_CASE("herd and simulate pipelines are deterministic") {
  ExperimentConfig cfg = small_config();
  cfg.metrics = {Metric::Degree};
  const auto h1 = run_herd(cfg, Execution::Serial);
  const auto h2 = run_herd(cfg, Execution::Parallel);
  std::ostringstream a, b;
  write_herd_csv(a, h1);
  write_herd_csv(b, h2);
  CHECK(a.str() == b.str());
  for (const HerdRow& row : h1) CHECK(row.report.n_hs <= row.n);

  const auto s1 = run_simulate(cfg, Execution::Serial);
  const auto s2 = run_simulate(cfg, Execution::Parallel);
  std::ostringstream t1, t2;
  write_trajectories_csv(t1, s1);
  write_trajectories_csv(t2, s2);
  CHECK(t1.str() == t2.str());
  CHECK(s1.size() == 2 * 3);
  CHECK(simulate_summary_json(s1, cfg).dump() == simulate_summary_json(s2, cfg).dump());
}

TEST_CASE("ingest pipeline on the bundled contact fixture") {
  ExperimentConfig cfg;
  cfg.seed = 3;
  cfg.metrics = {Metric::Degree};
  for (int d = 1; d <= 3; ++d) {
    char name[32];
    std::snprintf(name, sizeof name, "day%02d.tsv", d);
    cfg.ingest.paths.push_back(fs::path(VAXNET_FIXTURE_DIR) / name);
  }
  const IngestResult r = run_ingest(cfg);
  CHECK(r.days.days.size() == 3);
  REQUIRE(r.table.rows.size() == 1);
  CHECK(r.table.rows[0].network == "contacts");
  CHECK(r.table.rows[0].topk.mean < r.table.rows[0].random.mean);
  CHECK(r.table.replicates.size() == 3);
}

TEST_CASE("command line tool") {
  const fs::path dir = fs::temp_directory_path() / "vaxnet_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string a = (dir / "a.edges").string(), b = (dir / "b.edges").string();
  REQUIRE(run_cli("generate --family gnp --n 200 --p 0.05 --seed 9 --out " + a) == 0);
  REQUIRE(run_cli("generate --family gnp --n 200 --p 0.05 --seed 9 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(fs::exists(a + ".meta.json"));

  const std::string z = (dir / "z.edges").string();
  REQUIRE(run_cli("generate --family gnp --n 50 --p 0 --out " + z) == 0);
  std::ifstream zin(z);
  CHECK(read_edge_list(zin).num_edges() == 0);

  CHECK(run_cli("spectral " + a + " --format json --out " + (dir / "s.json").string()) == 0);
  const auto doc = nlohmann::json::parse(slurp(dir / "s.json"));
  CHECK(doc.at("nodes") == 200);
  CHECK(doc.at("converged") == true);

  CHECK(run_cli("centrality " + a + " --metric DC --out " + (dir / "c.csv").string()) == 0);
  CHECK(slurp(dir / "c.csv").rfind("node_id,score,rank", 0) == 0);

  CHECK(run_cli("spectral " + (dir / "missing.edges").string()) == 2);
  const auto err = nlohmann::json::parse(slurp(fs::temp_directory_path() / "vaxnet_cli_err.txt"));
  CHECK(err.at("error").at("kind") == "IoError");

  CHECK(run_cli("generate --family gnp --n 10 --p 1.5 --out " + z) == 2);
  fs::remove_all(dir);
}
