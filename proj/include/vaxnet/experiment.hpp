#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vaxnet/centrality.hpp"
#include "vaxnet/graphgen.hpp"
#include "vaxnet/ingest.hpp"
#include "vaxnet/sirsim.hpp"
#include "vaxnet/stats.hpp"

namespace vaxnet {

struct NetworkSpec {
  std::string name;  // stream tag and report label; defaults to the family
  GenSpec gen;
};

enum class ReplicateMode {
  Regenerate,  // independent draws from the generator
  Shuffle,     // degree-preserving shuffles of one base draw
};

struct HerdConfig {
  double fraction = 0.7;
  std::size_t graphs = 10;
  std::size_t random_replicates = 1;
};

struct SimulateConfig {
  SirParams params;
  std::size_t runs = 10;
  std::vector<double> intervention_times{2.0};
  std::size_t k = 100;
  std::vector<std::string> strategies{"none", "random", "degree"};
};

struct IngestConfig {
  std::vector<std::filesystem::path> paths;
  ContactFormat format = ContactFormat::ThreeColumn;
  bool per_file = true;  // one graph per file; otherwise bucket by day_length
  std::int64_t day_length = 86400;
  std::optional<std::size_t> k;  // fixed k, else round(k_fraction * n)
  double k_fraction = 0.1;
};

// Declarative experiment description, read from a JSON document.
struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::vector<NetworkSpec> networks;
  std::size_t replicates = 100;
  ReplicateMode replicate_mode = ReplicateMode::Regenerate;
  std::vector<Metric> metrics{Metric::Degree, Metric::Betweenness,
                              Metric::Eigenvector};
  std::size_t k = 100;
  HerdConfig herd;
  SimulateConfig simulate;
  IngestConfig ingest;

  // The five families at the sizes used in the experiments.
  static std::vector<NetworkSpec> default_networks();
  static ExperimentConfig from_json(const nlohmann::json& doc);
  static ExperimentConfig load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
  void validate() const;
};

// One replicate of a spectral experiment, kept for downstream re-analysis.
struct ReplicateRecord {
  std::string network;
  std::size_t replicate = 0;
  std::string label;  // replicate index, or the day for contact data
  std::uint64_t graph_seed = 0;
  std::string metric;
  double lambda_original = 0.0;
  double lambda_topk = 0.0;
  double lambda_random = 0.0;
};

struct TableRow {
  std::string network;
  std::string metric;
  std::size_t k = 0;  // for real networks: mean k across days
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  MeanStd original, topk, random;
  std::optional<TestResult> two_sided;  // absent with fewer than 2 replicates
  std::optional<TestResult> one_sided;  // H1: topk < random
  std::size_t nonconverged = 0;
  std::string error;
};

struct TableResult {
  std::vector<TableRow> rows;
  std::vector<ReplicateRecord> replicates;
  std::vector<std::string> warnings;
};

// Graph for replicate r of a network, per the configured replicate mode.
Graph replicate_graph(const ExperimentConfig& cfg, const NetworkSpec& net,
                      std::size_t r, std::uint64_t* graph_seed = nullptr);

// Eigenvalue before and after removing the top-k (per metric) and k random
// nodes, over the replicate ensemble of every network. Replicates fan out
// across threads when exec is Parallel; results do not depend on it.
TableResult run_table1(const ExperimentConfig& cfg,
                       Execution exec = Execution::Parallel);

struct HerdRow {
  std::string network;
  std::string metric;
  std::size_t n = 0;
  std::size_t graphs = 0;
  std::size_t random_replicates = 0;
  std::uint64_t seed = 0;
  HerdReport report;
};

std::vector<HerdRow> run_herd(const ExperimentConfig& cfg,
                              Execution exec = Execution::Parallel);

struct StrategyOutcome {
  std::string network;
  std::string strategy;
  SirEnsemble ensemble;
  SirSummary summary;
  std::vector<std::string> warnings;
};

std::vector<StrategyOutcome> run_simulate(const ExperimentConfig& cfg,
                                          Execution exec = Execution::Parallel);

struct IngestResult {
  TableResult table;
  DailyGraphSet days;
  std::vector<std::string> parse_warnings;
};

IngestResult run_ingest(const ExperimentConfig& cfg,
                        Execution exec = Execution::Parallel);

// Report writers. Numbers are printed with a fixed precision so identical
// inputs give byte-identical files.
void write_table_csv(std::ostream& out, const TableResult& t);
void write_replicates_csv(std::ostream& out, const TableResult& t);
nlohmann::json table_to_json(const TableResult& t);
void write_herd_csv(std::ostream& out, const std::vector<HerdRow>& rows);
nlohmann::json herd_to_json(const std::vector<HerdRow>& rows);
void write_trajectories_csv(std::ostream& out,
                            const std::vector<StrategyOutcome>& outcomes);
void write_runs_csv(std::ostream& out,
                    const std::vector<StrategyOutcome>& outcomes);
nlohmann::json simulate_summary_json(const std::vector<StrategyOutcome>& outcomes,
                                     const ExperimentConfig& cfg);

std::string format_number(double x);

}  // namespace vaxnet
