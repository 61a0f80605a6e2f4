// Command-line experiment runner.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "vaxnet/centrality.hpp"
#include "vaxnet/experiment.hpp"
#include "vaxnet/graphgen.hpp"
#include "vaxnet/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace vaxnet;

namespace {

struct CommonOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  int workers = 0;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& o, const std::string& out_help) {
  cmd->add_option("--config", o.config, "JSON experiment config")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "master seed (overrides config)");
  cmd->add_option("--out", o.out, out_help);
  cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"csv", "json"}));
}

ExperimentConfig load_config(const CommonOptions& o) {
  ExperimentConfig cfg = o.config.empty() ? ExperimentConfig::from_json(json::object())
                                          : ExperimentConfig::load(o.config);
  if (o.seed) cfg.seed = *o.seed;
  return cfg;
}

void apply_workers(int workers) {
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#else
  (void)workers;
#endif
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  return f;
}

fs::path out_dir(const CommonOptions& o) {
  fs::path dir = o.out.empty() ? fs::path("results") : fs::path(o.out);
  fs::create_directories(dir);
  return dir;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read edge list " + path);
  return read_edge_list(in);
}

void emit_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
}

int report_error(const std::exception& e) {
  json err{{"message", e.what()}};
  if (const auto* v = dynamic_cast<const Error*>(&e)) err["kind"] = v->kind();
  else err["kind"] = "Error";
  if (const auto* f = dynamic_cast<const FormatError*>(&e)) err["line"] = f->line();
  std::cerr << json{{"error", err}}.dump() << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology-aware vaccination planning on contact networks"};
  app.require_subcommand(1);

  // generate
  CommonOptions gen_opts;
  std::string family = "erdos_renyi";
  GenSpec gen;
  std::string dd_rule = "resample";
  auto* gen_cmd = app.add_subcommand("generate", "write a random network as an edge list");
  add_common(gen_cmd, gen_opts, "edge-list file (metadata goes to <out>.meta.json)");
  gen_cmd->add_option("--family", family,
                      "gnp, erdos_renyi, duplication_divergence, barabasi_albert, random_geometric");
  gen_cmd->add_option("--n", gen.n, "node count");
  gen_cmd->add_option("--p", gen.p, "edge / retention probability");
  gen_cmd->add_option("--m", gen.m, "edges per new node (Barabasi-Albert)");
  gen_cmd->add_option("--radius", gen.radius, "connection radius (random geometric)");
  gen_cmd->add_option("--dimension", gen.dimension, "space dimension (random geometric)");
  gen_cmd->add_option("--duplicate-rule", dd_rule, "resample or keep_isolated")
      ->check(CLI::IsMember({"resample", "keep_isolated"}));

  // centrality
  CommonOptions cen_opts;
  std::string cen_input;
  std::string metric_name = "degree";
  auto* cen_cmd = app.add_subcommand("centrality", "score the nodes of an edge list");
  add_common(cen_cmd, cen_opts, "output file (stdout if omitted)");
  cen_cmd->add_option("input", cen_input, "edge-list file")->required();
  cen_cmd->add_option("--metric", metric_name,
                      "degree, degree_normalized, closeness, betweenness, eigenvector");

  // spectral
  CommonOptions spec_opts;
  std::string spec_input;
  std::optional<double> beta, delta;
  auto* spec_cmd = app.add_subcommand("spectral", "largest eigenvalue and threshold checks");
  add_common(spec_cmd, spec_opts, "output file (stdout if omitted)");
  spec_cmd->add_option("input", spec_input, "edge-list file")->required();
  spec_cmd->add_option("--beta", beta, "infection rate per contact");
  spec_cmd->add_option("--delta", delta, "recovery rate");

  // pipelines
  CommonOptions t1_opts, herd_opts, sim_opts, ing_opts;
  std::optional<std::size_t> replicates, k;
  auto* t1_cmd = app.add_subcommand("table1", "eigenvalue drop: top-k vs random removal");
  add_common(t1_cmd, t1_opts, "output directory");
  t1_cmd->add_option("--replicates", replicates, "replicates per network");
  t1_cmd->add_option("--k", k, "nodes removed");

  std::optional<std::size_t> herd_graphs;
  auto* herd_cmd = app.add_subcommand("herd", "central nodes matching random herd-immunity removal");
  add_common(herd_cmd, herd_opts, "output directory");
  herd_cmd->add_option("--graphs", herd_graphs, "graphs per network ensemble");

  std::optional<std::size_t> runs;
  auto* sim_cmd = app.add_subcommand("simulate", "SIR ensembles with vaccination interventions");
  add_common(sim_cmd, sim_opts, "output directory");
  sim_cmd->add_option("--runs", runs, "runs per strategy");

  std::vector<std::string> contact_paths;
  bool two_column = false;
  bool by_day = false;
  std::optional<std::size_t> ingest_k;
  auto* ing_cmd = app.add_subcommand("ingest", "contact logs to daily graphs and eigenvalue table");
  add_common(ing_cmd, ing_opts, "output directory");
  ing_cmd->add_option("paths", contact_paths, "contact files");
  ing_cmd->add_flag("--two-column", two_column, "files hold 'id_a id_b' lines");
  ing_cmd->add_flag("--by-day", by_day, "bucket by timestamp instead of one graph per file");
  ing_cmd->add_option("--k", ingest_k, "nodes removed per day (default 10% of n)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      apply_workers(gen_opts.workers);
      gen.family = parse_family(family);
      gen.duplicate_rule =
          dd_rule == "resample" ? DuplicateRule::Resample : DuplicateRule::KeepIsolated;
      gen.seed = gen_opts.seed.value_or(1);
      const Graph g = generate(gen);
      const fs::path out = gen_opts.out.empty() ? fs::path("graph.edges") : fs::path(gen_opts.out);
      auto f = open_out(out);
      write_edge_list(f, g);
      NetworkSpec net{std::string(to_string(gen.family)), gen};
      ExperimentConfig tmp;
      tmp.networks = {net};
      json meta = tmp.to_json()["networks"][0];
      meta["seed"] = gen.seed;
      meta["nodes"] = g.num_nodes();
      meta["edges"] = g.num_edges();
      auto m = open_out(fs::path(out.string() + ".meta.json"));
      m << meta.dump(2) << '\n';
      return 0;
    }

    if (*cen_cmd) {
      apply_workers(cen_opts.workers);
      const Graph g = load_graph(cen_input);
      const CentralityScores scores = compute_centrality(g, parse_metric(metric_name));
      std::ostringstream buf;
      if (cen_opts.format == "json") {
        json rows = json::array();
        const auto order = ranking(scores);
        std::vector<std::size_t> rank(order.size());
        for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r + 1;
        for (NodeId v = 0; v < g.num_nodes(); ++v)
          rows.push_back({{"node_id", g.label(v)}, {"score", scores.values[v]}, {"rank", rank[v]}});
        buf << json{{"metric", to_string(scores.metric)}, {"scores", rows}}.dump(2) << '\n';
      } else {
        write_scores_csv(buf, g, scores);
      }
      if (cen_opts.out.empty()) std::cout << buf.str();
      else open_out(cen_opts.out) << buf.str();
      return 0;
    }

    if (*spec_cmd) {
      apply_workers(spec_opts.workers);
      const Graph g = load_graph(spec_input);
      const SpectralResult r = lambda_max(g);
      json doc{{"nodes", g.num_nodes()},
               {"edges", g.num_edges()},
               {"lambda_max", r.lambda_max},
               {"iterations", r.iterations},
               {"residual", r.residual},
               {"converged", r.converged}};
      if (g.num_edges() > 0) {
        const BoundsReport b = spectral_bounds_check(g);
        doc["bounds"] = {{"deg_avg", b.deg_avg}, {"deg_max", b.deg_max}, {"holds", b.holds}};
      }
      if (beta || delta) {
        const ThresholdReport t =
            threshold_check({beta.value_or(0.0), delta.value_or(1.0)}, r.lambda_max);
        doc["threshold"] = {{"ratio", t.ratio},
                            {"inverse_lambda", std::isinf(t.inverse_lambda) ? json(nullptr)
                                                                            : json(t.inverse_lambda)},
                            {"contained", t.contained}};
      }
      std::ostringstream buf;
      if (spec_opts.format == "json") {
        buf << doc.dump(2) << '\n';
      } else {
        buf << "nodes,edges,lambda_max,iterations,residual,converged\n"
            << g.num_nodes() << ',' << g.num_edges() << ',' << format_number(r.lambda_max)
            << ',' << r.iterations << ',' << format_number(r.residual) << ','
            << (r.converged ? "true" : "false") << '\n';
      }
      if (spec_opts.out.empty()) std::cout << buf.str();
      else open_out(spec_opts.out) << buf.str();
      if (!r.converged) std::cerr << "warning: power iteration did not converge\n";
      return 0;
    }

    if (*t1_cmd) {
      apply_workers(t1_opts.workers);
      ExperimentConfig cfg = load_config(t1_opts);
      if (replicates) cfg.replicates = *replicates;
      if (k) cfg.k = *k;
      const TableResult t = run_table1(cfg);
      emit_warnings(t.warnings);
      const fs::path dir = out_dir(t1_opts);
      if (t1_opts.format == "json") {
        open_out(dir / "table1.json") << table_to_json(t).dump(2) << '\n';
      } else {
        auto f = open_out(dir / "table1.csv");
        write_table_csv(f, t);
      }
      auto r = open_out(dir / "table1_replicates.csv");
      write_replicates_csv(r, t);
      return 0;
    }

    if (*herd_cmd) {
      apply_workers(herd_opts.workers);
      ExperimentConfig cfg = load_config(herd_opts);
      if (herd_graphs) cfg.herd.graphs = *herd_graphs;
      const auto rows = run_herd(cfg);
      const fs::path dir = out_dir(herd_opts);
      if (herd_opts.format == "json") {
        open_out(dir / "herd.json") << herd_to_json(rows).dump(2) << '\n';
      } else {
        auto f = open_out(dir / "herd.csv");
        write_herd_csv(f, rows);
      }
      return 0;
    }

    if (*sim_cmd) {
      apply_workers(sim_opts.workers);
      ExperimentConfig cfg = load_config(sim_opts);
      if (runs) cfg.simulate.runs = *runs;
      const auto outcomes = run_simulate(cfg);
      for (const auto& o : outcomes) emit_warnings(o.warnings);
      const fs::path dir = out_dir(sim_opts);
      auto traj = open_out(dir / "trajectories.csv");
      write_trajectories_csv(traj, outcomes);
      auto per_run = open_out(dir / "runs.csv");
      write_runs_csv(per_run, outcomes);
      open_out(dir / "summary.json") << simulate_summary_json(outcomes, cfg).dump(2) << '\n';
      return 0;
    }

    if (*ing_cmd) {
      apply_workers(ing_opts.workers);
      ExperimentConfig cfg = load_config(ing_opts);
      if (!contact_paths.empty()) {
        cfg.ingest.paths.clear();
        for (const auto& p : contact_paths) cfg.ingest.paths.emplace_back(p);
      }
      if (two_column) cfg.ingest.format = ContactFormat::TwoColumn;
      if (by_day) cfg.ingest.per_file = false;
      if (ingest_k) cfg.ingest.k = *ingest_k;
      const IngestResult res = run_ingest(cfg);
      emit_warnings(res.parse_warnings);
      emit_warnings(res.table.warnings);
      const fs::path dir = out_dir(ing_opts);
      if (ing_opts.format == "json") {
        open_out(dir / "ingest.json") << table_to_json(res.table).dump(2) << '\n';
      } else {
        auto f = open_out(dir / "ingest.csv");
        write_table_csv(f, res.table);
      }
      auto r = open_out(dir / "ingest_days.csv");
      write_replicates_csv(r, res.table);
      return 0;
    }
  } catch (const std::exception& e) {
    return report_error(e);
  }
  return 0;
}
