#include "vaxnet/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "vaxnet/spectral.hpp"
#include "vaxnet/vaccination.hpp"

namespace vaxnet {

using nlohmann::json;

namespace {

constexpr double kTol = 1e-9;
constexpr std::size_t kMaxIter = 50000;

template <class T>
T get_or(const json& doc, const char* key, T fallback) {
  auto it = doc.find(key);
  return it == doc.end() || it->is_null() ? fallback : it->get<T>();
}

NetworkSpec network_from_json(const json& doc) {
  NetworkSpec net;
  net.gen.family = parse_family(doc.at("family").get<std::string>());
  net.name = get_or<std::string>(doc, "name", std::string(to_string(net.gen.family)));
  net.gen.n = get_or<std::size_t>(doc, "n", net.gen.n);
  net.gen.p = get_or<double>(doc, "p", net.gen.p);
  net.gen.m = get_or<std::size_t>(doc, "m", net.gen.m);
  net.gen.radius = get_or<double>(doc, "radius", net.gen.radius);
  net.gen.dimension = get_or<std::size_t>(doc, "dimension", net.gen.dimension);
  const std::string rule = get_or<std::string>(doc, "duplicate_rule", "resample");
  if (rule == "resample")
    net.gen.duplicate_rule = DuplicateRule::Resample;
  else if (rule == "keep_isolated")
    net.gen.duplicate_rule = DuplicateRule::KeepIsolated;
  else
    throw InvalidArgument("unknown duplicate_rule '" + rule + "'");
  return net;
}

json network_to_json(const NetworkSpec& net) {
  json doc{{"name", net.name},
           {"family", std::string(to_string(net.gen.family))},
           {"n", net.gen.n}};
  switch (net.gen.family) {
    case Family::GnpFast:
    case Family::ErdosRenyi: doc["p"] = net.gen.p; break;
    case Family::DuplicationDivergence:
      doc["p"] = net.gen.p;
      doc["duplicate_rule"] = net.gen.duplicate_rule == DuplicateRule::Resample
                                  ? "resample"
                                  : "keep_isolated";
      break;
    case Family::BarabasiAlbert: doc["m"] = net.gen.m; break;
    case Family::RandomGeometric:
      doc["radius"] = net.gen.radius > 0.0 ? net.gen.radius
                                           : GenSpec::default_radius(net.gen.n);
      doc["dimension"] = net.gen.dimension;
      break;
  }
  return doc;
}

std::string describe(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e))
    return std::string(err->kind()) + ": " + err->what();
  return e.what();
}

// Per-replicate outcome of the spectral pipeline on one graph.
struct GraphOutcome {
  std::uint64_t graph_seed = 0;
  double lambda_original = 0.0;
  double lambda_random = 0.0;
  std::vector<double> lambda_topk;
  std::vector<std::string> metric_error;
  std::size_t nonconverged = 0;
  std::size_t k = 0;
  std::string error;
};

GraphOutcome evaluate_graph(const Graph& g, std::size_t k,
                            const std::vector<Metric>& metrics,
                            std::uint64_t random_seed) {
  GraphOutcome out;
  out.k = k;
  out.lambda_topk.assign(metrics.size(), 0.0);
  out.metric_error.assign(metrics.size(), {});
  try {
    if (k > g.num_nodes())
      throw InvalidArgument("k = " + std::to_string(k) + " exceeds n = " +
                            std::to_string(g.num_nodes()));
    const SpectralResult before = lambda_max(g, kTol, kMaxIter, Execution::Serial);
    out.nonconverged += !before.converged;
    out.lambda_original = before.lambda_max;
    const EigenDropReport random = eigen_drop(
        g, plan_random(g, k, random_seed), before, Execution::Serial);
    out.nonconverged += !random.converged;
    out.lambda_random = random.lambda_after;
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      try {
        const auto scores = compute_centrality(g, metrics[m], Execution::Serial);
        const EigenDropReport top =
            eigen_drop(g, plan_topk(scores, k), before, Execution::Serial);
        out.nonconverged += !top.converged;
        out.lambda_topk[m] = top.lambda_after;
      } catch (const std::exception& e) {
        out.metric_error[m] = describe(e);
      }
    }
  } catch (const std::exception& e) {
    out.error = describe(e);
  }
  return out;
}

template <class Fn>
void for_each_index(std::size_t count, Execution exec, Fn&& fn) {
  const auto n = static_cast<std::ptrdiff_t>(count);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
  }
}

// Aggregates per-replicate outcomes into one row per metric.
void aggregate(const std::string& network, const std::vector<Metric>& metrics,
               const std::vector<GraphOutcome>& outcomes, std::uint64_t seed,
               const std::vector<std::string>& replicate_labels,
               TableResult& table) {
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    TableRow row;
    row.network = network;
    row.metric = std::string(to_string(metrics[m]));
    row.seed = seed;
    std::vector<double> orig, top, rnd;
    double k_sum = 0.0;
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
      const GraphOutcome& o = outcomes[r];
      const std::string& err = o.error.empty() ? o.metric_error[m] : o.error;
      if (!err.empty()) {
        if (row.error.empty())
          row.error = "replicate " + replicate_labels[r] + ": " + err;
        continue;
      }
      orig.push_back(o.lambda_original);
      top.push_back(o.lambda_topk[m]);
      rnd.push_back(o.lambda_random);
      row.nonconverged += o.nonconverged;
      k_sum += static_cast<double>(o.k);
      table.replicates.push_back({network, r, replicate_labels[r], o.graph_seed,
                                  row.metric,
                                  o.lambda_original, o.lambda_topk[m],
                                  o.lambda_random});
    }
    row.replicates = orig.size();
    if (!orig.empty()) {
      row.k = static_cast<std::size_t>(
          std::lround(k_sum / static_cast<double>(orig.size())));
      row.original = mean_std(orig);
      row.topk = mean_std(top);
      row.random = mean_std(rnd);
    }
    if (orig.size() >= 2) {
      row.two_sided = paired_t_test(top, rnd, Alternative::TwoSided);
      row.one_sided = paired_t_test(top, rnd, Alternative::Less);
    } else if (!orig.empty()) {
      table.warnings.push_back(network + "/" + row.metric +
                               ": fewer than 2 replicates, no std or p-value");
    }
    table.rows.push_back(std::move(row));
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string opt_number(const std::optional<TestResult>& t, double TestResult::*f) {
  return t ? format_number((*t).*f) : std::string();
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::vector<NetworkSpec> ExperimentConfig::default_networks() {
  std::vector<NetworkSpec> nets;
  auto add = [&](Family f) {
    NetworkSpec net;
    net.gen.family = f;
    net.name = std::string(to_string(f));
    nets.push_back(net);
  };
  add(Family::ErdosRenyi);
  add(Family::GnpFast);
  add(Family::DuplicationDivergence);
  add(Family::BarabasiAlbert);
  add(Family::RandomGeometric);
  return nets;
}

ExperimentConfig ExperimentConfig::from_json(const json& doc) {
  ExperimentConfig cfg;
  cfg.seed = get_or<std::uint64_t>(doc, "seed", cfg.seed);
  if (auto it = doc.find("networks"); it != doc.end()) {
    for (const json& n : *it) cfg.networks.push_back(network_from_json(n));
  } else {
    cfg.networks = default_networks();
  }
  cfg.replicates = get_or<std::size_t>(doc, "replicates", cfg.replicates);
  const std::string mode = get_or<std::string>(doc, "replicate_mode", "regenerate");
  if (mode == "regenerate")
    cfg.replicate_mode = ReplicateMode::Regenerate;
  else if (mode == "shuffle")
    cfg.replicate_mode = ReplicateMode::Shuffle;
  else
    throw InvalidArgument("unknown replicate_mode '" + mode + "'");
  if (auto it = doc.find("metrics"); it != doc.end()) {
    cfg.metrics.clear();
    for (const json& m : *it) cfg.metrics.push_back(parse_metric(m.get<std::string>()));
  }
  cfg.k = get_or<std::size_t>(doc, "k", cfg.k);

  if (auto it = doc.find("herd"); it != doc.end()) {
    cfg.herd.fraction = get_or<double>(*it, "fraction", cfg.herd.fraction);
    cfg.herd.graphs = get_or<std::size_t>(*it, "graphs", cfg.herd.graphs);
    cfg.herd.random_replicates =
        get_or<std::size_t>(*it, "random_replicates", cfg.herd.random_replicates);
  }
  if (auto it = doc.find("simulate"); it != doc.end()) {
    SimulateConfig& s = cfg.simulate;
    s.params.tau = get_or<double>(*it, "tau", s.params.tau);
    s.params.recovery_days = get_or<double>(*it, "recovery_days", s.params.recovery_days);
    s.params.initial_infected =
        get_or<std::size_t>(*it, "initial_infected", s.params.initial_infected);
    s.params.t_max = get_or<double>(*it, "t_max", s.params.t_max);
    s.params.grid_step = get_or<double>(*it, "grid_step", s.params.grid_step);
    s.runs = get_or<std::size_t>(*it, "runs", s.runs);
    s.k = get_or<std::size_t>(*it, "k", s.k);
    if (auto t = it->find("intervention_times"); t != it->end())
      s.intervention_times = t->get<std::vector<double>>();
    if (auto t = it->find("strategies"); t != it->end())
      s.strategies = t->get<std::vector<std::string>>();
  }
  if (auto it = doc.find("ingest"); it != doc.end()) {
    IngestConfig& in = cfg.ingest;
    if (auto p = it->find("paths"); p != it->end())
      for (const json& path : *p) in.paths.emplace_back(path.get<std::string>());
    const std::string fmt = get_or<std::string>(*it, "format", "three_column");
    if (fmt == "three_column")
      in.format = ContactFormat::ThreeColumn;
    else if (fmt == "two_column")
      in.format = ContactFormat::TwoColumn;
    else
      throw InvalidArgument("unknown contact format '" + fmt + "'");
    in.per_file = get_or<bool>(*it, "per_file", in.per_file);
    in.day_length = get_or<std::int64_t>(*it, "day_length", in.day_length);
    if (auto k = it->find("k"); k != it->end() && !k->is_null())
      in.k = k->get<std::size_t>();
    in.k_fraction = get_or<double>(*it, "k_fraction", in.k_fraction);
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("config " + path.string() + ": " + e.what());
  }
  ExperimentConfig cfg = from_json(doc);
  // Relative contact paths are resolved against the config's directory.
  for (auto& p : cfg.ingest.paths)
    if (p.is_relative()) p = path.parent_path() / p;
  return cfg;
}

json ExperimentConfig::to_json() const {
  json nets = json::array();
  for (const NetworkSpec& n : networks) nets.push_back(network_to_json(n));
  json metric_names = json::array();
  for (Metric m : metrics) metric_names.push_back(std::string(to_string(m)));
  json paths = json::array();
  for (const auto& p : ingest.paths) paths.push_back(p.string());
  return {
      {"seed", seed},
      {"networks", nets},
      {"replicates", replicates},
      {"replicate_mode",
       replicate_mode == ReplicateMode::Regenerate ? "regenerate" : "shuffle"},
      {"metrics", metric_names},
      {"k", k},
      {"herd",
       {{"fraction", herd.fraction},
        {"graphs", herd.graphs},
        {"random_replicates", herd.random_replicates}}},
      {"simulate",
       {{"tau", simulate.params.tau},
        {"recovery_days", simulate.params.recovery_days},
        {"initial_infected", simulate.params.initial_infected},
        {"t_max", simulate.params.t_max},
        {"grid_step", simulate.params.grid_step},
        {"runs", simulate.runs},
        {"k", simulate.k},
        {"intervention_times", simulate.intervention_times},
        {"strategies", simulate.strategies}}},
      {"ingest",
       {{"paths", paths},
        {"format", ingest.format == ContactFormat::ThreeColumn ? "three_column"
                                                               : "two_column"},
        {"per_file", ingest.per_file},
        {"day_length", ingest.day_length},
        {"k", ingest.k ? json(*ingest.k) : json(nullptr)},
        {"k_fraction", ingest.k_fraction}}},
  };
}

void ExperimentConfig::validate() const {
  if (replicates < 1) throw InvalidArgument("replicates must be at least 1");
  for (const NetworkSpec& n : networks) n.gen.validate();
  if (!(herd.fraction > 0.0 && herd.fraction < 1.0))
    throw InvalidArgument("herd fraction must lie in (0, 1)");
  if (herd.graphs < 1 || herd.random_replicates < 1)
    throw InvalidArgument("herd graphs and random_replicates must be >= 1");
  simulate.params.validate();
  if (simulate.runs < 1) throw InvalidArgument("simulate runs must be >= 1");
  for (const std::string& s : simulate.strategies) parse_strategy(s);
  if (!(ingest.k_fraction >= 0.0 && ingest.k_fraction <= 1.0))
    throw InvalidArgument("ingest k_fraction must lie in [0, 1]");
  if (ingest.day_length <= 0)
    throw InvalidArgument("ingest day_length must be positive");
}

Graph replicate_graph(const ExperimentConfig& cfg, const NetworkSpec& net,
                      std::size_t r, std::uint64_t* graph_seed) {
  const std::uint64_t stream = derive_seed(cfg.seed, {hash_tag(net.name)});
  GenSpec spec = net.gen;
  if (cfg.replicate_mode == ReplicateMode::Regenerate) {
    spec.seed = derive_seed(stream, {hash_tag("replicate"), r});
    if (graph_seed) *graph_seed = spec.seed;
    return generate(spec);
  }
  spec.seed = derive_seed(stream, {hash_tag("base")});
  const std::uint64_t shuffle_seed = derive_seed(stream, {hash_tag("shuffle"), r});
  if (graph_seed) *graph_seed = shuffle_seed;
  return degree_preserving_shuffle(generate(spec), 0, shuffle_seed);
}

TableResult run_table1(const ExperimentConfig& cfg, Execution exec) {
  cfg.validate();
  TableResult table;
  for (const NetworkSpec& net : cfg.networks) {
    const std::uint64_t stream = derive_seed(cfg.seed, {hash_tag(net.name)});
    std::vector<GraphOutcome> outcomes(cfg.replicates);
    std::vector<std::string> labels(cfg.replicates);
    for_each_index(cfg.replicates, exec, [&](std::size_t r) {
      labels[r] = std::to_string(r);
      std::uint64_t graph_seed = 0;
      try {
        const Graph g = replicate_graph(cfg, net, r, &graph_seed);
        outcomes[r] = evaluate_graph(
            g, cfg.k, cfg.metrics,
            derive_seed(stream, {hash_tag("random_plan"), r}));
      } catch (const std::exception& e) {
        outcomes[r].lambda_topk.assign(cfg.metrics.size(), 0.0);
        outcomes[r].metric_error.assign(cfg.metrics.size(), {});
        outcomes[r].error = describe(e);
      }
      outcomes[r].graph_seed = graph_seed;
    });
    aggregate(net.name, cfg.metrics, outcomes, cfg.seed, labels, table);
  }
  return table;
}

std::vector<HerdRow> run_herd(const ExperimentConfig& cfg, Execution exec) {
  cfg.validate();
  std::vector<HerdRow> rows;
  for (const NetworkSpec& net : cfg.networks) {
    std::vector<Graph> graphs(cfg.herd.graphs);
    for_each_index(cfg.herd.graphs, exec, [&](std::size_t r) {
      graphs[r] = replicate_graph(cfg, net, r);
    });
    const std::uint64_t stream =
        derive_seed(cfg.seed, {hash_tag(net.name), hash_tag("herd")});
    for (Metric metric : cfg.metrics) {
      HerdRow row;
      row.network = net.name;
      row.metric = std::string(to_string(metric));
      row.n = net.gen.n;
      row.graphs = cfg.herd.graphs;
      row.random_replicates = cfg.herd.random_replicates;
      row.seed = cfg.seed;
      row.report = herd_equivalent(graphs, metric, cfg.herd.fraction,
                                   cfg.herd.random_replicates, stream, exec);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<StrategyOutcome> run_simulate(const ExperimentConfig& cfg,
                                          Execution exec) {
  cfg.validate();
  const SimulateConfig& sc = cfg.simulate;
  std::vector<StrategyOutcome> outcomes;
  for (const NetworkSpec& net : cfg.networks) {
    const std::uint64_t stream =
        derive_seed(cfg.seed, {hash_tag(net.name), hash_tag("simulate")});
    GenSpec spec = net.gen;
    spec.seed = derive_seed(stream, {hash_tag("graph")});
    const Graph g = generate(spec);
    // Every strategy shares the run seeds, so runs differ only after the
    // first intervention.
    const std::uint64_t run_seed = derive_seed(stream, {hash_tag("runs")});
    for (const std::string& name : sc.strategies) {
      const Strategy strategy =
          parse_strategy(name, derive_seed(stream, {hash_tag("random_vaccination")}));
      std::vector<Intervention> plan;
      if (strategy.kind != Strategy::Kind::None)
        for (double t : sc.intervention_times) plan.push_back({t, strategy, sc.k});
      StrategyOutcome out;
      out.network = net.name;
      out.strategy = strategy.name();
      out.ensemble = ensemble(g, sc.params, plan, sc.runs, run_seed, exec);
      out.summary = peak_and_final(out.ensemble.mean);
      for (std::size_t r = 0; r < out.ensemble.runs.size(); ++r)
        for (const std::string& w : out.ensemble.runs[r].warnings)
          out.warnings.push_back("run " + std::to_string(r) + ": " + w);
      outcomes.push_back(std::move(out));
    }
  }
  return outcomes;
}

IngestResult run_ingest(const ExperimentConfig& cfg, Execution exec) {
  cfg.validate();
  const IngestConfig& ic = cfg.ingest;
  if (ic.paths.empty()) throw InvalidArgument("ingest needs at least one file");

  IngestResult result;
  std::vector<ParseResult> parsed(ic.paths.size());
  std::vector<std::string> failures(ic.paths.size());
  for_each_index(ic.paths.size(), exec, [&](std::size_t i) {
    try {
      parsed[i] = parse_contacts(ic.paths[i], ic.format);
    } catch (const FormatError& e) {
      failures[i] = "FormatError at line " + std::to_string(e.line()) + ": " + e.what();
    } catch (const std::exception& e) {
      failures[i] = describe(e);
    }
  });
  std::vector<ContactRecord> records;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (!failures[i].empty()) throw Error(failures[i]);
    for (std::string& w : parsed[i].warnings) result.parse_warnings.push_back(std::move(w));
    for (ContactRecord& r : parsed[i].records) records.push_back(std::move(r));
  }
  result.days = ic.per_file ? build_graphs_per_file(records)
                            : build_daily_graphs(records, ic.day_length);

  const std::string network = "contacts";
  const std::uint64_t stream = derive_seed(cfg.seed, {hash_tag("ingest")});
  const std::size_t count = result.days.days.size();
  std::vector<GraphOutcome> outcomes(count);
  std::vector<std::string> labels(count);
  for_each_index(count, exec, [&](std::size_t d) {
    const Graph& g = result.days.days[d].graph;
    const std::size_t k =
        ic.k ? *ic.k
             : static_cast<std::size_t>(std::lround(
                   ic.k_fraction * static_cast<double>(g.num_nodes())));
    labels[d] = result.days.days[d].day;
    outcomes[d] = evaluate_graph(g, k, cfg.metrics,
                                 derive_seed(stream, {hash_tag("random_plan"), d}));
  });
  aggregate(network, cfg.metrics, outcomes, cfg.seed, labels, result.table);
  if (count < 2)
    result.table.warnings.push_back("single day of contacts: no std or p-value");
  return result;
}

void write_table_csv(std::ostream& out, const TableResult& t) {
  out << "family,metric,k,replicates,seed,original_mean,original_std,"
         "topk_mean,topk_std,random_mean,random_std,t_stat,p_value,"
         "p_value_one_sided,significant,nonconverged,error\n";
  for (const TableRow& r : t.rows) {
    out << csv_escape(r.network) << ',' << r.metric << ',' << r.k << ','
        << r.replicates << ',' << r.seed << ',' << format_number(r.original.mean)
        << ',' << format_number(r.original.std) << ','
        << format_number(r.topk.mean) << ',' << format_number(r.topk.std) << ','
        << format_number(r.random.mean) << ',' << format_number(r.random.std)
        << ',' << opt_number(r.two_sided, &TestResult::t_stat) << ','
        << opt_number(r.two_sided, &TestResult::p_value) << ','
        << opt_number(r.one_sided, &TestResult::p_value) << ','
        << (r.two_sided ? (r.two_sided->significant ? "true" : "false") : "")
        << ',' << r.nonconverged << ',' << csv_escape(r.error) << '\n';
  }
}

void write_replicates_csv(std::ostream& out, const TableResult& t) {
  out << "family,metric,replicate,graph_seed,seed,replicates,lambda_original,"
         "lambda_topk,lambda_random\n";
  for (const ReplicateRecord& r : t.replicates) {
    std::size_t total = 0;
    std::uint64_t seed = 0;
    for (const TableRow& row : t.rows)
      if (row.network == r.network && row.metric == r.metric) {
        total = row.replicates;
        seed = row.seed;
      }
    out << csv_escape(r.network) << ',' << r.metric << ',' << csv_escape(r.label)
        << ',' << r.graph_seed << ',' << seed << ',' << total << ','
        << format_number(r.lambda_original) << ',' << format_number(r.lambda_topk)
        << ',' << format_number(r.lambda_random) << '\n';
  }
}

json table_to_json(const TableResult& t) {
  json rows = json::array();
  for (const TableRow& r : t.rows) {
    json row{{"family", r.network},
             {"metric", r.metric},
             {"k", r.k},
             {"replicates", r.replicates},
             {"seed", r.seed},
             {"original", {{"mean", r.original.mean}, {"std", r.original.std}}},
             {"topk", {{"mean", r.topk.mean}, {"std", r.topk.std}}},
             {"random", {{"mean", r.random.mean}, {"std", r.random.std}}},
             {"nonconverged", r.nonconverged}};
    if (r.two_sided) {
      row["t_stat"] = r.two_sided->t_stat;
      row["p_value"] = r.two_sided->p_value;
      row["p_value_one_sided"] = r.one_sided->p_value;
      row["significant"] = r.two_sided->significant;
    }
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  return {{"rows", rows}, {"warnings", t.warnings}};
}

void write_herd_csv(std::ostream& out, const std::vector<HerdRow>& rows) {
  out << "family,metric,n,n_h_fraction,n_h,lambda_target,n_hs,n_hs_fraction,"
         "graphs,random_replicates,seed\n";
  for (const HerdRow& r : rows) {
    out << csv_escape(r.network) << ',' << r.metric << ',' << r.n << ','
        << format_number(r.report.n_h_fraction) << ',' << r.report.n_h << ','
        << format_number(r.report.lambda_target) << ',' << r.report.n_hs << ','
        << format_number(r.report.n_hs_fraction) << ',' << r.graphs << ','
        << r.random_replicates << ',' << r.seed << '\n';
  }
}

json herd_to_json(const std::vector<HerdRow>& rows) {
  json out = json::array();
  for (const HerdRow& r : rows)
    out.push_back({{"family", r.network},
                   {"metric", r.metric},
                   {"n", r.n},
                   {"n_h_fraction", r.report.n_h_fraction},
                   {"n_h", r.report.n_h},
                   {"lambda_target", r.report.lambda_target},
                   {"n_hs", r.report.n_hs},
                   {"n_hs_fraction", r.report.n_hs_fraction},
                   {"graphs", r.graphs},
                   {"random_replicates", r.random_replicates},
                   {"seed", r.seed}});
  return out;
}

void write_trajectories_csv(std::ostream& out,
                            const std::vector<StrategyOutcome>& outcomes) {
  out << "family,strategy,time,S,I,R,V\n";
  for (const StrategyOutcome& o : outcomes) {
    const SirTrajectory& t = o.ensemble.mean;
    for (std::size_t k = 0; k < t.size(); ++k)
      out << csv_escape(o.network) << ',' << o.strategy << ','
          << format_number(t.times[k]) << ',' << format_number(t.s[k]) << ','
          << format_number(t.i[k]) << ',' << format_number(t.r[k]) << ','
          << format_number(t.v[k]) << '\n';
  }
}

void write_runs_csv(std::ostream& out,
                    const std::vector<StrategyOutcome>& outcomes) {
  out << "family,strategy,run,time,S,I,R,V\n";
  for (const StrategyOutcome& o : outcomes) {
    for (std::size_t r = 0; r < o.ensemble.runs.size(); ++r) {
      const SirTrajectory& t = o.ensemble.runs[r].trajectory;
      for (std::size_t k = 0; k < t.size(); ++k)
        out << csv_escape(o.network) << ',' << o.strategy << ',' << r << ','
            << format_number(t.times[k]) << ',' << format_number(t.s[k]) << ','
            << format_number(t.i[k]) << ',' << format_number(t.r[k]) << ','
            << format_number(t.v[k]) << '\n';
    }
  }
}

json simulate_summary_json(const std::vector<StrategyOutcome>& outcomes,
                           const ExperimentConfig& cfg) {
  json rows = json::array();
  for (const StrategyOutcome& o : outcomes)
    rows.push_back({{"family", o.network},
                    {"strategy", o.strategy},
                    {"runs", o.ensemble.runs.size()},
                    {"seed", cfg.seed},
                    {"peak_infected", o.summary.peak_infected},
                    {"peak_time", o.summary.peak_time},
                    {"final_attack_rate", o.summary.final_attack_rate},
                    {"warnings", o.warnings}});
  return {{"strategies", rows}, {"config", cfg.to_json()["simulate"]}};
}

}  // namespace vaxnet
