#include "vaxnet/vaccination.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace vaxnet {

std::string Strategy::name() const {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::RandomK: return "random";
    case Kind::TopK:
      return std::string(to_string(metric)) + (adaptive ? "_adaptive" : "");
  }
  return "unknown";
}

Strategy parse_strategy(const std::string& name, std::uint64_t seed) {
  if (name == "none") return Strategy::none();
  if (name == "random") return Strategy::random(seed);
  const std::string suffix = "_adaptive";
  if (name.size() > suffix.size() &&
      name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
    return Strategy::topk(
        parse_metric(name.substr(0, name.size() - suffix.size())), true);
  return Strategy::topk(parse_metric(name));
}

VaccinationPlan plan_topk(const CentralityScores& scores, std::size_t k) {
  VaccinationPlan plan;
  plan.strategy = Strategy::topk(scores.metric);
  plan.victims = top_k(scores, k);
  return plan;
}

VaccinationPlan plan_topk(const Graph& g, Metric metric, std::size_t k,
                          bool adaptive, Execution exec) {
  if (k > g.num_nodes()) throw InvalidArgument("k exceeds the number of nodes");
  if (!adaptive) return plan_topk(compute_centrality(g, metric, exec), k);

  VaccinationPlan plan;
  plan.strategy = Strategy::topk(metric, true);
  Graph current = g;
  // Survivor index -> node id in g.
  std::vector<NodeId> origin(g.num_nodes());
  std::iota(origin.begin(), origin.end(), NodeId{0});
  for (std::size_t step = 0; step < k; ++step) {
    NodeId pick = 0;
    if (current.num_edges() > 0 || metric != Metric::Eigenvector)
      pick = top_k(compute_centrality(current, metric, exec), 1).front();
    plan.victims.push_back(origin[pick]);
    const NodeId gone[] = {pick};
    current = delete_nodes(current, gone);
    origin.erase(origin.begin() + pick);
  }
  return plan;
}

VaccinationPlan plan_random(const Graph& g, std::size_t k, std::uint64_t seed) {
  const std::size_t n = g.num_nodes();
  if (k > n) throw InvalidArgument("k exceeds the number of nodes");
  std::mt19937_64 rng(derive_seed(seed, {hash_tag("plan_random")}));
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), NodeId{0});
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  VaccinationPlan plan;
  plan.strategy = Strategy::random(seed);
  plan.victims = std::move(pool);
  return plan;
}

EigenDropReport eigen_drop(const Graph& g, const VaccinationPlan& plan,
                           const SpectralResult& before, Execution exec) {
  EigenDropReport r;
  r.lambda_before = before.lambda_max;
  const SpectralResult after = plan.victims.empty()
                                   ? before
                                   : lambda_max(delete_nodes(g, plan.victims),
                                                1e-9, 50000, exec);
  r.lambda_after = after.lambda_max;
  r.drop = r.lambda_before - r.lambda_after;
  r.drop_pct = r.lambda_before > 0.0 ? 100.0 * r.drop / r.lambda_before : 0.0;
  r.converged = before.converged && after.converged;
  return r;
}

EigenDropReport eigen_drop(const Graph& g, const VaccinationPlan& plan,
                           Execution exec) {
  return eigen_drop(g, plan, lambda_max(g, 1e-9, 50000, exec), exec);
}

HerdReport herd_equivalent(std::span<const Graph> ensemble, Metric metric,
                           double n_h_fraction, std::size_t replicates,
                           std::uint64_t seed, Execution exec) {
  if (ensemble.empty()) throw InvalidArgument("herd_equivalent needs graphs");
  if (!(n_h_fraction > 0.0 && n_h_fraction < 1.0))
    throw InvalidArgument("herd fraction must lie in (0, 1)");
  if (replicates < 1) throw InvalidArgument("replicates must be at least 1");
  const std::size_t n = ensemble.front().num_nodes();
  for (const Graph& g : ensemble)
    if (g.num_nodes() != n)
      throw InvalidArgument("ensemble graphs differ in node count");

  HerdReport report;
  report.n_h_fraction = n_h_fraction;
  report.n_h = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * n_h_fraction));

  double target_sum = 0.0;
  for (std::size_t gi = 0; gi < ensemble.size(); ++gi) {
    for (std::size_t r = 0; r < replicates; ++r) {
      const auto plan = plan_random(
          ensemble[gi], report.n_h,
          derive_seed(seed, {hash_tag("herd_random"), gi, r}));
      target_sum += lambda_max(delete_nodes(ensemble[gi], plan.victims), 1e-9,
                               50000, exec)
                        .lambda_max;
    }
  }
  report.lambda_target =
      target_sum / static_cast<double>(ensemble.size() * replicates);

  std::vector<std::vector<NodeId>> rankings;
  rankings.reserve(ensemble.size());
  for (const Graph& g : ensemble)
    rankings.push_back(ranking(compute_centrality(g, metric, exec)));

  auto mean_after_topk = [&](std::size_t k) {
    ++report.evaluations;
    double sum = 0.0;
    for (std::size_t gi = 0; gi < ensemble.size(); ++gi) {
      std::span<const NodeId> victims(rankings[gi].data(), k);
      sum += lambda_max(delete_nodes(ensemble[gi], victims), 1e-9, 50000, exec)
                 .lambda_max;
    }
    return sum / static_cast<double>(ensemble.size());
  };

  // Invariant: f(hi) <= target (f(n) = 0), f(lo - 1) > target.
  std::size_t lo = 0;
  std::size_t hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (mean_after_topk(mid) <= report.lambda_target)
      hi = mid;
    else
      lo = mid + 1;
  }
  report.n_hs = lo;
  report.n_hs_fraction = static_cast<double>(lo) / static_cast<double>(n);
  return report;
}

}  // namespace vaxnet
