#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vaxnet/centrality.hpp"
#include "vaxnet/graph.hpp"
#include "vaxnet/spectral.hpp"

namespace vaxnet {

struct Strategy {
  enum class Kind { None, TopK, RandomK };
  Kind kind = Kind::None;
  Metric metric = Metric::Degree;  // TopK only
  std::uint64_t seed = 0;          // RandomK only
  bool adaptive = false;           // TopK: re-rank after every removal

  static Strategy none() { return {}; }
  static Strategy topk(Metric m, bool adaptive = false) {
    return {Kind::TopK, m, 0, adaptive};
  }
  static Strategy random(std::uint64_t seed) {
    return {Kind::RandomK, Metric::Degree, seed, false};
  }
  std::string name() const;  // "none", "random", or the metric name
};

Strategy parse_strategy(const std::string& name, std::uint64_t seed = 0);

struct VaccinationPlan {
  Strategy strategy;
  std::vector<NodeId> victims;  // in removal order
  std::size_t k() const noexcept { return victims.size(); }
};

// Static ranking on the intact graph unless `adaptive` is set, in which case
// the metric is recomputed after each removal.
VaccinationPlan plan_topk(const Graph& g, Metric metric, std::size_t k,
                          bool adaptive = false,
                          Execution exec = Execution::Parallel);
// Top-k from precomputed scores of `g`.
VaccinationPlan plan_topk(const CentralityScores& scores, std::size_t k);
// k distinct nodes drawn uniformly; deterministic per seed.
VaccinationPlan plan_random(const Graph& g, std::size_t k, std::uint64_t seed);

struct EigenDropReport {
  double lambda_before = 0.0;
  double lambda_after = 0.0;
  double drop = 0.0;
  double drop_pct = 0.0;
  bool converged = true;  // both eigenvalue solves converged
};

EigenDropReport eigen_drop(const Graph& g, const VaccinationPlan& plan,
                           Execution exec = Execution::Parallel);
// Same, reusing a known lambda for the intact graph.
EigenDropReport eigen_drop(const Graph& g, const VaccinationPlan& plan,
                           const SpectralResult& before,
                           Execution exec = Execution::Parallel);

struct HerdReport {
  double n_h_fraction = 0.7;
  std::size_t n_h = 0;          // floor(n * n_h_fraction)
  double lambda_target = 0.0;   // mean lambda after n_h random removals
  std::size_t n_hs = 0;         // central nodes needed to reach the target
  double n_hs_fraction = 0.0;
  std::size_t evaluations = 0;  // bisection probes
};

// Smallest k such that the ensemble-mean lambda after removing the top-k
// nodes (by `metric`, ranked once per graph) is <= the ensemble-mean lambda
// after removing n_h random nodes. `replicates` random removals are drawn per
// graph. All graphs must have the same node count.
HerdReport herd_equivalent(std::span<const Graph> ensemble, Metric metric,
                           double n_h_fraction, std::size_t replicates,
                           std::uint64_t seed,
                           Execution exec = Execution::Parallel);

}  // namespace vaxnet
