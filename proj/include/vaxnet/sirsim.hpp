#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vaxnet/graph.hpp"
#include "vaxnet/vaccination.hpp"

namespace vaxnet {

struct SirParams {
  double tau = 0.4;             // per-edge transmission rate (1/day)
  double recovery_days = 14.0;  // fixed infectious period
  std::size_t initial_infected = 5;
  double t_max = 60.0;
  double grid_step = 0.25;  // trajectory sampling resolution (days)

  void validate() const;
};

// Vaccinate k currently susceptible nodes at `time`.
struct Intervention {
  double time = 0.0;
  Strategy strategy;
  std::size_t k = 0;
};

struct SirTrajectory {
  std::vector<double> times;
  std::vector<double> s, i, r, v;
  std::size_t size() const noexcept { return times.size(); }
};

struct InfectionEvent {
  double time;
  NodeId target;
  NodeId source;  // == target for the initial seeds
};

enum class NodeState : std::uint8_t { Susceptible, Infectious, Recovered, Vaccinated };

struct SirRun {
  SirTrajectory trajectory;
  std::vector<InfectionEvent> infections;  // in time order
  std::vector<double> vaccination_times;   // per node, NaN if never
  std::vector<std::string> warnings;
  std::size_t vaccinated = 0;
};

// Precomputed node orderings for the interventions' TopK strategies, ranked
// once on the intact graph and shared by every run.
struct InterventionRankings {
  std::vector<std::vector<NodeId>> order;  // one per intervention, empty
                                           // for non-TopK strategies
};

InterventionRankings rank_interventions(const Graph& g,
                                        const std::vector<Intervention>& plan,
                                        Execution exec = Execution::Parallel);

// Event-driven SIR: exponential transmission clocks of rate tau along every
// S-neighbor edge, deterministic recovery after recovery_days. The initial
// infected are drawn uniformly from all nodes. Interventions at or after
// t_max are skipped with a warning; if fewer than k susceptible nodes remain,
// all of them are vaccinated and a warning is recorded.
SirRun simulate(const Graph& g, const SirParams& params,
                const std::vector<Intervention>& interventions,
                std::uint64_t seed);
SirRun simulate(const Graph& g, const SirParams& params,
                const std::vector<Intervention>& interventions,
                const InterventionRankings& rankings, std::uint64_t seed);

struct SirEnsemble {
  SirTrajectory mean;
  std::vector<SirRun> runs;
};

// Run `runs` independent simulations (per-run streams split from `seed`) and
// average them pointwise on the shared grid, in run order.
SirEnsemble ensemble(const Graph& g, const SirParams& params,
                     const std::vector<Intervention>& interventions,
                     std::size_t runs, std::uint64_t seed,
                     Execution exec = Execution::Parallel);

struct SirSummary {
  double peak_infected = 0.0;
  double peak_time = 0.0;
  double final_attack_rate = 0.0;  // r(t_max) / n
};

// Peak is the first maximum of i over the sampled grid.
SirSummary peak_and_final(const SirTrajectory& t);

}  // namespace vaxnet
