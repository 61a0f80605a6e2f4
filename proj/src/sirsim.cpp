#include "vaxnet/sirsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <random>

namespace vaxnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class EventKind : std::uint8_t { Recover, Transmit, Intervene };

struct Event {
  double time;
  std::uint64_t seq;
  EventKind kind;
  NodeId node;    // Transmit/Recover: affected node; Intervene: index
  NodeId source;  // Transmit only
};

struct Later {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    return a.seq > b.seq;
  }
};

class Simulation {
 public:
  Simulation(const Graph& g, const SirParams& params,
             const std::vector<Intervention>& interventions,
             const InterventionRankings& rankings, std::uint64_t seed)
      : g_(g),
        params_(params),
        interventions_(interventions),
        rankings_(rankings),
        rng_(seed),
        state_(g.num_nodes(), NodeState::Susceptible),
        pending_(g.num_nodes(), kInf) {
    counts_[0] = static_cast<double>(g.num_nodes());
    run_.vaccination_times.assign(g.num_nodes(),
                                  std::numeric_limits<double>::quiet_NaN());
    const auto samples =
        static_cast<std::size_t>(std::floor(params.t_max / params.grid_step + 1e-9)) + 1;
    run_.trajectory.times.reserve(samples);
    for (auto* series : {&run_.trajectory.s, &run_.trajectory.i,
                         &run_.trajectory.r, &run_.trajectory.v})
      series->reserve(samples);
  }

  SirRun run() {
    const std::size_t n = g_.num_nodes();
    for (std::size_t idx = 0; idx < interventions_.size(); ++idx) {
      const Intervention& iv = interventions_[idx];
      if (iv.time >= params_.t_max) {
        run_.warnings.push_back("intervention at t=" + std::to_string(iv.time) +
                                " is not before t_max; skipped");
        continue;
      }
      push(iv.time, EventKind::Intervene, static_cast<NodeId>(idx), 0);
    }

    std::vector<NodeId> nodes(n);
    std::iota(nodes.begin(), nodes.end(), NodeId{0});
    for (std::size_t i = 0; i < params_.initial_infected; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(nodes[i], nodes[pick(rng_)]);
      infect(nodes[i], 0.0, nodes[i]);
    }

    while (!queue_.empty()) {
      const Event ev = queue_.top();
      if (ev.time > params_.t_max) break;
      queue_.pop();
      sample_until(ev.time);
      switch (ev.kind) {
        case EventKind::Recover:
          move(ev.node, NodeState::Recovered);
          break;
        case EventKind::Transmit:
          if (state_[ev.node] == NodeState::Susceptible &&
              pending_[ev.node] == ev.time)
            infect(ev.node, ev.time, ev.source);
          break;
        case EventKind::Intervene:
          vaccinate(interventions_[ev.node], ev.node, ev.time);
          break;
      }
    }
    sample_through(params_.t_max);
    return std::move(run_);
  }

 private:
  void push(double time, EventKind kind, NodeId node, NodeId source) {
    queue_.push({time, next_seq_++, kind, node, source});
  }

  void move(NodeId v, NodeState to) {
    counts_[static_cast<int>(state_[v])] -= 1.0;
    counts_[static_cast<int>(to)] += 1.0;
    state_[v] = to;
  }

  void infect(NodeId v, double t, NodeId source) {
    move(v, NodeState::Infectious);
    run_.infections.push_back({t, v, source});
    const double recover_at = t + params_.recovery_days;
    push(recover_at, EventKind::Recover, v, v);
    if (params_.tau <= 0.0) return;
    std::exponential_distribution<double> wait(params_.tau);
    for (NodeId w : g_.neighbors(v)) {
      if (state_[w] != NodeState::Susceptible) continue;
      const double at = t + wait(rng_);
      if (at < recover_at && at < pending_[w]) {
        pending_[w] = at;
        push(at, EventKind::Transmit, w, v);
      }
    }
  }

  void vaccinate(const Intervention& iv, std::size_t index, double t) {
    std::size_t done = 0;
    auto take = [&](NodeId v) {
      if (done < iv.k && state_[v] == NodeState::Susceptible) {
        move(v, NodeState::Vaccinated);
        run_.vaccination_times[v] = t;
        ++done;
      }
    };
    switch (iv.strategy.kind) {
      case Strategy::Kind::None:
        return;
      case Strategy::Kind::TopK:
        for (NodeId v : rankings_.order.at(index)) {
          if (done == iv.k) break;
          take(v);
        }
        break;
      case Strategy::Kind::RandomK: {
        std::vector<NodeId> candidates;
        for (NodeId v = 0; v < g_.num_nodes(); ++v)
          if (state_[v] == NodeState::Susceptible) candidates.push_back(v);
        std::shuffle(candidates.begin(), candidates.end(), rng_);
        for (NodeId v : candidates) {
          if (done == iv.k) break;
          take(v);
        }
        break;
      }
    }
    run_.vaccinated += done;
    if (done < iv.k)
      run_.warnings.push_back("intervention at t=" + std::to_string(t) +
                              " vaccinated " + std::to_string(done) + " of " +
                              std::to_string(iv.k) +
                              " requested (susceptible pool exhausted)");
  }

  // Record grid samples strictly before t.
  void sample_until(double t) {
    while (true) {
      const double g = static_cast<double>(next_sample_) * params_.grid_step;
      if (g >= t || g > params_.t_max + 1e-12) return;
      emit(g);
    }
  }

  void sample_through(double t) {
    while (true) {
      const double g = static_cast<double>(next_sample_) * params_.grid_step;
      if (g > t + 1e-12) return;
      emit(g);
    }
  }

  void emit(double g) {
    SirTrajectory& tr = run_.trajectory;
    tr.times.push_back(g);
    tr.s.push_back(counts_[0]);
    tr.i.push_back(counts_[1]);
    tr.r.push_back(counts_[2]);
    tr.v.push_back(counts_[3]);
    ++next_sample_;
  }

  const Graph& g_;
  const SirParams& params_;
  const std::vector<Intervention>& interventions_;
  const InterventionRankings& rankings_;
  std::mt19937_64 rng_;
  std::vector<NodeState> state_;
  std::vector<double> pending_;  // earliest scheduled infection time
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::uint64_t next_seq_ = 0;
  std::size_t next_sample_ = 0;
  double counts_[4] = {0.0, 0.0, 0.0, 0.0};
  SirRun run_;
};

}  // namespace

void SirParams::validate() const {
  if (!(tau >= 0.0)) throw InvalidArgument("tau must be non-negative");
  if (!(recovery_days > 0.0))
    throw InvalidArgument("recovery_days must be positive");
  if (initial_infected < 1)
    throw InvalidArgument("initial_infected must be at least 1");
  if (!(t_max > 0.0)) throw InvalidArgument("t_max must be positive");
  if (!(grid_step > 0.0)) throw InvalidArgument("grid_step must be positive");
}

InterventionRankings rank_interventions(const Graph& g,
                                        const std::vector<Intervention>& plan,
                                        Execution exec) {
  InterventionRankings out;
  out.order.resize(plan.size());
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const Strategy& s = plan[i].strategy;
    if (s.kind != Strategy::Kind::TopK) continue;
    // Reuse a ranking already computed for the same strategy.
    bool reused = false;
    for (std::size_t j = 0; j < i && !reused; ++j) {
      const Strategy& o = plan[j].strategy;
      if (o.kind == Strategy::Kind::TopK && o.metric == s.metric &&
          o.adaptive == s.adaptive) {
        out.order[i] = out.order[j];
        reused = true;
      }
    }
    if (reused) continue;
    out.order[i] = s.adaptive
                       ? plan_topk(g, s.metric, g.num_nodes(), true, exec).victims
                       : ranking(compute_centrality(g, s.metric, exec));
  }
  return out;
}

SirRun simulate(const Graph& g, const SirParams& params,
                const std::vector<Intervention>& interventions,
                const InterventionRankings& rankings, std::uint64_t seed) {
  params.validate();
  if (params.initial_infected > g.num_nodes())
    throw InvalidArgument("initial_infected exceeds the number of nodes");
  if (rankings.order.size() != interventions.size())
    throw InvalidArgument("rankings do not match the interventions");
  for (const Intervention& iv : interventions)
    if (iv.time < 0.0) throw InvalidArgument("intervention time is negative");
  Simulation sim(g, params, interventions, rankings,
                 derive_seed(seed, {hash_tag("sir_run")}));
  return sim.run();
}

SirRun simulate(const Graph& g, const SirParams& params,
                const std::vector<Intervention>& interventions,
                std::uint64_t seed) {
  return simulate(g, params, interventions,
                  rank_interventions(g, interventions), seed);
}

SirEnsemble ensemble(const Graph& g, const SirParams& params,
                     const std::vector<Intervention>& interventions,
                     std::size_t runs, std::uint64_t seed, Execution exec) {
  if (runs < 1) throw InvalidArgument("runs must be at least 1");
  params.validate();
  const InterventionRankings rankings =
      rank_interventions(g, interventions, exec);
  SirEnsemble out;
  out.runs.resize(runs);
  const auto count = static_cast<std::ptrdiff_t>(runs);
  auto one = [&](std::ptrdiff_t r) {
    const auto idx = static_cast<std::size_t>(r);
    out.runs[idx] = simulate(g, params, interventions, rankings,
                             derive_seed(seed, {hash_tag("ensemble"), idx}));
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t r = 0; r < count; ++r) one(r);
  } else {
    for (std::ptrdiff_t r = 0; r < count; ++r) one(r);
  }

  SirTrajectory& mean = out.mean;
  mean.times = out.runs.front().trajectory.times;
  const std::size_t len = mean.times.size();
  for (auto* series : {&mean.s, &mean.i, &mean.r, &mean.v})
    series->assign(len, 0.0);
  for (const SirRun& run : out.runs) {
    const SirTrajectory& t = run.trajectory;
    for (std::size_t k = 0; k < len; ++k) {
      mean.s[k] += t.s[k];
      mean.i[k] += t.i[k];
      mean.r[k] += t.r[k];
      mean.v[k] += t.v[k];
    }
  }
  const double inv = 1.0 / static_cast<double>(runs);
  for (auto* series : {&mean.s, &mean.i, &mean.r, &mean.v})
    for (double& x : *series) x *= inv;
  return out;
}

SirSummary peak_and_final(const SirTrajectory& t) {
  if (t.size() == 0) throw InvalidArgument("empty trajectory");
  SirSummary s;
  s.peak_infected = t.i[0];
  s.peak_time = t.times[0];
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (t.i[k] > s.peak_infected) {
      s.peak_infected = t.i[k];
      s.peak_time = t.times[k];
    }
  }
  const double n = t.s.back() + t.i.back() + t.r.back() + t.v.back();
  s.final_attack_rate = n > 0.0 ? t.r.back() / n : 0.0;
  return s;
}

}  // namespace vaxnet
