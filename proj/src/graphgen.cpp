#include "vaxnet/graphgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <unordered_set>
#include <vector>

namespace vaxnet {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::string_view stream) {
  return std::mt19937_64(derive_seed(seed, {hash_tag(stream)}));
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InvalidArgument("edge probability must lie in [0, 1]");
}

std::uint64_t edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::GnpFast: return "gnp";
    case Family::ErdosRenyi: return "erdos_renyi";
    case Family::DuplicationDivergence: return "duplication_divergence";
    case Family::BarabasiAlbert: return "barabasi_albert";
    case Family::RandomGeometric: return "random_geometric";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "gnp" || name == "gnp_fast") return Family::GnpFast;
  if (name == "erdos_renyi" || name == "er") return Family::ErdosRenyi;
  if (name == "duplication_divergence" || name == "dd")
    return Family::DuplicationDivergence;
  if (name == "barabasi_albert" || name == "ba") return Family::BarabasiAlbert;
  if (name == "random_geometric" || name == "rgg")
    return Family::RandomGeometric;
  throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

double GenSpec::default_radius(std::size_t n, double target_degree) {
  return std::sqrt(target_degree /
                   (static_cast<double>(n) * std::numbers::pi));
}

void GenSpec::validate() const {
  switch (family) {
    case Family::GnpFast:
    case Family::ErdosRenyi:
      if (n == 0) throw InvalidArgument("n must be at least 1");
      check_probability(p);
      break;
    case Family::DuplicationDivergence:
      if (n < 2) throw InvalidArgument("duplication-divergence needs n >= 2");
      if (!(p > 0.0 && p <= 1.0))
        throw InvalidArgument("retention probability must lie in (0, 1]");
      break;
    case Family::BarabasiAlbert:
      if (m < 1 || m >= n)
        throw InvalidArgument("Barabasi-Albert needs 1 <= m < n");
      break;
    case Family::RandomGeometric:
      if (n == 0) throw InvalidArgument("n must be at least 1");
      if (dimension == 0) throw InvalidArgument("dimension must be positive");
      if (radius < 0.0 || !std::isfinite(radius))
        throw InvalidArgument("radius must be positive");
      break;
  }
}

Graph generate(const GenSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::GnpFast: return gen_gnp(spec.n, spec.p, spec.seed);
    case Family::ErdosRenyi: return gen_erdos_renyi(spec.n, spec.p, spec.seed);
    case Family::DuplicationDivergence:
      return gen_duplication_divergence(spec.n, spec.p, spec.seed,
                                        spec.duplicate_rule);
    case Family::BarabasiAlbert:
      return gen_barabasi_albert(spec.n, spec.m, spec.seed);
    case Family::RandomGeometric: {
      double r = spec.radius > 0.0 ? spec.radius
                                   : GenSpec::default_radius(spec.n);
      return gen_random_geometric(spec.n, r, spec.seed, spec.dimension);
    }
  }
  throw InvalidArgument("unknown graph family");
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  check_probability(p);
  std::vector<Edge> edges;
  if (p == 0.0) return Graph::from_edges(edges, n);
  if (p == 1.0) return gen_erdos_renyi(n, 1.0, seed);

  auto rng = make_engine(seed, "gnp");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  edges.reserve(static_cast<std::size_t>(p * n * (n - 1) / 2 * 1.05) + 16);
  const double log_q = std::log1p(-p);
  // Walk the strict lower triangle row by row, jumping over the gaps
  // between selected pairs with geometric skips.
  long long v = 1;
  long long w = -1;
  const auto nn = static_cast<long long>(n);
  while (v < nn) {
    const double r = unit(rng);
    w += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn)
      edges.push_back({static_cast<NodeId>(v), static_cast<NodeId>(w)});
  }
  return Graph::from_edges(edges, n);
}

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  check_probability(p);
  auto rng = make_engine(seed, "erdos_renyi");
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * n * (n - 1) / 2 * 1.05) + 16);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(edges, n);
}

Graph gen_duplication_divergence(std::size_t n, double p, std::uint64_t seed,
                                 DuplicateRule rule) {
  if (n < 2) throw InvalidArgument("duplication-divergence needs n >= 2");
  if (!(p > 0.0 && p <= 1.0))
    throw InvalidArgument("retention probability must lie in (0, 1]");
  auto rng = make_engine(seed, "duplication_divergence");
  std::bernoulli_distribution keep(p);

  std::vector<std::vector<NodeId>> adj(n);
  adj[0].push_back(1);
  adj[1].push_back(0);
  std::vector<NodeId> copied;
  NodeId size = 2;
  while (size < n) {
    std::uniform_int_distribution<NodeId> pick(0, size - 1);
    const NodeId original = pick(rng);
    copied.clear();
    for (NodeId nb : adj[original])
      if (keep(rng)) copied.push_back(nb);
    if (copied.empty() && rule == DuplicateRule::Resample) continue;
    const NodeId fresh = size++;
    for (NodeId nb : copied) {
      adj[fresh].push_back(nb);
      adj[nb].push_back(fresh);
    }
  }
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : adj[u])
      if (u < v) edges.push_back({u, v});
  return Graph::from_edges(edges, n);
}

Graph gen_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m >= n)
    throw InvalidArgument("Barabasi-Albert needs 1 <= m < n");
  auto rng = make_engine(seed, "barabasi_albert");

  std::vector<Edge> edges;
  edges.reserve(m * (n - m));
  // Each endpoint appears once per incident edge, so a uniform draw from this
  // list is a degree-proportional draw.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * m * (n - m));
  std::vector<NodeId> targets(m);
  for (NodeId i = 0; i < m; ++i) targets[i] = i;
  std::vector<char> chosen(n, 0);

  for (auto source = static_cast<NodeId>(m); source < n; ++source) {
    for (NodeId t : targets) {
      edges.push_back({source, t});
      endpoints.push_back(t);
      endpoints.push_back(source);
    }
    if (source + 1 == n) break;
    for (NodeId t : targets) chosen[t] = 0;
    targets.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (targets.size() < m) {
      const NodeId t = endpoints[pick(rng)];
      if (chosen[t]) continue;
      chosen[t] = 1;
      targets.push_back(t);
    }
  }
  return Graph::from_edges(edges, n);
}

Graph gen_random_geometric(std::size_t n, double radius, std::uint64_t seed,
                           std::size_t dimension) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  if (dimension == 0) throw InvalidArgument("dimension must be positive");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw InvalidArgument("radius must be positive");
  auto rng = make_engine(seed, "random_geometric");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> pos(n * dimension);
  for (double& x : pos) x = unit(rng);

  const double r2 = radius * radius;
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    const double* pu = pos.data() + u * dimension;
    for (NodeId v = u + 1; v < n; ++v) {
      const double* pv = pos.data() + v * dimension;
      double d2 = 0.0;
      for (std::size_t k = 0; k < dimension; ++k) {
        const double d = pu[k] - pv[k];
        d2 += d * d;
      }
      if (d2 <= r2) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(edges, n);
}

Graph degree_preserving_shuffle(const Graph& g, std::size_t n_swaps,
                                std::uint64_t seed, ShuffleStats* stats) {
  std::vector<Edge> edges = g.edges();
  if (edges.size() < 2)
    throw InvalidArgument("degree-preserving shuffle needs at least 2 edges");
  if (n_swaps == 0) n_swaps = 10 * edges.size();

  std::unordered_set<std::uint64_t> present;
  present.reserve(edges.size() * 2);
  for (const Edge& e : edges) present.insert(edge_key(e.u, e.v));

  auto rng = make_engine(seed, "degree_preserving_shuffle");
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  std::bernoulli_distribution coin(0.5);
  const std::size_t max_attempts = 100 * n_swaps;
  ShuffleStats local;
  while (local.accepted < n_swaps && local.attempted < max_attempts) {
    ++local.attempted;
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    auto [a, b] = edges[i];
    auto [c, d] = edges[j];
    if (coin(rng)) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) continue;
    if (present.count(edge_key(a, d)) || present.count(edge_key(c, b)))
      continue;
    present.erase(edge_key(a, b));
    present.erase(edge_key(c, d));
    present.insert(edge_key(a, d));
    present.insert(edge_key(c, b));
    edges[i] = {a, d};
    edges[j] = {c, b};
    ++local.accepted;
  }
  if (stats) *stats = local;
  return Graph::from_edges(edges, g.num_nodes(),
                           std::vector<std::int64_t>(g.labels().begin(),
                                                     g.labels().end()));
}

}  // namespace vaxnet
