#include "vaxnet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <string>

#include "vaxnet/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vaxnet {

namespace {

CentralityScores make_scores(const Graph& g, Metric metric) {
  CentralityScores s;
  s.metric = metric;
  s.values.assign(g.num_nodes(), 0.0);
  s.graph_fingerprint = g.fingerprint();
  return s;
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

// Per-source scratch for BFS and Brandes passes.
struct SourceWorkspace {
  explicit SourceWorkspace(std::size_t n)
      : dist(n, -1), sigma(n, 0.0), delta(n, 0.0) {
    order.reserve(n);
  }
  std::vector<long long> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<NodeId> order;
};

// BFS from s; fills dist for reached nodes and the visit order.
void bfs(const Graph& g, NodeId s, SourceWorkspace& ws) {
  for (NodeId v : ws.order) ws.dist[v] = -1;
  ws.order.clear();
  ws.dist[s] = 0;
  ws.order.push_back(s);
  for (std::size_t head = 0; head < ws.order.size(); ++head) {
    const NodeId v = ws.order[head];
    for (NodeId w : g.neighbors(v)) {
      if (ws.dist[w] < 0) {
        ws.dist[w] = ws.dist[v] + 1;
        ws.order.push_back(w);
      }
    }
  }
}

double closeness_from(const Graph& g, NodeId s, SourceWorkspace& ws) {
  bfs(g, s, ws);
  const std::size_t reached = ws.order.size() - 1;
  if (reached == 0) return 0.0;
  long long total = 0;
  for (NodeId v : ws.order) total += ws.dist[v];
  const double r = static_cast<double>(reached);
  return (r / static_cast<double>(total)) *
         (r / static_cast<double>(g.num_nodes() - 1));
}

// Adds the dependencies of source s to `acc`.
void brandes_from(const Graph& g, NodeId s, SourceWorkspace& ws,
                  std::vector<double>& acc) {
  for (NodeId v : ws.order) {
    ws.dist[v] = -1;
    ws.sigma[v] = 0.0;
    ws.delta[v] = 0.0;
  }
  ws.order.clear();
  ws.dist[s] = 0;
  ws.sigma[s] = 1.0;
  ws.order.push_back(s);
  for (std::size_t head = 0; head < ws.order.size(); ++head) {
    const NodeId v = ws.order[head];
    for (NodeId w : g.neighbors(v)) {
      if (ws.dist[w] < 0) {
        ws.dist[w] = ws.dist[v] + 1;
        ws.order.push_back(w);
      }
      if (ws.dist[w] == ws.dist[v] + 1) ws.sigma[w] += ws.sigma[v];
    }
  }
  for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
    const NodeId w = *it;
    const double coeff = (1.0 + ws.delta[w]) / ws.sigma[w];
    for (NodeId v : g.neighbors(w))
      if (ws.dist[v] == ws.dist[w] - 1) ws.delta[v] += ws.sigma[v] * coeff;
    if (w != s) acc[w] += ws.delta[w];
  }
}

}  // namespace

std::string_view to_string(Metric m) noexcept {
  switch (m) {
    case Metric::Degree: return "degree";
    case Metric::DegreeNormalized: return "degree_normalized";
    case Metric::Closeness: return "closeness";
    case Metric::Betweenness: return "betweenness";
    case Metric::Eigenvector: return "eigenvector";
  }
  return "unknown";
}

Metric parse_metric(std::string_view name) {
  if (name == "degree" || name == "DC") return Metric::Degree;
  if (name == "degree_normalized" || name == "DCN")
    return Metric::DegreeNormalized;
  if (name == "closeness" || name == "CC") return Metric::Closeness;
  if (name == "betweenness" || name == "BC") return Metric::Betweenness;
  if (name == "eigenvector" || name == "EC") return Metric::Eigenvector;
  throw InvalidArgument("unknown centrality metric '" + std::string(name) + "'");
}

CentralityScores degree_centrality(const Graph& g, bool normalized) {
  CentralityScores s =
      make_scores(g, normalized ? Metric::DegreeNormalized : Metric::Degree);
  const std::size_t n = g.num_nodes();
  const double scale =
      normalized && n > 1 ? 1.0 / static_cast<double>(n - 1) : 1.0;
  for (NodeId v = 0; v < n; ++v)
    s.values[v] = static_cast<double>(g.degree(v)) * scale;
  return s;
}

CentralityScores closeness_centrality(const Graph& g, Execution exec) {
  CentralityScores s = make_scores(g, Metric::Closeness);
  const auto n = static_cast<std::ptrdiff_t>(g.num_nodes());
  if (n < 2) return s;
  if (exec == Execution::Parallel) {
#pragma omp parallel
    {
      SourceWorkspace ws(g.num_nodes());
#pragma omp for schedule(dynamic, 16)
      for (std::ptrdiff_t v = 0; v < n; ++v)
        s.values[static_cast<std::size_t>(v)] =
            closeness_from(g, static_cast<NodeId>(v), ws);
    }
  } else {
    SourceWorkspace ws(g.num_nodes());
    for (std::ptrdiff_t v = 0; v < n; ++v)
      s.values[static_cast<std::size_t>(v)] =
          closeness_from(g, static_cast<NodeId>(v), ws);
  }
  return s;
}

CentralityScores betweenness_centrality(const Graph& g, bool normalized,
                                        Execution exec) {
  CentralityScores s = make_scores(g, Metric::Betweenness);
  const std::size_t n = g.num_nodes();
  const auto sn = static_cast<std::ptrdiff_t>(n);
  if (exec == Execution::Parallel) {
    // Thread-local accumulators reduced in thread order.
    std::vector<std::vector<double>> partial(
        static_cast<std::size_t>(thread_count()));
#pragma omp parallel
    {
      std::vector<double>& acc = partial[static_cast<std::size_t>(thread_id())];
      acc.assign(n, 0.0);
      SourceWorkspace ws(n);
#pragma omp for schedule(dynamic, 8)
      for (std::ptrdiff_t src = 0; src < sn; ++src)
        brandes_from(g, static_cast<NodeId>(src), ws, acc);
    }
    for (const auto& acc : partial)
      for (std::size_t v = 0; v < acc.size(); ++v) s.values[v] += acc[v];
  } else {
    SourceWorkspace ws(n);
    for (NodeId src = 0; src < n; ++src) brandes_from(g, src, ws, s.values);
  }
  // Every unordered pair was visited from both ends.
  double scale = 0.5;
  if (normalized && n > 2)
    scale /= static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
  for (double& v : s.values) v *= scale;
  return s;
}

CentralityScores eigenvector_centrality(const Graph& g, double tol,
                                        std::size_t max_iter, Execution exec) {
  if (g.num_nodes() == 0 || g.num_edges() == 0)
    throw EmptyGraph("eigenvector centrality needs at least one edge");
  CentralityScores s = make_scores(g, Metric::Eigenvector);
  const std::size_t n = g.num_nodes();
  std::vector<double> x = power_start_vector(n);
  std::vector<double> y(n);
  double diff = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    adjacency_multiply(g, x, y, 1.0, exec);
    double norm2 = 0.0;
    for (double v : y) norm2 += v * v;
    const double inv = 1.0 / std::sqrt(norm2);
    diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] *= inv;
      diff = std::max(diff, std::abs(y[i] - x[i]));
    }
    x.swap(y);
    if (diff < tol) {
      s.values = std::move(x);
      return s;
    }
  }
  throw NonConvergence("eigenvector centrality did not converge after " +
                           std::to_string(max_iter) + " iterations",
                       max_iter, diff);
}

CentralityScores compute_centrality(const Graph& g, Metric metric,
                                    Execution exec) {
  switch (metric) {
    case Metric::Degree: return degree_centrality(g, false);
    case Metric::DegreeNormalized: return degree_centrality(g, true);
    case Metric::Closeness: return closeness_centrality(g, exec);
    case Metric::Betweenness: return betweenness_centrality(g, false, exec);
    case Metric::Eigenvector: return eigenvector_centrality(g, 1e-10, 10000, exec);
  }
  throw InvalidArgument("unknown centrality metric");
}

std::vector<NodeId> top_k(const CentralityScores& scores, std::size_t k) {
  const std::size_t n = scores.values.size();
  if (k > n) throw InvalidArgument("k exceeds the number of nodes");
  std::vector<NodeId> idx(n);
  std::iota(idx.begin(), idx.end(), NodeId{0});
  auto better = [&](NodeId a, NodeId b) {
    if (scores.values[a] != scores.values[b])
      return scores.values[a] > scores.values[b];
    return a < b;
  };
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k),
                    idx.end(), better);
  idx.resize(k);
  return idx;
}

std::vector<NodeId> ranking(const CentralityScores& scores) {
  return top_k(scores, scores.values.size());
}

void write_scores_csv(std::ostream& out, const Graph& g,
                      const CentralityScores& scores) {
  const std::vector<NodeId> order = ranking(scores);
  std::vector<std::size_t> rank(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r + 1;
  out << "node_id,score,rank\n" << std::setprecision(17);
  for (NodeId v = 0; v < scores.values.size(); ++v)
    out << g.label(v) << ',' << scores.values[v] << ',' << rank[v] << '\n';
}

}  // namespace vaxnet
