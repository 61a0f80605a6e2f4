#pragma once
// Independent reference implementations used only by the tests. None of these
// share code paths with the library kernels they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "vaxnet/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix dense_adjacency(const vaxnet::Graph& g) {
  const std::size_t n = g.num_nodes();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (vaxnet::NodeId u = 0; u < n; ++u)
    for (vaxnet::NodeId v : g.neighbors(u)) a[u][v] = 1.0;
  return a;
}

struct Eigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // vectors[k] pairs with values[k]
};

// Cyclic Jacobi rotations for a dense symmetric matrix.
inline Eigen jacobi_eigen(Matrix a) {
  const std::size_t n = a.size();
  Matrix v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t x, std::size_t y) { return a[x][x] < a[y][y]; });
  Eigen out;
  for (std::size_t k : idx) {
    out.values.push_back(a[k][k]);
    std::vector<double> vec(n);
    for (std::size_t i = 0; i < n; ++i) vec[i] = v[i][k];
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

inline double dense_lambda_max(const vaxnet::Graph& g) {
  if (g.num_nodes() == 0) return 0.0;
  return jacobi_eigen(dense_adjacency(g)).values.back();
}

// All-pairs hop distances by Floyd-Warshall; -1 when unreachable.
inline std::vector<std::vector<long>> all_pairs_distances(const vaxnet::Graph& g) {
  const std::size_t n = g.num_nodes();
  const long inf = std::numeric_limits<long>::max() / 4;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (vaxnet::NodeId u = 0; u < n; ++u)
    for (vaxnet::NodeId v : g.neighbors(u)) d[u][v] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (long& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Betweenness by explicit enumeration of every geodesic between each
// unordered pair (depth-first over shortest-path steps).
inline std::vector<double> brute_betweenness(const vaxnet::Graph& g) {
  const std::size_t n = g.num_nodes();
  const auto d = all_pairs_distances(g);
  std::vector<double> score(n, 0.0);
  for (vaxnet::NodeId s = 0; s < n; ++s) {
    for (vaxnet::NodeId t = s + 1; t < n; ++t) {
      if (d[s][t] < 2) continue;
      std::vector<double> through(n, 0.0);
      double total = 0.0;
      std::vector<vaxnet::NodeId> path{s};
      std::function<void(vaxnet::NodeId)> walk = [&](vaxnet::NodeId v) {
        if (v == t) {
          total += 1.0;
          for (std::size_t i = 1; i + 1 < path.size(); ++i) through[path[i]] += 1.0;
          return;
        }
        for (vaxnet::NodeId w : g.neighbors(v)) {
          if (d[s][w] == d[s][v] + 1 && d[w][t] == d[v][t] - 1) {
            path.push_back(w);
            walk(w);
            path.pop_back();
          }
        }
      };
      walk(s);
      for (std::size_t v = 0; v < n; ++v) score[v] += through[v] / total;
    }
  }
  return score;
}

inline std::vector<double> brute_closeness(const vaxnet::Graph& g) {
  const std::size_t n = g.num_nodes();
  const auto d = all_pairs_distances(g);
  std::vector<double> out(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    double sum = 0.0, reach = 0.0;
    for (std::size_t u = 0; u < n; ++u)
      if (u != v && d[v][u] > 0) {
        sum += static_cast<double>(d[v][u]);
        reach += 1.0;
      }
    if (reach > 0) out[v] = (reach / sum) * (reach / static_cast<double>(n - 1));
  }
  return out;
}

// Perron vector from the dense eigensolver, restricted to the component that
// carries it: non-negative and unit norm.
inline std::vector<double> dense_perron_vector(const vaxnet::Graph& g) {
  Eigen e = jacobi_eigen(dense_adjacency(g));
  std::vector<double> v = e.vectors.back();
  double sum = 0.0;
  for (double x : v) sum += x;
  if (sum < 0)
    for (double& x : v) x = -x;
  return v;
}

// Student-t density and its integral by adaptive Simpson quadrature.
inline double t_density(double x, double df) {
  const double c = std::exp(std::lgamma((df + 1) / 2) - std::lgamma(df / 2)) /
                   std::sqrt(df * M_PI);
  return c * std::pow(1.0 + x * x / df, -(df + 1) / 2);
}

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double fa, double fm, double fb, double whole, double eps,
                      int depth) {
  const double m = (a + b) / 2, lm = (a + m) / 2, rm = (m + b) / 2;
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15 * eps)
    return left + right + (left + right - whole) / 15;
  return simpson(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-13) {
  const double fa = f(a), fb = f(b), fm = f((a + b) / 2);
  return simpson(f, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), eps, 50);
}

// CDF as 1/2 +- integral of the density over [0, |t|].
inline double t_cdf_quadrature(double t, double df) {
  auto f = [df](double x) { return t_density(x, df); };
  // Split the range so each piece is smooth on its own scale.
  double area = 0.0, lo = 0.0;
  const double hi = std::abs(t);
  const double step = 0.5;
  while (lo < hi) {
    const double up = std::min(hi, lo + step);
    area += integrate(f, lo, up);
    lo = up;
  }
  return t >= 0 ? 0.5 + area : 0.5 - area;
}

inline vaxnet::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<vaxnet::Edge> edges;
  for (vaxnet::NodeId u = 0; u < n; ++u)
    for (vaxnet::NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return vaxnet::Graph::from_edges(edges, n);
}

inline vaxnet::Graph complete(std::size_t n) { return random_graph(n, 1.0, 0); }

inline vaxnet::Graph star(std::size_t leaves) {
  std::vector<vaxnet::Edge> e;
  for (vaxnet::NodeId v = 1; v <= leaves; ++v) e.push_back({0, v});
  return vaxnet::Graph::from_edges(e, leaves + 1);
}

inline vaxnet::Graph path(std::size_t n) {
  std::vector<vaxnet::Edge> e;
  for (vaxnet::NodeId v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return vaxnet::Graph::from_edges(e, n);
}

inline vaxnet::Graph cycle(std::size_t n) {
  std::vector<vaxnet::Edge> e;
  for (vaxnet::NodeId v = 0; v < n; ++v)
    e.push_back({v, static_cast<vaxnet::NodeId>((v + 1) % n)});
  return vaxnet::Graph::from_edges(e, n);
}

inline vaxnet::Graph relabel(const vaxnet::Graph& g,
                             const std::vector<vaxnet::NodeId>& perm) {
  std::vector<vaxnet::Edge> e;
  for (const vaxnet::Edge& x : g.edges()) e.push_back({perm[x.u], perm[x.v]});
  return vaxnet::Graph::from_edges(e, g.num_nodes());
}

// Two-sample Kolmogorov-Smirnov test; asymptotic p-value.
inline double ks_p_value(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double dmax = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    dmax = std::max(dmax, std::abs(double(i) / a.size() - double(j) / b.size()));
  }
  const double ne = double(a.size()) * b.size() / (a.size() + b.size());
  const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * dmax;
  double p = 0.0;
  for (int k = 1; k <= 200; ++k)
    p += 2.0 * ((k % 2) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace oracle
