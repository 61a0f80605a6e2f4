#include "vaxnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vaxnet {

void adjacency_multiply(const Graph& g, std::span<const double> x,
                        std::span<double> y, double shift, Execution exec) {
  const auto n = static_cast<std::ptrdiff_t>(g.num_nodes());
  auto row = [&](std::ptrdiff_t i) {
    double acc = shift * x[static_cast<std::size_t>(i)];
    for (NodeId j : g.neighbors(static_cast<NodeId>(i))) acc += x[j];
    y[static_cast<std::size_t>(i)] = acc;
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) row(i);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) row(i);
  }
}

std::vector<double> power_start_vector(std::size_t n) {
  std::vector<double> x(n);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double jitter =
        static_cast<double>(mix64(i) >> 11) * 0x1.0p-53 - 0.5;
    x[i] = 1.0 + 1e-3 * jitter;
    norm2 += x[i] * x[i];
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& v : x) v *= inv;
  return x;
}

SpectralResult lambda_max(const Graph& g, double tol, std::size_t max_iter,
                          Execution exec) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw EmptyGraph("lambda_max on a graph with no nodes");
  SpectralResult result;
  if (g.num_edges() == 0) {
    result.converged = true;
    return result;
  }

  std::vector<double> x = power_start_vector(n);
  std::vector<double> y(n);
  double best_residual = std::numeric_limits<double>::infinity();
  for (std::size_t it = 1; it <= max_iter; ++it) {
    adjacency_multiply(g, x, y, 1.0, exec);
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < n; ++i) rayleigh += x[i] * y[i];
    const double lambda = rayleigh - 1.0;
    // A x - lambda x = y - (lambda + 1) x = y - rayleigh x.
    double worst = 0.0;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(y[i] - rayleigh * x[i]));
      norm2 += y[i] * y[i];
    }
    const double residual = worst / std::max(1.0, lambda);
    result.iterations = it;
    if (residual <= best_residual) {
      best_residual = residual;
      result.lambda_max = std::max(0.0, lambda);
      result.residual = residual;
    }
    if (residual < tol) {
      result.converged = true;
      return result;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] * inv;
  }
  return result;
}

ThresholdReport threshold_check(const SirRates& rates, double lambda) {
  if (!(rates.delta > 0.0))
    throw InvalidArgument("recovery rate delta must be positive");
  if (rates.beta < 0.0) throw InvalidArgument("beta must be non-negative");
  if (lambda < 0.0) throw InvalidArgument("lambda must be non-negative");
  ThresholdReport r;
  r.ratio = rates.beta / rates.delta;
  r.inverse_lambda = lambda == 0.0 ? std::numeric_limits<double>::infinity()
                                   : 1.0 / lambda;
  r.contained = r.ratio <= r.inverse_lambda;
  r.margin = r.inverse_lambda - r.ratio;
  return r;
}

BoundsReport spectral_bounds_check(const Graph& g) {
  const DegreeStats deg = degree_stats(g);
  if (g.num_edges() == 0)
    throw InvalidArgument("spectral bounds need at least one edge");
  BoundsReport r;
  r.deg_avg = deg.avg;
  r.deg_max = static_cast<double>(deg.max);
  r.lambda_max = lambda_max(g).lambda_max;
  const double slack = 1e-7 * std::max(1.0, r.deg_max);
  r.holds = r.deg_avg <= r.lambda_max + slack &&
            r.lambda_max <= r.deg_max + slack;
  return r;
}

}  // namespace vaxnet
