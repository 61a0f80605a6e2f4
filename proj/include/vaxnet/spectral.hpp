#pragma once

#include <span>
#include <vector>

#include "vaxnet/graph.hpp"

namespace vaxnet {

struct SpectralResult {
  double lambda_max = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;  // ||Ax - lambda x||_inf / max(1, lambda)
  bool converged = false;
};

// y = (A + shift I) x. Rows are independent, so the parallel version is
// bitwise identical to the serial one.
void adjacency_multiply(const Graph& g, std::span<const double> x,
                        std::span<double> y, double shift,
                        Execution exec = Execution::Parallel);

// Deterministic start vector: all-ones with a tiny fixed perturbation,
// L2-normalized.
std::vector<double> power_start_vector(std::size_t n);

// Dominant adjacency eigenvalue by power iteration on A + I. Non-convergence
// is reported through `converged` with the best estimate, never thrown.
SpectralResult lambda_max(const Graph& g, double tol = 1e-9,
                          std::size_t max_iter = 50000,
                          Execution exec = Execution::Parallel);

struct SirRates {
  double beta = 0.0;   // infections per contact per day
  double delta = 0.0;  // recoveries per day
};

struct ThresholdReport {
  double ratio = 0.0;           // beta / delta
  double inverse_lambda = 0.0;  // 1 / lambda_max, +inf for lambda = 0
  bool contained = false;       // ratio <= inverse_lambda
  double margin = 0.0;          // inverse_lambda - ratio
};

// Epidemic threshold: an outbreak is contained when beta/delta <= 1/lambda.
ThresholdReport threshold_check(const SirRates& rates, double lambda);

struct BoundsReport {
  double deg_avg = 0.0;
  double lambda_max = 0.0;
  double deg_max = 0.0;
  bool holds = false;
};

// Checks deg_avg <= lambda_max <= deg_max with a 1e-7 relative slack.
BoundsReport spectral_bounds_check(const Graph& g);

}  // namespace vaxnet
