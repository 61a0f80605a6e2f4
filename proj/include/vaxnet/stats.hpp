#pragma once

#include <span>

namespace vaxnet {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation (n - 1); 0 for one value
};

MeanStd mean_std(std::span<const double> xs);

// Student-t cumulative distribution, via I_x(df/2, 1/2) with x = df/(df+t^2).
double t_cdf(double t, double df);

enum class Alternative {
  TwoSided,
  Less,     // mean(a - b) < 0
  Greater,  // mean(a - b) > 0
};

struct TestResult {
  double t_stat = 0.0;
  std::size_t df = 0;
  double p_value = 1.0;
  bool significant = false;  // p < 0.05
};

// Paired Student t-test on d = a - b. Zero-variance differences give p = 0
// (nonzero mean) or p = 1 (zero mean).
TestResult paired_t_test(std::span<const double> a, std::span<const double> b,
                         Alternative alternative = Alternative::TwoSided);

}  // namespace vaxnet
