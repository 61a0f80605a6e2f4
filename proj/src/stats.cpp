#include "vaxnet/stats.hpp"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "vaxnet/common.hpp"

namespace vaxnet {

MeanStd mean_std(std::span<const double> xs) {
  if (xs.empty()) throw InvalidArgument("mean_std of an empty sample");
  MeanStd r;
  for (double x : xs) r.mean += x;
  r.mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return r;
  double ss = 0.0;
  for (double x : xs) ss += (x - r.mean) * (x - r.mean);
  r.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  return r;
}

double t_cdf(double t, double df) {
  if (!(df >= 1.0)) throw InvalidArgument("t_cdf needs df >= 1");
  if (std::isnan(t)) return t;
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  if (t == 0.0) return 0.5;
  // Tail mass P(T > |t|) = I_x(df/2, 1/2) / 2. For small t, x is close to 1
  // and the complement is computed directly from t^2/(df+t^2).
  const double t2 = t * t;
  const double x = df / (df + t2);
  const double tail = x < 0.5
                          ? 0.5 * boost::math::ibeta(df / 2.0, 0.5, x)
                          : 0.5 * boost::math::ibetac(0.5, df / 2.0, t2 / (df + t2));
  return t > 0 ? 1.0 - tail : tail;
}

TestResult paired_t_test(std::span<const double> a, std::span<const double> b,
                         Alternative alternative) {
  if (a.size() != b.size())
    throw InvalidArgument("paired samples have different lengths");
  if (a.size() < 2) throw InvalidArgument("paired t-test needs at least 2 pairs");
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  const MeanStd ms = mean_std(d);

  TestResult r;
  r.df = d.size() - 1;
  if (ms.std == 0.0) {
    if (ms.mean == 0.0) {
      r.t_stat = 0.0;
      r.p_value = 1.0;
    } else {
      r.t_stat = std::copysign(std::numeric_limits<double>::infinity(), ms.mean);
      bool agrees = alternative == Alternative::TwoSided ||
                    (alternative == Alternative::Less && ms.mean < 0) ||
                    (alternative == Alternative::Greater && ms.mean > 0);
      r.p_value = agrees ? 0.0 : 1.0;
    }
  } else {
    r.t_stat = ms.mean / (ms.std / std::sqrt(static_cast<double>(d.size())));
    const double df = static_cast<double>(r.df);
    switch (alternative) {
      case Alternative::TwoSided:
        r.p_value = 2.0 * t_cdf(-std::abs(r.t_stat), df);
        break;
      case Alternative::Less: r.p_value = t_cdf(r.t_stat, df); break;
      case Alternative::Greater: r.p_value = t_cdf(-r.t_stat, df); break;
    }
    r.p_value = std::min(1.0, std::max(0.0, r.p_value));
  }
  r.significant = r.p_value < 0.05;
  return r;
}

}  // namespace vaxnet
