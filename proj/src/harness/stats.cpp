#include "bqsim/harness/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <stdexcept>

namespace bqsim::harness {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials == 0) throw std::domain_error("Wilson interval needs at least one trial");
  if (successes > trials) throw std::domain_error("successes exceed trials");
  if (!(confidence > 0.0 && confidence < 1.0)) throw std::domain_error("confidence must lie in (0, 1)");
  const double z = boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + confidence / 2.0);
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  Interval iv{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (successes == 0) iv.low = 0.0;
  if (successes == trials) iv.high = 1.0;
  return iv;
}

}  // namespace bqsim::harness
