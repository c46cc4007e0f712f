#include <cmath>
#include <cstdlib>

#include "regtrace/spectral.hpp"

namespace regtrace {

double bessel_i(int l, double x) {
  l = std::abs(l);
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;
  const double sign = (x < 0.0 && (l % 2 == 1)) ? -1.0 : 1.0;
  const long double half = std::abs(x) / 2.0L;

  // Leading term (x/2)^l / l!, built as a product to avoid overflow of l!.
  long double term = 1.0L;
  for (int k = 1; k <= l; ++k) term *= half / k;
  if (term == 0.0L) return 0.0;

  const long double quarter_sq = half * half;
  long double sum = term;
  for (int m = 0;; ++m) {
    const long double ratio = quarter_sq / (static_cast<long double>(m + 1) * (l + m + 1));
    term *= ratio;
    sum += term;
    if (ratio < 1.0L && term <= 1e-18L * sum) break;
  }
  return sign * static_cast<double>(sum);
}

double chebyshev_t(int l, double x) {
  if (l < 0) l = -l;
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < l; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace regtrace
