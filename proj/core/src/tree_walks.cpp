#include <ostream>
#include <string>

#include "regtrace/error.hpp"
#include "regtrace/series.hpp"

namespace regtrace {

namespace {

void require_valence(int q) {
  if (q < 1) throw Error(ErrorKind::InfeasibleParameters, "q must be at least 1, got " + std::to_string(q));
}

void require_geodesic_length(int m) {
  if (m < 3) {
    throw Error(ErrorKind::InvalidLength,
                "geodesic length " + std::to_string(m) + " is below the minimum of 3 for simple graphs");
  }
}

}  // namespace

BigInt catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan index must be nonnegative");
  BigInt binom = 1;
  for (int i = 1; i <= k; ++i) {
    binom = binom * (k + i) / i;  // binomial(k + i, i), exact at each step
  }
  return binom / (k + 1);
}

std::vector<BigInt> first_return_counts(int q, int k_max) {
  require_valence(q);
  std::vector<BigInt> out(static_cast<std::size_t>(std::max(k_max, 0)) + 1, BigInt(0));
  BigInt q_power = 1;
  for (int k = 1; k <= k_max; ++k) {
    out[static_cast<std::size_t>(k)] = (q + 1) * q_power * catalan(k - 1);
    q_power *= q;
  }
  return out;
}

Series first_return_series(int q, int order) {
  require_valence(q);
  const Series root = binomial_series(Rational(-4 * q), 2, Rational(1, 2), order);
  return (Series::constant(order, 1) - root) * Rational(q + 1, 2 * q);
}

Series tree_return_series(int q, int order) {
  return (Series::constant(order, 1) - first_return_series(q, order)).reciprocal();
}

Series prohibited_return_series(int q, int order) {
  const Series inner = first_return_series(q, order) * Rational(q, q + 1);
  return (Series::constant(order, 1) - inner).reciprocal();
}

Series trajectory_series(int q, int m, int order) {
  if (m < 1) throw Error(ErrorKind::InvalidLength, "trajectory length must be positive");
  return prohibited_return_series(q, order).shift(1).pow(m);
}

Series homotopy_class_series(int q, int m, int order) {
  return trajectory_series(q, m, order).euler() * Rational(1, m);
}

std::vector<BigInt> prohibited_direction_counts(int q, int l_max) {
  return prohibited_return_series(q, l_max).integer_coefficients();
}

TreeWalkTable tree_walk_counts(int q, int l_max) {
  TreeWalkTable table;
  table.q = q;
  table.p_tree = tree_return_series(q, l_max).integer_coefficients();
  table.p_tilde = first_return_counts(q, l_max / 2);
  table.p_hat = prohibited_direction_counts(q, l_max);
  return table;
}

std::vector<BigInt> homotopy_class_coefficients(int q, int m, int l_max) {
  require_geodesic_length(m);
  return homotopy_class_series(q, m, l_max).integer_coefficients();
}

std::vector<BigInt> trajectory_class_coefficients(int q, int m, int l_max) {
  require_geodesic_length(m);
  return trajectory_series(q, m, l_max).integer_coefficients();
}

void write_coefficients_csv(std::ostream& out, const std::vector<BigInt>& coefficients) {
  out << "exponent,coefficient\n";
  for (std::size_t k = 0; k < coefficients.size(); ++k) out << k << ',' << coefficients[k] << '\n';
}

}  // namespace regtrace
