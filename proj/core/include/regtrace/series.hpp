#pragma once

#include <iosfwd>
#include <vector>

#include "regtrace/bigint.hpp"

namespace regtrace {

/// Truncated formal power series in s with exact rational coefficients.
///
/// A Series of order N stores the coefficients of s^0 .. s^N; every
/// operation is exact modulo s^(N+1). Binary operations on series of
/// different order truncate to the smaller one.
class Series {
 public:
  explicit Series(int order);
  Series(int order, std::vector<Rational> coefficients);

  static Series constant(int order, const Rational& c);
  /// c * s^k
  static Series monomial(int order, int k, const Rational& c = 1);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Rational& c);
  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(Series lhs, const Rational& c) { return lhs *= c; }
  friend Series operator*(const Rational& c, Series rhs) { return rhs *= c; }
  friend Series operator*(const Series& lhs, const Series& rhs);

  /// 1 / f; requires f[0] != 0.
  Series reciprocal() const;
  /// f^m for m >= 0, by repeated squaring.
  Series pow(int m) const;
  /// d/ds; the result has order one less.
  Series derivative() const;
  /// s * d/ds, order preserved.
  Series euler() const;
  /// s^k * f, truncated to the same order.
  Series shift(int k) const;
  /// f / s^k; requires the first k coefficients to vanish. Order drops by k.
  Series unshift(int k) const;
  Series truncate(int order) const;

  /// Coefficients as integers; throws std::domain_error if any is not.
  std::vector<BigInt> integer_coefficients() const;

  bool operator==(const Series&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// (1 + c s^k)^alpha by the binomial series, for rational alpha.
Series binomial_series(const Rational& c, int k, const Rational& alpha, int order);

// ---------------------------------------------------------------------------
// Closed walks on the (q+1)-regular tree and the homotopy-class series.

/// binomial(2k, k) / (k + 1)
BigInt catalan(int k);

/// Entry k (1 <= k <= k_max) counts closed walks of length 2k from the root
/// of the (q+1)-regular tree that do not revisit the root before the end:
/// (q+1) q^(k-1) Cat_(k-1). Entry 0 is 0.
std::vector<BigInt> first_return_counts(int q, int k_max);

/// sum_k first_return_counts[k] s^(2k) = (1 + 1/q) (1 - sqrt(1 - 4 q s^2)) / 2
Series first_return_series(int q, int order);
/// 1 / (1 - first_return_series): closed walks from the root, any returns allowed.
Series tree_return_series(int q, int order);
/// 1 / (1 - q/(q+1) first_return_series): closed walks from the root whose
/// first step avoids one fixed neighbour (and every later return step too).
Series prohibited_return_series(int q, int order);
/// (s * prohibited_return_series)^m: trajectories homotopic to a fixed
/// primitive geodesic of length m, by length.
Series trajectory_series(int q, int m, int order);
/// s d/ds trajectory_series / m: closed paths homotopic to a geodesic
/// trajectory of length m, per unit of its primitive length.
Series homotopy_class_series(int q, int m, int order);

struct TreeWalkTable {
  int q = 0;
  /// p_tree[l]: closed walks of length l from the root; zero for odd l.
  std::vector<BigInt> p_tree;
  /// p_tilde[k]: first-return walks of length 2k (indexed by k, p_tilde[0] = 0).
  std::vector<BigInt> p_tilde;
  /// p_hat[l]: closed walks of length l with one direction at the root prohibited.
  std::vector<BigInt> p_hat;
};

TreeWalkTable tree_walk_counts(int q, int l_max);
std::vector<BigInt> prohibited_direction_counts(int q, int l_max);

/// h(m, l) for l = 0..l_max. Throws InvalidLength for m < 3.
std::vector<BigInt> homotopy_class_coefficients(int q, int m, int l_max);
/// [s^l] of trajectory_series for l = 0..l_max. Throws InvalidLength for m < 3.
std::vector<BigInt> trajectory_class_coefficients(int q, int m, int l_max);

/// "exponent,coefficient" rows with a header line.
void write_coefficients_csv(std::ostream& out, const std::vector<BigInt>& coefficients);

}  // namespace regtrace
