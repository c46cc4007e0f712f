#include "regtrace/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace regtrace {

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series::Series(int order, std::vector<Rational> coefficients) : Series(order) {
  const std::size_t n = std::min(coeffs_.size(), coefficients.size());
  std::move(coefficients.begin(), coefficients.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
}

Series Series::constant(int order, const Rational& c) { return monomial(order, 0, c); }

Series Series::monomial(int order, int k, const Rational& c) {
  Series out(order);
  if (k >= 0 && k <= order) out[k] = c;
  return out;
}

Series& Series::operator+=(const Series& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Series operator*(const Series& lhs, const Series& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  Series out(order);
  for (int i = 0; i <= order; ++i) {
    if (lhs[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (rhs[j] != 0) out[i + j] += lhs[i] * rhs[j];
    }
  }
  return out;
}

Series Series::reciprocal() const {
  if (coeffs_[0] == 0) throw std::domain_error("reciprocal of a series with zero constant term");
  Series out(order());
  const Rational inv = 1 / coeffs_[0];
  out[0] = inv;
  for (int n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      if ((*this)[k] != 0) acc += (*this)[k] * out[n - k];
    }
    out[n] = -inv * acc;
  }
  return out;
}

Series Series::pow(int m) const {
  if (m < 0) throw std::invalid_argument("negative series power");
  Series result = constant(order(), 1);
  Series base = *this;
  while (m > 0) {
    if (m & 1) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return result;
}

Series Series::derivative() const {
  Series out(std::max(order() - 1, 0));
  for (int k = 1; k <= order(); ++k) out[k - 1] = (*this)[k] * k;
  return out;
}

Series Series::euler() const {
  Series out = *this;
  for (int k = 0; k <= order(); ++k) out[k] *= k;
  return out;
}

Series Series::shift(int k) const {
  Series out(order());
  for (int i = 0; i + k <= order(); ++i) out[i + k] = (*this)[i];
  return out;
}

Series Series::unshift(int k) const {
  if (k > order()) throw std::invalid_argument("unshift beyond series order");
  for (int i = 0; i < k; ++i) {
    if ((*this)[i] != 0) throw std::domain_error("unshift of a series with nonzero low coefficients");
  }
  Series out(order() - k);
  for (int i = k; i <= order(); ++i) out[i - k] = (*this)[i];
  return out;
}

Series Series::truncate(int new_order) const {
  return Series(new_order, std::vector<Rational>(coeffs_.begin(),
                                                 coeffs_.begin() + std::min(new_order, order()) + 1));
}

std::vector<BigInt> Series::integer_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (denominator(coeffs_[k]) != 1) {
      throw std::domain_error("coefficient of s^" + std::to_string(k) + " is not an integer");
    }
    out.push_back(numerator(coeffs_[k]));
  }
  return out;
}

Series binomial_series(const Rational& c, int k, const Rational& alpha, int order) {
  if (k <= 0) throw std::invalid_argument("binomial_series needs a positive exponent");
  Series out(order);
  Rational binom = 1;  // binomial(alpha, j)
  Rational power = 1;  // c^j
  for (int j = 0; j * k <= order; ++j) {
    out[j * k] = binom * power;
    binom = binom * (alpha - j) / (j + 1);
    power *= c;
  }
  return out;
}

}  // namespace regtrace
