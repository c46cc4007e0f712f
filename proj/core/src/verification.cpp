#include <cmath>
#include <numbers>
#include <string>

#include "regtrace/error.hpp"
#include "regtrace/spectral.hpp"

namespace regtrace {

double trace_tail_bound(int q, int vertex_count, double t, int l_trunc) {
  // term_l = |V| ((q+1)|t|)^l / l! * exp(q t^2 / (l+1)), summed in log space.
  const double a = (q + 1.0) * std::abs(t);
  if (a == 0.0) return 0.0;
  double bound = 0.0;
  for (int l = l_trunc + 1;; ++l) {
    const double log_term = std::log(static_cast<double>(vertex_count)) + l * std::log(a) - std::lgamma(l + 1.0) +
                            q * t * t / (l + 1.0);
    const double term = std::exp(log_term);
    bound += term;
    if (l > a && (term <= 1e-20 * bound || term < 1e-300)) break;
  }
  return bound;
}

TraceReport verify_trace_formula(const Spectrum& sp, std::span<const BigInt> geodesic_paths, double t, int l_trunc,
                                 double tolerance, const QuadratureOptions& quad) {
  if (l_trunc < 3) throw Error(ErrorKind::InvalidLength, "trace formula truncation must be at least 3");
  if (l_trunc >= static_cast<int>(geodesic_paths.size())) {
    throw Error(ErrorKind::InvalidLength, "geodesic counts do not cover the truncation length");
  }
  const double root_q = std::sqrt(static_cast<double>(sp.q));

  TraceReport r;
  r.t = t;
  r.truncation_length = l_trunc;
  r.tolerance = tolerance;
  r.lhs = z_t_spectral(sp, t);
  r.contractible_term = contractible_term(sp.q, sp.vertex_count, t, quad);
  for (int l = 3; l <= l_trunc; ++l) {
    const double gp = geodesic_paths[static_cast<std::size_t>(l)].convert_to<double>();
    if (gp != 0.0) r.geodesic_sum += gp * std::pow(root_q, -l) * bessel_i(l, 2.0 * root_q * t);
  }
  r.tail_bound = trace_tail_bound(sp.q, sp.vertex_count, t, l_trunc);
  r.residual = std::abs(r.lhs - r.contractible_term - r.geodesic_sum);
  r.passed = r.residual <= tolerance + r.tail_bound;
  return r;
}

TraceReport verify_trace_formula(const Graph& g, double t, int l_trunc, double tolerance) {
  const auto gp = count_geodesic_paths(g, l_trunc);
  return verify_trace_formula(spectrum(g), gp, t, l_trunc, tolerance);
}

double verify_polygon_identity(int L, double t, int r_trunc) {
  if (L < 3) throw Error(ErrorKind::InfeasibleParameters, "polygon needs at least 3 vertices");
  double lhs = 0.0;
  for (int j = 1; j <= L; ++j) lhs += std::exp(2.0 * t * std::cos(2.0 * std::numbers::pi * j / L));
  double winding_sum = bessel_i(0, 2.0 * t);
  for (int r = 1; r <= r_trunc; ++r) winding_sum += 2.0 * bessel_i(r * L, 2.0 * t);
  return std::abs(lhs - L * winding_sum);
}

int polygon_truncation(int L, double t) {
  const double base = bessel_i(0, 2.0 * t);
  int r = 1;
  while (2.0 * bessel_i((r + 1) * L, 2.0 * t) > 1e-18 * base) ++r;
  return r;
}

TestSequence TestSequence::indicator(int l) {
  TestSequence ts;
  ts.values.assign(static_cast<std::size_t>(std::abs(l)) + 1, 0.0);
  ts.values.back() = 1.0;
  return ts;
}

double TestSequence::at(int n) const {
  const auto i = static_cast<std::size_t>(std::abs(n));
  return i < values.size() ? values[i] : 0.0;
}

int TestSequence::support_max() const {
  for (int n = static_cast<int>(values.size()) - 1; n >= 0; --n) {
    if (values[static_cast<std::size_t>(n)] != 0.0) return n;
  }
  return -1;
}

double ahumada_identity_term(int q, int vertex_count, const TestSequence& ts) {
  // Constant Laurent coefficient of g^(z) * q (1 - z^2) / (q - z^2) on |z| = 1,
  // expanding 1 / (q - z^2) in powers of z^2 / q.
  double sum = 0.0;
  double q_power = 1.0;  // q^(-m)
  for (int m = 0; 2 * m <= ts.support_max(); ++m) {
    sum += q_power * (ts.at(2 * m) - ts.at(2 * m + 2));
    q_power /= q;
  }
  return vertex_count * sum;
}

AhumadaReport ahumada_terms(const Spectrum& sp, std::span<const BigInt> geodesic_paths, const TestSequence& ts,
                            int l_trunc) {
  const int support = ts.support_max();
  if (support > l_trunc) {
    throw Error(ErrorKind::SupportExceedsTruncation, "test sequence support " + std::to_string(support) +
                                                         " exceeds truncation " + std::to_string(l_trunc));
  }
  if (support >= static_cast<int>(geodesic_paths.size())) {
    throw Error(ErrorKind::SupportExceedsTruncation, "geodesic counts do not cover the test sequence support");
  }
  const double root_q = std::sqrt(static_cast<double>(sp.q));

  AhumadaReport r;
  for (double lambda : sp.eigenvalues) {
    const double x = lambda / (2.0 * root_q);
    double g_hat = ts.at(0);
    for (int n = 1; n <= support; ++n) {
      if (ts.at(n) != 0.0) g_hat += 2.0 * ts.at(n) * chebyshev_t(n, x);
    }
    r.lhs += g_hat;
  }
  r.identity_term = ahumada_identity_term(sp.q, sp.vertex_count, ts);
  for (int l = 1; l <= support; ++l) {
    const double gp = geodesic_paths[static_cast<std::size_t>(l)].convert_to<double>();
    if (gp != 0.0) r.geodesic_term += gp * std::pow(root_q, -l) * ts.at(l);
  }
  r.residual = std::abs(r.lhs - r.identity_term - r.geodesic_term);
  return r;
}

double verify_ahumada(const Graph& g, const TestSequence& ts, int l_trunc) {
  const auto gp = count_geodesic_paths(g, std::max(l_trunc, ts.support_max()));
  return ahumada_terms(spectrum(g), gp, ts, l_trunc).residual;
}

}  // namespace regtrace
