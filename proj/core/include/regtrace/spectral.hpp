#pragma once

#include <functional>
#include <span>
#include <vector>

#include "regtrace/bigint.hpp"
#include "regtrace/census.hpp"
#include "regtrace/graph.hpp"

namespace regtrace {

// ---------------------------------------------------------------------------
// Special functions

/// Modified Bessel function of the first kind I_l(x), by its power series.
/// Intended for 0 <= |x| <= 100; relative accuracy ~1e-12 or better.
double bessel_i(int l, double x);

/// Chebyshev polynomial of the first kind T_l(x), three-term recurrence.
double chebyshev_t(int l, double x);

// ---------------------------------------------------------------------------
// Eigenvalues

struct EigenOptions {
  /// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
  double off_diagonal_tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Eigenvalues of a dense symmetric n x n matrix (row-major), ascending, by
/// cyclic Jacobi rotations. Throws ConvergenceFailure when the sweep cap is hit.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n, const EigenOptions& opts = {});

/// Spectrum of the averaging operator (adjacency matrix).
struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  int q = 0;
  int vertex_count = 0;
};

Spectrum spectrum(const Graph& g, const EigenOptions& opts = {});

/// sum_j exp(lambda_j t)
double z_t_spectral(const Spectrum& sp, double t);

/// Rounded 2 q^(l/2) sum_j T_l(lambda_j / (2 sqrt q)) + [l even] (q - 1) |V|.
/// Throws NotNearInteger when the value is more than 1e-6 * max(1, |value|)
/// from the nearest integer.
BigInt gp_from_spectrum(const Spectrum& sp, int l);

// ---------------------------------------------------------------------------
// Contractible density and its integrals

/// |V| (q+1) / (2 pi) * sqrt(4q - s^2) / ((q+1)^2 - s^2) on |s| < 2 sqrt q, else 0.
double contractible_density(int q, int vertex_count, double s);

struct QuadratureOptions {
  double relative_tolerance = 1e-11;
  /// Number of interval doublings allowed after the initial 8 panels.
  int max_refinements = 24;
};

/// Integral of f(s) against contractible_density over [-2 sqrt q, 2 sqrt q].
/// Computed with s = 2 sqrt(q) cos(theta) and doubling composite Simpson.
/// Throws QuadratureFailure when the refinement cap is reached.
double contractible_integral(int q, int vertex_count, const std::function<double(double)>& f,
                             const QuadratureOptions& opts = {});

/// Contribution of contractible paths to tr exp(tT).
double contractible_term(int q, int vertex_count, double t, const QuadratureOptions& opts = {});

/// Lambda(gamma) q^(-|gamma|/2) I_|gamma|(2 sqrt(q) t)
double geodesic_term(const GeodesicClass& gc, int q, double t);

// ---------------------------------------------------------------------------
// Trace formula

struct TraceReport {
  double t = 0.0;
  double lhs = 0.0;
  double contractible_term = 0.0;
  double geodesic_sum = 0.0;
  int truncation_length = 0;
  /// Majorant for the omitted terms l > truncation_length.
  double tail_bound = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Upper bound on sum_{l > l_trunc} gp_l q^(-l/2) |I_l(2 sqrt(q) t)| using
/// gp_l <= p_l <= |V| (q+1)^l and I_l(x) <= (x/2)^l / l! * exp((x/2)^2 / (l+1)).
double trace_tail_bound(int q, int vertex_count, double t, int l_trunc);

/// Both sides at one real t. `geodesic_paths` must cover 0..l_trunc.
TraceReport verify_trace_formula(const Spectrum& sp, std::span<const BigInt> geodesic_paths, double t, int l_trunc,
                                 double tolerance = 1e-8, const QuadratureOptions& quad = {});
TraceReport verify_trace_formula(const Graph& g, double t, int l_trunc, double tolerance = 1e-8);

// ---------------------------------------------------------------------------
// Spectral density

/// Sampled contractible and truncated total densities. The total density is
/// a truncation of a distribution supported on the eigenvalues; it is only
/// meaningful as data for inspection.
struct DensityTable {
  std::vector<double> grid;
  std::vector<double> rho_con;
  std::vector<double> rho_total;
  int l_trunc = 0;
};

/// Grid nodes s_i = -2 sqrt(q) cos(pi (i + 1/2) / grid_size), ascending and
/// strictly inside the support, clustered towards the endpoints.
DensityTable density_table(const Graph& g, int l_trunc, int grid_size);
DensityTable density_table(int q, int vertex_count, std::span<const BigInt> geodesic_paths, int l_trunc,
                           int grid_size);

// ---------------------------------------------------------------------------
// Cycle graph identity and the test-function form

/// |sum_j exp(2t cos(2 pi j / L)) - L sum_{|r| <= r_trunc} I_{|r| L}(2t)|
double verify_polygon_identity(int L, double t, int r_trunc);
/// Smallest r_trunc after which I_{rL}(2t) no longer changes the sum in double precision.
int polygon_truncation(int L, double t);

/// Even, finitely supported test sequence: values[n] = g(n) = g(-n).
struct TestSequence {
  std::vector<double> values;

  static TestSequence indicator(int l);
  double at(int n) const;
  /// Largest n with g(n) != 0, or -1 if g vanishes.
  int support_max() const;
};

/// The identity (contour) term |V| sum_{m >= 0} q^(-m) (g(2m) - g(2m+2)).
double ahumada_identity_term(int q, int vertex_count, const TestSequence& ts);

struct AhumadaReport {
  double lhs = 0.0;
  double identity_term = 0.0;
  double geodesic_term = 0.0;
  double residual = 0.0;
};

/// Throws SupportExceedsTruncation when ts.support_max() > l_trunc.
AhumadaReport ahumada_terms(const Spectrum& sp, std::span<const BigInt> geodesic_paths, const TestSequence& ts,
                            int l_trunc);
double verify_ahumada(const Graph& g, const TestSequence& ts, int l_trunc);

}  // namespace regtrace
