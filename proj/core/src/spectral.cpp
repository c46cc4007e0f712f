#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "regtrace/error.hpp"
#include "regtrace/spectral.hpp"

namespace regtrace {

double z_t_spectral(const Spectrum& sp, double t) {
  double sum = 0.0;
  for (double lambda : sp.eigenvalues) sum += std::exp(lambda * t);
  return sum;
}

BigInt gp_from_spectrum(const Spectrum& sp, int l) {
  if (l < 1) throw Error(ErrorKind::InvalidLength, "geodesic inversion needs l >= 1");
  const double root_q = std::sqrt(static_cast<double>(sp.q));
  double chebyshev_sum = 0.0;
  for (double lambda : sp.eigenvalues) chebyshev_sum += chebyshev_t(l, lambda / (2.0 * root_q));
  double value = 2.0 * std::pow(root_q, l) * chebyshev_sum;
  if (l % 2 == 0) value += static_cast<double>(sp.q - 1) * sp.vertex_count;

  const double nearest = std::round(value);
  const double window = 1e-6 * std::max(1.0, std::abs(value));
  if (!(std::abs(value - nearest) < window) || std::abs(nearest) > 9.0e15) {
    throw Error(ErrorKind::NotNearInteger, "spectral geodesic count for l=" + std::to_string(l) + " is " +
                                               std::to_string(value) + ", not within the rounding window");
  }
  return BigInt(static_cast<long long>(nearest));
}

double contractible_density(int q, int vertex_count, double s) {
  const double four_q = 4.0 * q;
  if (s * s >= four_q) return 0.0;
  const double qp1 = q + 1.0;
  return vertex_count * qp1 / (2.0 * std::numbers::pi) * std::sqrt(four_q - s * s) / (qp1 * qp1 - s * s);
}

double contractible_integral(int q, int vertex_count, const std::function<double(double)>& f,
                             const QuadratureOptions& opts) {
  if (q < 1) throw Error(ErrorKind::InfeasibleParameters, "q must be at least 1");
  const double two_root_q = 2.0 * std::sqrt(static_cast<double>(q));
  const double prefactor = vertex_count * (q + 1.0) / (2.0 * std::numbers::pi);

  // With s = 2 sqrt(q) cos(theta), density(s) ds becomes
  // prefactor * 4q sin^2 / ((q-1)^2 + 4q sin^2) d(theta): bounded and smooth.
  auto weight = [q](double theta) {
    if (q == 1) return 1.0;
    const double sin2 = std::sin(theta) * std::sin(theta);
    return 4.0 * q * sin2 / ((q - 1.0) * (q - 1.0) + 4.0 * q * sin2);
  };
  auto integrand = [&](double theta) { return weight(theta) * f(two_root_q * std::cos(theta)); };

  auto simpson = [&](int panels, double& absolute) {
    const double h = std::numbers::pi / panels;
    double sum = 0.0;
    double abs_sum = 0.0;
    for (int i = 0; i <= panels; ++i) {
      const double coef = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      const double v = integrand(i * h);
      sum += coef * v;
      abs_sum += coef * std::abs(v);
    }
    absolute = abs_sum * h / 3.0;
    return sum * h / 3.0;
  };

  int panels = 8;
  double absolute = 0.0;
  double previous = simpson(panels, absolute);
  for (int refinement = 0; refinement < opts.max_refinements; ++refinement) {
    panels *= 2;
    const double current = simpson(panels, absolute);
    if (std::abs(current - previous) <= opts.relative_tolerance * absolute) return prefactor * current;
    previous = current;
  }
  throw Error(ErrorKind::QuadratureFailure,
              "Simpson refinement did not converge after " + std::to_string(opts.max_refinements) + " doublings");
}

double contractible_term(int q, int vertex_count, double t, const QuadratureOptions& opts) {
  return contractible_integral(q, vertex_count, [t](double s) { return std::exp(s * t); }, opts);
}

double geodesic_term(const GeodesicClass& gc, int q, double t) {
  const double root_q = std::sqrt(static_cast<double>(q));
  return gc.lambda * std::pow(root_q, -gc.length) * bessel_i(gc.length, 2.0 * root_q * t);
}

DensityTable density_table(int q, int vertex_count, std::span<const BigInt> geodesic_paths, int l_trunc,
                           int grid_size) {
  if (grid_size < 2) throw Error(ErrorKind::InfeasibleParameters, "density grid needs at least 2 points");
  if (l_trunc >= static_cast<int>(geodesic_paths.size())) {
    throw Error(ErrorKind::InvalidLength, "geodesic counts do not cover the truncation length");
  }
  const double root_q = std::sqrt(static_cast<double>(q));
  DensityTable table;
  table.l_trunc = l_trunc;
  table.grid.reserve(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    const double s = -2.0 * root_q * std::cos(std::numbers::pi * (i + 0.5) / grid_size);
    const double con = contractible_density(q, vertex_count, s);
    const double kernel = 1.0 / (std::numbers::pi * std::sqrt(4.0 * q - s * s));
    double geodesic = 0.0;
    for (int l = 3; l <= l_trunc; ++l) {
      const double gp = geodesic_paths[static_cast<std::size_t>(l)].convert_to<double>();
      if (gp != 0.0) geodesic += gp * std::pow(root_q, -l) * chebyshev_t(l, s / (2.0 * root_q));
    }
    table.grid.push_back(s);
    table.rho_con.push_back(con);
    table.rho_total.push_back(con + geodesic * kernel);
  }
  return table;
}

DensityTable density_table(const Graph& g, int l_trunc, int grid_size) {
  const auto gp = count_geodesic_paths(g, l_trunc);
  return density_table(g.q(), g.vertex_count(), gp, l_trunc, grid_size);
}

}  // namespace regtrace
