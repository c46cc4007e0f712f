#include <algorithm>
#include <cmath>
#include <string>

#include "regtrace/error.hpp"
#include "regtrace/spectral.hpp"

namespace regtrace {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n, const EigenOptions& opts) {
  if (a.size() != n * n) throw std::invalid_argument("matrix size does not match n * n");
  auto at = [&a, n](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  // A rotation that zeroes a_pr lowers the squared off-diagonal norm by
  // exactly 2 a_pr^2, so convergence is checked after every rotation; the
  // running value is resynchronised at each sweep boundary.
  const double target = opts.off_diagonal_tolerance * opts.off_diagonal_tolerance;
  double off_sq = std::pow(off_diagonal_norm(a, n), 2);
  int sweep = 0;
  while (off_sq >= target) {
    if (sweep++ >= opts.max_sweeps) {
      throw Error(ErrorKind::ConvergenceFailure,
                  "Jacobi iteration did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n && off_sq >= target; ++p) {
      for (std::size_t r = p + 1; r < n && off_sq >= target; ++r) {
        const double apr = at(p, r);
        if (apr == 0.0) continue;
        // Rotation angle chosen so the (p, r) entry vanishes; |t| <= 1.
        const double theta = (at(r, r) - at(p, p)) / (2.0 * apr);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apr;
        at(r, r) += t * apr;
        at(p, r) = at(r, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == r) continue;
          const double akp = at(k, p);
          const double akr = at(k, r);
          at(k, p) = at(p, k) = c * akp - s * akr;
          at(k, r) = at(r, k) = s * akp + c * akr;
        }
        off_sq -= 2.0 * apr * apr;
      }
    }
    off_sq = std::pow(off_diagonal_norm(a, n), 2);
  }

  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = at(i, i);
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

Spectrum spectrum(const Graph& g, const EigenOptions& opts) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<double> adjacency(n * n, 0.0);
  for (const auto& [u, v] : g.edges()) {
    adjacency[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1.0;
    adjacency[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1.0;
  }
  return Spectrum{symmetric_eigenvalues(std::move(adjacency), n, opts), g.q(), g.vertex_count()};
}

}  // namespace regtrace
