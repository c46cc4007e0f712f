#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "regtrace/error.hpp"
#include "regtrace/series.hpp"

using namespace regtrace;

TEST_CASE("series arithmetic basics") {
  const int N = 10;
  const Series one_minus_s = Series::constant(N, 1) - Series::monomial(N, 1);
  const Series geometric = one_minus_s.reciprocal();
  for (int k = 0; k <= N; ++k) CHECK(geometric[k] == 1);
  CHECK(one_minus_s * geometric == Series::constant(N, 1));

  const Series root = binomial_series(Rational(1), 1, Rational(1, 2), N);
  CHECK(root * root == Series::constant(N, 1) + Series::monomial(N, 1));
  CHECK(root[2] == Rational(-1, 8));

  const Series cube = (Series::constant(N, 1) + Series::monomial(N, 1)).pow(3);
  CHECK(cube[3] == 1);
  CHECK(cube[2] == 3);
  CHECK(cube[4] == 0);
  CHECK(cube.derivative().order() == N - 1);
  CHECK(cube.derivative()[2] == 3);
  CHECK(cube.euler()[2] == 6);
  CHECK(cube.shift(2)[5] == 1);
  CHECK(cube.shift(2).unshift(2) == cube.truncate(N - 2));

  CHECK_THROWS_AS(Series::monomial(N, 1).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(root.integer_coefficients(), std::domain_error);
  CHECK_THROWS_AS(cube.unshift(1), std::domain_error);
}

TEST_CASE("catalan matches Dyck path enumeration") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  for (int k = 0; k <= 10; ++k) CHECK(catalan(k) == oracle::dyck_paths(k));
}

TEST_CASE("first_return_counts") {
  const auto q2 = first_return_counts(2, 4);
  CHECK(q2[1] == 3);
  CHECK(q2[2] == 6);
  const auto q1 = first_return_counts(1, 3);
  CHECK(q1[2] == 2);
  for (int q : {1, 2, 3}) {
    const auto counts = first_return_counts(q, 4);
    for (int k = 1; k <= 4; ++k) {
      CHECK(counts[static_cast<std::size_t>(k)] == oracle::tree_closed_walks(q, 2 * k, -1, true));
    }
  }
  // The closed-form series has exactly these coefficients.
  const auto series = first_return_series(3, 16).integer_coefficients();
  const auto counts = first_return_counts(3, 8);
  for (int k = 1; k <= 8; ++k) CHECK(series[static_cast<std::size_t>(2 * k)] == counts[static_cast<std::size_t>(k)]);
}

TEST_CASE("tree_walk_counts against the explicit tree") {
  const auto table = tree_walk_counts(2, 8);
  CHECK(table.p_tree[0] == 1);
  CHECK(table.p_tree[2] == 3);
  CHECK(table.p_tree[4] == 15);
  CHECK(table.p_tree[6] == 87);
  for (int q : {1, 2, 3}) {
    const auto t = tree_walk_counts(q, 8);
    for (int l = 0; l <= 8; ++l) CHECK(t.p_tree[static_cast<std::size_t>(l)] == oracle::tree_closed_walks(q, l));
  }
}

TEST_CASE("prohibited_direction_counts against the explicit tree") {
  const auto q2 = prohibited_direction_counts(2, 6);
  CHECK(q2[0] == 1);
  CHECK(q2[2] == 2);
  CHECK(prohibited_direction_counts(1, 4)[2] == 1);
  for (int q : {1, 2, 3}) {
    const auto hat = prohibited_direction_counts(q, 8);
    for (int l = 0; l <= 8; ++l) {
      CHECK(hat[static_cast<std::size_t>(l)] == oracle::tree_closed_walks(q, l, /*forbidden=*/1));
    }
  }
}

TEST_CASE("homotopy and trajectory class coefficients") {
  const auto h = homotopy_class_coefficients(2, 3, 8);
  CHECK(h[3] == 1);
  CHECK(h[4] == 0);
  CHECK(h[5] == 10);
  for (int l = 0; l < 3; ++l) CHECK(h[static_cast<std::size_t>(l)] == 0);

  const auto t3 = trajectory_class_coefficients(2, 3, 8);
  CHECK(t3[3] == 1);
  CHECK(t3[5] == 6);  // u^3 with u = s + 2 s^3 + ...
  CHECK(trajectory_class_coefficients(2, 4, 8)[4] == 1);

  CHECK_THROWS_AS(homotopy_class_coefficients(2, 2, 8), Error);
  CHECK_THROWS_AS(trajectory_class_coefficients(2, 0, 8), Error);
}

TEST_CASE("exactness, parity and sign of every table") {
  for (int q = 1; q <= 4; ++q) {
    const int N = 20;
    const auto table = tree_walk_counts(q, N);
    for (int l = 0; l <= N; ++l) {
      const auto i = static_cast<std::size_t>(l);
      CHECK(table.p_tree[i] >= 0);
      CHECK(table.p_hat[i] >= 0);
      if (l % 2 == 1) {
        CHECK(table.p_tree[i] == 0);
        CHECK(table.p_hat[i] == 0);
      }
    }
    for (int m = 3; m <= 8; ++m) {
      const auto h = homotopy_class_coefficients(q, m, N);
      for (int l = 0; l <= N; ++l) {
        const auto& c = h[static_cast<std::size_t>(l)];
        CHECK(c >= 0);
        if (l < m || (l - m) % 2 != 0) CHECK(c == 0);
      }
    }
  }
}

TEST_CASE("reciprocal identity and closed form for the tree series") {
  for (int q = 1; q <= 5; ++q) {
    const int N = 24;
    const Series tilde = first_return_series(q, N);
    const Series tree = tree_return_series(q, N);
    CHECK((Series::constant(N, 1) - tilde) * tree == Series::constant(N, 1));

    // ((q+1) sqrt(1 - 4 q s^2) - q + 1) / (2 (1 - (q+1)^2 s^2)), expanded separately.
    const Series root = binomial_series(Rational(-4 * q), 2, Rational(1, 2), N);
    const Series numerator_series = root * Rational(q + 1) + Series::constant(N, Rational(1 - q));
    const Series denominator_inverse =
        binomial_series(Rational(-(q + 1) * (q + 1)), 2, Rational(-1), N) * Rational(1, 2);
    CHECK(numerator_series * denominator_inverse == tree);

    // (1 - sqrt(1 - 4 q s^2)) / (2 q s^2) for the prohibited-direction series.
    const Series hat_closed = (Series::constant(N, 1) - root).unshift(2) * Rational(1, 2 * q);
    CHECK(hat_closed == prohibited_return_series(q, N).truncate(N - 2));
  }
}

TEST_CASE("class series: derivative route equals the closed product form") {
  for (int q = 1; q <= 4; ++q) {
    const int N = 22;
    const Series inv_root = binomial_series(Rational(-4 * q), 2, Rational(-1, 2), N);
    for (int m = 3; m <= 9; ++m) {
      const Series closed = inv_root * trajectory_series(q, m, N);
      CHECK(closed == homotopy_class_series(q, m, N));

      // l * t_l == m * h_l, i.e. p = k t for primitive classes.
      const auto t = trajectory_class_coefficients(q, m, N);
      const auto h = homotopy_class_coefficients(q, m, N);
      for (int l = 0; l <= N; ++l) {
        CHECK(l * t[static_cast<std::size_t>(l)] == m * h[static_cast<std::size_t>(l)]);
      }
    }
  }
}

TEST_CASE("renewal identity for first returns") {
  for (int q = 1; q <= 4; ++q) {
    const int N = 20;
    const auto table = tree_walk_counts(q, N);
    for (int l = 2; l <= N; ++l) {
      BigInt sum = 0;
      for (int j = 1; 2 * j <= l; ++j) {
        sum += table.p_tilde[static_cast<std::size_t>(j)] * table.p_tree[static_cast<std::size_t>(l - 2 * j)];
      }
      CHECK(sum == table.p_tree[static_cast<std::size_t>(l)]);
    }
  }
}

TEST_CASE("coefficient CSV dump") {
  std::ostringstream out;
  write_coefficients_csv(out, tree_walk_counts(2, 4).p_tree);
  CHECK(out.str() == "exponent,coefficient\n0,1\n1,0\n2,3\n3,0\n4,15\n");
}
