#include "symrank/catalecticant.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace symtest;

TEST_CASE("catalecticant of a diagonal quadric") {
  const auto m = build_catalecticant(parse_form("x0^2 + x1^2"), 1, 1);
  RationalMatrix want(2, 2);
  want << 2, 0, 0, 2;
  CHECK(m.entries == want);
  CHECK(rank_exact(m) == 2);
  CHECK(m.row_labels == std::vector<MultiIndex>{{1, 0}, {0, 1}});
}

TEST_CASE("catalecticant ranks of small examples") {
  CHECK(rank_exact(build_catalecticant(parse_form("x0^3*x1"), 2, 2)) == 2);
  CHECK(catalecticant_rank(parse_form("x^3 + y^3 + z^3"), 1) == 3);
  CHECK(catalecticant_rank(parse_form("x0*x1*x2^2"), 2) == 4);
  CHECK(rank_exact(build_catalecticant(SymmetricForm(3, 4), 2, 2)) == 0);
  Rng rng(4);
  for (int k = 0; k < 30; ++k) {
    const int d = rng.uniform(1, 6);
    const auto l = power_of_linear(random_vector(rng, 3), d);
    for (int i = 0; i <= d; ++i) CHECK(catalecticant_rank(l, i) == 1);
  }
}

TEST_CASE("split must add up to the degree") {
  CHECK_THROWS_AS(build_catalecticant(parse_form("x^3"), 1, 1), Error);
  CHECK_THROWS_AS(build_catalecticant(parse_form("x^3"), -1, 4), Error);
}

TEST_CASE("kernel bases") {
  const auto k1 = right_kernel_basis(build_catalecticant(parse_form("x^3", 2), 2, 1));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == parse_form("x1", 2));

  const auto k2 = right_kernel_basis(build_catalecticant(parse_form("x^3 + y^3 + z^3"), 1, 2));
  REQUIRE(k2.size() == 3);
  // Span {xy, xz, yz}: only mixed monomials appear and the span has rank 3.
  RationalMatrix rows(3, 6);
  for (int r = 0; r < 3; ++r) {
    rows.row(r) = k2[r].coeffs().transpose();
    for (const auto& sq : {MultiIndex{2, 0, 0}, MultiIndex{0, 2, 0}, MultiIndex{0, 0, 2}})
      CHECK(k2[r].coeff(sq) == 0);
  }
  CHECK(naive_rank(rows) == 3);

  Rng rng(6);
  for (int k = 0; k < 30; ++k) {
    const int d = rng.uniform(2, 8);
    const auto f = random_form(rng, 2, d);
    CHECK(right_kernel_basis(build_catalecticant(f, d - 1, 1)).empty());
  }
}

TEST_CASE("kernel elements annihilate the form") {
  Rng rng(12);
  for (int k = 0; k < 60; ++k) {
    const int n = rng.uniform(2, 3), d = rng.uniform(2, 6), i = rng.uniform(0, d);
    // Low-rank inputs have large kernels.
    std::vector<Rational> w;
    std::vector<RationalVector> l;
    for (int j = rng.uniform(1, 3); j > 0; --j) {
      w.push_back(rng.nonzero(3));
      l.push_back(random_vector(rng, n));
    }
    const auto f = power_sum(w, l, d);
    const auto m = build_catalecticant(f, i, d - i);
    const auto basis = right_kernel_basis(m);
    CHECK(static_cast<int>(basis.size()) == monomial_count(n, d - i) - rank_exact(m));
    for (const auto& g : basis) CHECK(act(g, f).is_zero());
  }
}

TEST_CASE("rank properties on random forms") {
  Rng rng(13);
  for (int k = 0; k < 60; ++k) {
    const int n = rng.uniform(2, 3), d = rng.uniform(2, 6), i = rng.uniform(0, d);
    const auto f = random_form(rng, n, d, 3);
    const auto g = random_form(rng, n, d, 3);
    const int rf = catalecticant_rank(f, i);
    CHECK(rf == catalecticant_rank(f, d - i));
    CHECK(rf == naive_rank(build_catalecticant(f, i, d - i).entries));
    CHECK(catalecticant_rank(apply_linear_change(f, random_change(rng, n)), i) == rf);
    CHECK(catalecticant_rank(f + g, i) <= rf + catalecticant_rank(g, i));
  }
}

TEST_CASE("rank is bounded by the number of powers") {
  Rng rng(14);
  for (int k = 0; k < 60; ++k) {
    const int n = rng.uniform(2, 3), d = rng.uniform(2, 7), r = rng.uniform(1, 4);
    std::vector<Rational> w;
    std::vector<RationalVector> l;
    for (int j = 0; j < r; ++j) {
      w.push_back(rng.nonzero(4));
      l.push_back(random_vector(rng, n));
    }
    const auto f = power_sum(w, l, d);
    for (int i = 0; i <= d; ++i) CHECK(catalecticant_rank(f, i) <= r);
  }
}

TEST_CASE("binary catalecticant is the Hankel matrix up to row scaling") {
  Rng rng(15);
  for (int k = 0; k < 60; ++k) {
    const int d = rng.uniform(2, 9), r = rng.uniform(1, d);
    const auto f = random_form(rng, 2, d, 4);
    const auto m = build_catalecticant(f, d - r, r);
    const RationalMatrix h = hankel(f, r);
    REQUIRE(m.entries.rows() == h.rows());
    // Each row of M is a multiple of the matching Hankel row.
    for (Eigen::Index row = 0; row < h.rows(); ++row) {
      Rational ratio(0);
      for (Eigen::Index c = 0; c < h.cols(); ++c) {
        if (h(row, c) == 0) {
          CHECK(m.entries(row, c) == 0);
          continue;
        }
        const Rational q = m.entries(row, c) / h(row, c);
        if (ratio == 0) ratio = q;
        CHECK(q == ratio);
      }
    }
    const RationalMatrix km = nullspace<Rational>(m.entries);
    CHECK((h * km).isZero());
    CHECK(km.cols() == h.cols() - naive_rank(h));
  }
}

TEST_CASE("determinant and inverse") {
  Rng rng(16);
  for (int k = 0; k < 40; ++k) {
    const int n = rng.uniform(1, 4);
    RationalMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Rational(rng.uniform(-5, 5), rng.uniform(1, 3));
    const Rational det = determinant(a);
    CHECK(det == naive_det(a));
    CHECK(bareiss_rank(a) == naive_rank(a));
    if (det != 0) CHECK(a * inverse(a) == RationalMatrix::Identity(n, n));
    else CHECK_THROWS_AS(inverse(a), Error);
  }
}
