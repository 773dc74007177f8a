#include "support.hpp"

#include <doctest.h>

using namespace symtest;

TEST_CASE("parse reads coefficients by monomial") {
  const auto f = parse_form("x0^3 + 2*x0*x1^2");
  CHECK(f.degree() == 3);
  CHECK(f.nvars() == 2);
  CHECK(f.coeff(MultiIndex{3, 0}) == 1);
  CHECK(f.coeff(MultiIndex{1, 2}) == 2);
  CHECK(f.coeff(MultiIndex{2, 1}) == 0);

  const auto g = parse_form("-3/2*x0*x1*x2^2");
  CHECK(g.degree() == 4);
  CHECK(g.nvars() == 3);
  CHECK(g.coeff(MultiIndex{1, 1, 2}) == Rational(-3, 2));
}

TEST_CASE("parse accepts x y z and rejects malformed input") {
  CHECK(parse_form("x^2*y") == parse_form("x0^2*x1"));
  CHECK(parse_form("x*y*z") == parse_form("x0*x1*x2"));
  CHECK(parse_form("x^3", 2).nvars() == 2);

  auto kind = [](const char* text) {
    try {
      parse_form(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::internal;
  };
  CHECK(kind("x0^2 + x1") == ErrorKind::parse);
  CHECK(kind("x0^") == ErrorKind::parse);
  CHECK(kind("") == ErrorKind::parse);
  CHECK(kind("2*/x") == ErrorKind::parse);
}

TEST_CASE("parse of printed form is the identity") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform(1, 4), d = rng.uniform(1, 6);
    RationalVector c(monomial_count(n, d));
    for (Eigen::Index k = 0; k < c.size(); ++k) c[k] = Rational(rng.uniform(-9, 9), rng.uniform(1, 7));
    const SymmetricForm f(n, d, c);
    if (f.is_zero()) continue;
    CHECK(parse_form(to_string(f), n) == f);
  }
}

TEST_CASE("monomials are lex ordered with x0^d first") {
  const auto& m = monomials(3, 2);
  REQUIRE(m.size() == 6);
  CHECK(m.front() == MultiIndex{2, 0, 0});
  CHECK(m[1] == MultiIndex{1, 1, 0});
  CHECK(m.back() == MultiIndex{0, 0, 2});
  for (size_t k = 0; k < m.size(); ++k) CHECK(monomial_index(m[k]) == static_cast<int>(k));
  CHECK(monomial_count(3, 4) == 15);
  CHECK(monomial_count(10, 4) == 715);
}

TEST_CASE("tensor entries divide by the multinomial") {
  const auto t = to_tensor(parse_form("x0^2*x1"));
  CHECK(t[monomial_index({2, 1})] == Rational(1, 3));
  for (int d = 1; d <= 6; ++d) {
    MultiIndex e(3, 0);
    e[0] = d;
    const auto f = SymmetricForm::from_terms(3, d, {{e, Rational(1)}});
    CHECK(to_tensor(f)[0] == 1);
  }
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const int n = rng.uniform(1, 4), d = rng.uniform(0, 7);
    const auto f = random_form(rng, n, d);
    CHECK(from_tensor(n, d, to_tensor(f)) == f);
  }
}

TEST_CASE("linear change substitutes the transpose") {
  const auto f = parse_form("x0^2", 2);
  CHECK(apply_linear_change(f, LinearChange::identity(2)) == f);
  RationalMatrix a(2, 2);
  a << 1, 0, 1, 1;  // x0 -> x0 + x1
  CHECK(apply_linear_change(f, {a}) == parse_form("x0^2 + 2*x0*x1 + x1^2"));
}

TEST_CASE("linear change agrees with pointwise substitution") {
  Rng rng(5);
  for (int k = 0; k < 60; ++k) {
    const int n = rng.uniform(1, 3), d = rng.uniform(1, 5);
    const auto f = random_form(rng, n, d);
    const auto a = random_change(rng, n);
    const auto g = apply_linear_change(f, a);
    std::vector<Rational> y(n);
    for (auto& v : y) v = rng.rational(4);
    std::vector<Rational> x(n, Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x[i] += a.matrix(j, i) * y[j];
    CHECK(eval_form(g, y) == eval_form(f, x));
  }
}

TEST_CASE("linear changes compose and invert exactly") {
  Rng rng(8);
  for (int k = 0; k < 60; ++k) {
    const int n = rng.uniform(1, 3), d = rng.uniform(1, 5);
    const auto f = random_form(rng, n, d);
    const auto a = random_change(rng, n), b = random_change(rng, n);
    CHECK(apply_linear_change(f, a.compose(b)) == apply_linear_change(apply_linear_change(f, b), a));
    CHECK(apply_linear_change(apply_linear_change(f, a), a.inverse()) == f);
  }
}

TEST_CASE("binary squarefree") {
  CHECK_FALSE(binary_squarefree(parse_form("x^2*y")));
  CHECK(binary_squarefree(parse_form("x^2*y + x*y^2")));  // xy(x+y)
  CHECK(binary_squarefree(parse_form("x^3 + y^3")));
  CHECK_FALSE(binary_squarefree(parse_form("y^3", 2)));
  CHECK(binary_squarefree(parse_form("y", 2)));
  CHECK(binary_squarefree(parse_form("x^2 + y^2")));
  CHECK_FALSE(binary_squarefree(parse_form("x^2 + 2*x*y + y^2")));
}

TEST_CASE("squarefree iff the homogeneous gcd with both partials is constant") {
  Rng rng(21);
  for (int k = 0; k < 300; ++k) {
    // Bias toward repeated factors: multiply two random forms, sometimes equal.
    const auto p = random_form(rng, 2, rng.uniform(1, 3), 3);
    const auto q = rng.uniform(0, 2) == 0 ? p : random_form(rng, 2, rng.uniform(1, 3), 3);
    const auto f = multiply(p, q);
    CHECK(binary_squarefree(f) == (binary_repeated_degree(f) == 0));
    if (rng.uniform(0, 1)) {
      const auto r = multiply(f, multiply(p, p));
      CHECK_FALSE(binary_squarefree(r));
    }
  }
}

TEST_CASE("apply_differential matches iterated partials") {
  Rng rng(9);
  for (int k = 0; k < 80; ++k) {
    const int n = rng.uniform(1, 3), d = rng.uniform(2, 6), e = rng.uniform(0, d);
    const auto f = random_form(rng, n, d);
    const auto g = random_form(rng, n, e);
    CHECK(apply_differential(g, f) == act(g, f));
  }
}

TEST_CASE("embed keeps coefficients and printing is canonical") {
  const auto f = parse_form("x^2*y");
  const auto g = embed(f, 4);
  CHECK(g.nvars() == 4);
  CHECK(g.coeff(MultiIndex{2, 1, 0, 0}) == 1);
  CHECK(to_string(f) == "x0^2*x1");
}

TEST_CASE("rationals print reduced with positive denominators") {
  CHECK(to_string(Rational(-6) / 4) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(multinomial({2, 1, 1}) == 12);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("random invertible changes are seeded and invertible") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto a = random_invertible_change(3, s);
    CHECK(naive_rank(a.matrix) == 3);
    CHECK(random_invertible_change(3, s).matrix == a.matrix);
  }
}
