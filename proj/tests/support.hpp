#pragma once

// Seeded generators and independent reference computations shared by the
// unit, property and acceptance tests. Nothing here calls the library code
// it is used to check.

#include "symrank/exact_linalg.hpp"
#include "symrank/form.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace symtest {

using namespace symrank;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Rational rational(int bound) { return Rational(uniform(-bound, bound)); }
  Rational nonzero(int bound) {
    for (;;)
      if (int v = uniform(-bound, bound); v != 0) return Rational(v);
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline SymmetricForm random_form(Rng& rng, int nvars, int degree, int bound = 5) {
  for (;;) {
    RationalVector c(monomial_count(nvars, degree));
    for (Eigen::Index k = 0; k < c.size(); ++k) c[k] = rng.rational(bound);
    SymmetricForm f(nvars, degree, c);
    if (!f.is_zero()) return f;
  }
}

inline RationalVector random_vector(Rng& rng, int n, int bound = 3) {
  for (;;) {
    RationalVector v(n);
    bool nz = false;
    for (int k = 0; k < n; ++k) {
      v[k] = rng.rational(bound);
      nz = nz || v[k] != 0;
    }
    if (nz) return v;
  }
}

/// Plain Gaussian elimination, independent of the Bareiss routine.
inline int naive_rank(RationalMatrix m) {
  int r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (Eigen::Index k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

/// Cofactor expansion; fine for the 3x3 and 4x4 cases it is used on.
inline Rational naive_det(const RationalMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  Rational s(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    RationalMatrix minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index k = 0, kk = 0; k < n; ++k)
        if (k != j) minor(i - 1, kk++) = m(i, k);
    const Rational t = m(0, j) * naive_det(minor);
    s += (j % 2 ? -t : t);
  }
  return s;
}

inline LinearChange random_change(Rng& rng, int n, int bound = 3) {
  for (;;) {
    RationalMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.rational(bound);
    if (naive_rank(a) == n) return {a};
  }
}

inline Rational pow_q(const Rational& x, int e) {
  Rational r(1);
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

/// f evaluated at a rational point by summing monomials.
inline Rational eval_form(const SymmetricForm& f, const std::vector<Rational>& x) {
  Rational s(0);
  const auto& mons = f.basis();
  for (size_t k = 0; k < mons.size(); ++k) {
    Rational t = f.coeff(static_cast<int>(k));
    if (t == 0) continue;
    for (int v = 0; v < f.nvars(); ++v) t *= pow_q(x[v], mons[k][v]);
    s += t;
  }
  return s;
}

/// (sum_i c_i x_i)^d expanded with multinomial coefficients computed here.
inline SymmetricForm power_of_linear(const RationalVector& c, int d) {
  const int n = static_cast<int>(c.size());
  SymmetricForm f(n, d);
  RationalVector out = f.coeffs();
  const auto& mons = f.basis();
  for (size_t k = 0; k < mons.size(); ++k) {
    Integer mult(1);
    int used = 0;
    Rational t(1);
    for (int v = 0; v < n; ++v) {
      for (int e = 1; e <= mons[k][v]; ++e) mult = mult * (used + e) / e;
      used += mons[k][v];
      t *= pow_q(c[v], mons[k][v]);
    }
    out[k] = Rational(mult) * t;
  }
  return SymmetricForm(n, d, out);
}

inline SymmetricForm power_sum(const std::vector<Rational>& w, const std::vector<RationalVector>& l, int d) {
  SymmetricForm f(static_cast<int>(l.front().size()), d);
  for (size_t j = 0; j < w.size(); ++j) f = f + w[j] * power_of_linear(l[j], d);
  return f;
}

inline SymmetricForm binary_monomial(int a, int b) {
  return SymmetricForm::from_terms(2, a + b, {{{a, b}, Rational(1)}});
}

/// Hankel matrix (b_{i+j}) of a binary form, built directly from
/// b_k = a_(d-k,k) / C(d,k); rows 0..d-r, columns 0..r.
inline RationalMatrix hankel(const SymmetricForm& f, int r) {
  const int d = f.degree();
  std::vector<Rational> b(d + 1);
  for (int k = 0; k <= d; ++k) {
    Integer c(1);
    for (int t = 1; t <= k; ++t) c = c * (d - k + t) / t;
    b[k] = f.coeff(MultiIndex{d - k, k}) / Rational(c);
  }
  RationalMatrix h(d - r + 1, r + 1);
  for (int i = 0; i <= d - r; ++i)
    for (int j = 0; j <= r; ++j) h(i, j) = b[i + j];
  return h;
}

/// g(d) f by iterated single-variable differentiation.
inline SymmetricForm act(const SymmetricForm& g, const SymmetricForm& f) {
  SymmetricForm out(f.nvars(), f.degree() - g.degree());
  const auto& mons = g.basis();
  for (size_t k = 0; k < mons.size(); ++k) {
    const Rational c = g.coeff(static_cast<int>(k));
    if (c == 0) continue;
    SymmetricForm h = f;
    for (int v = 0; v < g.nvars(); ++v)
      for (int e = 0; e < mons[k][v]; ++e) h = differentiate(h, v);
    out = out + c * h;
  }
  return out;
}

}  // namespace symtest
