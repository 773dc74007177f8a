#pragma once

#include "symrank/types.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>
#include <vector>

namespace symrank {

/// Minimal complex arithmetic over an arbitrary real scalar (std::complex is
/// only specified for the built-in floating types).
template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }

  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const {
    using std::sqrt;
    return sqrt(norm());
  }
};

template <class To, class From>
Complex<To> complex_cast(const Complex<From>& z) {
  return {static_cast<To>(z.re), static_cast<To>(z.im)};
}

// Working precisions for the numeric paths. Values are decimal digits; each
// tier is at least the advertised number of bits.
using Real128 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>,
                                              boost::multiprecision::et_off>;
using Real256 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<78>,
                                              boost::multiprecision::et_off>;
using Real512 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<155>,
                                              boost::multiprecision::et_off>;
using Real1024 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<309>,
                                               boost::multiprecision::et_off>;
/// Storage type for numeric results regardless of the tier they came from.
using WideReal = Real1024;
using WideComplex = Complex<WideReal>;

template <class Real>
Real rational_to_real(const Rational& q) {
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<Real>(q);
  } else {
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
  }
}

/// Horner evaluation of p and p' at z; coefficients from the constant term up.
template <class Real>
void evaluate_with_derivative(const std::vector<Complex<Real>>& c, const Complex<Real>& z,
                              Complex<Real>& p, Complex<Real>& dp) {
  p = Complex<Real>();
  dp = Complex<Real>();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
}

/// All roots of a polynomial with nonzero leading coefficient, by Aberth's
/// simultaneous iteration followed by Newton polishing. Returns false when
/// the iteration did not converge.
template <class Real>
bool aberth_roots(const std::vector<Complex<Real>>& coeffs, std::vector<Complex<Real>>& roots,
                  int max_iter = 0) {
  using std::cos;
  using std::sin;
  const int n = static_cast<int>(coeffs.size()) - 1;
  roots.clear();
  if (n < 1) return true;
  std::vector<Complex<Real>> c(coeffs.size());
  for (int k = 0; k <= n; ++k) c[k] = coeffs[k] / coeffs[n];
  if (n == 1) {
    roots.push_back(-c[0]);
    return true;
  }
  if (max_iter == 0) max_iter = 400 + 40 * n;

  Real radius(0);
  for (int k = 0; k < n; ++k) {
    const Real a = c[k].abs();
    if (a > radius) radius = a;
  }
  radius = Real(1) + radius;
  // Start on a circle of the geometric-mean root modulus, clamped to the
  // Cauchy bound; the angular offset avoids symmetric stalls.
  using std::pow;
  Real gm = c[0].abs();
  gm = gm > Real(0) ? Real(pow(gm, Real(1) / Real(n))) : Real(1);
  if (gm > radius) gm = radius;
  const Complex<Real> center = -c[n - 1] / Complex<Real>(Real(n));
  const Real two_pi = Real(2) * boost::math::constants::pi<Real>();
  roots.resize(n);
  for (int k = 0; k < n; ++k) {
    const Real ang = two_pi * Real(k) / Real(n) + Real(0.4);
    roots[k] = center + Complex<Real>(gm * cos(ang), gm * sin(ang));
  }

  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real tol = eps * Real(64);
  bool converged = false;
  for (int it = 0; it < max_iter && !converged; ++it) {
    converged = true;
    for (int k = 0; k < n; ++k) {
      Complex<Real> p, dp;
      evaluate_with_derivative(c, roots[k], p, dp);
      if (p.norm() == Real(0)) continue;
      const Complex<Real> w = p / dp;
      Complex<Real> s;
      for (int j = 0; j < n; ++j)
        if (j != k) s += Complex<Real>(Real(1)) / (roots[k] - roots[j]);
      const Complex<Real> delta = w / (Complex<Real>(Real(1)) - w * s);
      roots[k] -= delta;
      if (delta.abs() > tol * (Real(1) + roots[k].abs())) converged = false;
    }
  }
  for (int pass = 0; pass < 3; ++pass) {
    for (auto& z : roots) {
      Complex<Real> p, dp;
      evaluate_with_derivative(c, z, p, dp);
      if (dp.norm() != Real(0)) z -= p / dp;
    }
  }
  return converged;
}

}  // namespace symrank
