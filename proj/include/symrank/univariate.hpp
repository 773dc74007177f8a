#pragma once

#include "symrank/types.hpp"

#include <utility>
#include <vector>

namespace symrank {

/// Dense univariate polynomial over a field, coefficients stored from the
/// constant term upward. The zero polynomial has no coefficients.
template <class Scalar>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const Scalar& c, int degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return UniPoly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Scalar(0); }
  const Scalar& leading() const { return c_.back(); }

  Scalar operator()(const Scalar& t) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const Scalar& s, const UniPoly& a) {
    std::vector<Scalar> v = a.c_;
    for (auto& x : v) x *= s;
    return UniPoly(std::move(v));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly derivative() const {
    if (degree() < 1) return {};
    std::vector<Scalar> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Scalar(static_cast<int>(i));
    return UniPoly(std::move(v));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    return (Scalar(1) / leading()) * *this;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

/// Quotient and remainder; divisor must be nonzero.
template <class Scalar>
std::pair<UniPoly<Scalar>, UniPoly<Scalar>> divmod(const UniPoly<Scalar>& a,
                                                   const UniPoly<Scalar>& b) {
  if (b.is_zero()) throw Error(ErrorKind::invalid, "polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly<Scalar>(), a};
  std::vector<Scalar> quo(a.degree() - db + 1, Scalar(0));
  const Scalar lead_inv = Scalar(1) / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Scalar c = rem[k + db] * lead_inv;
    quo[k] = c;
    if (c == Scalar(0)) continue;
    for (int i = 0; i <= db; ++i) rem[k + i] -= c * b.coeffs()[i];
  }
  rem.resize(db);
  return {UniPoly<Scalar>(std::move(quo)), UniPoly<Scalar>(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) = 0.
template <class Scalar>
UniPoly<Scalar> gcd(UniPoly<Scalar> a, UniPoly<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same roots, all simple.
template <class Scalar>
UniPoly<Scalar> squarefree_part(const UniPoly<Scalar>& p) {
  if (p.degree() < 1) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

/// Characteristic polynomial det(tI - M) by Faddeev-LeVerrier; exact over a
/// field of characteristic zero.
template <class Scalar>
UniPoly<Scalar> characteristic_polynomial(const Matrix<Scalar>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[n] = Scalar(1);
  Matrix<Scalar> mk = Matrix<Scalar>::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    Matrix<Scalar> next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    Matrix<Scalar> amk = m * mk;
    Scalar tr(0);
    for (int i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / Scalar(k);
  }
  return UniPoly<Scalar>(std::move(c));
}

}  // namespace symrank
