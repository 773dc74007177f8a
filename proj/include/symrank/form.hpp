#pragma once

#include "symrank/types.hpp"
#include "symrank/univariate.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symrank {

/// Number of monomials of the given degree in nvars variables.
int monomial_count(int nvars, int degree);

/// All exponent tuples of total degree `degree` in `nvars` variables, in
/// lexicographic order with x0 > x1 > ... (so x0^d comes first).
const std::vector<MultiIndex>& monomials(int nvars, int degree);

/// Position of `exps` in monomials(exps.size(), |exps|).
int monomial_index(const MultiIndex& exps);

/// Dense homogeneous polynomial of fixed degree. Coefficients are the plain
/// monomial coefficients a_alpha, stored in monomials() order.
template <class Scalar>
class BasicForm {
 public:
  BasicForm() = default;
  BasicForm(int nvars, int degree)
      : nvars_(nvars), degree_(degree), coeffs_(Vector<Scalar>::Zero(monomial_count(nvars, degree))) {
    check_shape();
  }
  BasicForm(int nvars, int degree, Vector<Scalar> coeffs)
      : nvars_(nvars), degree_(degree), coeffs_(std::move(coeffs)) {
    check_shape();
    if (coeffs_.size() != monomial_count(nvars, degree))
      throw Error(ErrorKind::invalid, "coefficient vector does not match form shape");
  }

  /// Builds a form from (exponents, coefficient) terms; repeated monomials add.
  static BasicForm from_terms(int nvars, int degree,
                              const std::vector<std::pair<MultiIndex, Scalar>>& terms) {
    BasicForm f(nvars, degree);
    for (const auto& [e, c] : terms) {
      if (static_cast<int>(e.size()) != nvars)
        throw Error(ErrorKind::invalid, "monomial has wrong number of variables");
      int s = 0;
      for (int x : e) s += x;
      if (s != degree) throw Error(ErrorKind::invalid, "monomial has wrong degree");
      f.coeffs_[monomial_index(e)] += c;
    }
    return f;
  }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const Vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& coeff(int idx) const { return coeffs_[idx]; }
  const Scalar& coeff(const MultiIndex& e) const { return coeffs_[monomial_index(e)]; }
  const std::vector<MultiIndex>& basis() const { return monomials(nvars_, degree_); }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != Scalar(0)) return false;
    return true;
  }

  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }
  friend BasicForm operator+(const BasicForm& a, const BasicForm& b) {
    a.require_same_shape(b);
    return BasicForm(a.nvars_, a.degree_, a.coeffs_ + b.coeffs_);
  }
  friend BasicForm operator-(const BasicForm& a, const BasicForm& b) {
    a.require_same_shape(b);
    return BasicForm(a.nvars_, a.degree_, a.coeffs_ - b.coeffs_);
  }
  friend BasicForm operator*(const Scalar& s, const BasicForm& a) {
    Vector<Scalar> c = a.coeffs_;
    for (Eigen::Index i = 0; i < c.size(); ++i) c[i] *= s;
    return BasicForm(a.nvars_, a.degree_, std::move(c));
  }

 private:
  void check_shape() const {
    if (nvars_ < 1) throw Error(ErrorKind::invalid, "a form needs at least one variable");
    if (degree_ < 0) throw Error(ErrorKind::invalid, "negative degree");
  }
  void require_same_shape(const BasicForm& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_)
      throw Error(ErrorKind::invalid, "forms have different shapes");
  }

  int nvars_ = 1;
  int degree_ = 0;
  Vector<Scalar> coeffs_ = Vector<Scalar>::Zero(1);
};

using SymmetricForm = BasicForm<Rational>;

/// Product of two forms in the same variables.
template <class Scalar>
BasicForm<Scalar> multiply(const BasicForm<Scalar>& a, const BasicForm<Scalar>& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::invalid, "forms have different variable counts");
  const int n = a.nvars();
  BasicForm<Scalar> out(n, a.degree() + b.degree());
  Vector<Scalar> c = out.coeffs();
  const auto& ma = a.basis();
  const auto& mb = b.basis();
  MultiIndex e(n);
  for (size_t i = 0; i < ma.size(); ++i) {
    if (a.coeff(static_cast<int>(i)) == Scalar(0)) continue;
    for (size_t j = 0; j < mb.size(); ++j) {
      if (b.coeff(static_cast<int>(j)) == Scalar(0)) continue;
      for (int k = 0; k < n; ++k) e[k] = ma[i][k] + mb[j][k];
      c[monomial_index(e)] += a.coeff(static_cast<int>(i)) * b.coeff(static_cast<int>(j));
    }
  }
  return BasicForm<Scalar>(n, out.degree(), std::move(c));
}

template <class Scalar>
BasicForm<Scalar> power(const BasicForm<Scalar>& f, int e) {
  BasicForm<Scalar> acc(f.nvars(), 0, Vector<Scalar>::Constant(1, Scalar(1)));
  for (int k = 0; k < e; ++k) acc = multiply(acc, f);
  return acc;
}

/// The linear form sum_i c_i x_i.
template <class Scalar>
BasicForm<Scalar> linear_form(const Vector<Scalar>& c) {
  return BasicForm<Scalar>(static_cast<int>(c.size()), 1, c);
}

/// Partial derivative with respect to x_var.
template <class Scalar>
BasicForm<Scalar> differentiate(const BasicForm<Scalar>& f, int var) {
  if (f.degree() == 0) return BasicForm<Scalar>(f.nvars(), 0);
  BasicForm<Scalar> out(f.nvars(), f.degree() - 1);
  Vector<Scalar> c = out.coeffs();
  const auto& m = f.basis();
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i][var] == 0 || f.coeff(static_cast<int>(i)) == Scalar(0)) continue;
    MultiIndex e = m[i];
    const int k = e[var]--;
    c[monomial_index(e)] += f.coeff(static_cast<int>(i)) * Scalar(k);
  }
  return BasicForm<Scalar>(f.nvars(), f.degree() - 1, std::move(c));
}

/// Converts coefficients elementwise (e.g. Rational -> double).
template <class To, class From>
BasicForm<To> cast_form(const BasicForm<From>& f) {
  Vector<To> c(f.coeffs().size());
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = static_cast<To>(f.coeffs()[i]);
  return BasicForm<To>(f.nvars(), f.degree(), std::move(c));
}

/// Normalized tensor entries b_alpha = a_alpha / multinomial(d; alpha),
/// indexed like the form's coefficients.
using TensorCoeffs = RationalVector;

TensorCoeffs to_tensor(const SymmetricForm& f);
SymmetricForm from_tensor(int nvars, int degree, const TensorCoeffs& b);

/// Linear substitution. `matrix` has one column per variable of the source
/// form and one row per variable of the result: old x_i is replaced by
/// sum_k matrix(k, i) y_k, i.e. result(y) = f(matrix^T y).
struct LinearChange {
  RationalMatrix matrix;

  static LinearChange identity(int n) { return {RationalMatrix::Identity(n, n)}; }
  /// apply(f, a.compose(b)) == apply(apply(f, b), a).
  LinearChange compose(const LinearChange& inner) const { return {matrix * inner.matrix}; }
  LinearChange inverse() const;
};

SymmetricForm apply_linear_change(const SymmetricForm& f, const LinearChange& a);

/// Same polynomial viewed in more variables (new variables unused).
SymmetricForm embed(const SymmetricForm& f, int nvars);

/// g(d/dx) applied to f: each monomial x^delta of g acts as the iterated
/// partial derivative d^delta.
SymmetricForm apply_differential(const SymmetricForm& g, const SymmetricForm& f);

/// True iff the binary form has deg(q) distinct roots in P^1 over the
/// algebraic closure.
bool binary_squarefree(const SymmetricForm& q);

/// q(t, 1) as a univariate polynomial (coefficient of t^k is a_(k, d-k)).
UniPoly<Rational> dehomogenize_binary(const SymmetricForm& q);

/// Degree of gcd(q, dq/dx0, dq/dx1) as a homogeneous polynomial.
int binary_repeated_degree(const SymmetricForm& q);

/// Parses the textual polynomial grammar. The variable count is the largest
/// variable index used plus one, raised to `min_nvars` when given.
SymmetricForm parse_form(std::string_view text, int min_nvars = 0);

/// Canonical rendering: lex-ordered monomials, explicit '*', reduced rationals.
std::string to_string(const SymmetricForm& f);

/// A seeded random matrix with entries in [-bound, bound] that is invertible.
LinearChange random_invertible_change(int n, std::uint64_t seed, int bound = 3);

}  // namespace symrank
