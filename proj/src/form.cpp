#include "symrank/form.hpp"
#include "symrank/exact_linalg.hpp"

#include <map>
#include <mutex>
#include <random>

namespace symrank {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid: return "invalid";
    case ErrorKind::zero_form: return "zero_form";
    case ErrorKind::not_covered: return "not_covered";
    case ErrorKind::numeric: return "numeric";
    case ErrorKind::budget: return "budget";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw Error(ErrorKind::parse, "empty integer");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw Error(ErrorKind::parse, "bad integer '" + std::string(s) + "'");
    for (size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw Error(ErrorKind::parse, "bad integer '" + std::string(s) + "'");
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::parse, "zero denominator");
  return Rational(parse_int(text.substr(0, slash))) / Rational(den);
}

Integer factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer multinomial(const MultiIndex& exps) {
  int total = 0;
  Integer r = 1;
  for (int e : exps) {
    total += e;
    r *= binomial(total, e);
  }
  return r;
}

int monomial_count(int nvars, int degree) {
  if (nvars < 1 || degree < 0) return 0;
  return static_cast<int>(binomial(nvars - 1 + degree, degree));
}

namespace {

void enumerate(int nvars, int degree, MultiIndex& prefix, std::vector<MultiIndex>& out) {
  const int pos = static_cast<int>(prefix.size());
  if (pos == nvars - 1) {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    enumerate(nvars, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<MultiIndex>& monomials(int nvars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<MultiIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace({nvars, degree});
  if (inserted) {
    MultiIndex prefix;
    enumerate(nvars, degree, prefix, it->second);
  }
  // std::map nodes are stable, so the reference outlives the lock.
  return it->second;
}

int monomial_index(const MultiIndex& exps) {
  const int n = static_cast<int>(exps.size());
  int remaining = 0;
  for (int e : exps) remaining += e;
  int idx = 0;
  for (int i = 0; i + 1 < n; ++i) {
    // Monomials sharing the prefix but with a larger exponent at i come first.
    for (int e = remaining; e > exps[i]; --e) idx += monomial_count(n - i - 1, remaining - e);
    remaining -= exps[i];
  }
  return idx;
}

TensorCoeffs to_tensor(const SymmetricForm& f) {
  TensorCoeffs b(f.coeffs().size());
  const auto& m = f.basis();
  for (size_t i = 0; i < m.size(); ++i)
    b[static_cast<Eigen::Index>(i)] = f.coeff(static_cast<int>(i)) / Rational(multinomial(m[i]));
  return b;
}

SymmetricForm from_tensor(int nvars, int degree, const TensorCoeffs& b) {
  const auto& m = monomials(nvars, degree);
  if (b.size() != static_cast<Eigen::Index>(m.size()))
    throw Error(ErrorKind::invalid, "tensor entry count does not match shape");
  RationalVector a(b.size());
  for (size_t i = 0; i < m.size(); ++i)
    a[static_cast<Eigen::Index>(i)] = b[static_cast<Eigen::Index>(i)] * Rational(multinomial(m[i]));
  return SymmetricForm(nvars, degree, std::move(a));
}

LinearChange LinearChange::inverse() const { return {symrank::inverse(matrix)}; }

SymmetricForm apply_linear_change(const SymmetricForm& f, const LinearChange& a) {
  if (a.matrix.cols() != f.nvars())
    throw Error(ErrorKind::invalid, "linear change has " + std::to_string(a.matrix.cols()) +
                                        " columns but the form has " + std::to_string(f.nvars()) +
                                        " variables");
  const int m = static_cast<int>(a.matrix.rows());
  const int d = f.degree();
  // powers[i][e] = (image of x_i)^e
  std::vector<std::vector<SymmetricForm>> powers(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) {
    const SymmetricForm li = linear_form<Rational>(a.matrix.col(i));
    powers[i].push_back(SymmetricForm(m, 0, RationalVector::Constant(1, Rational(1))));
    for (int e = 1; e <= d; ++e) powers[i].push_back(multiply(powers[i].back(), li));
  }
  SymmetricForm out(m, d);
  const auto& mons = f.basis();
  for (size_t k = 0; k < mons.size(); ++k) {
    const Rational& c = f.coeff(static_cast<int>(k));
    if (c == 0) continue;
    SymmetricForm term(m, 0, RationalVector::Constant(1, c));
    for (int i = 0; i < f.nvars(); ++i)
      if (mons[k][i] > 0) term = multiply(term, powers[i][mons[k][i]]);
    out = out + term;
  }
  return out;
}

SymmetricForm embed(const SymmetricForm& f, int nvars) {
  if (nvars < f.nvars()) throw Error(ErrorKind::invalid, "cannot embed into fewer variables");
  std::vector<std::pair<MultiIndex, Rational>> terms;
  const auto& mons = f.basis();
  for (size_t k = 0; k < mons.size(); ++k) {
    if (f.coeff(static_cast<int>(k)) == 0) continue;
    MultiIndex e = mons[k];
    e.resize(nvars, 0);
    terms.emplace_back(std::move(e), f.coeff(static_cast<int>(k)));
  }
  return SymmetricForm::from_terms(nvars, f.degree(), terms);
}

SymmetricForm apply_differential(const SymmetricForm& g, const SymmetricForm& f) {
  if (g.nvars() != f.nvars()) throw Error(ErrorKind::invalid, "variable count mismatch");
  if (g.degree() > f.degree()) return SymmetricForm(f.nvars(), 0);
  SymmetricForm out(f.nvars(), f.degree() - g.degree());
  const auto& gm = g.basis();
  for (size_t k = 0; k < gm.size(); ++k) {
    const Rational& c = g.coeff(static_cast<int>(k));
    if (c == 0) continue;
    SymmetricForm d = f;
    for (int v = 0; v < f.nvars(); ++v)
      for (int r = 0; r < gm[k][v]; ++r) d = differentiate(d, v);
    out = out + c * d;
  }
  return out;
}

UniPoly<Rational> dehomogenize_binary(const SymmetricForm& q) {
  if (q.nvars() != 2) throw Error(ErrorKind::invalid, "binary form expected");
  std::vector<Rational> c(q.degree() + 1);
  for (int k = 0; k <= q.degree(); ++k) c[k] = q.coeff(MultiIndex{k, q.degree() - k});
  return UniPoly<Rational>(std::move(c));
}

int binary_repeated_degree(const SymmetricForm& q) {
  if (q.is_zero()) throw Error(ErrorKind::zero_form, "squarefree test on the zero form");
  const auto p = dehomogenize_binary(q);
  // Roots at [1:0] are the missing top degrees of q(t, 1).
  const int at_infinity = q.degree() - p.degree();
  const int finite = p.degree() - squarefree_part(p).degree();
  return finite + std::max(0, at_infinity - 1);
}

bool binary_squarefree(const SymmetricForm& q) { return binary_repeated_degree(q) == 0; }

LinearChange random_invertible_change(int n, std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (;;) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
    if (bareiss_rank(m) == n) return {m};
  }
}

// ---------------------------------------------------------------------------

namespace {

// Row-scales to integers; returns the scale product so determinants can be
// corrected.
Matrix<Integer> integer_rows(const RationalMatrix& m, Rational* scale) {
  Matrix<Integer> out(m.rows(), m.cols());
  Rational s = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m(i, j)));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = boost::multiprecision::numerator(m(i, j)) * (l / boost::multiprecision::denominator(m(i, j)));
    s *= Rational(l);
  }
  if (scale) *scale = s;
  return out;
}

// Fraction-free elimination in place; returns rank and the sign flips from
// row swaps. For square full-rank input, the last pivot is the determinant.
int bareiss(Matrix<Integer>& a, int* swaps) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  Eigen::Index r = 0;
  int sw = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      ++sw;
    }
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index k = c + 1; k < cols; ++k) a(i, k) = (a(r, c) * a(i, k) - a(i, c) * a(r, k)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (swaps) *swaps = sw;
  return static_cast<int>(r);
}

}  // namespace

int bareiss_rank(const RationalMatrix& m) {
  if (m.size() == 0) return 0;
  Matrix<Integer> a = integer_rows(m, nullptr);
  return bareiss(a, nullptr);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::invalid, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Rational scale;
  Matrix<Integer> a = integer_rows(m, &scale);
  int swaps = 0;
  const int rank = bareiss(a, &swaps);
  if (rank < m.rows()) return 0;
  Rational det(a(m.rows() - 1, m.cols() - 1));
  if (swaps % 2) det = -det;
  return det / scale;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::invalid, "inverse of a non-square matrix");
  RationalMatrix aug(n, 2 * n);
  aug << m, RationalMatrix::Identity(n, n);
  const auto ech = rref<Rational>(aug);
  if (ech.rank() < n || ech.pivots[n - 1] >= n) throw Error(ErrorKind::invalid, "matrix is singular");
  return ech.reduced.rightCols(n);
}

}  // namespace symrank
