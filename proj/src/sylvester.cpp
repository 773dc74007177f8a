#include "symrank/sylvester.hpp"
#include "symrank/catalecticant.hpp"
#include "symrank/exact_linalg.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace symrank {

BinaryRankReport ssra(const SymmetricForm& f) {
  if (f.nvars() != 2) throw Error(ErrorKind::invalid, "ssra needs a binary form");
  if (f.is_zero()) throw Error(ErrorKind::zero_form, "rank of the zero form is undefined");
  const int d = f.degree();
  for (int r = 1; r <= d + 1; ++r) {
    const auto kernel = right_kernel_basis(build_catalecticant(f, d - r, r));
    if (kernel.empty()) continue;
    const int dim = static_cast<int>(kernel.size());
    // Below the middle the first kernel is a single apolar form. At
    // r == d - r + 2 (even d, generic) it is a pencil and both branches
    // give the same rank; the certificate is then a squarefree member.
    if (dim > 1 && r < d - r + 2)
      throw Error(ErrorKind::internal, "kernel of M_{" + std::to_string(d - r) + "," + std::to_string(r) +
                                           "} has dimension " + std::to_string(dim) + " at minimal r");
    BinaryRankReport rep;
    rep.degree = d;
    rep.border_rank = r;
    rep.kernel_dimension = dim;
    rep.kernel_vector = kernel.front();
    rep.squarefree = binary_squarefree(rep.kernel_vector);
    if (dim > 1 && !rep.squarefree) {
      // Non-squarefree members of the kernel lie on the discriminant, of
      // degree 2(r-1); along the curve sum_k c^k g_k it has at most
      // 2(r-1)(dim-1) zeros unless the whole kernel is non-squarefree.
      const int tries = 2 * (r - 1) * (dim - 1) + 1;
      for (int c = 1; c <= tries && !rep.squarefree; ++c) {
        SymmetricForm g = kernel.front();
        Rational ck(1);
        for (int k = 1; k < dim; ++k) {
          ck *= c;
          g = g + ck * kernel[k];
        }
        if (binary_squarefree(g)) {
          rep.kernel_vector = g;
          rep.squarefree = true;
        }
      }
    }
    rep.rank = rep.squarefree ? r : d - r + 2;
    rep.stratum = {r, rep.rank};
    rep.tangential = (r == 2 && rep.rank == d);
    return rep;
  }
  throw Error(ErrorKind::internal, "no apolar form found up to degree d+1");
}

MonomialRank monomial_rank(int d, int s) {
  if (d < 1 || s < 0 || s > d) throw Error(ErrorKind::invalid, "monomial_rank needs 0 <= s <= d");
  if (s == 0 || s == d) return {1, 1};
  return {std::max(d - s + 1, s + 1), std::min(s, d - s) + 1};
}

namespace {

// Integer-valued scaling keeps double conversion away from overflow.
template <class Real>
std::vector<Complex<Real>> to_complex_coeffs(const UniPoly<Rational>& p) {
  Rational big = 0;
  for (const auto& c : p.coeffs()) big = std::max(big, Rational(abs(c)));
  std::vector<Complex<Real>> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(rational_to_real<Real>(c / big));
  return out;
}

// Continued-fraction convergents of x with denominator at most `max_den`;
// returns the first one that is an exact root of p and lies within
// 1/(2 max_den^2) of x. Distinct roots with such denominators are at least
// 1/max_den^2 apart, so a nearby root cannot be picked up instead.
template <class Real>
std::optional<Rational> rational_root_near(const UniPoly<Rational>& p, Real x, const Integer& max_den) {
  using std::abs;
  using std::floor;
  const Real target = x;
  const Real window = Real(1) / (Real(2) * rational_to_real<Real>(Rational(max_den * max_den)));
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int step = 0; step < 400; ++step) {
    const Real a_real = floor(x);
    const Integer a(static_cast<Integer>(a_real));
    const Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    const Rational cand = Rational(p2) / Rational(q2);
    if (abs(rational_to_real<Real>(cand) - target) < window && p(cand) == 0) return cand;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const Real frac = x - a_real;
    if (frac <= std::numeric_limits<Real>::epsilon() * Real(16)) break;
    x = Real(1) / frac;
  }
  return std::nullopt;
}

template <class Real>
bool rational_roots_at(const UniPoly<Rational>& p, const Integer& lead, std::vector<Rational>& roots) {
  std::vector<Complex<Real>> approx;
  if (!aberth_roots(to_complex_coeffs<Real>(p), approx)) return false;
  using std::abs;
  for (const auto& z : approx) {
    const Real scale = Real(1) + abs(z.re);
    if (abs(z.im) > scale * Real(1e-20)) return false;
    auto root = rational_root_near(p, z.re, lead);
    if (!root) return false;
    if (std::find(roots.begin(), roots.end(), *root) != roots.end()) return false;
    roots.push_back(*root);
  }
  return true;
}

int bit_length(const Integer& v) { return v == 0 ? 0 : static_cast<int>(msb(abs(v))) + 1; }

}  // namespace

bool rational_split(const SymmetricForm& q, std::vector<std::pair<Rational, Rational>>& points) {
  points.clear();
  const int r = q.degree();
  const UniPoly<Rational> p = dehomogenize_binary(q);
  if (p.degree() < r - 1) return false;  // repeated root at infinity
  if (p.degree() < r) points.emplace_back(Rational(1), Rational(0));
  if (p.degree() == 0) return true;

  // Clear denominators; a rational root a/b in lowest terms has b | lead.
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  Integer lead = boost::multiprecision::numerator(p.leading()) * (den / boost::multiprecision::denominator(p.leading()));
  lead = abs(lead);
  int coeff_bits = 0;
  for (const auto& c : p.coeffs())
    coeff_bits = std::max(coeff_bits, bit_length(boost::multiprecision::numerator(c) *
                                                 (den / boost::multiprecision::denominator(c))));

  // Cheap rejection: a non-real root cannot be rational.
  {
    std::vector<Complex<double>> approx;
    if (aberth_roots(to_complex_coeffs<double>(p), approx)) {
      for (const auto& z : approx)
        if (std::abs(z.im) > 1e-3 * (1.0 + std::abs(z.re))) return false;
    }
  }

  const int needed = 2 * bit_length(lead) + coeff_bits + 64;
  std::vector<Rational> roots;
  bool ok = false;
  if (needed <= 128) ok = rational_roots_at<Real128>(p, lead, roots);
  else if (needed <= 256) ok = rational_roots_at<Real256>(p, lead, roots);
  else if (needed <= 512) ok = rational_roots_at<Real512>(p, lead, roots);
  else if (needed <= 1024) ok = rational_roots_at<Real1024>(p, lead, roots);
  if (!ok || static_cast<int>(roots.size()) != p.degree()) return false;
  for (const auto& t : roots) points.emplace_back(t, Rational(1));
  return true;
}

namespace {

std::vector<SymmetricForm> kernel_candidates(const std::vector<SymmetricForm>& kernel, std::mt19937_64& rng) {
  std::vector<SymmetricForm> out(kernel);
  if (kernel.size() == 1) return out;
  for (size_t i = 0; i < kernel.size(); ++i)
    for (size_t j = i + 1; j < kernel.size(); ++j) {
      out.push_back(kernel[i] + kernel[j]);
      out.push_back(kernel[i] - kernel[j]);
    }
  std::uniform_int_distribution<int> coef(-10, 10);
  for (int attempt = 0; attempt < 50; ++attempt) {
    SymmetricForm g(kernel.front().nvars(), kernel.front().degree());
    for (const auto& k : kernel) g = g + Rational(coef(rng)) * k;
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

// (alpha, beta) scaled so the first nonzero coordinate is 1.
std::pair<Rational, Rational> normalize_point(const Rational& a, const Rational& b) {
  if (a != 0) return {Rational(1), b / a};
  return {Rational(0), Rational(1)};
}

Decomposition exact_decomposition(const SymmetricForm& f, std::vector<std::pair<Rational, Rational>> points) {
  const int d = f.degree();
  const int r = static_cast<int>(points.size());
  for (auto& p : points) p = normalize_point(p.first, p.second);
  std::sort(points.begin(), points.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second > y.second;
  });
  RationalMatrix v(d + 1, r);
  for (int j = 0; j < r; ++j) {
    const auto& [a, b] = points[j];
    for (int k = 0; k <= d; ++k) {
      Rational term(binomial(d, k));
      for (int e = 0; e < d - k; ++e) term *= a;
      for (int e = 0; e < k; ++e) term *= b;
      v(k, j) = term;
    }
  }
  RationalVector lambda;
  if (!solve_exact<Rational>(v, f.coeffs(), lambda))
    throw Error(ErrorKind::internal, "power sum system is inconsistent for an apolar squarefree form");
  Decomposition dec;
  dec.mode = Decomposition::Mode::exact;
  dec.degree = d;
  for (int j = 0; j < r; ++j) {
    if (lambda[j] == 0) continue;
    dec.weights.push_back(lambda[j]);
    RationalVector l(2);
    l << points[j].first, points[j].second;
    dec.linear_forms.push_back(std::move(l));
  }
  return dec;
}

template <class Real>
bool solve_dense(std::vector<std::vector<Complex<Real>>> a, std::vector<Complex<Real>> b,
                 std::vector<Complex<Real>>& x) {
  const int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int i = c + 1; i < n; ++i)
      if (a[i][c].norm() > a[piv][c].norm()) piv = i;
    if (a[piv][c].norm() == Real(0)) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (int i = c + 1; i < n; ++i) {
      const Complex<Real> m = a[i][c] / a[c][c];
      for (int k = c; k < n; ++k) a[i][k] -= m * a[c][k];
      b[i] -= m * b[c];
    }
  }
  x.assign(n, Complex<Real>());
  for (int i = n - 1; i >= 0; --i) {
    Complex<Real> s = b[i];
    for (int k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return true;
}

template <class Real>
Decomposition numeric_decomposition(const SymmetricForm& f, const SymmetricForm& q, int bits) {
  using C = Complex<Real>;
  const int d = f.degree();
  const int r = q.degree();
  std::vector<std::pair<C, C>> points;
  const UniPoly<Rational> p = dehomogenize_binary(q);
  if (p.degree() < r) points.emplace_back(C(Real(1)), C(Real(0)));
  if (p.degree() >= 1) {
    std::vector<C> roots;
    if (!aberth_roots(to_complex_coeffs<Real>(p), roots))
      throw Error(ErrorKind::numeric, "root finding did not converge at " + std::to_string(bits) +
                                          " bits; retry with a higher --precision");
    for (const auto& t : roots) {
      if (t.norm() > Real(1)) points.emplace_back(C(Real(1)), C(Real(1)) / t);
      else points.emplace_back(t, C(Real(1)));
    }
  }

  std::vector<std::vector<C>> v(d + 1, std::vector<C>(r));
  for (int j = 0; j < r; ++j) {
    std::vector<C> apow(d + 1, C(Real(1))), bpow(d + 1, C(Real(1)));
    for (int e = 1; e <= d; ++e) {
      apow[e] = apow[e - 1] * points[j].first;
      bpow[e] = bpow[e - 1] * points[j].second;
    }
    for (int k = 0; k <= d; ++k)
      v[k][j] = C(Real(static_cast<Real>(binomial(d, k)))) * apow[d - k] * bpow[k];
  }
  std::vector<C> a(d + 1);
  for (int k = 0; k <= d; ++k) a[k] = C(rational_to_real<Real>(f.coeff(k)));

  // Normal equations V^H V lambda = V^H a.
  std::vector<std::vector<C>> g(r, std::vector<C>(r));
  std::vector<C> h(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j)
      for (int k = 0; k <= d; ++k) g[i][j] += v[k][i].conj() * v[k][j];
    for (int k = 0; k <= d; ++k) h[i] += v[k][i].conj() * a[k];
  }
  std::vector<C> lambda;
  if (!solve_dense(g, h, lambda)) throw Error(ErrorKind::numeric, "singular power sum system");

  Decomposition dec;
  dec.mode = Decomposition::Mode::numeric;
  dec.degree = d;
  dec.precision_bits = bits;
  Real worst(0);
  for (int k = 0; k <= d; ++k) {
    C s;
    for (int j = 0; j < r; ++j) s += lambda[j] * v[k][j];
    const Real e = (s - a[k]).abs();
    if (e > worst) worst = e;
  }
  dec.residual = static_cast<double>(worst);
  for (int j = 0; j < r; ++j) {
    dec.numeric_weights.push_back(complex_cast<WideReal>(lambda[j]));
    dec.numeric_forms.push_back({complex_cast<WideReal>(points[j].first), complex_cast<WideReal>(points[j].second)});
  }
  return dec;
}

int tier_for(int bits) {
  if (bits < 1) throw Error(ErrorKind::invalid, "precision must be positive");
  for (int t : kPrecisionTiers)
    if (bits <= t) return t;
  throw Error(ErrorKind::invalid, "precision above 1024 bits is not supported");
}

}  // namespace

Decomposition sylvester_decompose(const SymmetricForm& f, std::uint64_t seed, int precision_bits) {
  const int tier = tier_for(precision_bits);
  const BinaryRankReport rep = ssra(f);
  const int d = f.degree();
  const int b = rep.border_rank;
  for (int r = b; r <= d - b + 2; ++r) {
    const auto kernel = right_kernel_basis(build_catalecticant(f, d - r, r));
    if (kernel.empty()) continue;
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(r));
    std::optional<SymmetricForm> fallback;
    for (const auto& cand : kernel_candidates(kernel, rng)) {
      if (!binary_squarefree(cand)) continue;
      if (!fallback) fallback = cand;
      std::vector<std::pair<Rational, Rational>> points;
      if (rational_split(cand, points)) {
        Decomposition dec = exact_decomposition(f, std::move(points));
        dec.apolar_degree = r;
        return dec;
      }
    }
    if (fallback) {
      Decomposition dec;
      switch (tier) {
        case 128: dec = numeric_decomposition<Real128>(f, *fallback, tier); break;
        case 256: dec = numeric_decomposition<Real256>(f, *fallback, tier); break;
        case 512: dec = numeric_decomposition<Real512>(f, *fallback, tier); break;
        default: dec = numeric_decomposition<Real1024>(f, *fallback, tier); break;
      }
      dec.apolar_degree = r;
      return dec;
    }
  }
  throw Error(ErrorKind::internal, "no squarefree apolar form up to degree d-b+2");
}

}  // namespace symrank
