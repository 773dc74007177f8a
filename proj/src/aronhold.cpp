#include "symrank/aronhold.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <random>
#include <sstream>

namespace symrank {

namespace detail {
extern const std::string_view kAronholdTableText;
}

namespace {

constexpr int kCubicCoeffs = 10;

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

u64 to_mod(const Integer& v, u64 p) {
  Integer r = v % Integer(p);
  if (r < 0) r += p;
  return static_cast<u64>(r);
}

// Primes just below 2^31 so that products fit in 64 bits without reduction.
std::vector<u64> primes_below_2_31(int count) {
  std::vector<u64> out;
  std::mt19937 rng(7);
  for (u64 c = (1ULL << 31) - 1; static_cast<int>(out.size()) < count; c -= 2)
    if (boost::multiprecision::miller_rabin_test(Integer(c), 25, rng)) out.push_back(c);
  return out;
}

struct Sample {
  std::vector<Integer> a;  // cubic coefficients
};

std::vector<Sample> rank3_samples(const AronholdOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> coef(-opts.coefficient_bound, opts.coefficient_bound);
  std::vector<Sample> out;
  while (static_cast<int>(out.size()) < opts.samples) {
    SymmetricForm f(3, 3);
    for (int k = 0; k < 3; ++k) {
      RationalVector l(3);
      for (int v = 0; v < 3; ++v) l[v] = coef(rng);
      int w = 0;
      while (w == 0) w = coef(rng);
      f = f + Rational(w) * power(linear_form<Rational>(l), 3);
    }
    if (f.is_zero()) continue;
    Sample s;
    for (int k = 0; k < kCubicCoeffs; ++k) s.a.push_back(boost::multiprecision::numerator(f.coeff(k)));
    out.push_back(std::move(s));
  }
  return out;
}

// Nullspace vector modulo p, scaled so its first nonzero coordinate is 1.
// Returns the nullity; `vec` is filled only when the nullity is 1.
int modular_nullspace(const std::vector<Sample>& samples, const std::vector<MultiIndex>& mons, u64 p,
                      std::vector<u64>& vec) {
  const size_t cols = mons.size();
  std::vector<std::vector<u64>> rows;
  rows.reserve(samples.size());
  for (const auto& s : samples) {
    std::vector<u64> pw[kCubicCoeffs];
    for (int k = 0; k < kCubicCoeffs; ++k) {
      const u64 base = to_mod(s.a[k], p);
      pw[k] = {1, base, base * base % p, base * base % p * base % p, powmod(base, 4, p)};
    }
    std::vector<u64> row(cols);
    for (size_t c = 0; c < cols; ++c) {
      u64 v = 1;
      for (int k = 0; k < kCubicCoeffs; ++k)
        if (mons[c][k]) v = v * pw[k][mons[c][k]] % p;
      row[c] = v;
    }
    rows.push_back(std::move(row));
  }
  std::vector<int> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const u64 inv = powmod(rows[r][c], p - 2, p);
    for (size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] * inv % p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 f = p - rows[i][c];
      for (size_t k = c; k < cols; ++k)
        if (rows[r][k]) rows[i][k] = (rows[i][k] + f * rows[r][k]) % p;
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  const int nullity = static_cast<int>(cols) - static_cast<int>(pivots.size());
  if (nullity != 1) return nullity;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  vec.assign(cols, 0);
  vec[free_col] = 1;
  for (size_t k = 0; k < pivots.size(); ++k) vec[pivots[k]] = (p - rows[k][free_col]) % p;
  size_t first = 0;
  while (vec[first] == 0) ++first;
  const u64 inv = powmod(vec[first], p - 2, p);
  for (auto& x : vec) x = mulmod(x, inv, p);
  return 1;
}

// a/b with |a|, |b| <= sqrt(m/2) and a = b*u mod m.
bool rational_reconstruct(const Integer& u, const Integer& m, Rational& out) {
  const Integer bound = sqrt(m / 2);
  Integer r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  out = Rational(r1) / Rational(t1);
  return true;
}

Rational evaluate_terms(const std::vector<std::pair<MultiIndex, Rational>>& terms, const std::vector<Rational>& a) {
  Rational acc = 0;
  for (const auto& [e, c] : terms) {
    Rational v = c;
    for (int k = 0; k < kCubicCoeffs && v != 0; ++k)
      for (int r = 0; r < e[k]; ++r) v *= a[k];
    acc += v;
  }
  return acc;
}

}  // namespace

AronholdTable derive_aronhold(const AronholdOptions& opts) {
  const auto& mons = monomials(kCubicCoeffs, 4);
  if (opts.samples < static_cast<int>(mons.size()))
    throw Error(ErrorKind::invalid, "need at least " + std::to_string(mons.size()) + " samples");
  const auto samples = rank3_samples(opts);
  const auto primes = primes_below_2_31(16);

  Integer modulus = 1;
  std::vector<Integer> residues(mons.size(), Integer(0));
  AronholdTable table;
  table.samples = opts.samples;
  table.seed = opts.seed;
  int leading = -1;
  for (u64 p : primes) {
    std::vector<u64> vec;
    const int nullity = modular_nullspace(samples, mons, p, vec);
    if (nullity == 0) throw Error(ErrorKind::internal, "no degree-4 form vanishes on the samples");
    // Nullity mod p bounds the rational nullity from above; a larger value
    // at one prime is either bad luck with p or too few samples.
    if (nullity > 1) {
      if (leading < 0) throw Error(ErrorKind::internal, "interpolation nullity " + std::to_string(nullity) +
                                                            "; retry with more samples");
      continue;
    }
    int first = 0;
    while (vec[first] == 0) ++first;
    if (leading < 0) leading = first;
    if (first != leading) continue;
    // CRT: x = r mod M, x = v mod p.
    const Integer pm(p);
    const u64 minv = powmod(to_mod(modulus, p), p - 2, p);
    for (size_t c = 0; c < mons.size(); ++c) {
      const u64 rm = to_mod(residues[c], p);
      const u64 t = mulmod((vec[c] + p - rm) % p, minv, p);
      residues[c] += modulus * Integer(t);
    }
    modulus *= pm;

    std::vector<std::pair<MultiIndex, Rational>> terms;
    bool ok = true;
    for (size_t c = 0; c < mons.size() && ok; ++c) {
      if (residues[c] == 0) continue;
      Rational q;
      ok = rational_reconstruct(residues[c], modulus, q);
      if (ok && q != 0) terms.emplace_back(mons[c], q);
    }
    if (!ok) continue;
    for (const auto& s : samples) {
      std::vector<Rational> a(s.a.begin(), s.a.end());
      if (evaluate_terms(terms, a) != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    table.terms = std::move(terms);
    table.nullity = 1;
    return table;
  }
  throw Error(ErrorKind::internal, "modular interpolation did not stabilize");
}

std::string write_aronhold_table(const AronholdTable& table) {
  std::ostringstream out;
  out << "# symrank Aronhold invariant, table format 1\n";
  out << "# variables: coefficients of x0^3 x0^2*x1 x0^2*x2 x0*x1^2 x0*x1*x2 x0*x2^2 x1^3 x1^2*x2 x1*x2^2 x2^3\n";
  out << "# each row: ten exponents, then the rational coefficient\n";
  out << "samples " << table.samples << "\n";
  out << "seed " << table.seed << "\n";
  out << "nullity " << table.nullity << "\n";
  for (const auto& [e, c] : table.terms) {
    for (int x : e) out << x << ' ';
    out << to_string(c) << "\n";
  }
  return out.str();
}

AronholdTable read_aronhold_table(std::string_view text) {
  AronholdTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  auto malformed = [&line] { return Error(ErrorKind::parse, "malformed Aronhold table line: " + line); };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head, extra;
    ls >> head;
    if (head == "samples" || head == "seed" || head == "nullity") {
      std::uint64_t v = 0;
      if (!(ls >> v) || (ls >> extra)) throw malformed();
      if (head == "samples") t.samples = static_cast<int>(v);
      else if (head == "seed") t.seed = v;
      else t.nullity = static_cast<int>(v);
      continue;
    }
    MultiIndex e(kCubicCoeffs);
    std::istringstream hs(head);
    if (!(hs >> e[0]) || !hs.eof()) throw malformed();
    for (int k = 1; k < kCubicCoeffs; ++k)
      if (!(ls >> e[k])) throw malformed();
    std::string coef;
    if (!(ls >> coef) || (ls >> extra)) throw malformed();
    int total = 0;
    for (int x : e) {
      if (x < 0) throw malformed();
      total += x;
    }
    if (total != 4) throw Error(ErrorKind::parse, "Aronhold table row is not of degree 4: " + line);
    t.terms.emplace_back(std::move(e), parse_rational(coef));
  }
  return t;
}

const AronholdTable& aronhold_table() {
  static const AronholdTable table = [] {
    AronholdTable t = read_aronhold_table(detail::kAronholdTableText);
    if (t.terms.empty()) t = derive_aronhold();
    return t;
  }();
  return table;
}

Rational aronhold_eval(const AronholdTable& table, const SymmetricForm& cubic) {
  if (cubic.nvars() != 3 || cubic.degree() != 3)
    throw Error(ErrorKind::invalid, "the Aronhold invariant takes a ternary cubic");
  std::vector<Rational> a(kCubicCoeffs);
  for (int k = 0; k < kCubicCoeffs; ++k) a[k] = cubic.coeff(k);
  return evaluate_terms(table.terms, a);
}

Rational aronhold_eval(const SymmetricForm& cubic) {
  if (cubic.degree() != 3 || cubic.nvars() > 3)
    throw Error(ErrorKind::invalid, "the Aronhold invariant takes a ternary cubic");
  return aronhold_eval(aronhold_table(), cubic.nvars() < 3 ? embed(cubic, 3) : cubic);
}

}  // namespace symrank
