#include "symrank/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace symrank {

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (int v = 0; v < kMaxPolyVars; ++v)
    if (e[v] > o.e[v]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kMaxPolyVars; ++v) {
    m.e[v] = std::max(a.e[v], b.e[v]);
    m.deg += m.e[v];
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kMaxPolyVars; ++v) {
    const int s = a.e[v] + b.e[v];
    if (s > 255) throw Error(ErrorKind::budget, "exponent overflow in polynomial arithmetic");
    m.e[v] = static_cast<std::uint8_t>(s);
  }
  m.deg = a.deg + b.deg;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kMaxPolyVars; ++v) m.e[v] = static_cast<std::uint8_t>(a.e[v] - b.e[v]);
  m.deg = a.deg - b.deg;
  return m;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  int start = 0;
  for (int len : blocks) {
    int da = 0, db = 0;
    for (int v = start; v < start + len; ++v) {
      da += a.e[v];
      db += b.e[v];
    }
    if (da != db) return da < db ? -1 : 1;
    if (kind == Kind::grevlex) {
      for (int v = start + len - 1; v >= start; --v)
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    } else {
      for (int v = start; v < start + len; ++v)
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
    }
    start += len;
  }
  return 0;
}

int MonomialOrder::weighted_degree(const Monomial& m) const {
  if (weights.empty()) return m.deg;
  int d = 0;
  for (int v = 0; v < nvars; ++v) d += weights[v] * m.e[v];
  return d;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(const MonomialOrder* order, const Rational& c) {
  Polynomial p(order);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(const MonomialOrder* order, int var) {
  if (var < 0 || var >= kMaxPolyVars) throw Error(ErrorKind::invalid, "variable index out of range");
  Polynomial p(order);
  Monomial m;
  m.e[var] = 1;
  m.deg = 1;
  p.terms_.push_back({m, Rational(1)});
  return p;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.deg);
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.push_back({m, c});
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [this](const Term& a, const Term& b) { return order_->compare(a.m, b.m) > 0; });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) out.back().c += t.c;
    else out.push_back(std::move(t));
    if (out.back().c == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading().c) * *this;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, const Rational& sb, const Monomial* shift) {
  const MonomialOrder* ord = a.order() ? a.order() : b.order();
  Polynomial out(ord);
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size()) {
      out.add_term(ta[i].m, ta[i].c);
      ++i;
      continue;
    }
    const Monomial mb = shift ? tb[j].m * *shift : tb[j].m;
    if (i == ta.size()) {
      out.add_term(mb, sb * tb[j].c);
      ++j;
      continue;
    }
    const int c = ord->compare(ta[i].m, mb);
    if (c > 0) {
      out.add_term(ta[i].m, ta[i].c);
      ++i;
    } else if (c < 0) {
      out.add_term(mb, sb * tb[j].c);
      ++j;
    } else {
      out.add_term(mb, ta[i].c + sb * tb[j].c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, Rational(1), nullptr); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, Rational(-1), nullptr); }

Polynomial operator*(const Rational& s, const Polynomial& a) {
  Polynomial out(a.order());
  if (s == 0) return out;
  for (const auto& t : a.terms()) out.add_term(t.m, s * t.c);
  return out;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial out(order_);
  if (c == 0) return out;
  for (const auto& t : terms_) out.add_term(t.m * m, t.c * c);
  return out;  // multiplication by a monomial preserves a monomial order
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.order() ? a.order() : b.order());
  for (const auto& t : b.terms()) out = out + a.mul_term(t.m, t.c);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms().size() != b.terms().size()) return false;
  for (size_t i = 0; i < a.terms().size(); ++i)
    if (!(a.terms()[i].m == b.terms()[i].m) || a.terms()[i].c != b.terms()[i].c) return false;
  return true;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.c;
    for (int k = 0; k < kMaxPolyVars && v != 0; ++k)
      for (int r = 0; r < t.m.e[k]; ++r) v *= point.at(k);
    acc += v;
  }
  return acc;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    Rational c = t.c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string mono;
    for (int v = 0; v < kMaxPolyVars; ++v) {
      if (t.m.e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += v < static_cast<int>(names.size()) ? names[v] : "v" + std::to_string(v);
      if (t.m.e[v] > 1) mono += "^" + std::to_string(t.m.e[v]);
    }
    if (mono.empty()) out += to_string(c);
    else if (c == 1) out += mono;
    else out += to_string(c) + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& g) {
  Polynomial work = p;
  Polynomial rem(p.order());
  while (!work.is_zero()) {
    const auto lt = work.leading();
    const Polynomial* div = nullptr;
    for (const auto& h : g)
      if (!h.is_zero() && h.leading().m.divides(lt.m)) {
        div = &h;
        break;
      }
    if (div) {
      const Monomial q = lt.m / div->leading().m;
      work = merge(work, *div, -lt.c / div->leading().c, &q);
    } else {
      rem.add_term(lt.m, lt.c);
      Polynomial rest(work.order());
      for (size_t k = 1; k < work.terms().size(); ++k) rest.add_term(work.terms()[k].m, work.terms()[k].c);
      work = std::move(rest);
    }
  }
  return rem;
}

namespace {

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  const Monomial l = Monomial::lcm(a.leading().m, b.leading().m);
  const Polynomial sa = a.mul_term(l / a.leading().m, Rational(1) / a.leading().c);
  const Polynomial sb = b.mul_term(l / b.leading().m, Rational(1) / b.leading().c);
  return sa - sb;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int v = 0; v < kMaxPolyVars; ++v)
    if (a.e[v] && b.e[v]) return false;
  return true;
}

}  // namespace

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const GroebnerBudget& budget) {
  std::vector<Polynomial> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return g;
  const MonomialOrder* ord = g.front().order();

  struct Pair {
    size_t i, j;
    Monomial lcm;
    int deg;
  };
  std::vector<Pair> queue;
  std::set<std::pair<size_t, size_t>> pending;
  auto add_pairs_for = [&](size_t k) {
    for (size_t i = 0; i < k; ++i) {
      if (coprime(g[i].leading().m, g[k].leading().m)) continue;  // product criterion
      const Monomial l = Monomial::lcm(g[i].leading().m, g[k].leading().m);
      queue.push_back({i, k, l, ord->weighted_degree(l)});
      pending.insert({i, k});
    }
  };
  for (size_t k = 0; k < g.size(); ++k) add_pairs_for(k);

  const auto started = std::chrono::steady_clock::now();
  long processed = 0;
  while (!queue.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      return ord->compare(a.lcm, b.lcm) < 0;
    });
    const Pair pr = *best;
    *best = queue.back();
    queue.pop_back();
    pending.erase({pr.i, pr.j});

    if (++processed > budget.max_pairs) throw Error(ErrorKind::budget, "Groebner pair budget exhausted");
    if (pr.deg > budget.max_degree) throw Error(ErrorKind::budget, "Groebner degree budget exhausted");
    if (budget.max_seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count() > budget.max_seconds)
      throw Error(ErrorKind::budget, "Groebner time budget exhausted after " + std::to_string(processed) +
                                         " pairs, basis size " + std::to_string(g.size()));

    // Chain criterion: some g_k with lm_k | lcm whose pairs with i and j are
    // already treated makes this pair redundant.
    bool redundant = false;
    for (size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[k].leading().m.divides(pr.lcm)) continue;
      const auto ik = std::minmax(pr.i, k);
      const auto jk = std::minmax(pr.j, k);
      if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second})) redundant = true;
    }
    if (redundant) continue;

    Polynomial h = normal_form(s_polynomial(g[pr.i], g[pr.j]), g);
    if (h.is_zero()) continue;
    if (h.terms().size() > budget.max_terms) throw Error(ErrorKind::budget, "Groebner term budget exhausted");
    g.push_back(h.monic());
    if (g.size() > budget.max_basis) throw Error(ErrorKind::budget, "Groebner basis size budget exhausted");
    add_pairs_for(g.size() - 1);
  }

  // Minimize, then interreduce.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < g.size() && keep; ++j) {
      if (i == j) continue;
      if (g[j].leading().m.divides(g[i].leading().m) &&
          (!(g[j].leading().m == g[i].leading().m) || j < i))
        keep = false;
    }
    if (keep) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [ord](const Polynomial& a, const Polynomial& b) {
    return ord->compare(a.leading().m, b.leading().m) < 0;
  });
  return reduced;
}

}  // namespace symrank
