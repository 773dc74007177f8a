// Acceptance run: one PASS/FAIL line per criterion, each checked at its
// stated tolerance and time limit. Exit status is nonzero if any fails.

#include "symrank/aronhold.hpp"
#include "symrank/catalecticant.hpp"
#include "symrank/oracle.hpp"
#include "symrank/strata.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace symtest;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed (first: " << first_ << ")";
    return s.str();
  }

 private:
  long checks_ = 0, failures_ = 0;
  std::string first_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Forms collected by criteria 1-4 for the decomposition check.
std::vector<SymmetricForm> g_decompose_inputs;

bool label_is(const GeneralRankReport& r, int b, int rank) {
  return !r.border_lower_bound && r.border_rank == b && r.rank && *r.rank == rank;
}

/// Generic point of the osculating plane of the conic (1 : t : t^2) at t = 0:
/// a x^d + b d x^(d-1) y + (d x^(d-1) z + C(d,2) x^(d-2) y^2).
SymmetricForm conic_curvilinear(int d, Rng& rng) {
  const Rational a = rng.rational(3), b = rng.rational(3);
  std::vector<std::pair<MultiIndex, Rational>> terms = {
      {{d, 0, 0}, a},
      {{d - 1, 1, 0}, b * d},
      {{d - 1, 0, 1}, Rational(d)},
      {{d - 2, 2, 0}, Rational(d * (d - 1) / 2)},
  };
  return SymmetricForm::from_terms(3, d, terms);
}

// Validation of the curvilinear witness that does not use the classifier:
// border rank 3 (three essential variables, M_{1,d-1} or Aronhold test)
// and a single base point.
bool curvilinear_validated(const SymmetricForm& f) {
  if (catalecticant_rank(f, 1) != 3) return false;
  if (f.degree() == 3 ? aronhold_eval(f) != 0 : catalecticant_rank(f, 2) != 3) return false;
  return base_locus_summary(conic_net(f)).distinct_points == 1;
}

Outcome criterion1() {
  Tally t;
  for (int d = 3; d <= 12; ++d)
    for (int s = 0; s <= d; ++s) {
      const auto f = binary_monomial(d - s, s);
      const auto r = ssra(f);
      const int rank = (s == 0 || s == d) ? 1 : std::max(d - s + 1, s + 1);
      const int border = std::min(s, d - s) + 1;
      t.expect(r.rank == rank && r.border_rank == border,
               "x^" + std::to_string(d - s) + " y^" + std::to_string(s));
      g_decompose_inputs.push_back(f);
    }
  return {t.ok(), t.summary()};
}

Outcome criterion2() {
  Tally dichotomy, kernel;
  Rng rng(20240002);
  int violations_at_middle = 0;
  for (int k = 0; k < 1000; ++k) {
    const int d = rng.uniform(1, 10);
    const auto f = random_form(rng, 2, d, 9);
    const auto r = ssra(f);
    const int b = r.border_rank;
    dichotomy.expect(r.rank == b || r.rank == d - b + 2, to_string(f));
    kernel.expect(r.kernel_dimension == 1, "kernel dimension " + std::to_string(r.kernel_dimension) + " at d=" +
                                               std::to_string(d) + ", b=" + std::to_string(b));
    if (r.kernel_dimension != 1 && b == d - b + 2) ++violations_at_middle;
    g_decompose_inputs.push_back(f);
  }
  std::ostringstream s;
  s << "rank dichotomy: " << dichotomy.summary() << "; kernel dimension 1: " << kernel.summary();
  if (!kernel.ok()) s << "; all " << violations_at_middle << " violations have b = d-b+2 (generic even degree)";
  return {dichotomy.ok() && kernel.ok(), s.str()};
}

Outcome criterion3() {
  Tally t;
  for (int d = 1; d <= 10; ++d)
    for (int r = 1; r <= (d + 2) / 2; ++r)
      for (std::uint64_t k = 0; k < 100; ++k) {
        const auto s = random_rank_r({1, d, r, 3000000 + 1000 * d + 100 * r + k, 3});
        const auto rep = ssra(s.form);
        t.expect(rep.border_rank == r && rep.rank == r,
                 "d=" + std::to_string(d) + " r=" + std::to_string(r) + " gave " + rep.stratum.label());
        if (k < 10) g_decompose_inputs.push_back(s.form);
      }
  return {t.ok(), t.summary()};
}

Outcome criterion4() {
  Tally t;
  Rng rng(20240004);
  for (int d = 2; d <= 8; ++d)
    for (int k = 0; k < 100; ++k) {
      const RationalVector l = random_vector(rng, 2);
      RationalVector m;
      do m = random_vector(rng, 2);
      while (l[0] * m[1] == l[1] * m[0]);
      const auto binary = multiply(power_of_linear(l, d - 1), power_of_linear(m, 1));
      const auto f = apply_linear_change(embed(binary, 3), random_change(rng, 3));
      const auto r = sigma2_classify(f);
      t.expect(label_is(r, 2, d), "d=" + std::to_string(d) + " gave " + r.stratum());
      if (k < 10) g_decompose_inputs.push_back(f);
    }
  return {t.ok(), t.summary()};
}

Outcome criterion5() {
  Tally t;
  int exact = 0, numeric = 0;
  double worst = 0;
  for (size_t k = 0; k < g_decompose_inputs.size(); ++k) {
    const auto& f = g_decompose_inputs[k];
    const auto dec = waring_decompose(f, k);
    if (dec.mode == Decomposition::Mode::exact) {
      ++exact;
      t.expect(reconstruct_exact(dec, f.nvars(), f.degree()) == f, "exact reconstruction of " + to_string(f));
    } else {
      ++numeric;
      const double res = numeric_residual(dec, f);
      worst = std::max(worst, res);
      t.expect(res < 1e-8, "residual of " + to_string(f));
    }
  }
  std::ostringstream s;
  s << exact << " exact, " << numeric << " numeric (worst residual " << std::scientific << std::setprecision(2)
    << worst << "); " << t.summary();
  return {t.ok(), s.str()};
}

Outcome criterion6() {
  Tally t;
  auto check = [&](const SymmetricForm& f, int b, int r, const std::string& name) {
    const auto rep = cubic_classify(f);
    t.expect(label_is(rep, b, r), name + " gave " + rep.stratum());
  };
  check(parse_form("x^3", 3), 1, 1, "x^3");
  check(parse_form("x^2*y", 3), 2, 3, "x^2*y");
  check(parse_form("x^3 + y^3", 3), 2, 2, "x^3+y^3");
  check(parse_form("x^3 + y^3 + z^3"), 3, 3, "x^3+y^3+z^3");
  t.expect(aronhold_eval(parse_form("x^3 + y^3 + z^3")) == 0, "Aronhold of the Fermat cubic");
  check(parse_form("x^2*y + z^3"), 3, 4, "x^2*y+z^3");
  Rng rng(20240006);
  for (int k = 0; k < 5; ++k) {
    const auto w = conic_curvilinear(3, rng);
    t.expect(curvilinear_validated(w), "curvilinear witness validation");
    check(w, 3, 5, "curvilinear witness");
  }
  for (int k = 0; k < 200; ++k) {
    const auto f = random_form(rng, 3, 3, 9);
    t.expect(aronhold_eval(f) != 0, "Aronhold of a random cubic");
    check(f, 4, 4, "random cubic");
  }
  return {t.ok(), t.summary()};
}

Outcome criterion7() {
  Tally t;
  Rng rng(20240007);
  for (int d = 4; d <= 8; ++d) {
    const auto allowed = possible_ranks(2, d, 3);
    auto check = [&](const SymmetricForm& f, int rank, const std::string& name) {
      for (const auto& g : {f, apply_linear_change(f, random_change(rng, 3))}) {
        const auto rep = sigma3_classify(g, d);
        t.expect(label_is(rep, 3, rank), name + " d=" + std::to_string(d) + " gave " + rep.stratum());
        t.expect(std::find(allowed.begin(), allowed.end(), rank) != allowed.end(), "rank outside possible_ranks");
      }
    };
    check(embed(binary_monomial(d - 2, 2), 3), d - 1, "collinear triple");
    std::vector<RationalVector> l;
    RationalMatrix m(3, 3);
    do {
      l = {random_vector(rng, 3), random_vector(rng, 3), random_vector(rng, 3)};
      m << l[0].transpose(), l[1].transpose(), l[2].transpose();
    } while (naive_rank(m) < 3);
    check(power_sum({rng.nonzero(3), rng.nonzero(3), rng.nonzero(3)}, l, d), 3, "three general points");
    check(SymmetricForm::from_terms(3, d, {{{d - 1, 1, 0}, Rational(1)}, {{0, 0, d}, Rational(1)}}), d + 1,
          "jet plus point");
    const auto w = conic_curvilinear(d, rng);
    t.expect(curvilinear_validated(w), "curvilinear witness validation d=" + std::to_string(d));
    check(w, 2 * d - 1, "conic curvilinear");
  }
  return {t.ok(), t.summary()};
}

Outcome criterion8(double& derivation_seconds, double& elimination_seconds) {
  Tally t;
  const auto t0 = Clock::now();
  const AronholdTable table = derive_aronhold();
  derivation_seconds = seconds_since(t0);
  t.expect(table.nullity == 1, "nullity " + std::to_string(table.nullity));
  t.expect(table.terms == aronhold_table().terms, "derived table differs from the embedded one");

  for (std::uint64_t k = 0; k < 500; ++k)
    t.expect(aronhold_eval(table, random_rank_r({2, 3, 3, 8000000 + k, 5}).form) == 0, "rank-3 cubic");
  Rng rng(20240008);
  for (int k = 0; k < 50; ++k) {
    const auto a = random_change(rng, 3);
    for (const auto& f : {random_rank_r({2, 3, 3, 9000000 + static_cast<std::uint64_t>(k), 4}).form,
                          random_form(rng, 3, 3, 6)}) {
      const bool before = aronhold_eval(table, f) == 0;
      const bool after = aronhold_eval(table, apply_linear_change(f, a)) == 0;
      t.expect(before == after, "vanishing not invariant");
    }
  }

  const auto t1 = Clock::now();
  std::string elim_note;
  try {
    // The checks share a 60 s limit; stop the elimination inside it.
    EliminationOptions opts;
    opts.budget.max_seconds = 45;
    opts.budget.max_pairs = 10000000;
    opts.budget.max_basis = 100000;
    const auto e = secant_elimination(3, 2, 3, opts);
    t.expect(e.generators.size() == 1, std::to_string(e.generators.size()) + " generators for sigma_3(X_{2,3})");
    if (e.generators.size() == 1) {
      Rational ratio(0);
      for (int k = 0; k < 30; ++k) {
        const auto f = random_form(rng, 3, 3, 5);
        const Rational v = e.evaluate(e.generators[0], to_tensor(f));
        const Rational a = aronhold_eval(table, f);
        if (ratio == 0 && a != 0) ratio = v / a;
        t.expect(v == ratio * a && ratio != 0, "elimination generator not proportional to the invariant");
      }
    }
  } catch (const Error& e) {
    t.expect(false, std::string("secant_elimination(3,2,3): ") + e.what());
    elim_note = "; elimination: " + std::string(e.what());
  }
  elimination_seconds = seconds_since(t1);
  return {t.ok(), t.summary() + elim_note};
}

Outcome criterion9() {
  Tally t;
  const auto f = parse_form("x0*x1*x2^2");
  const auto q = quartic_border(f);
  t.expect(q.border_rank == 4 && !q.border_lower_bound, "border of x0*x1*x2^2");
  t.expect(!sigma3_membership(f), "x0*x1*x2^2 in sigma_3");
  const auto num = numeric_rank_upper(f, 6);
  t.expect(num && num->residual < 1e-8, "numeric 6-term decomposition of x0*x1*x2^2");
  t.expect(possible_ranks(2, 4, 4) == std::vector<int>{4, 6, 7}, "possible_ranks(2,4,4)");
  Rng rng(20240009);
  for (int k = 0; k < 100; ++k) {
    const auto l = power_of_linear(random_vector(rng, 3), 2);
    t.expect(catalecticant_rank(multiply(l, random_form(rng, 3, 2, 5)), 2) <= 4, "l^2 C with rank M_{2,2} > 4");
  }
  for (int k = 0; k < 100; ++k)
    t.expect(determinant(build_catalecticant(random_form(rng, 3, 4, 9), 2, 2).entries) != 0,
             "generic quartic with det M_{2,2} = 0");
  std::ostringstream s;
  s << t.summary();
  if (num) s << "; residual " << std::scientific << std::setprecision(2) << num->residual;
  return {t.ok(), s.str()};
}

Outcome criterion10() {
  Tally t;
  const auto e = secant_elimination(2, 1, 4);
  t.expect(e.generators.size() == 1, "expected a principal ideal");
  if (e.generators.empty()) return {false, t.summary()};
  const auto& g = e.generators.front();
  Rng rng(20240010);
  Rational ratio(0);
  for (int k = 0; k < 50; ++k) {
    const auto f = random_form(rng, 2, 4, 7);
    const Rational det = naive_det(hankel(f, 2));
    const Rational v = e.evaluate(g, to_tensor(f));
    if (ratio == 0 && det != 0) ratio = v / det;
    t.expect(v == ratio * det, "generator not proportional to the Hankel determinant");
  }
  t.expect(ratio != 0, "no nonzero Hankel determinant sampled");
  for (std::uint64_t k = 0; k < 100; ++k)
    t.expect(e.evaluate(g, to_tensor(random_rank_r({1, 4, 2, 10000000 + k, 5}).form)) == 0,
             "nonzero on a point of sigma_2");
  const Rational at = e.evaluate(g, to_tensor(parse_form("x^3*y")));
  t.expect(at != 0, "generator vanishes at x^3*y (x^3*y has border rank 2, so it lies on sigma_2(C_4))");
  return {t.ok(), t.summary()};
}

Outcome criterion11() {
  Tally t;
  const char* forms[] = {"x^3",           "x^2*y",         "x^3 + y^3",       "x^3 + y^3 + z^3",  "x^2*y + z^3",
                         "x^2*z + x*y^2", "x*y*z",         "x^2*y^2",         "x^4*y + z^5",      "x^4 + y^4 + z^4",
                         "x^3*y^2",       "x0*x1*x2^2",    "x^3*z + x*y^3",   "x^2*y^3 + z^5",    "x^6*y + z^7"};
  Rng rng(20240011);
  for (const char* text : forms) {
    const auto f = parse_form(text, 3);
    const auto ref = classify(f);
    for (int k = 0; k < 50; ++k) {
      const auto a = random_change(rng, 3);
      const auto r = classify(apply_linear_change(f, a), k);
      t.expect(r.stratum() == ref.stratum() && r.rank == ref.rank && r.border_rank == ref.border_rank,
               std::string(text) + ": " + ref.stratum() + " became " + r.stratum());
    }
  }
  return {t.ok(), t.summary()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  double derive_s = 0, elim_s = 0;
  const std::vector<Criterion> criteria = {
      {1, "monomial rank law", 5, criterion1},
      {2, "binary dichotomy and kernel dimension", 30, criterion2},
      {3, "generic Waring ranks", 60, criterion3},
      {4, "tangential stratum in 3 variables", 60, criterion4},
      {5, "decomposition soundness", 120, criterion5},
      {6, "cubic classifier", 60, criterion6},
      {7, "sigma_3 strata for d = 4..8", 120, criterion7},
      {8, "Aronhold validation", 660, [&] { return criterion8(derive_s, elim_s); }},
      {9, "quartic border ranks", 120, criterion9},
      {10, "elimination cross-check", 60, criterion10},
      {11, "invariance suite", 120, criterion11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = seconds_since(t0);
    bool in_time = s < c.limit;
    std::ostringstream timing;
    timing << std::fixed << std::setprecision(2) << s << " s, limit " << c.limit << " s";
    if (c.id == 8) {
      // Derivation and the remaining checks have separate limits.
      in_time = derive_s < 600 && s - derive_s < 60;
      timing.str("");
      timing << std::fixed << std::setprecision(2) << "derivation " << derive_s << " s (limit 600 s), checks "
             << s - derive_s << " s (limit 60 s, elimination " << elim_s << " s)";
    }
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::cout << "criterion " << std::setw(2) << c.id << "  " << (pass ? "PASS" : "FAIL") << "  " << c.name << ": "
              << o.detail << " [" << timing.str() << (in_time ? "" : ", over time") << "]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
