#include "symrank/strata.hpp"
#include "symrank/aronhold.hpp"
#include "symrank/catalecticant.hpp"
#include "symrank/exact_linalg.hpp"
#include "symrank/groebner.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace symrank {

std::string GeneralRankReport::stratum() const {
  if (border_lower_bound) return ">=" + std::to_string(border_rank);
  return "sigma_{" + std::to_string(border_rank) + "," + (rank ? std::to_string(*rank) : std::string("?")) + "}";
}

EssentialVariablesReport essential_variables(const SymmetricForm& f) {
  if (f.is_zero()) throw Error(ErrorKind::zero_form, "essential variables of the zero form");
  const int n = f.nvars();
  const int d = f.degree();
  EssentialVariablesReport rep;
  // Column space of M_{1,d-1} = span of the (d-1)-th partial derivatives.
  const CatalecticantMatrix m = build_catalecticant(f, 1, d - 1);
  const auto ech = rref<Rational>(RationalMatrix(m.entries.transpose()));
  rep.m = ech.rank();
  RationalMatrix b(n, n);
  for (int k = 0; k < rep.m; ++k) b.row(k) = ech.reduced.row(k);
  int filled = rep.m;
  for (int i = 0; i < n && filled < n; ++i) {
    b.row(filled) = RationalVector::Unit(n, i).transpose();
    if (bareiss_rank(RationalMatrix(b.topRows(filled + 1))) == filled + 1) ++filled;
  }
  // New variables y = B x; f(x) = g(B x), so g = f composed with B^{-1}.
  const RationalMatrix binv = inverse(b);
  const SymmetricForm g = apply_linear_change(f, LinearChange{binv.transpose()});
  std::vector<std::pair<MultiIndex, Rational>> terms;
  const auto& mons = g.basis();
  for (size_t k = 0; k < mons.size(); ++k) {
    const Rational& c = g.coeff(static_cast<int>(k));
    if (c == 0) continue;
    for (int v = rep.m; v < n; ++v)
      if (mons[k][v] != 0) throw Error(ErrorKind::internal, "reduced form depends on a non-essential variable");
    terms.emplace_back(MultiIndex(mons[k].begin(), mons[k].begin() + rep.m), c);
  }
  rep.reduced = SymmetricForm::from_terms(rep.m, d, terms);
  rep.change = LinearChange{b.transpose()};
  return rep;
}

namespace {

GeneralRankReport start_report(const SymmetricForm& f) {
  if (f.is_zero()) throw Error(ErrorKind::zero_form, "rank of the zero form is undefined");
  GeneralRankReport rep;
  rep.nvars = f.nvars();
  rep.degree = f.degree();
  rep.essential = essential_variables(f);
  return rep;
}

void set_rank_one(GeneralRankReport& rep) {
  rep.border_rank = 1;
  rep.rank = 1;
  rep.branch = "one essential variable: a pure power, rank 1";
}

void set_binary(GeneralRankReport& rep, const std::string& prefix) {
  const BinaryRankReport b = ssra(rep.essential.reduced);
  rep.border_rank = b.border_rank;
  rep.rank = b.rank;
  rep.binary = b;
  rep.branch = prefix + "two essential variables: binary algorithm, kernel of M_{" +
               std::to_string(rep.degree - b.border_rank) + "," + std::to_string(b.border_rank) + "} is " +
               (b.squarefree ? "squarefree -> rank b" : "not squarefree -> rank d-b+2");
}

void set_not_in(GeneralRankReport& rep, int lower, const std::string& why) {
  rep.border_rank = lower;
  rep.border_lower_bound = true;
  rep.rank.reset();
  rep.covered = false;
  rep.branch = why;
}

SymmetricForm as_ternary(const SymmetricForm& f) { return f.nvars() < 3 ? embed(f, 3) : f; }

// m = 3 and in sigma_3: border 3, rank from the base locus point count.
void set_sigma3_rank(GeneralRankReport& rep, std::uint64_t seed) {
  const SymmetricForm& g = rep.essential.reduced;
  const int d = rep.degree;
  rep.net = conic_net(g);
  rep.base_locus = base_locus_summary(*rep.net, seed);
  rep.border_rank = 3;
  switch (rep.base_locus->distinct_points) {
    case 3:
      rep.rank = 3;
      rep.branch = "sigma3: base locus of the apolar net is 3 distinct points -> rank 3";
      break;
    case 2:
      rep.rank = d + 1;
      rep.branch = "sigma3: base locus 2 points (a 2-jet and a point) -> rank d+1";
      break;
    case 1:
      rep.rank = 2 * d - 1;
      rep.branch = "sigma3: base locus 1 point (curvilinear scheme) -> rank 2d-1";
      break;
    default:
      throw Error(ErrorKind::internal, "base locus point count out of range");
  }
}

}  // namespace

GeneralRankReport sigma2_classify(const SymmetricForm& f) {
  GeneralRankReport rep = start_report(f);
  if (rep.degree < 2) throw Error(ErrorKind::invalid, "sigma2 classification needs degree >= 2");
  const int m = rep.essential.m;
  rep.catalecticant = CatalecticantCertificate{1, rep.degree - 1, m};
  if (m == 1) set_rank_one(rep);
  else if (m == 2) set_binary(rep, "sigma2: ");
  else set_not_in(rep, 3, "sigma2: " + std::to_string(m) + " essential variables -> not in sigma_2");
  return rep;
}

bool sigma3_membership(const SymmetricForm& f) {
  if (f.is_zero()) throw Error(ErrorKind::zero_form, "membership test on the zero form");
  if (f.nvars() > 3) throw Error(ErrorKind::invalid, "sigma3 membership expects at most three variables");
  if (f.degree() < 3) throw Error(ErrorKind::invalid, "sigma3 membership needs degree >= 3");
  if (f.degree() == 3) return aronhold_eval(as_ternary(f)) == 0;
  return catalecticant_rank(f, 2) <= 3;
}

ConicNet conic_net(const SymmetricForm& f) {
  if (f.is_zero()) throw Error(ErrorKind::zero_form, "apolar net of the zero form");
  if (f.nvars() != 3) throw Error(ErrorKind::invalid, "apolar net needs a ternary form");
  const int d = f.degree();
  if (d < 3) throw Error(ErrorKind::invalid, "apolar net needs degree >= 3");
  const int m = catalecticant_rank(f, 1);
  if (m != 3) throw Error(ErrorKind::invalid, "apolar net needs 3 essential variables, got " + std::to_string(m));
  const auto kernel = right_kernel_basis(build_catalecticant(f, d - 2, 2));
  if (kernel.size() != 3)
    throw Error(ErrorKind::invalid, "apolar conics have dimension " + std::to_string(kernel.size()) +
                                        ", expected 3 (form not in sigma_3)");
  ConicNet net{{kernel[0], kernel[1], kernel[2]}};
  // A common linear factor l makes the net l*S_1, whose cubic multiples only
  // span l*S_2 (dimension 6).
  RationalMatrix span(9, 10);
  int row = 0;
  for (const auto& g : net.generators)
    for (int v = 0; v < 3; ++v) {
      RationalVector x = RationalVector::Unit(3, v);
      span.row(row++) = multiply(g, linear_form<Rational>(x)).coeffs().transpose();
    }
  if (bareiss_rank(span) <= 6)
    throw Error(ErrorKind::internal, "apolar conics share a linear factor");
  return net;
}

namespace {

struct QuotientAlgebra {
  std::vector<Monomial> basis;  // standard monomials; empty with infinite = true
  bool infinite = false;
};

QuotientAlgebra standard_monomials(const std::vector<Polynomial>& gb) {
  QuotientAlgebra q;
  bool pure0 = false, pure1 = false;
  for (const auto& g : gb) {
    const Monomial& lm = g.leading().m;
    if (lm.deg == 0) return q;  // the unit ideal: empty base locus
    if (lm.e[1] == 0) pure0 = true;
    if (lm.e[0] == 0) pure1 = true;
  }
  if (!pure0 || !pure1) {
    q.infinite = true;
    return q;
  }
  for (int total = 0; total <= 12; ++total)
    for (int a = total; a >= 0; --a) {
      Monomial m;
      m.e[0] = static_cast<std::uint8_t>(a);
      m.e[1] = static_cast<std::uint8_t>(total - a);
      m.deg = total;
      bool standard = true;
      for (const auto& g : gb)
        if (g.leading().m.divides(m)) {
          standard = false;
          break;
        }
      if (standard) q.basis.push_back(m);
    }
  return q;
}

BaseLocusSummary base_locus_once(const ConicNet& net, std::uint64_t seed) {
  static const MonomialOrder order = MonomialOrder::graded(MonomialOrder::Kind::grlex, 2);
  BaseLocusSummary s;
  s.seed = seed;
  const LinearChange a = random_invertible_change(3, seed, 4);
  std::vector<Polynomial> gens;
  for (const auto& g : net.generators) {
    const SymmetricForm h = apply_linear_change(g, a);
    Polynomial p(&order);
    const auto& mons = h.basis();
    for (size_t k = 0; k < mons.size(); ++k) {
      if (h.coeff(static_cast<int>(k)) == 0) continue;
      Monomial m;
      m.e[0] = static_cast<std::uint8_t>(mons[k][1]);
      m.e[1] = static_cast<std::uint8_t>(mons[k][2]);
      m.deg = mons[k][1] + mons[k][2];
      p.add_term(m, h.coeff(static_cast<int>(k)));
    }
    p.normalize();
    gens.push_back(std::move(p));
  }
  const auto gb = groebner_basis(gens);
  const QuotientAlgebra q = standard_monomials(gb);
  s.algebra_dim = q.infinite ? -1 : static_cast<int>(q.basis.size());
  if (s.algebra_dim != 3) return s;

  std::mt19937_64 rng(seed ^ 0xA5A5A5A5ULL);
  std::uniform_int_distribution<int> dist(1, 30);
  Polynomial ell(&order);
  {
    Monomial y1, y2;
    y1.e[0] = 1;
    y1.deg = 1;
    y2.e[1] = 1;
    y2.deg = 1;
    ell.add_term(y1, Rational(dist(rng)));
    ell.add_term(y2, Rational(dist(rng)));
    ell.normalize();
  }
  const int n = s.algebra_dim;
  RationalMatrix mult = RationalMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const Polynomial prod = normal_form(ell.mul_term(q.basis[j], Rational(1)), gb);
    for (const auto& t : prod.terms()) {
      const auto it = std::find(q.basis.begin(), q.basis.end(), t.m);
      if (it == q.basis.end()) throw Error(ErrorKind::internal, "normal form left the standard basis");
      mult(it - q.basis.begin(), j) = t.c;
    }
  }
  const auto chi = characteristic_polynomial<Rational>(mult);
  s.charpoly_squarefree_degree = squarefree_part(chi).degree();
  s.distinct_points = s.charpoly_squarefree_degree;
  return s;
}

}  // namespace

BaseLocusSummary base_locus_summary(const ConicNet& net, std::uint64_t seed) {
  // Seeds whose coordinate change sends a base point to infinity give a
  // smaller affine algebra; those are skipped.
  auto valid_run = [&](std::uint64_t s, int& tries) {
    for (;; ++tries) {
      if (tries > 12)
        throw Error(ErrorKind::invalid, "quotient algebra of the apolar net does not have dimension 3");
      const BaseLocusSummary r = base_locus_once(net, s + 7919ULL * static_cast<std::uint64_t>(tries));
      if (r.algebra_dim == 3) return r;
    }
  };
  int tries = 0;
  BaseLocusSummary first = valid_run(seed * 2 + 1, tries);
  for (int round = 0; round < 4; ++round) {
    int tries2 = 0;
    const BaseLocusSummary second = valid_run(seed * 2 + 2 + 1000003ULL * static_cast<std::uint64_t>(round), tries2);
    if (second.distinct_points == first.distinct_points) {
      first.seed = seed;
      return first;
    }
    // A non-separating linear form can only merge points; keep the larger count.
    if (second.distinct_points > first.distinct_points) first = second;
  }
  throw Error(ErrorKind::internal, "base locus point count disagrees across seeds");
}

GeneralRankReport sigma3_classify(const SymmetricForm& f, std::uint64_t seed) {
  GeneralRankReport rep = start_report(f);
  if (rep.degree < 3) throw Error(ErrorKind::invalid, "sigma3 classification needs degree >= 3");
  const int m = rep.essential.m;
  rep.catalecticant = CatalecticantCertificate{1, rep.degree - 1, m};
  if (m == 1) {
    set_rank_one(rep);
  } else if (m == 2) {
    set_binary(rep, "sigma3: ");
  } else if (m > 3) {
    set_not_in(rep, 4, "sigma3: " + std::to_string(m) + " essential variables -> not in sigma_3");
  } else {
    const SymmetricForm& g = rep.essential.reduced;
    bool in;
    if (rep.degree == 3) {
      rep.aronhold = aronhold_eval(g);
      in = *rep.aronhold == 0;
    } else {
      const int k = catalecticant_rank(g, 2);
      rep.catalecticant = CatalecticantCertificate{2, rep.degree - 2, k};
      in = k <= 3;
    }
    if (!in) {
      set_not_in(rep, 4, rep.degree == 3 ? "sigma3: Aronhold invariant is nonzero -> not in sigma_3"
                                         : "sigma3: rank M_{2,d-2} >= 4 -> not in sigma_3");
    } else {
      set_sigma3_rank(rep, seed);
    }
  }
  return rep;
}

GeneralRankReport cubic_classify(const SymmetricForm& f, std::uint64_t seed) {
  if (f.degree() != 3 || f.nvars() > 3) throw Error(ErrorKind::invalid, "cubic classifier needs a cubic in at most 3 variables");
  GeneralRankReport rep = sigma3_classify(f, seed);
  if (rep.essential.m == 3 && !rep.rank) {
    rep.border_rank = 4;
    rep.border_lower_bound = false;
    rep.rank = 4;
    rep.covered = true;
    rep.branch = "cubic: Aronhold invariant is nonzero -> outside sigma_3, every such cubic has border rank and rank 4";
  }
  return rep;
}

GeneralRankReport quartic_border(const SymmetricForm& f, std::uint64_t seed) {
  if (f.degree() != 4 || f.nvars() > 3) throw Error(ErrorKind::invalid, "quartic test needs a quartic in at most 3 variables");
  GeneralRankReport rep = start_report(f);
  const int m = rep.essential.m;
  if (m == 1) {
    set_rank_one(rep);
    return rep;
  }
  if (m == 2) {
    set_binary(rep, "quartic: ");
    return rep;
  }
  const int k = catalecticant_rank(rep.essential.reduced, 2);
  rep.catalecticant = CatalecticantCertificate{2, 2, k};
  if (k <= 3) {
    set_sigma3_rank(rep, seed);
    return rep;
  }
  rep.border_rank = k;
  if (k == 4) {
    rep.branch = "quartic: rank M_{2,2} = 4 -> border rank 4";
  } else if (k == 5) {
    rep.classical = true;
    rep.branch = "quartic: det M_{2,2} = 0 with rank 5 -> border rank 5 (classical determinantal test)";
  } else {
    rep.branch = "quartic: det M_{2,2} != 0 -> border rank 6";
  }
  try {
    rep.possible_ranks = possible_ranks(2, 4, k);
  } catch (const Error&) {
    rep.covered = false;
  }
  return rep;
}

GeneralRankReport classify(const SymmetricForm& f, std::uint64_t seed) {
  const int d = f.degree();
  GeneralRankReport rep;
  if (d <= 2) {
    rep = start_report(f);
    const int m = rep.essential.m;
    rep.border_rank = m;
    rep.rank = m;
    rep.catalecticant = CatalecticantCertificate{1, d - 1, m};
    if (d == 1) {
      rep.branch = "a linear form: rank 1";
    } else {
      rep.branch = "quadric: rank equals the number of essential variables";
      rep.classical = m > 2;
    }
    return rep;
  }
  if (f.nvars() <= 2) rep = sigma2_classify(f);
  else if (f.nvars() == 3 && d == 3) rep = cubic_classify(f, seed);
  else if (f.nvars() == 3 && d == 4) rep = quartic_border(f, seed);
  else rep = sigma3_classify(f, seed);
  return rep;
}

Decomposition waring_decompose(const SymmetricForm& f, std::uint64_t seed, int precision_bits) {
  if (f.nvars() <= 2) return sylvester_decompose(f.nvars() == 2 ? f : embed(f, 2), seed, precision_bits);
  const EssentialVariablesReport ess = essential_variables(f);
  if (ess.m > 2)
    throw Error(ErrorKind::not_covered,
                "decomposition needs at most two essential variables, found " + std::to_string(ess.m));
  Decomposition dec = sylvester_decompose(ess.m == 2 ? ess.reduced : embed(ess.reduced, 2), seed, precision_bits);
  // Forms in the reduced variables y map back through y = B x, B = change^T.
  const RationalMatrix& a = ess.change.matrix;
  const int n = static_cast<int>(a.rows());
  dec.nvars = n;
  for (auto& l : dec.linear_forms) {
    RationalVector c = RationalVector::Zero(n);
    for (Eigen::Index k = 0; k < l.size(); ++k) c[k] = l[k];
    l = a * c;
  }
  for (auto& l : dec.numeric_forms) {
    std::vector<WideComplex> x(n);
    for (int i = 0; i < n; ++i)
      for (size_t k = 0; k < l.size(); ++k)
        x[i] += WideComplex(rational_to_real<WideReal>(a(i, static_cast<Eigen::Index>(k)))) * l[k];
    l = std::move(x);
  }
  return dec;
}

std::vector<int> possible_ranks(int n, int d, int b) {
  if (n < 1 || d < 1 || b < 1) throw Error(ErrorKind::invalid, "possible_ranks needs n, d, b >= 1");
  auto uniq = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  if (b == 1) return {1};
  if (n == 1) {
    if (b <= (d + 2) / 2) return uniq({b, d - b + 2});
    throw Error(ErrorKind::not_covered, "binary forms of degree " + std::to_string(d) + " have border rank at most " +
                                            std::to_string((d + 2) / 2));
  }
  if (b == 2 && d >= 2) return uniq({2, d});
  if (b == 3 && d == 3) return {3, 4, 5};
  if (b == 3 && d >= 4) return uniq({3, d - 1, d + 1, 2 * d - 1});
  if (n == 2 && d == 3 && b == 4) return {4};
  if (n == 2 && d == 4 && b == 4) return {4, 6, 7};
  if (n == 2 && d == 4 && b == 5) return {5, 6, 7};
  throw Error(ErrorKind::not_covered, "no stratification is known for (n, d, b) = (" + std::to_string(n) + ", " +
                                          std::to_string(d) + ", " + std::to_string(b) + ")");
}

}  // namespace symrank
