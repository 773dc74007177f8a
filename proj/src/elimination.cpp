#include "symrank/oracle.hpp"

namespace symrank {

Rational EliminationResult::evaluate(const Polynomial& g, const TensorCoeffs& b) const {
  std::vector<Rational> point(eliminated + b.size(), Rational(0));
  for (Eigen::Index k = 0; k < b.size(); ++k) point[eliminated + k] = b[k];
  return g.evaluate(point);
}

EliminationResult secant_elimination(int s, int n, int d, const EliminationOptions& opts) {
  if (s < 1 || n < 1 || d < 1) throw Error(ErrorKind::invalid, "secant elimination needs s, n, d >= 1");
  const int nz = monomial_count(n + 1, d);
  if (nz > 15 || s > 3)
    throw Error(ErrorKind::invalid, "secant elimination is limited to C(n+d,d) <= 15 and s <= 3");
  EliminationResult out;
  out.s = s;
  out.n = n;
  out.d = d;
  // Each weight is absorbed into its point (a d-th root exists over the
  // closure), so z_alpha = sum_i x_i^alpha with every variable of degree 1
  // in x and degree d in z: the ideal is homogeneous.
  out.eliminated = s * (n + 1);
  if (out.eliminated + nz > kMaxPolyVars) throw Error(ErrorKind::invalid, "too many variables");
  MonomialOrder order = MonomialOrder::elimination(out.eliminated, nz);
  order.weights.assign(out.eliminated, 1);
  order.weights.resize(out.eliminated + nz, d);
  out.order = std::make_shared<const MonomialOrder>(std::move(order));
  const MonomialOrder* ord = out.order.get();

  for (int i = 0; i < s; ++i)
    for (int k = 0; k <= n; ++k) out.variable_names.push_back("x" + std::to_string(k) + "_" + std::to_string(i + 1));
  const auto& mons = monomials(n + 1, d);
  for (const auto& a : mons) {
    std::string name = "z_(";
    for (size_t k = 0; k < a.size(); ++k) name += (k ? "," : "") + std::to_string(a[k]);
    out.variable_names.push_back(name + ")");
  }

  std::vector<Polynomial> gens;
  for (size_t c = 0; c < mons.size(); ++c) {
    Polynomial g(ord);
    Monomial z;
    z.e[out.eliminated + c] = 1;
    z.deg = 1;
    g.add_term(z, Rational(1));
    for (int i = 0; i < s; ++i) {
      Monomial m;
      for (int k = 0; k <= n; ++k) m.e[i * (n + 1) + k] = static_cast<std::uint8_t>(mons[c][k]);
      m.deg = d;
      g.add_term(m, Rational(-1));
    }
    g.normalize();
    gens.push_back(std::move(g));
  }
  const auto gb = groebner_basis(gens, opts.budget);
  for (const auto& g : gb) {
    bool z_only = true;
    for (int v = 0; v < out.eliminated && z_only; ++v)
      if (g.leading().m.e[v]) z_only = false;
    if (z_only) out.generators.push_back(g);
  }
  return out;
}

}  // namespace symrank
