#include "symrank/oracle.hpp"
#include "symrank/exact_linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

namespace symrank {

SymmetricForm reconstruct_exact(const Decomposition& dec, int nvars, int degree) {
  if (dec.mode != Decomposition::Mode::exact)
    throw Error(ErrorKind::invalid, "exact reconstruction of a numeric decomposition");
  if (dec.weights.size() != dec.linear_forms.size())
    throw Error(ErrorKind::invalid, "decomposition has mismatched weights and forms");
  SymmetricForm out(nvars, degree);
  for (size_t j = 0; j < dec.weights.size(); ++j) {
    if (dec.linear_forms[j].size() != nvars)
      throw Error(ErrorKind::invalid, "linear form has the wrong number of variables");
    out = out + dec.weights[j] * power(linear_form<Rational>(dec.linear_forms[j]), degree);
  }
  return out;
}

double numeric_residual(const Decomposition& dec, const SymmetricForm& f) {
  if (dec.mode != Decomposition::Mode::numeric)
    return reconstruct_exact(dec, f.nvars(), f.degree()) == f ? 0.0 : INFINITY;
  using C = WideComplex;
  const auto& mons = f.basis();
  WideReal worst(0);
  for (size_t k = 0; k < mons.size(); ++k) {
    C s;
    for (size_t j = 0; j < dec.numeric_weights.size(); ++j) {
      C term(WideReal(static_cast<WideReal>(multinomial(mons[k]))));
      for (int v = 0; v < f.nvars(); ++v)
        for (int e = 0; e < mons[k][v]; ++e) term = term * dec.numeric_forms[j][v];
      s += dec.numeric_weights[j] * term;
    }
    const WideReal e = (s - C(rational_to_real<WideReal>(f.coeff(static_cast<int>(k))))).abs();
    if (e > worst) worst = e;
  }
  return static_cast<double>(worst);
}

RankSample random_rank_r(const SampleSpec& spec) {
  if (spec.r < 1 || spec.bound < 1 || spec.n < 1 || spec.d < 1)
    throw Error(ErrorKind::invalid, "sample spec needs r, bound, n, d >= 1");
  const int nv = spec.n + 1;
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> coef(-spec.bound, spec.bound);
  RankSample out;
  out.witness.mode = Decomposition::Mode::exact;
  out.witness.nvars = nv;
  out.witness.degree = spec.d;
  int guard = 0;
  while (static_cast<int>(out.witness.linear_forms.size()) < spec.r) {
    if (++guard > 100000) throw Error(ErrorKind::invalid, "coefficient bound too small for r distinct forms");
    RationalVector l(nv);
    for (int v = 0; v < nv; ++v) l[v] = coef(rng);
    if (l.isZero()) continue;
    bool proportional = false;
    for (const auto& other : out.witness.linear_forms) {
      RationalMatrix two(2, nv);
      two.row(0) = other.transpose();
      two.row(1) = l.transpose();
      if (bareiss_rank(two) < 2) {
        proportional = true;
        break;
      }
    }
    if (proportional) continue;
    int w = 0;
    while (w == 0) w = coef(rng);
    out.witness.weights.emplace_back(w);
    out.witness.linear_forms.push_back(std::move(l));
  }
  out.form = reconstruct_exact(out.witness, nv, spec.d);
  return out;
}

double exact_residual(const SymmetricForm& f, const std::vector<double>& weights,
                      const std::vector<std::vector<double>>& forms) {
  Decomposition dec;
  dec.mode = Decomposition::Mode::exact;
  for (size_t j = 0; j < weights.size(); ++j) {
    dec.weights.emplace_back(weights[j]);
    RationalVector l(f.nvars());
    for (int v = 0; v < f.nvars(); ++v) l[v] = Rational(forms[j][v]);
    dec.linear_forms.push_back(std::move(l));
  }
  const SymmetricForm diff = reconstruct_exact(dec, f.nvars(), f.degree()) - f;
  Rational worst = 0;
  for (Eigen::Index k = 0; k < diff.coeffs().size(); ++k) worst = std::max(worst, Rational(abs(diff.coeffs()[k])));
  return static_cast<double>(worst);
}

namespace {

struct PowerModel {
  int nv = 0, r = 0, d = 0;
  std::vector<MultiIndex> mons;
  Eigen::VectorXd mult;

  // Parameter layout: [w_0, l_0 (nv entries), w_1, l_1, ...].
  int stride() const { return nv + 1; }

  Eigen::VectorXd values(const Eigen::VectorXd& p) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mons.size()));
    for (int j = 0; j < r; ++j) {
      const double w = p[j * stride()];
      for (size_t k = 0; k < mons.size(); ++k) {
        double t = w * mult[static_cast<Eigen::Index>(k)];
        for (int v = 0; v < nv; ++v) t *= std::pow(p[j * stride() + 1 + v], mons[k][v]);
        out[static_cast<Eigen::Index>(k)] += t;
      }
    }
    return out;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& p) const {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(mons.size()), r * stride());
    for (int j = 0; j < r; ++j) {
      const double w = p[j * stride()];
      for (size_t k = 0; k < mons.size(); ++k) {
        const auto row = static_cast<Eigen::Index>(k);
        double mono = mult[row];
        for (int v = 0; v < nv; ++v) mono *= std::pow(p[j * stride() + 1 + v], mons[k][v]);
        jac(row, j * stride()) = mono;
        for (int i = 0; i < nv; ++i) {
          if (mons[k][i] == 0) continue;
          double dm = w * mult[row] * mons[k][i];
          for (int v = 0; v < nv; ++v) {
            const int e = mons[k][v] - (v == i ? 1 : 0);
            dm *= std::pow(p[j * stride() + 1 + v], e);
          }
          jac(row, j * stride() + 1 + i) = dm;
        }
      }
    }
    return jac;
  }

  // Unit-norm forms with the scale moved into the weight.
  void renormalize(Eigen::VectorXd& p) const {
    for (int j = 0; j < r; ++j) {
      const double norm = p.segment(j * stride() + 1, nv).norm();
      if (norm == 0.0) continue;
      p.segment(j * stride() + 1, nv) /= norm;
      p[j * stride()] *= std::pow(norm, d);
    }
  }
};

}  // namespace

std::optional<NumericDecomposition> numeric_rank_upper(const SymmetricForm& f, int r,
                                                       const NumericSearchOptions& opts) {
  if (f.is_zero()) throw Error(ErrorKind::zero_form, "numeric rank search on the zero form");
  if (r < 1) throw Error(ErrorKind::invalid, "numeric rank search needs r >= 1");
  PowerModel model;
  model.nv = f.nvars();
  model.r = r;
  model.d = f.degree();
  model.mons = f.basis();
  model.mult.resize(static_cast<Eigen::Index>(model.mons.size()));
  Eigen::VectorXd target(static_cast<Eigen::Index>(model.mons.size()));
  double amax = 0.0;
  for (size_t k = 0; k < model.mons.size(); ++k) {
    model.mult[static_cast<Eigen::Index>(k)] = static_cast<double>(multinomial(model.mons[k]));
    target[static_cast<Eigen::Index>(k)] = static_cast<double>(f.coeff(static_cast<int>(k)));
    amax = std::max(amax, std::abs(target[static_cast<Eigen::Index>(k)]));
  }
  const int np = r * model.stride();

  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(restart));
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd p(np);
    for (int j = 0; j < r; ++j) {
      p[j * model.stride()] = 1.0;
      for (int v = 0; v < model.nv; ++v) p[j * model.stride() + 1 + v] = normal(rng);
    }
    model.renormalize(p);
    // Start from the best weights for the random forms.
    {
      Eigen::MatrixXd basis(target.size(), r);
      for (int j = 0; j < r; ++j) {
        Eigen::VectorXd single = Eigen::VectorXd::Zero(np);
        single[j * model.stride()] = 1.0;
        single.segment(j * model.stride() + 1, model.nv) = p.segment(j * model.stride() + 1, model.nv);
        Eigen::VectorXd q = p;
        for (int k = 0; k < r; ++k) q[k * model.stride()] = (k == j) ? 1.0 : 0.0;
        basis.col(j) = model.values(q);
      }
      const Eigen::VectorXd w = basis.colPivHouseholderQr().solve(target);
      for (int j = 0; j < r; ++j) p[j * model.stride()] = w[j];
    }

    double mu = 1e-3;
    Eigen::VectorXd res = model.values(p) - target;
    double cost = res.squaredNorm();
    for (int it = 0; it < opts.iterations; ++it) {
      if (res.cwiseAbs().maxCoeff() < 0.25 * opts.tol) break;
      const Eigen::MatrixXd jac = model.jacobian(p);
      const Eigen::MatrixXd jtj = jac.transpose() * jac;
      const Eigen::VectorXd grad = jac.transpose() * res;
      bool accepted = false;
      for (int tries = 0; tries < 12 && !accepted; ++tries) {
        Eigen::MatrixXd a = jtj;
        for (int i = 0; i < np; ++i) a(i, i) += mu * std::max(jtj(i, i), 1e-9);
        const Eigen::VectorXd step = a.ldlt().solve(-grad);
        Eigen::VectorXd cand = p + step;
        model.renormalize(cand);
        const Eigen::VectorXd cres = model.values(cand) - target;
        const double ccost = cres.squaredNorm();
        if (std::isfinite(ccost) && ccost < cost) {
          p = cand;
          res = cres;
          cost = ccost;
          mu = std::max(mu * 0.3, 1e-15);
          accepted = true;
        } else {
          mu *= 4.0;
        }
      }
      if (!accepted) break;
    }

    NumericDecomposition out;
    double wmax = 0.0;
    for (int j = 0; j < r; ++j) {
      out.weights.push_back(p[j * model.stride()]);
      wmax = std::max(wmax, std::abs(out.weights.back()));
      std::vector<double> l(model.nv);
      for (int v = 0; v < model.nv; ++v) l[v] = p[j * model.stride() + 1 + v];
      out.linear_forms.push_back(std::move(l));
    }
    if (!(wmax <= opts.weight_guard * amax)) continue;
    out.residual = exact_residual(f, out.weights, out.linear_forms);
    if (out.residual < opts.tol) {
      out.restarts_used = restart + 1;
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace symrank
