#pragma once

#include "symrank/form.hpp"
#include "symrank/groebner.hpp"
#include "symrank/sylvester.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace symrank {

/// sum_j weights[j] * linear_forms[j]^d, expanded exactly. An empty
/// decomposition gives the zero form of the requested shape.
SymmetricForm reconstruct_exact(const Decomposition& dec, int nvars, int degree);

/// Max-norm coefficient distance of a numeric decomposition, evaluated at
/// 1024-bit precision.
double numeric_residual(const Decomposition& dec, const SymmetricForm& f);

struct SampleSpec {
  int n = 1;  // forms live on P^n, i.e. n + 1 variables
  int d = 3;
  int r = 1;
  std::uint64_t seed = 0;
  int bound = 3;  // coefficient range [-bound, bound]
};

struct RankSample {
  SymmetricForm form;
  Decomposition witness;  // exact, r pairwise non-proportional forms
};

RankSample random_rank_r(const SampleSpec& spec);

struct NumericDecomposition {
  std::vector<double> weights;
  std::vector<std::vector<double>> linear_forms;  // unit Euclidean norm
  double residual = 0.0;  // recomputed exactly from the returned doubles
  int restarts_used = 0;
};

struct NumericSearchOptions {
  std::uint64_t seed = 0;
  int restarts = 200;
  int iterations = 500;
  double tol = 1e-8;
  /// Solutions whose weights exceed this multiple of the largest input
  /// coefficient are treated as border-rank approximations and rejected.
  double weight_guard = 1e4;
};

/// Multi-start Levenberg-Marquardt over r real weights and r unit linear
/// forms. Returns the first run with residual < tol; nothing otherwise,
/// which is not a lower-bound proof.
std::optional<NumericDecomposition> numeric_rank_upper(const SymmetricForm& f, int r,
                                                       const NumericSearchOptions& opts = {});

/// Exact max-norm residual of real weights and forms against f.
double exact_residual(const SymmetricForm& f, const std::vector<double>& weights,
                      const std::vector<std::vector<double>>& forms);

struct EliminationOptions {
  GroebnerBudget budget;
};

/// Generators of the ideal of the s-th secant variety of the degree-d
/// Veronese of P^n, in the tensor coordinates z_alpha (one per monomial of
/// monomials(n + 1, d)), obtained by eliminating the point coordinates.
struct EliminationResult {
  int s = 0, n = 0, d = 0;
  std::shared_ptr<const MonomialOrder> order;
  int eliminated = 0;  // variables 0..eliminated-1; z_k is variable eliminated + k
  std::vector<Polynomial> generators;
  std::vector<std::string> variable_names;

  /// Value of generator g at tensor coordinates b (to_tensor order).
  Rational evaluate(const Polynomial& g, const TensorCoeffs& b) const;
};

/// Refuses C(n+d, d) > 15 or s > 3 with ErrorKind::invalid; throws
/// ErrorKind::budget when the Groebner budget runs out.
EliminationResult secant_elimination(int s, int n, int d, const EliminationOptions& opts = {});

}  // namespace symrank
