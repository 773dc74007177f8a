#pragma once

#include "symrank/form.hpp"
#include "symrank/sylvester.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symrank {

struct EssentialVariablesReport {
  int m = 0;
  /// Invertible; apply_linear_change(embed(reduced, n), change) == f.
  LinearChange change;
  SymmetricForm reduced;
};

/// m = rank M_{1,d-1}(f); the first m new variables span the derivatives.
EssentialVariablesReport essential_variables(const SymmetricForm& f);

struct ConicNet {
  std::array<SymmetricForm, 3> generators;
};

struct BaseLocusSummary {
  int algebra_dim = 0;
  int distinct_points = 0;
  int charpoly_squarefree_degree = 0;
  std::uint64_t seed = 0;
};

struct CatalecticantCertificate {
  int i = 0;
  int j = 0;
  int rank = 0;
};

struct GeneralRankReport {
  int nvars = 0;
  int degree = 0;
  EssentialVariablesReport essential;
  int border_rank = 0;
  bool border_lower_bound = false;  // border_rank is only ">= border_rank"
  std::optional<int> rank;
  /// Filled when the rank is not pinned but the border rank is covered.
  std::vector<int> possible_ranks;
  /// False when the input lies outside every case the classifiers decide.
  bool covered = true;
  bool classical = false;  // border decided by the classical determinant test
  std::string branch;

  // certificates
  std::optional<BinaryRankReport> binary;
  std::optional<Rational> aronhold;
  std::optional<CatalecticantCertificate> catalecticant;
  std::optional<ConicNet> net;
  std::optional<BaseLocusSummary> base_locus;

  /// "sigma_{b,r}", "sigma_{b,?}" or ">=b".
  std::string stratum() const;
};

/// Two essential variables delegate to ssra; more than two is "not in sigma_2".
GeneralRankReport sigma2_classify(const SymmetricForm& f);

/// d = 3: Aronhold invariant vanishes; d >= 4: rank M_{2,d-2} <= 3.
/// Expects at most three variables (pass the reduced form).
bool sigma3_membership(const SymmetricForm& f);

/// Kernel of M_{d-2,2} of a form with three essential variables in sigma_3.
ConicNet conic_net(const SymmetricForm& f);

/// Distinct points of the base locus of the net over the closure.
BaseLocusSummary base_locus_summary(const ConicNet& net, std::uint64_t seed = 0);

GeneralRankReport sigma3_classify(const SymmetricForm& f, std::uint64_t seed = 0);

/// Complete classification of ternary (or smaller) cubics.
GeneralRankReport cubic_classify(const SymmetricForm& f, std::uint64_t seed = 0);

/// Border rank of a ternary quartic from catalecticant ranks; the rank is
/// only filled when it is pinned by the binary or sigma_3 analysis.
GeneralRankReport quartic_border(const SymmetricForm& f, std::uint64_t seed = 0);

/// Dispatches to the classifier that decides f: quadrics and linear forms
/// directly, binary forms via sigma_2, ternary cubics and quartics by their
/// complete tests, everything else via sigma_3.
GeneralRankReport classify(const SymmetricForm& f, std::uint64_t seed = 0);

/// Waring decomposition of a form with at most two essential variables,
/// expressed in the original variables. More variables: not_covered.
Decomposition waring_decompose(const SymmetricForm& f, std::uint64_t seed = 0, int precision_bits = 128);

/// Ranks allowed for border rank b on the degree-d Veronese of P^n.
/// Throws ErrorKind::not_covered outside the known cases.
std::vector<int> possible_ranks(int n, int d, int b);

}  // namespace symrank
