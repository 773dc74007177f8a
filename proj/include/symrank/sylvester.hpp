#pragma once

#include "symrank/form.hpp"
#include "symrank/roots.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symrank {

/// Border rank b and rank r; printed as sigma_{b,r}.
struct Stratum {
  int border = 0;
  int rank = 0;
  std::string label() const { return "sigma_{" + std::to_string(border) + "," + std::to_string(rank) + "}"; }
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct BinaryRankReport {
  int degree = 0;
  int border_rank = 0;
  int rank = 0;
  Stratum stratum;
  bool tangential = false;
  int kernel_dimension = 0;
  SymmetricForm kernel_vector;  // degree border_rank
  bool squarefree = false;
};

/// Rank of a binary form from the first nontrivial kernel of M_{d-r,r}:
/// rank r when the kernel generator is squarefree, d-r+2 otherwise.
BinaryRankReport ssra(const SymmetricForm& f);

struct MonomialRank {
  int rank = 0;
  int border = 0;
};

/// Rank and border rank of x^(d-s) y^s.
MonomialRank monomial_rank(int d, int s);

struct Decomposition {
  enum class Mode { exact, numeric };

  Mode mode = Mode::exact;
  int nvars = 2;
  int degree = 0;
  // exact mode
  std::vector<Rational> weights;
  std::vector<RationalVector> linear_forms;
  // numeric mode
  std::vector<WideComplex> numeric_weights;
  std::vector<std::vector<WideComplex>> numeric_forms;
  double residual = 0.0;
  int precision_bits = 0;
  int apolar_degree = 0;  // r at which the kernel element was found

  std::size_t size() const { return mode == Mode::exact ? weights.size() : numeric_weights.size(); }
};

/// Bits accepted by sylvester_decompose; other values round up to the next tier.
inline constexpr int kPrecisionTiers[] = {128, 256, 512, 1024};

/// Waring decomposition of a binary form. Exact whenever the chosen apolar
/// form splits over Q, numeric at `precision_bits` otherwise.
Decomposition sylvester_decompose(const SymmetricForm& f, std::uint64_t seed = 0, int precision_bits = 128);

/// Rational roots (as points [alpha:beta] of P^1) of a squarefree binary
/// form when all of them are rational.
bool rational_split(const SymmetricForm& q, std::vector<std::pair<Rational, Rational>>& points);

}  // namespace symrank
