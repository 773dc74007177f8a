#pragma once

#include "symrank/form.hpp"

#include <vector>

namespace symrank {

/// M_{i,j}(f): rows indexed by degree-i monomials, columns by degree-j
/// monomials, entry (gamma, delta) = coefficient of x^gamma in d^delta f.
/// The right kernel is exactly the degree-j part of the apolar ideal of f.
struct CatalecticantMatrix {
  int i = 0;
  int j = 0;
  int nvars = 0;
  std::vector<MultiIndex> row_labels;
  std::vector<MultiIndex> col_labels;
  RationalMatrix entries;
};

/// Requires i, j >= 0 and i + j == f.degree().
CatalecticantMatrix build_catalecticant(const SymmetricForm& f, int i, int j);

/// Exact rank (Bareiss); equal to the rank over any extension field.
int rank_exact(const CatalecticantMatrix& m);

/// Exact basis of {g of degree j : g(d) f = 0}, returned as forms.
std::vector<SymmetricForm> right_kernel_basis(const CatalecticantMatrix& m);

/// Shorthand for rank_exact(build_catalecticant(f, i, f.degree() - i)).
int catalecticant_rank(const SymmetricForm& f, int i);

}  // namespace symrank
