#pragma once

#include "symrank/form.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symrank {

/// Degree-4 polynomial in the ten coefficients of a ternary cubic (taken in
/// monomials(3, 3) order), vanishing exactly on sums of three cubes.
struct AronholdTable {
  std::vector<std::pair<MultiIndex, Rational>> terms;  // exponent tuple of length 10, lex order
  int samples = 0;
  std::uint64_t seed = 0;
  int nullity = 0;  // dimension of the interpolation solution space
};

struct AronholdOptions {
  std::uint64_t seed = 20240917;
  int samples = 800;
  int coefficient_bound = 3;
};

/// Interpolates the invariant from random sums of three cubes: nullspace of
/// the 715-column monomial evaluation matrix, computed modulo word-size
/// primes, lifted by CRT and rational reconstruction, then verified exactly
/// at every sample. Throws ErrorKind::internal if the nullity is not 1.
AronholdTable derive_aronhold(const AronholdOptions& opts = {});

/// The cached table (embedded at build time, derived on first use otherwise).
const AronholdTable& aronhold_table();

Rational aronhold_eval(const AronholdTable& table, const SymmetricForm& cubic);
/// Uses aronhold_table(); forms in fewer than three variables are embedded.
Rational aronhold_eval(const SymmetricForm& cubic);

std::string write_aronhold_table(const AronholdTable& table);
AronholdTable read_aronhold_table(std::string_view text);

}  // namespace symrank
