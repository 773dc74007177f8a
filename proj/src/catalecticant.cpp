#include "symrank/catalecticant.hpp"
#include "symrank/exact_linalg.hpp"

namespace symrank {

CatalecticantMatrix build_catalecticant(const SymmetricForm& f, int i, int j) {
  if (i < 0 || j < 0 || i + j != f.degree())
    throw Error(ErrorKind::invalid, "catalecticant split " + std::to_string(i) + ":" + std::to_string(j) +
                                        " does not add up to degree " + std::to_string(f.degree()));
  CatalecticantMatrix m;
  m.i = i;
  m.j = j;
  m.nvars = f.nvars();
  m.row_labels = monomials(f.nvars(), i);
  m.col_labels = monomials(f.nvars(), j);
  m.entries = RationalMatrix::Zero(static_cast<Eigen::Index>(m.row_labels.size()),
                                   static_cast<Eigen::Index>(m.col_labels.size()));
  MultiIndex sum(f.nvars());
  for (size_t r = 0; r < m.row_labels.size(); ++r) {
    const MultiIndex& g = m.row_labels[r];
    for (size_t c = 0; c < m.col_labels.size(); ++c) {
      const MultiIndex& dlt = m.col_labels[c];
      // d^delta x^(gamma+delta) = (gamma+delta)!/gamma! x^gamma
      Integer falling = 1;
      for (int v = 0; v < f.nvars(); ++v) {
        sum[v] = g[v] + dlt[v];
        for (int k = g[v] + 1; k <= sum[v]; ++k) falling *= k;
      }
      const Rational& a = f.coeff(sum);
      if (a != 0) m.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a * Rational(falling);
    }
  }
  return m;
}

int rank_exact(const CatalecticantMatrix& m) { return bareiss_rank(m.entries); }

std::vector<SymmetricForm> right_kernel_basis(const CatalecticantMatrix& m) {
  const RationalMatrix k = nullspace<Rational>(m.entries);
  std::vector<SymmetricForm> out;
  for (Eigen::Index c = 0; c < k.cols(); ++c) out.emplace_back(m.nvars, m.j, RationalVector(k.col(c)));
  return out;
}

int catalecticant_rank(const SymmetricForm& f, int i) {
  return rank_exact(build_catalecticant(f, i, f.degree() - i));
}

}  // namespace symrank
