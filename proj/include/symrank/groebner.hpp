#pragma once

#include "symrank/types.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace symrank {

inline constexpr int kMaxPolyVars = 32;

struct Monomial {
  std::array<std::uint8_t, kMaxPolyVars> e{};
  int deg = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  bool divides(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
};

/// Block order: variables are split into consecutive blocks compared one
/// after another; inside a block, total degree first, then reverse lex
/// (grevlex) or lex (grlex). A single block gives the plain order.
struct MonomialOrder {
  enum class Kind { grlex, grevlex };
  Kind kind = Kind::grevlex;
  int nvars = 0;
  std::vector<int> blocks;
  /// Variable weights for pair selection and degree caps; empty means 1.
  std::vector<int> weights;

  static MonomialOrder graded(Kind kind, int nvars) { return {kind, nvars, {nvars}, {}}; }
  static MonomialOrder elimination(int eliminated, int kept) {
    return {Kind::grevlex, eliminated + kept, {eliminated, kept}, {}};
  }
  /// Three-way comparison: negative when a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  int weighted_degree(const Monomial& m) const;
};

/// Sparse polynomial with rational coefficients; terms sorted decreasingly
/// for the order it was built with.
class Polynomial {
 public:
  struct Term {
    Monomial m;
    Rational c;
  };

  Polynomial() = default;
  explicit Polynomial(const MonomialOrder* order) : order_(order) {}

  static Polynomial constant(const MonomialOrder* order, const Rational& c);
  static Polynomial variable(const MonomialOrder* order, int var);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;
  const MonomialOrder* order() const { return order_; }

  void add_term(const Monomial& m, const Rational& c);  // unsorted append; call normalize()
  void normalize();
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Value with every variable substituted.
  Rational evaluate(const std::vector<Rational>& point) const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  const MonomialOrder* order_ = nullptr;
  std::vector<Term> terms_;
};

struct GroebnerBudget {
  long max_pairs = 200000;
  int max_degree = 64;
  std::size_t max_basis = 5000;
  std::size_t max_terms = 2000000;
  double max_seconds = 0;  // wall clock; 0 means no limit
};

/// Remainder of p on division by g (full reduction).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& g);

/// Reduced Groebner basis by Buchberger's algorithm with the product and
/// chain criteria. Throws ErrorKind::budget when a cap is hit.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const GroebnerBudget& budget = {});

}  // namespace symrank
