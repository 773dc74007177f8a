#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symrank {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Exponent tuple of a monomial, one entry per variable.
using MultiIndex = std::vector<int>;

enum class ErrorKind {
  parse,         // malformed input text
  invalid,       // violated precondition / shape mismatch
  zero_form,     // rank operation on the zero form
  not_covered,   // input outside the cases the stratification theorems decide
  numeric,       // floating root finding did not reach the requested accuracy
  budget,        // elimination or search budget exhausted
  internal,      // an invariant that must hold did not
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

std::string_view to_string(ErrorKind kind);

/// "p/q" with q > 0, or "p" when q == 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

Integer binomial(int n, int k);
Integer factorial(int n);
/// d! / (g_0! g_1! ... g_n!)
Integer multinomial(const MultiIndex& exps);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

}  // namespace symrank
