#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "intmat.hpp"

namespace qtoric {

/// Exponent vector; its length is the number of variables of the ambient ring.
using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m);

/// Graded lexicographic comparison with x_1 > x_2 > ... ; true when a > b.
bool grlex_greater(const Monomial& a, const Monomial& b);

/// All monomials of degree `degree` in the variables flagged in `active`
/// (all variables when empty), largest first in graded lex order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree, const std::vector<bool>& active = {});

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names);

/// Sparse polynomial with int64 coefficients and overflow-checked arithmetic.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, Int c);
  static Polynomial variable(std::size_t num_vars, std::size_t index, Int c = 1);
  /// sum_i coeffs[i] * x_i
  static Polynomial linear(std::span<const Int> coeffs);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::map<Monomial, Int>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Int coefficient(const Monomial& m) const;
  /// True when variable `index` occurs in some term.
  bool involves(std::size_t index) const;

  void add_term(const Monomial& m, Int c);
  Polynomial homogeneous_part(int degree) const;
  Polynomial truncated(int max_degree) const;
  /// Coefficients reduced into [0, modulus); modulus 0 leaves them alone.
  Polynomial reduced_mod(Int modulus) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(Int c);

  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const Polynomial& o) const = default;

 private:
  std::size_t num_vars_ = 0;
  std::map<Monomial, Int> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(Polynomial a, Int c);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Multiplies and drops terms above `max_degree`.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree);

/// Replaces x_i by images[i]; all images must share a variable count.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t num_vars);

}  // namespace qtoric
