#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qtoric {

using Int = std::int64_t;

namespace checked {
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
}  // namespace checked

Int gcd(Int a, Int b);

/// Dense row-major integer matrix with overflow-checked arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Int> values);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  IntMatrix transpose() const;
  IntMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  std::vector<std::vector<Int>> to_rows() const;
  std::string to_string() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> operator*(const IntMatrix& a, std::span<const Int> v);

/// Exact determinant (fraction-free elimination).
Int determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1; throws otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows.
/// `basis` holds the nonzero rows in echelon form with positive pivots and
/// entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix basis;
  std::vector<std::size_t> pivots;
};
HermiteForm hermite_rows(IntMatrix generators);

/// Smith normal form: left * input * right == diagonal, left/right unimodular,
/// diagonal entries non-negative with d_i | d_{i+1}.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::vector<Int> invariants;  // nonzero diagonal entries
};
SmithForm smith(const IntMatrix& input);

/// Solutions of A x = b over the integers: x = particular + span(kernel).
struct IntegerSolution {
  std::vector<Int> particular;
  std::vector<std::vector<Int>> kernel;
};
std::optional<IntegerSolution> solve_integer(const IntMatrix& a, std::span<const Int> b);

}  // namespace qtoric
