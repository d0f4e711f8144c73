#include "intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace qtoric {

namespace checked {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace checked

Int gcd(Int a, Int b) { return std::gcd(a, b); }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Int fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::InvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void IntMatrix::append_row(std::span<const Int> values) {
  if (values.size() != cols_) fail(ErrorCode::InvalidArgument, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
  IntMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        p(i, j) = checked::add(p(i, j), checked::mul(aik, b(k, j)));
    }
  return p;
}

std::vector<Int> operator*(const IntMatrix& a, std::span<const Int> v) {
  if (a.cols() != v.size()) fail(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
  std::vector<Int> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (v[k] != 0) out[i] = checked::add(out[i], checked::mul(a(i, k), v[k]));
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  using Wide = __int128;
  constexpr Wide kLimit = Wide(1) << 62;
  std::vector<Wide> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  Wide prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const Wide v = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
        if (v >= kLimit || v <= -kLimit) fail(ErrorCode::Overflow, "determinant overflow");
        a[i * n + j] = v;
      }
    prev = a[k * n + k];
  }
  return static_cast<Int>(sign * a[n * n - 1]);
}

namespace {

// Eliminates column `col` below row `top` using Euclidean row steps; on exit
// row `top` holds the gcd (possibly negative) and rows below are zero there.
// Returns false when the column has no nonzero entry at or below `top`.
bool euclid_column(IntMatrix& a, std::size_t top, std::size_t col, IntMatrix* track) {
  for (;;) {
    std::size_t best = a.rows();
    for (std::size_t r = top; r < a.rows(); ++r)
      if (a(r, col) != 0 && (best == a.rows() || std::llabs(a(r, col)) < std::llabs(a(best, col))))
        best = r;
    if (best == a.rows()) return false;
    a.swap_rows(top, best);
    if (track) track->swap_rows(top, best);
    bool clean = true;
    for (std::size_t r = top + 1; r < a.rows(); ++r) {
      if (a(r, col) == 0) continue;
      const Int q = a(r, col) / a(top, col);
      for (std::size_t c = 0; c < a.cols(); ++c)
        a(r, c) = checked::sub(a(r, c), checked::mul(q, a(top, c)));
      if (track)
        for (std::size_t c = 0; c < track->cols(); ++c)
          (*track)(r, c) = checked::sub((*track)(r, c), checked::mul(q, (*track)(top, c)));
      if (a(r, col) != 0) clean = false;
    }
    if (clean) return true;
  }
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteForm hermite_rows(IntMatrix a) {
  HermiteForm out;
  std::size_t top = 0;
  for (std::size_t col = 0; col < a.cols() && top < a.rows(); ++col) {
    if (!euclid_column(a, top, col, nullptr)) continue;
    if (a(top, col) < 0)
      for (auto& v : a.row(top)) v = -v;
    const Int p = a(top, col);
    for (std::size_t r = 0; r < top; ++r) {
      const Int q = floor_div(a(r, col), p);
      if (q == 0) continue;
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = checked::sub(a(r, c), checked::mul(q, a(top, c)));
    }
    out.pivots.push_back(col);
    ++top;
  }
  out.basis = IntMatrix(0, a.cols());
  for (std::size_t r = 0; r < top; ++r) out.basis.append_row(a.row(r));
  return out;
}

std::size_t rank(const IntMatrix& m) { return hermite_rows(m).basis.rows(); }

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) fail(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  const Int det = determinant(m);
  if (det != 1 && det != -1) fail(ErrorCode::InvalidMatrix, "matrix is not unimodular (det " + std::to_string(det) + ")");
  IntMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = det;
    return inv;
  }
  std::vector<std::size_t> rows_idx, cols_idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows_idx.clear();
      cols_idx.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows_idx.push_back(k);
        if (k != i) cols_idx.push_back(k);
      }
      const Int minor = determinant(m.submatrix(rows_idx, cols_idx));
      const Int cof = ((i + j) % 2 == 0) ? minor : -minor;
      inv(i, j) = cof * det;  // adj / det with det = +-1
    }
  return inv;
}

SmithForm smith(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto row_op = [&](std::size_t target, std::size_t source, Int q) {  // row_t -= q row_s
    for (std::size_t c = 0; c < n; ++c) a(target, c) = checked::sub(a(target, c), checked::mul(q, a(source, c)));
    for (std::size_t c = 0; c < m; ++c) u(target, c) = checked::sub(u(target, c), checked::mul(q, u(source, c)));
  };
  auto col_op = [&](std::size_t target, std::size_t source, Int q) {  // col_t -= q col_s
    for (std::size_t r = 0; r < m; ++r) a(r, target) = checked::sub(a(r, target), checked::mul(q, a(r, source)));
    for (std::size_t r = 0; r < n; ++r) v(r, target) = checked::sub(v(r, target), checked::mul(q, v(r, source)));
  };

  const std::size_t limit = std::min(m, n);
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::size_t br = m, bc = n;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c)
          if (a(r, c) != 0 && (br == m || std::llabs(a(r, c)) < std::llabs(a(br, bc)))) {
            br = r;
            bc = c;
          }
      if (br == m) break;
      a.swap_rows(t, br);
      u.swap_rows(t, br);
      a.swap_cols(t, bc);
      v.swap_cols(t, bc);

      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r)
        if (a(r, t) != 0) {
          row_op(r, t, a(r, t) / a(t, t));
          if (a(r, t) != 0) clean = false;
        }
      for (std::size_t c = t + 1; c < n; ++c)
        if (a(t, c) != 0) {
          col_op(c, t, a(t, c) / a(t, t));
          if (a(t, c) != 0) clean = false;
        }
      if (!clean) continue;

      std::size_t bad = m;
      for (std::size_t r = t + 1; r < m && bad == m; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a(r, c) % a(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad == m) break;
      row_op(t, bad, -1);  // row_t += row_bad
    }
    if (t < m && t < n && a(t, t) < 0) {
      for (auto& x : a.row(t)) x = -x;
      for (auto& x : u.row(t)) x = -x;
    }
  }

  SmithForm out{u, a, v, {}};
  for (std::size_t t = 0; t < limit; ++t)
    if (a(t, t) != 0) out.invariants.push_back(a(t, t));
  return out;
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& a, std::span<const Int> b) {
  if (a.rows() != b.size()) fail(ErrorCode::InvalidArgument, "solve_integer: shape mismatch");
  const SmithForm s = smith(a);
  const std::vector<Int> ub = s.left * b;
  const std::size_t r = s.invariants.size();
  std::vector<Int> y(a.cols(), 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < r) {
      if (ub[i] % s.invariants[i] != 0) return std::nullopt;
      y[i] = ub[i] / s.invariants[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol;
  sol.particular = s.right * std::span<const Int>(y);
  for (std::size_t k = r; k < a.cols(); ++k) {
    std::vector<Int> col(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) col[i] = s.right(i, k);
    sol.kernel.push_back(std::move(col));
  }
  return sol;
}

}  // namespace qtoric
