#include "isokit.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "errors.hpp"
#include "limits.hpp"

namespace qtoric::isokit {

std::vector<Polynomial> map_images(const IntMatrix& L) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < L.rows(); ++i) images.push_back(Polynomial::linear(L.row(i)));
  return images;
}

std::vector<RingElement> residuals(const IntMatrix& L, const RingPresentation& src, const GradedRing& dst) {
  if (L.rows() != src.num_generators || L.cols() != dst.num_vars())
    fail(ErrorCode::InvalidArgument, "ring map has shape " + std::to_string(L.rows()) + "x" + std::to_string(L.cols()) +
                                         ", expected " + std::to_string(src.num_generators) + "x" +
                                         std::to_string(dst.num_vars()));
  const auto images = map_images(L);
  std::vector<RingElement> out;
  for (const auto& r : src.relations) {
    const int degree = 2 * r.degree();
    if (degree > dst.max_degree()) continue;
    out.push_back(dst.reduce(substitute(r, images), degree));
  }
  return out;
}

bool is_isomorphism(const IntMatrix& L, const GradedRing& src, const GradedRing& dst, std::string* why) {
  auto report = [&](const std::string& what) {
    if (why) *why = what;
    return false;
  };
  if (L.rows() != src.num_vars() || L.cols() != dst.num_vars() || L.rows() != L.cols())
    return report("ring map has the wrong shape");
  if (src.ranks() != dst.ranks()) return report("graded ranks differ");
  const Int det = determinant(L);
  if (det != 1 && det != -1) return report("det L = " + std::to_string(det));
  const auto res = residuals(L, src.presentation(), dst);
  for (std::size_t i = 0; i < res.size(); ++i)
    if (!res[i].is_zero()) return report("relation " + std::to_string(i + 1) + " has a nonzero residual");
  return true;
}

namespace {

using Vec3 = std::array<Int, 3>;
using Quad = std::array<Int, 6>;  // coefficients of X^2, XY, XZ, Y^2, YZ, Z^2

constexpr std::size_t pair_index(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  constexpr std::size_t base[3] = {0, 3, 5};
  return base[i] + (j - i);
}

Quad product(const Vec3& a, const Vec3& b) {
  Quad q{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) q[pair_index(i, j)] += a[i] * b[j];
  return q;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

struct Relation {
  Quad coeff{};       // coefficient of x_i x_j at pair_index(i, j)
  unsigned support = 0;
};

// Fast exact evaluation for 3-generator rings with quadratic relations.
class Search {
 public:
  Search(const GradedRing& src, const GradedRing& dst, int bound) : bound_(bound) {
    const auto& nf = dst.normal_form(2);
    rows_ = nf.rows();
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < 6; ++c) nf_[r][c] = nf(r, c);
    for (const auto& poly : src.presentation().relations) {
      Relation rel;
      for (const auto& [m, c] : poly.terms()) {
        std::size_t vars[2], k = 0;
        for (std::size_t i = 0; i < 3; ++i)
          for (int e = 0; e < m[i]; ++e) vars[k++] = i;
        rel.coeff[pair_index(vars[0], vars[1])] = c;
        rel.support |= (1u << vars[0]) | (1u << vars[1]);
      }
      relations_.push_back(rel);
    }
    choose_order();
    for (Int a = -bound; a <= bound; ++a)
      for (Int b = -bound; b <= bound; ++b)
        for (Int c = -bound; c <= bound; ++c)
          if (gcd(gcd(a, b), c) == 1) primitive_.push_back({a, b, c});
  }

  std::size_t outer_size() const { return primitive_.size(); }

  void run_outer(std::size_t index, std::vector<IntMatrix>& out) const {
    std::array<Vec3, 3> rows{};
    rows[a_] = primitive_[index];
    for (const auto* rel : level1_)
      if (!vanishes(*rel, rows)) return;
    for (const auto& vb : primitive_) {
      rows[b_] = vb;
      const Vec3 c = cross(rows[a_], vb);
      if (gcd(gcd(c[0], c[1]), c[2]) != 1) continue;
      bool ok = true;
      for (const auto* rel : level2_)
        if (!vanishes(*rel, rows)) {
          ok = false;
          break;
        }
      if (ok) complete(rows, out);
    }
  }

 private:
  void choose_order() {
    int best_score = -1;
    for (std::size_t p = 0; p < 3; ++p) {
      int avoid = 0, linear = 0;
      for (const auto& rel : relations_) {
        if (!(rel.support & (1u << p)))
          ++avoid;
        else if (rel.coeff[pair_index(p, p)] == 0)
          ++linear;
      }
      const int score = avoid * 16 + linear;
      if (score > best_score) {
        best_score = score;
        p_ = p;
      }
    }
    a_ = p_ == 0 ? 1 : 0;
    b_ = p_ == 2 ? 1 : 2;
    for (const auto& rel : relations_) {
      if ((rel.support & ~(1u << a_)) == 0)
        level1_.push_back(&rel);
      else if (!(rel.support & (1u << p_)))
        level2_.push_back(&rel);
      else {
        level3_.push_back(&rel);
        if (rel.coeff[pair_index(p_, p_)] == 0) linear_.push_back(&rel);
      }
    }
  }

  Quad image(const Relation& rel, const std::array<Vec3, 3>& rows) const {
    Quad total{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        const Int c = rel.coeff[pair_index(i, j)];
        if (c == 0) continue;
        const Quad q = product(rows[i], rows[j]);
        for (std::size_t k = 0; k < 6; ++k) total[k] += c * q[k];
      }
    return total;
  }

  bool vanishes(const Relation& rel, const std::array<Vec3, 3>& rows) const {
    const Quad q = image(rel, rows);
    for (std::size_t r = 0; r < rows_; ++r) {
      Int acc = 0;
      for (std::size_t k = 0; k < 6; ++k) acc += nf_[r][k] * q[k];
      if (acc != 0) return false;
    }
    return true;
  }

  bool in_box(const Vec3& u) const {
    return std::all_of(u.begin(), u.end(), [this](Int x) { return x >= -bound_ && x <= bound_; });
  }

  void accept(std::array<Vec3, 3> rows, const Vec3& u, std::vector<IntMatrix>& out) const {
    rows[p_] = u;
    for (const auto* rel : level3_)
      if (!vanishes(*rel, rows)) return;
    IntMatrix L(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) L(i, j) = rows[i][j];
    out.push_back(std::move(L));
  }

  // Rows of the missing generator: det L = u . w = +-1, plus the relations
  // in which u occurs at most linearly.
  void complete(const std::array<Vec3, 3>& rows, std::vector<IntMatrix>& out) const {
    const std::size_t q1 = (p_ + 1) % 3, q2 = (p_ + 2) % 3;
    const Vec3 w = cross(rows[q1], rows[q2]);

    // Equations A u = b, stored as (a0, a1, a2, b) in 128-bit arithmetic.
    std::vector<std::array<__int128, 4>> eqs;
    for (const auto* rel : linear_) {
      std::array<Vec3, 3> fixed = rows;
      fixed[p_] = {0, 0, 0};
      const Quad constant = image(*rel, fixed);
      std::array<Quad, 3> columns{};  // image of u = e_k in the linear part
      for (std::size_t k = 0; k < 3; ++k) {
        Vec3 e{0, 0, 0};
        e[k] = 1;
        for (std::size_t i = 0; i < 3; ++i) {
          if (i == p_) continue;
          const Int c = rel->coeff[pair_index(i, p_)];
          if (c == 0) continue;
          const Quad q = product(rows[i], e);
          for (std::size_t m = 0; m < 6; ++m) columns[k][m] += c * q[m];
        }
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        std::array<__int128, 4> eq{};
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t m = 0; m < 6; ++m) eq[k] += static_cast<__int128>(nf_[r][m]) * columns[k][m];
        for (std::size_t m = 0; m < 6; ++m) eq[3] -= static_cast<__int128>(nf_[r][m]) * constant[m];
        eqs.push_back(eq);
      }
    }

    const auto solution = solve_unique(eqs);
    if (solution.inconsistent) return;
    if (solution.unique) {
      const Vec3& u = solution.u;
      const Int d = dot(u, w);
      if ((d == 1 || d == -1) && in_box(u)) accept(rows, u, out);
      return;
    }
    // Underdetermined: walk the box along the determinant constraint.
    std::size_t k = 3;
    for (std::size_t i = 0; i < 3; ++i)
      if (w[i] != 0 && (k == 3 || std::llabs(w[i]) > std::llabs(w[k]))) k = i;
    if (k == 3) return;
    const std::size_t i1 = (k + 1) % 3, i2 = (k + 2) % 3;
    for (Int eps : {-1, 1})
      for (Int x = -bound_; x <= bound_; ++x)
        for (Int y = -bound_; y <= bound_; ++y) {
          const Int rest = eps - w[i1] * x - w[i2] * y;
          if (rest % w[k] != 0) continue;
          Vec3 u{};
          u[k] = rest / w[k];
          u[i1] = x;
          u[i2] = y;
          if (!in_box(u)) continue;
          bool ok = true;
          for (const auto& eq : eqs)
            if (eq[0] * u[0] + eq[1] * u[1] + eq[2] * u[2] != eq[3]) {
              ok = false;
              break;
            }
          if (ok) accept(rows, u, out);
        }
  }

  struct Solved {
    bool inconsistent = false;
    bool unique = false;
    Vec3 u{};
  };

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  // Fraction-free elimination; rows are divided by their content to keep
  // entries small.
  static Solved solve_unique(std::vector<std::array<__int128, 4>> eqs) {
    Solved out;
    std::size_t rank = 0;
    std::array<std::size_t, 3> pivot_col{};
    for (std::size_t col = 0; col < 3 && rank < eqs.size(); ++col) {
      std::size_t piv = rank;
      while (piv < eqs.size() && eqs[piv][col] == 0) ++piv;
      if (piv == eqs.size()) continue;
      std::swap(eqs[rank], eqs[piv]);
      for (std::size_t r = 0; r < eqs.size(); ++r) {
        if (r == rank || eqs[r][col] == 0) continue;
        const __int128 f = eqs[r][col], g = eqs[rank][col];
        __int128 content = 0;
        for (std::size_t k = 0; k < 4; ++k) {
          eqs[r][k] = eqs[r][k] * g - eqs[rank][k] * f;
          content = gcd128(content, eqs[r][k]);
        }
        if (content > 1)
          for (auto& x : eqs[r]) x /= content;
      }
      pivot_col[rank] = col;
      ++rank;
    }
    for (std::size_t r = rank; r < eqs.size(); ++r)
      if (eqs[r][3] != 0) {
        out.inconsistent = true;
        return out;
      }
    if (rank < 3) return out;
    for (std::size_t r = 0; r < 3; ++r) {
      // Fully reduced: row r has a single nonzero coefficient.
      const __int128 a = eqs[r][pivot_col[r]], b = eqs[r][3];
      if (b % a != 0) {
        out.inconsistent = true;
        return out;
      }
      out.u[pivot_col[r]] = static_cast<Int>(b / a);
    }
    out.unique = true;
    return out;
  }

  int bound_;
  std::size_t rows_ = 0;
  std::array<Quad, 16> nf_{};
  std::vector<Relation> relations_;
  std::size_t p_ = 0, a_ = 1, b_ = 2;
  std::vector<const Relation*> level1_, level2_, level3_, linear_;
  std::vector<Vec3> primitive_;
};

bool search_supported(const GradedRing& r) {
  if (r.modulus() != 0 || r.num_vars() != 3 || r.kept_variables().size() != 3 || r.max_degree() < 4) return false;
  for (const auto& rel : r.presentation().relations)
    if (!rel.is_homogeneous() || rel.degree() != 2) return false;
  return r.rank(4) <= 16;
}

bool row_less(const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

}  // namespace

std::vector<IntMatrix> find_isomorphisms(const GradedRing& src, const GradedRing& dst, int bound, unsigned jobs) {
  if (bound < 0) fail(ErrorCode::InvalidArgument, "bound must be non-negative");
  const int cap = resource_cap(kMaxSearchBound);
  if (bound > cap) fail(ErrorCode::Capability, "search bound is capped at " + std::to_string(cap));
  if (!search_supported(src) || !search_supported(dst))
    fail(ErrorCode::Capability, "isomorphism search needs 3-generator integral rings with quadratic relations");
  if (src.ranks() != dst.ranks()) return {};
  const Search search(src, dst, bound);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n = search.outer_size();
  std::vector<std::vector<IntMatrix>> partial(jobs);
  auto worker = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += jobs) search.run_outer(i, partial[w]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  std::vector<IntMatrix> found;
  for (auto& p : partial)
    for (auto& L : p) found.push_back(std::move(L));
  std::sort(found.begin(), found.end(), row_less);
  // The fast path is exact; the generic check guards it anyway.
  for (const auto& L : found)
    if (!is_isomorphism(L, src, dst)) fail(ErrorCode::Internal, "search accepted a non-isomorphism " + L.to_string());
  return found;
}

std::vector<IntMatrix> automorphisms(const GradedRing& ring, int bound, unsigned jobs) {
  return find_isomorphisms(ring, ring, bound, jobs);
}

bool jupp_check(const IntMatrix& L, const classes::ManifoldRing& src, const classes::ManifoldRing& dst) {
  std::string why;
  if (!is_isomorphism(L, src.integral, dst.integral, &why))
    fail(ErrorCode::InvalidArgument, "Jupp check needs an isomorphism: " + why);
  const auto images = map_images(L);
  const auto w2 = dst.mod2.reduce(substitute(src.classes.w2_poly, images).reduced_mod(2), 2);
  const auto p1 = dst.integral.reduce(substitute(src.classes.p1_poly, images), 4);
  return w2 == dst.classes.w2 && p1 == dst.classes.p1;
}

IntMatrix theta(int i) {
  switch (i) {
    case 1: return IntMatrix{{1, 0}, {0, 1}};
    case 2: return IntMatrix{{1, 2}, {0, -1}};
    case 3: return IntMatrix{{1, 0}, {-1, -1}};
    case 4: return IntMatrix{{1, 2}, {-1, -1}};
    default: fail(ErrorCode::InvalidArgument, "theta index out of range");
  }
}

bool satisfies_theta_equations(const IntMatrix& m) {
  const Int b2 = m(0, 0), c2 = m(0, 1), b3 = m(1, 0), c3 = m(1, 1);
  return (2 * b2 - c2) * (b2 + 2 * b3) == (b2 - c2) * (c2 + 2 * c3) &&
         (2 * b3 - c3) * (b2 + b3) == (b3 - c3) * (c2 + c3);
}

std::vector<ThetaSolution> theta_solutions(int bound) {
  if (bound < 0) fail(ErrorCode::InvalidArgument, "bound must be non-negative");
  const int cap = resource_cap(1000);
  if (bound > cap) fail(ErrorCode::Capability, "theta search bound is capped at " + std::to_string(cap));
  std::vector<ThetaSolution> out;
  for (Int b2 = -bound; b2 <= bound; ++b2)
    for (Int c2 = -bound; c2 <= bound; ++c2)
      for (Int b3 = -bound; b3 <= bound; ++b3)
        for (Int c3 = -bound; c3 <= bound; ++c3) {
          const Int det = b2 * c3 - c2 * b3;
          if (det != 1 && det != -1) continue;
          IntMatrix m{{b2, c2}, {b3, c3}};
          if (!satisfies_theta_equations(m)) continue;
          ThetaSolution s;
          s.matrix = m;
          for (int i = 1; i <= 4 && s.index == 0; ++i)
            for (int sign : {1, -1}) {
              IntMatrix t = theta(i);
              for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) t(r, c) *= sign;
              if (t == m) {
                s.index = i;
                s.sign = sign;
                break;
              }
            }
          if (2 * b2 - c2 != 0 && c2 + 2 * c3 != 0 && b2 - c2 != 0 && (b2 + 2 * b3) % (b2 - c2) == 0)
            s.k12 = (b2 + 2 * b3) / (b2 - c2);
          if (b2 + b3 != 0 && b3 - c3 != 0 && (b2 + b3) % (b3 - c3) == 0) s.k13 = (b2 + b3) / (b3 - c3);
          out.push_back(std::move(s));
        }
  return out;
}

IntMatrix alpha5() { return IntMatrix{{1, 0, 0}, {0, 0, 1}, {1, 1, 0}}; }
IntMatrix alpha6() { return IntMatrix{{-1, 0, 0}, {2, 1, 0}, {0, 0, 1}}; }
IntMatrix alpha10() { return IntMatrix{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}; }

std::vector<IntMatrix> lambda_st_automorphisms(Int s, Int t) {
  const IntMatrix a{{1, 0, checked::sub(t, s)}, {0, 1, 2}, {0, 0, -1}};
  const IntMatrix b{{-1, -s, -s}, {0, 1, 2}, {0, 0, -1}};
  const IntMatrix id = IntMatrix::identity(3);
  std::vector<IntMatrix> out;
  for (const IntMatrix* m : {&a, &b, &id}) {
    out.push_back(*m);
    IntMatrix neg = *m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) neg(i, j) = -neg(i, j);
    out.push_back(std::move(neg));
  }
  return out;
}

}  // namespace qtoric::isokit
