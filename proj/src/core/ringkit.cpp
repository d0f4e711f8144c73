#include "ringkit.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace qtoric::ringkit {

namespace {

Int norm_mod(Int c, Int modulus) {
  if (modulus == 0) return c;
  const Int r = c % modulus;
  return r < 0 ? r + modulus : r;
}

bool is_unit(Int c, Int modulus) { return modulus ? norm_mod(c, modulus) != 0 : (c == 1 || c == -1); }

bool all_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

// target -= target[col] * pivot_row, where pivot_row[col] == 1.
void eliminate(std::vector<Int>& target, const std::vector<Int>& pivot_row, std::size_t col, Int modulus) {
  const Int f = target[col];
  if (f == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j)
    if (pivot_row[j] != 0) target[j] = norm_mod(checked::sub(target[j], checked::mul(f, pivot_row[j])), modulus);
}

struct Quotient {
  IntMatrix nf;  // rank x n
  std::vector<std::vector<Int>> reps;
  bool monomial = true;
};

// Basis of Z^n (or F_2^n) modulo the span of `rows`. Unit pivots are taken
// greedily, earliest column first, so the surviving columns form a monomial
// basis whenever that is possible; anything left goes through Smith form.
Quotient quotient_basis(std::vector<std::vector<Int>> rows, std::size_t n, Int modulus) {
  std::vector<std::vector<Int>> work;
  for (auto& r : rows) {
    for (auto& x : r) x = norm_mod(x, modulus);
    if (!all_zero(r)) work.push_back(std::move(r));
  }
  std::vector<std::pair<std::size_t, std::vector<Int>>> pivots;
  std::vector<bool> is_pivot(n, false);

  for (;;) {
    std::size_t best_col = n, best_row = 0, best_weight = 0;
    for (std::size_t col = 0; col < n && best_col == n; ++col) {
      if (is_pivot[col]) continue;
      for (std::size_t r = 0; r < work.size(); ++r) {
        if (!is_unit(work[r][col], modulus)) continue;
        const auto weight = static_cast<std::size_t>(std::count_if(work[r].begin(), work[r].end(), [](Int x) { return x != 0; }));
        if (best_col == n || weight < best_weight) {
          best_col = col;
          best_row = r;
          best_weight = weight;
        }
      }
    }
    if (best_col != n) {
      std::vector<Int> prow = std::move(work[best_row]);
      work.erase(work.begin() + static_cast<long>(best_row));
      if (modulus == 0 && prow[best_col] == -1)
        for (auto& x : prow) x = -x;
      for (auto& w : work) eliminate(w, prow, best_col, modulus);
      for (auto& p : pivots) eliminate(p.second, prow, best_col, modulus);
      pivots.emplace_back(best_col, std::move(prow));
      is_pivot[best_col] = true;
      std::erase_if(work, all_zero);
      continue;
    }
    if (work.empty() || modulus != 0) break;
    const HermiteForm h = hermite_rows(IntMatrix::from_rows(work, n));
    work = h.basis.to_rows();
    bool unit_found = false;
    for (const auto& w : work)
      for (Int x : w) unit_found = unit_found || x == 1 || x == -1;
    if (!unit_found) break;
  }

  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> position(n, 0);
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) {
      position[c] = free_cols.size();
      free_cols.push_back(c);
    }
  const std::size_t m = free_cols.size();

  Quotient out;
  IntMatrix transform = IntMatrix::identity(m);  // coordinates = x * transform
  std::size_t first_kept = 0;
  if (!work.empty()) {
    IntMatrix residual(0, m);
    for (const auto& w : work) {
      std::vector<Int> restricted(m);
      for (std::size_t i = 0; i < m; ++i) restricted[i] = w[free_cols[i]];
      residual.append_row(restricted);
    }
    const SmithForm s = smith(residual);
    for (Int d : s.invariants)
      if (d != 1) fail(ErrorCode::Torsion, "graded piece has torsion (invariant factor " + std::to_string(d) + ")");
    first_kept = s.invariants.size();
    transform = s.right;
    out.monomial = false;
    const IntMatrix inv = unimodular_inverse(s.right);
    for (std::size_t r = first_kept; r < m; ++r) {
      std::vector<Int> rep(n, 0);
      for (std::size_t i = 0; i < m; ++i) rep[free_cols[i]] = inv(r, i);
      out.reps.push_back(std::move(rep));
    }
  } else {
    for (std::size_t c : free_cols) {
      std::vector<Int> rep(n, 0);
      rep[c] = 1;
      out.reps.push_back(std::move(rep));
    }
  }

  const std::size_t rank = m - first_kept;
  out.nf = IntMatrix(rank, n);
  std::vector<const std::vector<Int>*> pivot_row(n, nullptr);
  for (const auto& [c, row] : pivots) pivot_row[c] = &row;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Int> x(m, 0);
    if (pivot_row[j] == nullptr) {
      x[position[j]] = 1;
    } else {
      for (std::size_t i = 0; i < m; ++i) x[i] = norm_mod(-(*pivot_row[j])[free_cols[i]], modulus);
    }
    for (std::size_t k = 0; k < rank; ++k) {
      Int acc = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (x[i] != 0) acc = checked::add(acc, checked::mul(x[i], transform(i, first_kept + k)));
      out.nf(k, j) = norm_mod(acc, modulus);
    }
  }
  return out;
}

std::vector<Int> coefficient_vector(const Polynomial& p, const std::map<Monomial, std::size_t>& index, std::size_t n) {
  std::vector<Int> v(n, 0);
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it == index.end()) fail(ErrorCode::Internal, "monomial outside the graded piece");
    v[it->second] = c;
  }
  return v;
}

}  // namespace

RingPresentation make_presentation(std::vector<std::string> names, std::vector<Polynomial> relations, PresentationKind kind) {
  RingPresentation p;
  p.num_generators = names.size();
  if (p.num_generators == 0) fail(ErrorCode::InvalidArgument, "presentation needs at least one generator");
  for (const auto& r : relations) {
    if (r.num_vars() != p.num_generators) fail(ErrorCode::InvalidArgument, "relation has the wrong number of variables");
    if (!r.is_homogeneous()) fail(ErrorCode::InvalidArgument, "relation is not homogeneous: " + r.to_string(names));
    if (r.degree() == 0) fail(ErrorCode::InvalidArgument, "constant relation");
  }
  std::erase_if(relations, [](const Polynomial& r) { return r.is_zero(); });
  p.names = std::move(names);
  p.relations = std::move(relations);
  p.kind = kind;
  return p;
}

RingPresentation full_presentation(const SimplePolytope& p, const CharMatrix& lambda) {
  if (!(lambda.polytope() == p)) fail(ErrorCode::InvalidArgument, "characteristic matrix belongs to another polytope");
  const auto v = charmat::validate(lambda);
  if (!v.valid) fail(ErrorCode::InvalidMatrix, "characteristic matrix violates the non-singular condition");
  const auto m = static_cast<std::size_t>(p.num_facets());
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Polynomial> relations;
  for (const auto& nonface : p.minimal_nonfaces()) {
    Monomial mono(m, 0);
    for (int f : nonface) mono[static_cast<std::size_t>(f - 1)] = 1;
    Polynomial r(m);
    r.add_term(mono, 1);
    relations.push_back(std::move(r));
  }
  const auto& e = lambda.entries();
  for (std::size_t i = 0; i < e.rows(); ++i) relations.push_back(Polynomial::linear(e.row(i)));
  return make_presentation(std::move(names), std::move(relations), PresentationKind::Full);
}

RingPresentation small_presentation(const StarForm& sf) {
  const IntMatrix block = sf.right_block();
  std::vector<Polynomial> relations;
  for (std::size_t i = 0; i < 3; ++i)
    relations.push_back(Polynomial::variable(3, i) * Polynomial::linear(block.row(i)));
  return make_presentation({"X", "Y", "Z"}, std::move(relations), PresentationKind::Small);
}

bool RingElement::is_zero() const { return all_zero(coeffs); }

GradedRing realize(const RingPresentation& pres, int max_degree, Int modulus) {
  if (modulus != 0 && modulus != 2) fail(ErrorCode::InvalidArgument, "only Z and Z/2 coefficients are supported");
  if (max_degree < 0) fail(ErrorCode::InvalidArgument, "max_degree must be non-negative");
  const std::size_t n = pres.num_generators;
  GradedRing ring;
  ring.presentation_ = pres;
  ring.modulus_ = modulus;
  ring.top_ = max_degree / 2;

  // Solve linear relations for variables with unit coefficients, earliest
  // variable first.
  std::vector<std::vector<Int>> linear;
  std::vector<Polynomial> higher;
  for (const auto& r : pres.relations) {
    if (r.degree() == 1) {
      std::vector<Int> row(n, 0);
      for (const auto& [m, c] : r.terms())
        for (std::size_t i = 0; i < n; ++i)
          if (m[i] == 1) row[i] = norm_mod(c, modulus);
      if (!all_zero(row)) linear.push_back(std::move(row));
    } else {
      higher.push_back(r);
    }
  }
  std::vector<std::pair<std::size_t, std::vector<Int>>> solved;
  std::vector<bool> eliminated(n, false);
  for (;;) {
    std::size_t col = n, row = 0;
    for (std::size_t c = 0; c < n && col == n; ++c)
      for (std::size_t r = 0; r < linear.size(); ++r)
        if (is_unit(linear[r][c], modulus)) {
          col = c;
          row = r;
          break;
        }
    if (col == n) break;
    std::vector<Int> prow = std::move(linear[row]);
    linear.erase(linear.begin() + static_cast<long>(row));
    if (modulus == 0 && prow[col] == -1)
      for (auto& x : prow) x = -x;
    for (auto& w : linear) eliminate(w, prow, col, modulus);
    for (auto& s : solved) eliminate(s.second, prow, col, modulus);
    std::erase_if(linear, all_zero);
    eliminated[col] = true;
    solved.emplace_back(col, std::move(prow));
  }
  ring.images_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!eliminated[i]) {
      ring.images_[i] = Polynomial::variable(n, i);
      ring.kept_.push_back(i);
    }
  for (const auto& [col, row] : solved) {
    std::vector<Int> rest = row;
    rest[col] = 0;
    for (auto& x : rest) x = norm_mod(-x, modulus);
    ring.images_[col] = Polynomial::linear(rest);
  }

  std::vector<Polynomial> relations;
  for (const auto& w : linear) relations.push_back(Polynomial::linear(w));
  for (const auto& r : higher) {
    Polynomial s = substitute(r, ring.images_).reduced_mod(modulus);
    if (!s.is_zero()) relations.push_back(std::move(s));
  }

  std::vector<bool> active(n, false);
  for (std::size_t i : ring.kept_) active[i] = true;
  for (int k = 0; k <= ring.top_; ++k) {
    GradedRing::Piece piece;
    piece.monomials = monomials_of_degree(n, k, active);
    for (std::size_t i = 0; i < piece.monomials.size(); ++i) piece.index.emplace(piece.monomials[i], i);
    const std::size_t width = piece.monomials.size();
    std::vector<std::vector<Int>> gens;
    for (const auto& r : relations) {
      const int d = r.degree();
      if (d > k) continue;
      for (const auto& mult : monomials_of_degree(n, k - d, active)) {
        Polynomial mp(n);
        mp.add_term(mult, 1);
        gens.push_back(coefficient_vector((mp * r).reduced_mod(modulus), piece.index, width));
      }
    }
    Quotient q = quotient_basis(std::move(gens), width, modulus);
    piece.nf = std::move(q.nf);
    piece.monomial_basis = q.monomial;
    for (const auto& rep : q.reps) {
      Polynomial p(n);
      for (std::size_t j = 0; j < width; ++j)
        if (rep[j] != 0) p.add_term(piece.monomials[j], rep[j]);
      piece.labels.push_back(p.to_string(pres.names));
      piece.basis.push_back(std::move(p));
    }
    ring.pieces_.push_back(std::move(piece));
  }

  // Fix the top class to the product of the surviving generators when that
  // product generates.
  if (static_cast<std::size_t>(ring.top_) == ring.kept_.size() && ring.top_ > 0) {
    auto& top = ring.pieces_.back();
    if (top.basis.size() == 1) {
      Monomial prod(n, 0);
      for (std::size_t i : ring.kept_) prod[i] = 1;
      const std::size_t j = top.index.at(prod);
      const Int c = top.nf(0, j);
      if (is_unit(c, modulus)) {
        if (modulus == 0 && c == -1)
          for (std::size_t col = 0; col < top.nf.cols(); ++col) top.nf(0, col) = -top.nf(0, col);
        Polynomial p(n);
        p.add_term(prod, 1);
        top.labels[0] = p.to_string(pres.names);
        top.basis[0] = std::move(p);
        top.monomial_basis = true;
      }
    }
  }
  return ring;
}

const GradedRing::Piece& GradedRing::piece(int degree) const {
  if (degree < 0 || degree % 2 != 0 || degree / 2 > top_)
    fail(ErrorCode::InvalidArgument, "degree " + std::to_string(degree) + " is outside the realized range 0.." +
                                         std::to_string(2 * top_));
  return pieces_[static_cast<std::size_t>(degree / 2)];
}

Int GradedRing::normalize(Int c) const { return norm_mod(c, modulus_); }

std::size_t GradedRing::rank(int degree) const {
  if (degree < 0 || degree > 2 * top_ || degree % 2 != 0) return 0;
  return piece(degree).basis.size();
}

std::vector<std::size_t> GradedRing::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& p : pieces_) out.push_back(p.basis.size());
  return out;
}

const std::vector<Polynomial>& GradedRing::basis(int degree) const { return piece(degree).basis; }
const std::vector<std::string>& GradedRing::basis_labels(int degree) const { return piece(degree).labels; }
bool GradedRing::has_monomial_basis(int degree) const { return piece(degree).monomial_basis; }
const std::vector<Monomial>& GradedRing::monomials(int k) const { return piece(2 * k).monomials; }
const IntMatrix& GradedRing::normal_form(int k) const { return piece(2 * k).nf; }

RingElement GradedRing::zero(int degree) const { return RingElement{degree, std::vector<Int>(piece(degree).basis.size(), 0)}; }

RingElement GradedRing::basis_element(int degree, std::size_t index) const {
  RingElement e = zero(degree);
  e.coeffs.at(index) = 1;
  return e;
}

RingElement GradedRing::reduce(const Polynomial& p, int degree) const {
  if (p.num_vars() != num_vars()) fail(ErrorCode::InvalidArgument, "polynomial has the wrong number of variables");
  const Piece& pc = piece(degree);
  RingElement out = zero(degree);
  if (p.is_zero()) return out;
  if (!p.is_homogeneous() || 2 * p.degree() != degree)
    fail(ErrorCode::InvalidArgument, "polynomial is not homogeneous of degree " + std::to_string(degree));
  const bool identity = kept_.size() == num_vars();
  const Polynomial q = identity ? p : substitute(p, images_);
  for (const auto& [m, c] : q.terms()) {
    const std::size_t j = pc.index.at(m);
    const Int cc = normalize(c);
    if (cc == 0) continue;
    for (std::size_t k = 0; k < out.coeffs.size(); ++k)
      if (pc.nf(k, j) != 0) out.coeffs[k] = checked::add(out.coeffs[k], checked::mul(cc, pc.nf(k, j)));
  }
  for (auto& c : out.coeffs) c = normalize(c);
  return out;
}

RingElement GradedRing::reduce(const Polynomial& p) const { return reduce(p, p.is_zero() ? 0 : 2 * p.degree()); }

std::vector<RingElement> GradedRing::reduce_total(const Polynomial& p) const {
  std::vector<RingElement> out;
  for (int k = 0; k <= top_; ++k) out.push_back(reduce(p.homogeneous_part(k), 2 * k));
  return out;
}

Polynomial GradedRing::lift(const RingElement& e) const {
  const Piece& pc = piece(e.degree);
  if (e.coeffs.size() != pc.basis.size()) fail(ErrorCode::InvalidArgument, "element has the wrong number of coordinates");
  Polynomial out(num_vars());
  for (std::size_t i = 0; i < e.coeffs.size(); ++i)
    if (e.coeffs[i] != 0) out += pc.basis[i] * e.coeffs[i];
  return out;
}

RingElement GradedRing::multiply(const RingElement& a, const RingElement& b) const {
  const int d = a.degree + b.degree;
  if (d > max_degree()) fail(ErrorCode::InvalidArgument, "product degree exceeds the realized range");
  return reduce(lift(a) * lift(b), d);
}

std::vector<Product> structure_constants(const GradedRing& ring) {
  std::vector<Product> out;
  const int top = ring.max_degree();
  for (int da = 2; da <= top; da += 2)
    for (int db = da; da + db <= top; db += 2)
      for (std::size_t i = 0; i < ring.rank(da); ++i)
        for (std::size_t j = (da == db ? i : 0); j < ring.rank(db); ++j)
          out.push_back(Product{da, db, i, j, ring.multiply(ring.basis_element(da, i), ring.basis_element(db, j))});
  return out;
}

IntMatrix poincare_pairing(const GradedRing& ring) {
  const int top = ring.max_degree();
  if (top < 4 || ring.rank(top) != 1) fail(ErrorCode::InvalidArgument, "pairing needs a rank-one top degree");
  const std::size_t r2 = ring.rank(2), r = ring.rank(top - 2);
  IntMatrix m(r2, r);
  for (std::size_t i = 0; i < r2; ++i)
    for (std::size_t j = 0; j < r; ++j)
      m(i, j) = ring.multiply(ring.basis_element(2, i), ring.basis_element(top - 2, j)).coeffs[0];
  return m;
}

bool check_ring_axioms(const GradedRing& ring, std::string* failure) {
  const int top = ring.max_degree();
  auto report = [&](const std::string& what) {
    if (failure) *failure = what;
    return false;
  };
  for (int da = 0; da <= top; da += 2)
    for (int db = 0; da + db <= top; db += 2)
      for (std::size_t i = 0; i < ring.rank(da); ++i)
        for (std::size_t j = 0; j < ring.rank(db); ++j) {
          const auto a = ring.basis_element(da, i), b = ring.basis_element(db, j);
          const auto ab = ring.multiply(a, b);
          if (!(ab == ring.multiply(b, a)))
            return report("commutativity fails for " + ring.basis_labels(da)[i] + " * " + ring.basis_labels(db)[j]);
          for (int dc = 0; da + db + dc <= top; dc += 2)
            for (std::size_t k = 0; k < ring.rank(dc); ++k) {
              const auto c = ring.basis_element(dc, k);
              if (!(ring.multiply(ab, c) == ring.multiply(a, ring.multiply(b, c))))
                return report("associativity fails for " + ring.basis_labels(da)[i] + ", " + ring.basis_labels(db)[j] +
                              ", " + ring.basis_labels(dc)[k]);
            }
        }
  return true;
}

bool induces_isomorphism(const std::vector<Polynomial>& images, const GradedRing& src, const GradedRing& dst,
                         std::string* failure) {
  auto report = [&](const std::string& what) {
    if (failure) *failure = what;
    return false;
  };
  if (images.size() != src.num_vars()) return report("need one image per source generator");
  for (const auto& im : images) {
    if (im.num_vars() != dst.num_vars()) return report("image lives in the wrong polynomial ring");
    if (!im.is_zero() && (!im.is_homogeneous() || im.degree() != 1)) return report("images must be linear forms");
  }
  if (src.max_degree() != dst.max_degree() || src.ranks() != dst.ranks()) return report("graded ranks differ");
  if (src.modulus() != dst.modulus()) return report("coefficient rings differ");
  for (const auto& r : src.presentation().relations) {
    if (2 * r.degree() > dst.max_degree()) continue;
    const auto res = dst.reduce(substitute(r, images), 2 * r.degree());
    if (!res.is_zero()) return report("relation " + r.to_string(src.presentation().names) + " does not map to zero");
  }
  if (src.max_degree() < 2) return true;
  const std::size_t r2 = src.rank(2);
  IntMatrix m(r2, r2);
  for (std::size_t i = 0; i < r2; ++i) {
    const auto col = dst.reduce(substitute(src.basis(2)[i], images), 2);
    for (std::size_t j = 0; j < r2; ++j) m(j, i) = col.coeffs[j];
  }
  const Int det = determinant(m);
  const bool unit = src.modulus() == 2 ? (det % 2 != 0) : (det == 1 || det == -1);
  if (!unit) return report("degree-2 map has determinant " + std::to_string(det));
  return true;
}

std::vector<Polynomial> star_identification(const StarForm& sf) {
  const IntMatrix block = sf.right_block();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(-Polynomial::linear(block.row(i)));
  for (std::size_t i = 0; i < 3; ++i) images.push_back(Polynomial::variable(3, i));
  return images;
}

}  // namespace qtoric::ringkit
