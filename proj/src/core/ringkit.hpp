#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "charmat.hpp"
#include "intmat.hpp"
#include "poly.hpp"

namespace qtoric::ringkit {

using charmat::CharMatrix;
using charmat::StarForm;
using polytope::SimplePolytope;

enum class PresentationKind { Custom, Full, Small };

/// Generators all sit in degree 2. Linear relations are stored as
/// degree-1 polynomials next to the higher-degree ones.
struct RingPresentation {
  std::size_t num_generators = 0;
  std::vector<std::string> names;
  std::vector<Polynomial> relations;
  PresentationKind kind = PresentationKind::Custom;
};

/// Checks names and homogeneity of every relation.
RingPresentation make_presentation(std::vector<std::string> names, std::vector<Polynomial> relations,
                                   PresentationKind kind = PresentationKind::Custom);

/// Face ring of P modulo the linear forms given by the rows of lambda.
RingPresentation full_presentation(const SimplePolytope& p, const CharMatrix& lambda);

/// Z[X,Y,Z] modulo X u_1, Y u_2, Z u_3 where u_i is row i of the right block.
RingPresentation small_presentation(const StarForm& sf);

/// Degree is cohomological (even); coeffs are coordinates in the basis of
/// that degree.
struct RingElement {
  int degree = 0;
  std::vector<Int> coeffs;

  bool is_zero() const;
  bool operator==(const RingElement&) const = default;
};

/// Realization of a presentation as a free graded module with products,
/// over Z (modulus 0) or Z/2 (modulus 2). Immutable once built.
class GradedRing {
 public:
  Int modulus() const noexcept { return modulus_; }
  int max_degree() const noexcept { return 2 * top_; }
  const RingPresentation& presentation() const noexcept { return presentation_; }
  std::size_t num_vars() const noexcept { return presentation_.num_generators; }

  /// Rank of the degree `degree` part; zero in odd degrees.
  std::size_t rank(int degree) const;
  /// Ranks in degrees 0, 2, ..., max_degree.
  std::vector<std::size_t> ranks() const;

  const std::vector<Polynomial>& basis(int degree) const;
  const std::vector<std::string>& basis_labels(int degree) const;
  bool has_monomial_basis(int degree) const;

  /// Image of every generator after the linear relations are solved.
  const std::vector<Polynomial>& generator_images() const noexcept { return images_; }
  /// Generators that survive elimination of linear relations.
  const std::vector<std::size_t>& kept_variables() const noexcept { return kept_; }

  /// Monomials of polynomial degree k in the kept variables (graded lex,
  /// largest first) and the matrix sending each to its coordinates.
  const std::vector<Monomial>& monomials(int k) const;
  const IntMatrix& normal_form(int k) const;

  /// Normal form of a homogeneous polynomial of cohomological degree
  /// `degree`; the zero polynomial is accepted in any degree.
  RingElement reduce(const Polynomial& p, int degree) const;
  /// Same, with the degree read off the polynomial (zero reduces to degree 0).
  RingElement reduce(const Polynomial& p) const;
  /// Homogeneous components in degrees 0..max_degree; parts above the top
  /// degree are dropped.
  std::vector<RingElement> reduce_total(const Polynomial& p) const;

  Polynomial lift(const RingElement& e) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  RingElement basis_element(int degree, std::size_t index) const;
  RingElement zero(int degree) const;

  friend GradedRing realize(const RingPresentation& pres, int max_degree, Int modulus);

 private:
  struct Piece {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;
    IntMatrix nf;
    std::vector<Polynomial> basis;
    std::vector<std::string> labels;
    bool monomial_basis = true;
  };

  const Piece& piece(int degree) const;
  Int normalize(Int c) const;

  RingPresentation presentation_;
  Int modulus_ = 0;
  int top_ = 0;
  std::vector<Polynomial> images_;
  std::vector<std::size_t> kept_;
  std::vector<Piece> pieces_;
};

/// Builds the graded pieces up to cohomological degree max_degree. Throws
/// Torsion if some graded piece is not free.
GradedRing realize(const RingPresentation& pres, int max_degree, Int modulus = 0);

/// Structure constant table: product of basis elements i (degree a) and
/// j (degree b) for a <= b, a + b <= max_degree.
struct Product {
  int degree_a, degree_b;
  std::size_t a, b;
  RingElement value;
};
std::vector<Product> structure_constants(const GradedRing& ring);

/// Matrix of the pairing H^2 x H^{top-2} -> H^top, valid when the top
/// piece has rank 1.
IntMatrix poincare_pairing(const GradedRing& ring);

/// True when (ab)c = a(bc) and ab = ba on all basis triples.
bool check_ring_axioms(const GradedRing& ring, std::string* failure = nullptr);

/// Checks that generator i -> images[i] (polynomials in dst's generators)
/// induces a graded ring isomorphism: every source relation maps to zero,
/// degree 2 maps bijectively, and all ranks agree.
bool induces_isomorphism(const std::vector<Polynomial>& images, const GradedRing& src, const GradedRing& dst,
                         std::string* failure = nullptr);

/// Images of v_1..v_6 in Z[X,Y,Z] under the identification of the full and
/// small presentations of a star form: v_i -> -u_i (i <= 3), v_4,v_5,v_6 -> X,Y,Z.
std::vector<Polynomial> star_identification(const StarForm& sf);

/// The set {W in H^2 : W^2 = 0}.
struct NilSquare {
  enum class Kind { Zero, Line, Lines, Infinite };
  Kind kind = Kind::Zero;
  /// Primitive generators (first nonzero coordinate positive), one per
  /// rational line of the zero locus, in H^2 coordinates.
  std::vector<std::vector<Int>> lines;
  /// Nonzero W with |coords| <= crosscheck_bound and W^2 = 0 that do not lie
  /// on a reported line; empty when the exact answer is confirmed.
  std::vector<std::vector<Int>> crosscheck_misses;
  int crosscheck_bound = 10;

  bool is_subgroup() const { return kind == Kind::Zero || kind == Kind::Line; }
  std::string describe() const;
};

/// Exact zero locus of the square map H^2 -> H^4 for rank(H^2) <= 3, with a
/// brute-force cross-check over |coefficients| <= crosscheck_bound.
NilSquare nilsquare2(const GradedRing& ring, int crosscheck_bound = 10);

}  // namespace qtoric::ringkit
