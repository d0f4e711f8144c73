#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "intmat.hpp"
#include "polytope.hpp"

namespace qtoric::charmat {

using polytope::FacetPermutation;
using polytope::FacetSet;
using polytope::SimplePolytope;

/// An n x m integer matrix whose columns are attached to the facets of a
/// simple polytope. Construction checks the shape only; use validate() for
/// the non-singular condition.
class CharMatrix {
 public:
  CharMatrix(SimplePolytope polytope, IntMatrix entries);

  const SimplePolytope& polytope() const noexcept { return polytope_; }
  const IntMatrix& entries() const noexcept { return entries_; }
  /// Column of facet `facet` (1-based).
  std::vector<Int> column(int facet) const;

 private:
  SimplePolytope polytope_;
  IntMatrix entries_;
};

struct Validation {
  bool valid = true;
  std::vector<FacetSet> failing_vertices;
  std::vector<Int> failing_minors;
};

/// Checks det(lambda_{i_1},...,lambda_{i_n}) = +-1 at every vertex.
Validation validate(const CharMatrix& lambda);

/// The six free entries of a cube characteristic matrix in star form
///
///     1 0 0 | 1  x1 x2
///     0 1 0 | y1 1  x3
///     0 0 1 | y2 y3 1
///
/// stored in the order (x1, y1, x2, y2, x3, y3).
struct StarForm {
  std::array<Int, 6> v{};

  Int x(int i) const { return v[static_cast<std::size_t>(2 * (i - 1))]; }
  Int y(int i) const { return v[static_cast<std::size_t>(2 * (i - 1) + 1)]; }

  /// Right 3x3 block; row i holds the coefficients (r_i, s_i, t_i).
  IntMatrix right_block() const;
  /// Full 3x6 matrix.
  IntMatrix matrix() const;
  /// "x1 y1 x2 y2 x3 y3"
  std::string str() const;

  auto operator<=>(const StarForm&) const = default;
};

/// Parses the six-integer short form; throws Parse on malformed text.
StarForm parse_star(const std::string& text);

/// x_i y_i in {0, 2} for i = 1, 2, 3.
bool pairs_admissible(const StarForm& sf);
/// Admissible pairs and a unimodular right block: the matrix is a
/// characteristic matrix on the cube.
bool is_characteristic(const StarForm& sf);
/// Throws InvalidMatrix unless is_characteristic.
StarForm checked_star(const std::array<Int, 6>& entries);

CharMatrix to_char_matrix(const StarForm& sf);

/// Normalizes a cube characteristic matrix: left-multiply by the inverse of
/// its first three columns, then flip the signs of columns 4..6.
StarForm to_star_form(const IntMatrix& cube_matrix);
StarForm to_star_form(const CharMatrix& lambda);

/// epsilon_i = 0 when (x_i, y_i) has a zero entry, 2 when x_i y_i = 2.
std::array<int, 3> class_label(const StarForm& sf);

/// Column permutation (facet j moves to position g(j)) followed by star
/// normalization.
StarForm act(const FacetPermutation& g, const StarForm& sf);

/// The star forms obtained by conjugating the right block with diag(+-1).
/// Together with `sf` these are all star forms in its GL(3,Z) x sign class.
std::array<StarForm, 4> sign_conjugates(const StarForm& sf);
bool same_sign_class(const StarForm& a, const StarForm& b);

const std::vector<FacetPermutation>& cube_automorphisms();

/// Every star form reachable under cube automorphisms and sign
/// normalization; sorted, without duplicates.
std::vector<StarForm> orbit(const StarForm& sf);

struct Canonical {
  StarForm form;
  FacetPermutation move;         // automorphism applied first
  std::array<Int, 3> row_signs;  // conjugating signs applied afterwards
};

/// Lexicographically least member of the orbit of `sf`.
Canonical canonicalize(const StarForm& sf);

/// All characteristic star forms with |x_i|, |y_i| <= bound, in
/// lexicographic order of (x1, y1, x2, y2, x3, y3).
std::vector<StarForm> enumerate_star(int bound);

enum class Family { A1, A2, A3, Chi, Gamma, Other };

struct FamilyTag {
  Family family = Family::Other;
  int index = 0;  // k for Chi(k) / Gamma(k)
  std::array<int, 3> epsilon{};

  std::string name() const;  // "A1", "Chi(5)", ...
  bool operator==(const FamilyTag& o) const { return family == o.family && index == o.index; }
};

/// Exact table match first (chi, then gamma), then A1/A2/A3 membership.
/// The matrix lying in both A2 and A3 is tagged A3.
FamilyTag family_of(const StarForm& sf);

bool in_a1(const StarForm& sf);
bool in_a2(const StarForm& sf);
bool in_a3(const StarForm& sf);

/// Families that appear as final representatives of the classification.
bool is_final_family(const FamilyTag& tag);

struct ClassFamily {
  FamilyTag tag;                    // the class's family, Other if none found
  std::vector<std::string> found;   // distinct final tags seen in the orbit
  StarForm witness;                 // orbit member carrying `tag`
  bool ambiguous = false;           // more than one final tag seen
};

/// Scans the orbit of `sf` for members in A1, A2, A3 or equal to
/// chi_1, chi_5, chi_6, chi_10.
ClassFamily class_family(const StarForm& sf);

// Named matrices.
StarForm chi(int k);    // k = 1..11
StarForm gamma(int k);  // k = 1..7
StarForm lambda_st(Int s, Int t);    // A2 family
StarForm colambda_st(Int s, Int t);  // A3 family

/// Resolves chiK, gammaK, lambda:s,t, colambda:s,t; nullopt if unknown.
std::optional<StarForm> builtin(const std::string& name);

// Cube automorphisms used in the move diagrams.
FacetPermutation sigma(int i);
FacetPermutation tau(int i);

}  // namespace qtoric::charmat
