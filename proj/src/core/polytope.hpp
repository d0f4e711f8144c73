#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qtoric::polytope {

/// Sorted set of 1-based facet indices.
using FacetSet = std::vector<int>;

/// A simple polytope given purely combinatorially by its vertex-facet
/// incidence. Facet indices are 1-based.
class SimplePolytope {
 public:
  /// Validates simplicity and edge consistency, derives the minimal
  /// non-faces, and cross-checks `minimal_nonfaces` when supplied.
  SimplePolytope(int dim, int num_facets, std::vector<FacetSet> vertices,
                 std::vector<FacetSet> minimal_nonfaces = {}, std::string name = {});

  int dim() const noexcept { return dim_; }
  int num_facets() const noexcept { return num_facets_; }
  const std::vector<FacetSet>& vertices() const noexcept { return vertices_; }
  const std::vector<FacetSet>& minimal_nonfaces() const noexcept { return minimal_nonfaces_; }
  const std::string& name() const noexcept { return name_; }

  /// True when the facet set lies in some vertex, i.e. the facets intersect.
  bool is_face(const FacetSet& facets) const;
  bool is_vertex(const FacetSet& facets) const;

  bool operator==(const SimplePolytope& other) const {
    return dim_ == other.dim_ && num_facets_ == other.num_facets_ && vertices_ == other.vertices_;
  }

 private:
  int dim_;
  int num_facets_;
  std::vector<FacetSet> vertices_;
  std::vector<FacetSet> minimal_nonfaces_;
  std::string name_;
};

/// Permutation of facets; `images[i-1]` is the image of facet i.
struct FacetPermutation {
  std::vector<int> images;

  int operator()(int facet) const { return images.at(static_cast<std::size_t>(facet - 1)); }
  FacetPermutation compose(const FacetPermutation& first) const;  // (*this) after `first`
  FacetPermutation inverse() const;
  std::string cycles() const;
  bool operator==(const FacetPermutation&) const = default;
  auto operator<=>(const FacetPermutation&) const = default;
};

FacetPermutation make_permutation(int m, const std::vector<std::vector<int>>& cycles);

SimplePolytope cube();
SimplePolytope simplex(int n);
SimplePolytope segment();

/// f_i = number of faces of dimension n-i-1, i = 0..n-1.
std::vector<long long> f_vector(const SimplePolytope& p);
std::vector<long long> h_vector(const SimplePolytope& p);

inline constexpr int kMaxAutomorphismFacets = 12;

/// All facet permutations preserving the vertex family, in lexicographic
/// order of their image lists. Requires num_facets <= 12.
std::vector<FacetPermutation> automorphisms(const SimplePolytope& p);

bool preserves_vertices(const SimplePolytope& p, const FacetPermutation& g);

}  // namespace qtoric::polytope
