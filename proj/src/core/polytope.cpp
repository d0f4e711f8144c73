#include "polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace qtoric::polytope {

namespace {

std::string set_str(const FacetSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

bool subset_of(const FacetSet& a, const FacetSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Minimal subsets of {1..m} contained in no vertex. Every superset of a
// non-face is a non-face, so a non-face is minimal iff dropping any single
// element gives a face.
std::vector<FacetSet> derive_minimal_nonfaces(const SimplePolytope& p, int m) {
  std::vector<FacetSet> out;
  if (m > 24) fail(ErrorCode::Capability, "too many facets to derive minimal non-faces");
  const unsigned long total = 1ul << m;
  std::vector<std::pair<int, unsigned long>> order;
  for (unsigned long mask = 1; mask < total; ++mask) order.emplace_back(__builtin_popcountl(mask), mask);
  std::sort(order.begin(), order.end());
  for (const auto& [size, mask] : order) {
    FacetSet s;
    for (int i = 0; i < m; ++i)
      if (mask & (1ul << i)) s.push_back(i + 1);
    if (p.is_face(s)) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
      FacetSet t = s;
      t.erase(t.begin() + static_cast<long>(drop));
      if (!p.is_face(t)) minimal = false;
    }
    if (minimal) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SimplePolytope::SimplePolytope(int dim, int num_facets, std::vector<FacetSet> vertices,
                               std::vector<FacetSet> minimal_nonfaces, std::string name)
    : dim_(dim), num_facets_(num_facets), name_(std::move(name)) {
  if (dim < 1) fail(ErrorCode::InvalidPolytope, "dimension must be >= 1");
  if (num_facets < dim + 1 && !(dim == 1 && num_facets == 2))
    fail(ErrorCode::InvalidPolytope, "a simple polytope needs more facets than its dimension");
  if (vertices.empty()) fail(ErrorCode::InvalidPolytope, "polytope has no vertices");
  for (auto& v : vertices) {
    std::sort(v.begin(), v.end());
    if (static_cast<int>(v.size()) != dim)
      fail(ErrorCode::InvalidPolytope, "vertex " + set_str(v) + " does not have exactly dim facets");
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      fail(ErrorCode::InvalidPolytope, "vertex " + set_str(v) + " repeats a facet");
    for (int f : v)
      if (f < 1 || f > num_facets) fail(ErrorCode::InvalidPolytope, "facet index out of range in " + set_str(v));
  }
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    fail(ErrorCode::InvalidPolytope, "duplicate vertex");
  vertices_ = std::move(vertices);

  // Every facet must carry a vertex, and every edge (an (n-1)-subset of a
  // vertex) must end in one or two vertices.
  std::vector<int> seen(static_cast<std::size_t>(num_facets) + 1, 0);
  for (const auto& v : vertices_)
    for (int f : v) seen[static_cast<std::size_t>(f)] = 1;
  for (int f = 1; f <= num_facets; ++f)
    if (!seen[static_cast<std::size_t>(f)]) fail(ErrorCode::InvalidPolytope, "facet " + std::to_string(f) + " has no vertex");
  std::map<FacetSet, int> edge_count;
  for (const auto& v : vertices_)
    for (std::size_t drop = 0; drop < v.size(); ++drop) {
      FacetSet e = v;
      e.erase(e.begin() + static_cast<long>(drop));
      ++edge_count[e];
    }
  for (const auto& [edge, count] : edge_count)
    if (count > 2) fail(ErrorCode::InvalidPolytope, "edge " + set_str(edge) + " lies in more than two vertices");

  auto derived = derive_minimal_nonfaces(*this, num_facets);
  if (!minimal_nonfaces.empty()) {
    for (auto& s : minimal_nonfaces) std::sort(s.begin(), s.end());
    std::sort(minimal_nonfaces.begin(), minimal_nonfaces.end());
    if (minimal_nonfaces != derived)
      fail(ErrorCode::InvalidPolytope, "supplied minimal non-faces disagree with the vertex incidence");
  }
  minimal_nonfaces_ = std::move(derived);
}

bool SimplePolytope::is_face(const FacetSet& facets) const {
  return std::any_of(vertices_.begin(), vertices_.end(), [&](const FacetSet& v) { return subset_of(facets, v); });
}

bool SimplePolytope::is_vertex(const FacetSet& facets) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), facets);
}

FacetPermutation FacetPermutation::compose(const FacetPermutation& first) const {
  FacetPermutation out;
  out.images.resize(first.images.size());
  for (std::size_t i = 0; i < first.images.size(); ++i) out.images[i] = (*this)(first.images[i]);
  return out;
}

FacetPermutation FacetPermutation::inverse() const {
  FacetPermutation out;
  out.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out.images[static_cast<std::size_t>(images[i] - 1)] = static_cast<int>(i) + 1;
  return out;
}

std::string FacetPermutation::cycles() const {
  std::ostringstream os;
  std::vector<bool> done(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (done[i] || images[i] == static_cast<int>(i) + 1) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = static_cast<std::size_t>(images[j] - 1);
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "id" : s;
}

FacetPermutation make_permutation(int m, const std::vector<std::vector<int>>& cycles) {
  FacetPermutation p;
  p.images.resize(static_cast<std::size_t>(m));
  std::iota(p.images.begin(), p.images.end(), 1);
  for (const auto& cyc : cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i) p.images[static_cast<std::size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()];
  return p;
}

SimplePolytope cube() {
  // F_i and F_{i+3} are opposite.
  std::vector<FacetSet> vertices;
  for (int a : {1, 4})
    for (int b : {2, 5})
      for (int c : {3, 6}) vertices.push_back({a, b, c});
  return SimplePolytope(3, 6, std::move(vertices), {{1, 4}, {2, 5}, {3, 6}}, "cube");
}

SimplePolytope simplex(int n) {
  std::vector<FacetSet> vertices;
  for (int skip = 1; skip <= n + 1; ++skip) {
    FacetSet v;
    for (int f = 1; f <= n + 1; ++f)
      if (f != skip) v.push_back(f);
    vertices.push_back(std::move(v));
  }
  return SimplePolytope(n, n + 1, std::move(vertices), {}, "simplex" + std::to_string(n));
}

SimplePolytope segment() { return SimplePolytope(1, 2, {{1}, {2}}, {{1, 2}}, "segment"); }

std::vector<long long> f_vector(const SimplePolytope& p) {
  // A k-subset of facets meeting at some vertex is a face of codimension k.
  std::vector<std::set<FacetSet>> faces(static_cast<std::size_t>(p.dim()));
  for (const auto& v : p.vertices()) {
    const unsigned n = static_cast<unsigned>(v.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      FacetSet s;
      for (unsigned i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(v[i]);
      faces[s.size() - 1].insert(std::move(s));
    }
  }
  std::vector<long long> f;
  for (const auto& level : faces) f.push_back(static_cast<long long>(level.size()));
  return f;
}

std::vector<long long> h_vector(const SimplePolytope& p) {
  const int n = p.dim();
  const auto f = f_vector(p);
  // sum_k h_k t^{n-k} = sum_{i=0}^{n} f_{i-1} (t-1)^{n-i},  f_{-1} = 1.
  std::vector<long long> coeff(static_cast<std::size_t>(n) + 1, 0);  // coeff[j] of t^j
  for (int i = 0; i <= n; ++i) {
    const long long fi = (i == 0) ? 1 : f[static_cast<std::size_t>(i - 1)];
    const int e = n - i;
    long long binom = 1;
    for (int j = 0; j <= e; ++j) {
      // (t-1)^e = sum_j C(e,j) t^j (-1)^{e-j}
      const long long sign = ((e - j) % 2 == 0) ? 1 : -1;
      coeff[static_cast<std::size_t>(j)] += fi * binom * sign;
      binom = binom * (e - j) / (j + 1);
    }
  }
  std::vector<long long> h(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) h[static_cast<std::size_t>(k)] = coeff[static_cast<std::size_t>(n - k)];
  return h;
}

bool preserves_vertices(const SimplePolytope& p, const FacetPermutation& g) {
  if (static_cast<int>(g.images.size()) != p.num_facets()) return false;
  for (const auto& v : p.vertices()) {
    FacetSet image;
    for (int f : v) image.push_back(g(f));
    std::sort(image.begin(), image.end());
    if (!p.is_vertex(image)) return false;
  }
  return true;
}

std::vector<FacetPermutation> automorphisms(const SimplePolytope& p) {
  const int m = p.num_facets();
  if (m > kMaxAutomorphismFacets)
    fail(ErrorCode::Capability, "automorphism search is limited to " + std::to_string(kMaxAutomorphismFacets) + " facets");

  // Backtracking in facet order; a partial assignment survives only if every
  // vertex restricted to assigned facets maps into a face.
  std::vector<int> degree(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& v : p.vertices())
    for (int f : v) ++degree[static_cast<std::size_t>(f)];

  std::vector<FacetPermutation> out;
  std::vector<int> images(static_cast<std::size_t>(m), 0);
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);

  auto partial_ok = [&](int assigned) {
    for (const auto& v : p.vertices()) {
      FacetSet image;
      for (int f : v)
        if (f <= assigned) image.push_back(images[static_cast<std::size_t>(f - 1)]);
      std::sort(image.begin(), image.end());
      if (!p.is_face(image)) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, int facet) -> void {
    if (facet > m) {
      FacetPermutation g{images};
      if (preserves_vertices(p, g)) out.push_back(std::move(g));
      return;
    }
    for (int target = 1; target <= m; ++target) {
      if (used[static_cast<std::size_t>(target)] || degree[static_cast<std::size_t>(target)] != degree[static_cast<std::size_t>(facet)]) continue;
      images[static_cast<std::size_t>(facet - 1)] = target;
      used[static_cast<std::size_t>(target)] = true;
      if (partial_ok(facet)) self(self, facet + 1);
      used[static_cast<std::size_t>(target)] = false;
    }
    images[static_cast<std::size_t>(facet - 1)] = 0;
  };
  recurse(recurse, 1);
  return out;
}

}  // namespace qtoric::polytope
