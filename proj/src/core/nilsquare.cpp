// Exact rational zero locus of the square map H^2 -> H^4.
//
// The square of W = sum a_i b_i is a vector of ternary quadratic forms in
// (a_1, a_2, a_3). Their common rational zeros in P^2 are found chart by
// chart: on z = 1 a nonzero resultant in x pins y down to finitely many
// rational roots, each of which leaves univariate conditions on x; the line
// z = 0 and the point [1:0:0] are handled directly.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "ringkit.hpp"

namespace qtoric::ringkit {

namespace {

using Big = boost::multiprecision::cpp_int;
using UPoly = std::vector<Big>;  // coefficient of t^i at index i

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly add(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

UPoly scale(UPoly a, const Big& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

// Determinant of a small matrix of univariate polynomials by cofactor
// expansion; Sylvester matrices here are at most 4 x 4.
UPoly poly_det(const std::vector<std::vector<UPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {Big(1)};
  if (n == 1) return m[0][0];
  UPoly out;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].empty()) continue;
    std::vector<std::vector<UPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<UPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    UPoly term = mul(m[0][c], poly_det(minor));
    if (c % 2 == 1) term = scale(term, Big(-1));
    out = add(out, term);
  }
  return out;
}

// Polynomial in x whose coefficients are polynomials in y.
using BiPoly = std::vector<UPoly>;

std::size_t x_degree(const BiPoly& f) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].empty()) d = i;
  return d;
}

bool is_zero(const BiPoly& f) {
  return std::all_of(f.begin(), f.end(), [](const UPoly& c) { return c.empty(); });
}

UPoly resultant_x(const BiPoly& f, const BiPoly& g) {
  const std::size_t m = x_degree(f), n = x_degree(g);
  if (m == 0) return f[0];
  if (n == 0) return g[0];
  const std::size_t size = m + n;
  std::vector<std::vector<UPoly>> syl(size, std::vector<UPoly>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) syl[r][r + i] = f[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) syl[n + r][r + i] = g[n - i];
  return poly_det(syl);
}

Big abs_big(const Big& x) { return x < 0 ? Big(-x) : x; }

std::vector<Big> divisors(const Big& value) {
  const Big v = abs_big(value);
  if (v > Big(1000000000000000000LL)) fail(ErrorCode::Capability, "coefficient too large for rational root search");
  std::vector<Big> out;
  for (Big d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

struct Rational {
  Big num, den;  // den > 0, reduced
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
};

// Sum a_i p^i q^(n-i); zero iff p/q is a root.
Big eval_scaled(const UPoly& a, const Big& p, const Big& q) {
  const std::size_t n = a.size() - 1;
  Big acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * pow(p, static_cast<unsigned>(i)) * pow(q, static_cast<unsigned>(n - i));
  return acc;
}

std::vector<Rational> rational_roots(UPoly a) {
  trim(a);
  std::vector<Rational> out;
  if (a.size() <= 1) return out;
  std::size_t shift = 0;
  while (a[shift] == 0) ++shift;
  if (shift > 0) {
    out.push_back({Big(0), Big(1)});
    a.erase(a.begin(), a.begin() + static_cast<long>(shift));
  }
  if (a.size() <= 1) return out;
  std::set<Rational> found;
  for (const Big& p : divisors(a.front()))
    for (const Big& q : divisors(a.back())) {
      if (gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        const Big num = p * sign;
        if (eval_scaled(a, num, q) == 0) found.insert({num, q});
      }
    }
  out.insert(out.end(), found.begin(), found.end());
  return out;
}

// Ternary quadratic form: coefficient of x^i y^j z^(2-i-j) stored at [i][j].
using Form = std::array<std::array<Big, 3>, 3>;

BiPoly chart_z1(const Form& f) {
  BiPoly out(3);
  for (std::size_t i = 0; i < 3; ++i) {
    UPoly c(3);
    for (std::size_t j = 0; i + j <= 2; ++j) c[j] = f[i][j];
    trim(c);
    out[i] = std::move(c);
  }
  return out;
}

UPoly specialize(const BiPoly& f, const Rational& y) {
  // f(x, p/q) * q^2, as a polynomial in x.
  UPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Big acc = 0;
    for (std::size_t j = 0; j < f[i].size(); ++j)
      acc += f[i][j] * pow(y.num, static_cast<unsigned>(j)) * pow(y.den, static_cast<unsigned>(2 - j));
    out[i] = acc;
  }
  trim(out);
  return out;
}

// Common rational roots of univariate polynomials; `all` is set when every
// polynomial vanishes identically.
std::vector<Rational> common_roots(const std::vector<UPoly>& polys, bool& all) {
  all = true;
  const UPoly* first = nullptr;
  for (const auto& p : polys)
    if (!p.empty()) {
      all = false;
      if (!first) first = &p;
    }
  if (all) return {};
  std::vector<Rational> out;
  for (const auto& r : rational_roots(*first)) {
    bool ok = true;
    for (const auto& p : polys)
      if (!p.empty() && eval_scaled(p, r.num, r.den) != 0) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

using Point = std::array<Big, 3>;

Point primitive(Point p) {
  Big g = 0;
  for (const auto& x : p) g = gcd(g, abs_big(x));
  for (auto& x : p) x /= g;
  for (const auto& x : p)
    if (x != 0) {
      if (x < 0)
        for (auto& y : p) y = -y;
      break;
    }
  return p;
}

struct Locus {
  std::set<Point> points;
  bool infinite = false;
};

Locus projective_zeros(const std::vector<Form>& forms) {
  Locus out;
  // Chart z = 1.
  std::vector<BiPoly> bi;
  for (const auto& f : forms) {
    BiPoly b = chart_z1(f);
    if (!is_zero(b)) bi.push_back(std::move(b));
  }
  if (bi.empty()) {
    out.infinite = true;
    return out;
  }
  UPoly constraint;
  for (std::size_t i = 0; i < bi.size() && constraint.empty(); ++i) {
    if (x_degree(bi[i]) == 0) constraint = bi[i][0];
    for (std::size_t j = i + 1; j < bi.size() && constraint.empty(); ++j) constraint = resultant_x(bi[i], bi[j]);
  }
  if (constraint.empty()) {
    out.infinite = true;
    return out;
  }
  for (const auto& y : rational_roots(constraint)) {
    std::vector<UPoly> spec;
    for (const auto& b : bi) spec.push_back(specialize(b, y));
    bool all = false;
    const auto xs = common_roots(spec, all);
    if (all) {
      out.infinite = true;
      return out;
    }
    for (const auto& x : xs) out.points.insert(primitive({x.num * y.den, y.num * x.den, x.den * y.den}));
  }
  // Line z = 0, chart y = 1: coefficients of x^i y^(2-i).
  std::vector<UPoly> line;
  for (const auto& f : forms) {
    UPoly p(3);
    for (std::size_t i = 0; i < 3; ++i) p[i] = f[i][2 - i];
    trim(p);
    line.push_back(std::move(p));
  }
  bool all = false;
  const auto xs = common_roots(line, all);
  if (all) {
    out.infinite = true;
    return out;
  }
  for (const auto& x : xs) out.points.insert(primitive({x.num, x.den, Big(0)}));
  // The point [1:0:0].
  if (std::all_of(forms.begin(), forms.end(), [](const Form& f) { return f[2][0] == 0; }))
    out.points.insert({Big(1), Big(0), Big(0)});
  return out;
}

bool on_line(const std::vector<Int>& w, const std::vector<Int>& v) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (static_cast<__int128>(w[i]) * v[j] != static_cast<__int128>(w[j]) * v[i]) return false;
  return true;
}

}  // namespace

std::string NilSquare::describe() const {
  auto vec = [](const std::vector<Int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
  };
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Line: return "Z" + vec(lines.front());
    case Kind::Lines: {
      std::string s = "union of lines";
      for (const auto& l : lines) s += " Z" + vec(l);
      return s;
    }
    case Kind::Infinite: return "positive-dimensional";
  }
  return "?";
}

NilSquare nilsquare2(const GradedRing& ring, int crosscheck_bound) {
  if (ring.modulus() != 0) fail(ErrorCode::InvalidArgument, "nil-square locus is computed over Z");
  if (ring.max_degree() < 4) fail(ErrorCode::InvalidArgument, "nil-square locus needs degree 4");
  const std::size_t r2 = ring.rank(2), r4 = ring.rank(4);
  if (r2 > 3) fail(ErrorCode::Capability, "nil-square locus is implemented for rank(H^2) <= 3");
  NilSquare out;
  out.crosscheck_bound = crosscheck_bound;
  if (r2 == 0) return out;

  // products[i][j] = b_i b_j in H^4.
  std::vector<std::vector<RingElement>> products(r2, std::vector<RingElement>(r2));
  for (std::size_t i = 0; i < r2; ++i)
    for (std::size_t j = i; j < r2; ++j)
      products[i][j] = products[j][i] = ring.multiply(ring.basis_element(2, i), ring.basis_element(2, j));

  // Forms in (a_1, a_2, a_3); unused coordinates are forced to zero by
  // adding their squares.
  std::vector<Form> forms;
  auto exponents = [](std::size_t i, std::size_t j) {
    std::array<std::size_t, 3> e{0, 0, 0};
    ++e[i];
    ++e[j];
    return e;
  };
  for (std::size_t k = 0; k < r4; ++k) {
    Form f{};
    for (std::size_t i = 0; i < r2; ++i)
      for (std::size_t j = i; j < r2; ++j) {
        const auto e = exponents(i, j);
        f[e[0]][e[1]] += Big(products[i][j].coeffs[k]) * (i == j ? 1 : 2);
      }
    forms.push_back(f);
  }
  for (std::size_t extra = r2; extra < 3; ++extra) {
    Form f{};
    const auto e = exponents(extra, extra);
    f[e[0]][e[1]] = 1;
    forms.push_back(f);
  }

  const Locus locus = projective_zeros(forms);

  auto square_is_zero = [&](const std::vector<Int>& w) {
    for (std::size_t k = 0; k < r4; ++k) {
      Big acc = 0;
      for (std::size_t i = 0; i < r2; ++i)
        for (std::size_t j = 0; j < r2; ++j) acc += Big(w[i]) * w[j] * products[i][j].coeffs[k];
      if (acc != 0) return false;
    }
    return true;
  };

  for (const auto& p : locus.points) {
    std::vector<Int> v(r2);
    for (std::size_t i = 0; i < r2; ++i) v[i] = static_cast<Int>(p[i]);
    if (!square_is_zero(v)) fail(ErrorCode::Internal, "nil-square solver produced a non-solution");
    out.lines.push_back(std::move(v));
  }
  std::sort(out.lines.begin(), out.lines.end());
  if (locus.infinite)
    out.kind = NilSquare::Kind::Infinite;
  else if (out.lines.empty())
    out.kind = NilSquare::Kind::Zero;
  else if (out.lines.size() == 1)
    out.kind = NilSquare::Kind::Line;
  else
    out.kind = NilSquare::Kind::Lines;

  // Brute-force cross-check over the box.
  std::vector<Int> w(r2, -crosscheck_bound);
  for (;;) {
    const bool nonzero = std::any_of(w.begin(), w.end(), [](Int x) { return x != 0; });
    if (nonzero && square_is_zero(w)) {
      const bool covered = std::any_of(out.lines.begin(), out.lines.end(), [&](const auto& l) { return on_line(w, l); });
      if (!covered) out.crosscheck_misses.push_back(w);
    }
    std::size_t i = 0;
    while (i < r2 && w[i] == crosscheck_bound) w[i++] = -crosscheck_bound;
    if (i == r2) break;
    ++w[i];
  }
  return out;
}

}  // namespace qtoric::ringkit
