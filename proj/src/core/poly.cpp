#include "poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace qtoric {

int monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da > db;
  return a > b;
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree, const std::vector<bool>& active) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial current(num_vars, 0);
  auto is_active = [&](std::size_t i) { return active.empty() || active[i]; };
  // Exponents of earlier variables are tried from high to low, which yields
  // lex-descending order within the degree.
  auto recurse = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var == num_vars) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    if (!is_active(var)) {
      current[var] = 0;
      self(self, var + 1, remaining);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[var] = e;
      self(self, var + 1, remaining - e);
    }
    current[var] = 0;
  };
  recurse(recurse, 0, degree);
  return out;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    s += names.at(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

Polynomial Polynomial::constant(std::size_t num_vars, Int c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index, Int c) {
  if (index >= num_vars) fail(ErrorCode::InvalidArgument, "variable index out of range");
  Polynomial p(num_vars);
  Monomial m(num_vars, 0);
  m[index] = 1;
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::linear(std::span<const Int> coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p += variable(coeffs.size(), i, coeffs[i]);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = monomial_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return monomial_degree(t.first) == d; });
}

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

bool Polynomial::involves(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [index](const auto& t) { return t.first[index] != 0; });
}

void Polynomial::add_term(const Monomial& m, Int c) {
  if (m.size() != num_vars_) fail(ErrorCode::InvalidArgument, "monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out(num_vars_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) == degree) out.terms_.emplace(m, c);
  return out;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial out(num_vars_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) <= max_degree) out.terms_.emplace(m, c);
  return out;
}

Polynomial Polynomial::reduced_mod(Int modulus) const {
  if (modulus == 0) return *this;
  Polynomial out(num_vars_);
  for (const auto& [m, c] : terms_) {
    const Int r = ((c % modulus) + modulus) % modulus;
    if (r != 0) out.terms_.emplace(m, r);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) fail(ErrorCode::InvalidArgument, "polynomials live in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) fail(ErrorCode::InvalidArgument, "polynomials live in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, checked::sub(0, c));
  return *this;
}

Polynomial& Polynomial::operator*=(Int c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = checked::mul(v, c);
  return *this;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Int>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const bool unit_monomial = monomial_degree(m) == 0;
    Int mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1 || unit_monomial) os << mag;
    if (!unit_monomial) os << monomial_string(m, names);
    first = false;
  }
  return os.str();
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(Polynomial a) { return a *= -1; }
Polynomial operator*(Polynomial a, Int c) { return a *= c; }

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree) {
  if (a.num_vars() != b.num_vars()) fail(ErrorCode::InvalidArgument, "polynomials live in different rings");
  Polynomial out(a.num_vars());
  Monomial m(a.num_vars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      if (max_degree >= 0 && monomial_degree(m) > max_degree) continue;
      out.add_term(m, checked::mul(ca, cb));
    }
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply_truncated(a, b, -1); }

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.num_vars()) fail(ErrorCode::InvalidArgument, "substitution needs one image per variable");
  if (images.empty()) return p;
  const std::size_t n = images.front().num_vars();
  for (const auto& im : images)
    if (im.num_vars() != n) fail(ErrorCode::InvalidArgument, "substitution images live in different rings");
  Polynomial out(n);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) term = term * images[i];
    out += term;
  }
  return out;
}

std::vector<std::string> default_names(std::size_t num_vars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace qtoric
