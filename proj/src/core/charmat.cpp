#include "charmat.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace qtoric::charmat {

CharMatrix::CharMatrix(SimplePolytope polytope, IntMatrix entries)
    : polytope_(std::move(polytope)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.rows()) != polytope_.dim() || static_cast<int>(entries_.cols()) != polytope_.num_facets())
    fail(ErrorCode::InvalidArgument, "characteristic matrix must be " + std::to_string(polytope_.dim()) + "x" +
                                         std::to_string(polytope_.num_facets()));
}

std::vector<Int> CharMatrix::column(int facet) const {
  std::vector<Int> c(entries_.rows());
  for (std::size_t r = 0; r < entries_.rows(); ++r) c[r] = entries_(r, static_cast<std::size_t>(facet - 1));
  return c;
}

Validation validate(const CharMatrix& lambda) {
  Validation out;
  const auto& e = lambda.entries();
  std::vector<std::size_t> rows(e.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (const auto& vertex : lambda.polytope().vertices()) {
    std::vector<std::size_t> cols;
    for (int f : vertex) cols.push_back(static_cast<std::size_t>(f - 1));
    const Int d = determinant(e.submatrix(rows, cols));
    if (d != 1 && d != -1) {
      out.valid = false;
      out.failing_vertices.push_back(vertex);
      out.failing_minors.push_back(d);
    }
  }
  return out;
}

IntMatrix StarForm::right_block() const {
  return IntMatrix{{1, x(1), x(2)}, {y(1), 1, x(3)}, {y(2), y(3), 1}};
}

IntMatrix StarForm::matrix() const {
  IntMatrix m(3, 6);
  const IntMatrix r = right_block();
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, i) = 1;
    for (std::size_t j = 0; j < 3; ++j) m(i, 3 + j) = r(i, j);
  }
  return m;
}

std::string StarForm::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < 6; ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

StarForm parse_star(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream is(cleaned);
  StarForm sf;
  for (std::size_t i = 0; i < 6; ++i)
    if (!(is >> sf.v[i])) fail(ErrorCode::Parse, "star form needs six integers: \"" + text + "\"");
  std::string rest;
  if (is >> rest) fail(ErrorCode::Parse, "trailing input in star form: \"" + text + "\"");
  return sf;
}

bool pairs_admissible(const StarForm& sf) {
  for (int i = 1; i <= 3; ++i) {
    const Int p = sf.x(i) * sf.y(i);
    if (p != 0 && p != 2) return false;
  }
  return true;
}

bool is_characteristic(const StarForm& sf) {
  if (!pairs_admissible(sf)) return false;
  const Int d = determinant(sf.right_block());
  return d == 1 || d == -1;
}

StarForm checked_star(const std::array<Int, 6>& entries) {
  StarForm sf{entries};
  if (!is_characteristic(sf)) fail(ErrorCode::InvalidMatrix, "not a characteristic star form: " + sf.str());
  return sf;
}

CharMatrix to_char_matrix(const StarForm& sf) { return CharMatrix(polytope::cube(), sf.matrix()); }

StarForm to_star_form(const IntMatrix& m) {
  if (m.rows() != 3 || m.cols() != 6) fail(ErrorCode::InvalidArgument, "cube characteristic matrix must be 3x6");
  const std::size_t left_cols[] = {0, 1, 2};
  const std::size_t all_rows[] = {0, 1, 2};
  IntMatrix normalized = unimodular_inverse(m.submatrix(all_rows, left_cols)) * m;
  for (std::size_t i = 0; i < 3; ++i) {
    const Int d = normalized(i, 3 + i);
    if (d != 1 && d != -1)
      fail(ErrorCode::InvalidMatrix, "non-singular condition fails; normalized diagonal entry " + std::to_string(d));
    for (std::size_t r = 0; r < 3; ++r) normalized(r, 3 + i) *= d;
  }
  return StarForm{{normalized(0, 4), normalized(1, 3), normalized(0, 5), normalized(2, 3), normalized(1, 5),
                   normalized(2, 4)}};
}

StarForm to_star_form(const CharMatrix& lambda) {
  if (!(lambda.polytope() == polytope::cube())) fail(ErrorCode::InvalidArgument, "star form requires the cube");
  return to_star_form(lambda.entries());
}

std::array<int, 3> class_label(const StarForm& sf) {
  std::array<int, 3> eps{};
  for (int i = 1; i <= 3; ++i) {
    const Int p = sf.x(i) * sf.y(i);
    if (p == 0)
      eps[static_cast<std::size_t>(i - 1)] = 0;
    else if (p == 2)
      eps[static_cast<std::size_t>(i - 1)] = 2;
    else
      fail(ErrorCode::InvalidMatrix, "pair " + std::to_string(i) + " of " + sf.str() + " lies outside C0 and C2");
  }
  return eps;
}

StarForm act(const FacetPermutation& g, const StarForm& sf) {
  const IntMatrix m = sf.matrix();
  IntMatrix moved(3, 6);
  for (int j = 1; j <= 6; ++j)
    for (std::size_t r = 0; r < 3; ++r) moved(r, static_cast<std::size_t>(g(j) - 1)) = m(r, static_cast<std::size_t>(j - 1));
  return to_star_form(moved);
}

namespace {

constexpr std::array<std::array<Int, 3>, 4> kRowSigns{{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}};

StarForm conjugate(const StarForm& sf, const std::array<Int, 3>& s) {
  return StarForm{{sf.x(1) * s[0] * s[1], sf.y(1) * s[0] * s[1], sf.x(2) * s[0] * s[2], sf.y(2) * s[0] * s[2],
                   sf.x(3) * s[1] * s[2], sf.y(3) * s[1] * s[2]}};
}

}  // namespace

std::array<StarForm, 4> sign_conjugates(const StarForm& sf) {
  std::array<StarForm, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = conjugate(sf, kRowSigns[k]);
  return out;
}

bool same_sign_class(const StarForm& a, const StarForm& b) {
  const auto conj = sign_conjugates(a);
  return std::find(conj.begin(), conj.end(), b) != conj.end();
}

const std::vector<FacetPermutation>& cube_automorphisms() {
  static const std::vector<FacetPermutation> group = polytope::automorphisms(polytope::cube());
  return group;
}

std::vector<StarForm> orbit(const StarForm& sf) {
  std::set<StarForm> seen;
  for (const auto& g : cube_automorphisms()) {
    const StarForm moved = act(g, sf);
    for (const auto& s : kRowSigns) seen.insert(conjugate(moved, s));
  }
  return {seen.begin(), seen.end()};
}

Canonical canonicalize(const StarForm& sf) {
  const auto& group = cube_automorphisms();
  Canonical best{act(group.front(), sf), group.front(), kRowSigns[0]};
  for (const auto& g : group) {
    const StarForm moved = act(g, sf);
    for (const auto& s : kRowSigns) {
      const StarForm c = conjugate(moved, s);
      if (c < best.form) best = Canonical{c, g, s};
    }
  }
  return best;
}

std::vector<StarForm> enumerate_star(int bound) {
  if (bound < 0) fail(ErrorCode::InvalidArgument, "bound must be non-negative");
  std::vector<std::pair<Int, Int>> pairs;
  for (Int x = -bound; x <= bound; ++x)
    for (Int y = -bound; y <= bound; ++y)
      if (x * y == 0 || x * y == 2) pairs.emplace_back(x, y);
  std::vector<StarForm> out;
  for (const auto& p1 : pairs)
    for (const auto& p2 : pairs)
      for (const auto& p3 : pairs) {
        StarForm sf{{p1.first, p1.second, p2.first, p2.second, p3.first, p3.second}};
        if (is_characteristic(sf)) out.push_back(sf);
      }
  return out;
}

namespace {

const std::array<StarForm, 11> kChi{{
    {{0, 1, 2, 0, 2, 1}},  // 1
    {{0, 2, 1, 0, 2, 1}},  // 2
    {{1, 0, 0, 1, 2, 1}},  // 3
    {{1, 0, 1, 2, 1, 2}},  // 4
    {{2, 0, 1, 2, 1, 2}},  // 5
    {{1, 0, 1, 2, 2, 1}},  // 6
    {{2, 0, 2, 1, 1, 2}},  // 7
    {{4, 0, 2, 1, 1, 2}},  // 8
    {{1, 0, 2, 1, 2, 1}},  // 9
    {{2, 0, 2, 1, 2, 1}},  // 10
    {{2, 1, 2, 1, 2, 1}},  // 11
}};

const std::array<StarForm, 7> kGamma{{
    {{0, -1, 2, 0, 0, 1}},  // 1, the image of chi1 under tau1
    {{0, 1, 2, 1, 0, 1}},   // 2
    {{2, 1, 2, 0, 2, 1}},   // 3
    {{0, 1, 2, 1, 2, 1}},   // 4
    {{2, 1, 2, 0, 0, 1}},   // 5
    {{1, 0, 1, 2, 1, 0}},   // 6
    {{0, 4, 1, 2, 2, 1}},   // 7
}};

}  // namespace

StarForm chi(int k) {
  if (k < 1 || k > 11) fail(ErrorCode::InvalidArgument, "chi index out of range");
  return kChi[static_cast<std::size_t>(k - 1)];
}

StarForm gamma(int k) {
  if (k < 1 || k > 7) fail(ErrorCode::InvalidArgument, "gamma index out of range");
  return kGamma[static_cast<std::size_t>(k - 1)];
}

StarForm lambda_st(Int s, Int t) { return StarForm{{s, 0, t, 0, 2, 1}}; }

StarForm colambda_st(Int s, Int t) { return StarForm{{0, s, 0, t, 2, 1}}; }

std::optional<StarForm> builtin(const std::string& name) {
  auto parse_index = [](std::string_view digits, int& out) {
    if (digits.empty()) return false;
    auto res = std::from_chars(digits.data(), digits.data() + digits.size(), out);
    return res.ec == std::errc{} && res.ptr == digits.data() + digits.size();
  };
  auto parse_pair = [](std::string_view text, Int& s, Int& t) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) return false;
    auto a = text.substr(0, comma);
    auto b = text.substr(comma + 1);
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), s);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), t);
    return r1.ec == std::errc{} && r1.ptr == a.data() + a.size() && r2.ec == std::errc{} &&
           r2.ptr == b.data() + b.size() && !a.empty() && !b.empty();
  };
  std::string_view n = name;
  int k = 0;
  Int s = 0, t = 0;
  if (n.starts_with("chi") && parse_index(n.substr(3), k) && k >= 1 && k <= 11) return chi(k);
  if (n.starts_with("gamma") && parse_index(n.substr(5), k) && k >= 1 && k <= 7) return gamma(k);
  if (n.starts_with("lambda:") && parse_pair(n.substr(7), s, t)) return lambda_st(s, t);
  if (n.starts_with("colambda:") && parse_pair(n.substr(9), s, t)) return colambda_st(s, t);
  return std::nullopt;
}

FacetPermutation sigma(int i) {
  switch (i) {
    case 1: return polytope::make_permutation(6, {{1, 2}, {4, 5}});
    case 2: return polytope::make_permutation(6, {{1, 3}, {4, 6}});
    case 3: return polytope::make_permutation(6, {{2, 3}, {5, 6}});
    default: fail(ErrorCode::InvalidArgument, "sigma index out of range");
  }
}

FacetPermutation tau(int i) {
  if (i < 1 || i > 3) fail(ErrorCode::InvalidArgument, "tau index out of range");
  return polytope::make_permutation(6, {{i, i + 3}});
}

bool in_a1(const StarForm& sf) { return sf.y(1) == 0 && sf.y(2) == 0 && sf.y(3) == 0; }

bool in_a2(const StarForm& sf) { return sf.y(1) == 0 && sf.y(2) == 0 && sf.x(3) == 2 && sf.y(3) == 1; }

bool in_a3(const StarForm& sf) { return sf.x(1) == 0 && sf.x(2) == 0 && sf.x(3) == 2 && sf.y(3) == 1; }

std::string FamilyTag::name() const {
  switch (family) {
    case Family::A1: return "A1";
    case Family::A2: return "A2";
    case Family::A3: return "A3";
    case Family::Chi: return "Chi(" + std::to_string(index) + ")";
    case Family::Gamma: return "Gamma(" + std::to_string(index) + ")";
    case Family::Other: return "Other";
  }
  return "Other";
}

FamilyTag family_of(const StarForm& sf) {
  FamilyTag tag;
  tag.epsilon = class_label(sf);
  for (std::size_t k = 0; k < kChi.size(); ++k)
    if (kChi[k] == sf) {
      tag.family = Family::Chi;
      tag.index = static_cast<int>(k) + 1;
      return tag;
    }
  for (std::size_t k = 0; k < kGamma.size(); ++k)
    if (kGamma[k] == sf) {
      tag.family = Family::Gamma;
      tag.index = static_cast<int>(k) + 1;
      return tag;
    }
  if (in_a1(sf))
    tag.family = Family::A1;
  else if (in_a3(sf))
    tag.family = Family::A3;
  else if (in_a2(sf))
    tag.family = Family::A2;
  return tag;
}

bool is_final_family(const FamilyTag& tag) {
  switch (tag.family) {
    case Family::A1:
    case Family::A2:
    case Family::A3: return true;
    case Family::Chi: return tag.index == 1 || tag.index == 5 || tag.index == 6 || tag.index == 10;
    default: return false;
  }
}

ClassFamily class_family(const StarForm& sf) {
  ClassFamily out;
  out.witness = sf;
  std::vector<FamilyTag> tags;
  std::vector<StarForm> witnesses;
  for (const auto& member : orbit(sf)) {
    std::vector<FamilyTag> member_tags;
    const FamilyTag exact = family_of(member);
    if (exact.family == Family::Chi && is_final_family(exact)) member_tags.push_back(exact);
    // A-family membership is checked independently of the table match.
    FamilyTag a;
    a.epsilon = exact.epsilon;
    if (in_a1(member)) {
      a.family = Family::A1;
      member_tags.push_back(a);
    } else if (in_a3(member)) {
      a.family = Family::A3;
      member_tags.push_back(a);
    } else if (in_a2(member)) {
      a.family = Family::A2;
      member_tags.push_back(a);
    }
    for (const auto& t : member_tags)
      if (std::find(tags.begin(), tags.end(), t) == tags.end()) {
        tags.push_back(t);
        witnesses.push_back(member);
      }
  }
  for (const auto& t : tags) out.found.push_back(t.name());
  if (!tags.empty()) {
    out.tag = tags.front();
    out.witness = witnesses.front();
  } else {
    out.tag.epsilon = class_label(sf);
  }
  out.ambiguous = tags.size() > 1;
  return out;
}

}  // namespace qtoric::charmat
