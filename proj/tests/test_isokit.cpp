#include <gtest/gtest.h>

#include <random>

#include "charmat.hpp"
#include "classes.hpp"
#include "errors.hpp"
#include "isokit.hpp"
#include "oracles.hpp"

using namespace qtoric;
using namespace qtoric::isokit;
using charmat::StarForm;

namespace {

ringkit::GradedRing ring_of(const StarForm& sf) { return ringkit::realize(ringkit::small_presentation(sf), 6); }

bool residuals_vanish(const IntMatrix& L, const StarForm& src, const ringkit::GradedRing& dst) {
  for (const auto& r : residuals(L, ringkit::small_presentation(src), dst))
    if (!r.is_zero()) return false;
  return true;
}

oracle::M3 to_m3(const IntMatrix& L) {
  oracle::M3 m{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = L(i, j);
  return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, Int bound) {
  IntMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = static_cast<Int>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return m;
}

Int random_in(std::mt19937_64& rng, Int lo, Int hi) {
  return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

IntMatrix negated(IntMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  return m;
}

bool contains(const std::vector<IntMatrix>& v, const IntMatrix& m) {
  return std::find(v.begin(), v.end(), m) != v.end();
}

// Solutions found by search plus single-entry perturbations of them: the
// interesting region for an equivalence test, where random L almost never
// land.
std::vector<IntMatrix> near_solutions(const std::vector<IntMatrix>& sols, std::mt19937_64& rng) {
  std::vector<IntMatrix> out = sols;
  for (const auto& s : sols) {
    IntMatrix p = s;
    p(rng() % 3, rng() % 3) += (rng() % 2) ? 1 : -1;
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(Residuals, Examples) {
  const auto sf = charmat::lambda_st(2, 5);
  const auto r = ring_of(sf);
  EXPECT_TRUE(residuals_vanish(IntMatrix::identity(3), sf, r));
  EXPECT_TRUE(residuals_vanish(IntMatrix{{1, 0, 3}, {0, 1, 2}, {0, 0, -1}}, sf, r));
  EXPECT_FALSE(residuals_vanish(IntMatrix{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}, sf, r));
}

TEST(Residuals, EquivalentToLambdaFamilyEquations) {
  std::mt19937_64 rng(31);
  int agreements_true = 0;
  for (int n = 0; n < 1000; ++n) {
    const Int s = random_in(rng, -3, 3), t = random_in(rng, -3, 3), x = random_in(rng, -3, 3),
              y = random_in(rng, -3, 3);
    const auto src = charmat::lambda_st(s, t);
    const auto dst = ring_of(charmat::lambda_st(x, y));
    const IntMatrix L = random_matrix(rng, 4);
    const bool lib = residuals_vanish(L, src, dst);
    EXPECT_EQ(lib, oracle::lambda_equations(to_m3(L), s, t, x, y)) << L.to_string();
    agreements_true += lib;
  }
  // Known solutions and their perturbations.
  for (const auto& [s, t, x, y] : std::vector<std::array<Int, 4>>{{1, 0, 1, 0}, {2, 1, -1, 1}, {-1, -2, 1, 0}, {0, 1, -1, -1}}) {
    const auto src = charmat::lambda_st(s, t);
    const auto dst = ring_of(charmat::lambda_st(x, y));
    const auto sols = find_isomorphisms(ring_of(src), dst, 3);
    for (const auto& L : near_solutions(sols, rng)) {
      const bool lib = residuals_vanish(L, src, dst);
      EXPECT_EQ(lib, oracle::lambda_equations(to_m3(L), s, t, x, y)) << L.to_string();
      agreements_true += lib;
    }
  }
  EXPECT_GT(agreements_true, 0);
}

TEST(Residuals, EquivalentToChiOneEquations) {
  std::mt19937_64 rng(37);
  const auto sf = charmat::chi(1);
  const auto r = ring_of(sf);
  for (int n = 0; n < 1000; ++n) {
    const IntMatrix L = random_matrix(rng, 4);
    EXPECT_EQ(residuals_vanish(L, sf, r), oracle::chi1_equations(to_m3(L))) << L.to_string();
  }
  for (const auto& L : near_solutions({IntMatrix::identity(3), negated(IntMatrix::identity(3))}, rng))
    EXPECT_EQ(residuals_vanish(L, sf, r), oracle::chi1_equations(to_m3(L))) << L.to_string();
  EXPECT_TRUE(oracle::chi1_equations(to_m3(IntMatrix::identity(3))));
}

TEST(Residuals, EquivalentToColambdaFamilyEquations) {
  std::mt19937_64 rng(41);
  int agreements_true = 0;
  auto check = [&](const IntMatrix& L, Int s, Int t, Int x, Int y) {
    const auto src = charmat::colambda_st(s, t);
    const auto dst = ring_of(charmat::colambda_st(x, y));
    const bool lib = residuals_vanish(L, src, dst);
    EXPECT_EQ(lib, oracle::colambda_equations(to_m3(L), s, t, x, y)) << L.to_string();
    agreements_true += lib;
  };
  for (int n = 0; n < 1000; ++n) {
    IntMatrix L = random_matrix(rng, 4);
    L(0, 1) = L(0, 2) = 0;
    check(L, random_in(rng, -3, 3), random_in(rng, -3, 3), random_in(rng, -3, 3), random_in(rng, -3, 3));
  }
  for (const auto& [s, t, x, y] : std::vector<std::array<Int, 4>>{{1, 2, 3, 1}, {2, 1, 0, 1}, {-1, 3, 1, -3}}) {
    const auto sols = find_isomorphisms(ring_of(charmat::colambda_st(s, t)), ring_of(charmat::colambda_st(x, y)), 3);
    for (auto L : near_solutions(sols, rng)) {
      L(0, 1) = L(0, 2) = 0;
      check(L, s, t, x, y);
    }
  }
  EXPECT_GT(agreements_true, 0);
}

TEST(IsIsomorphism, Examples) {
  EXPECT_TRUE(is_isomorphism(alpha10(), ring_of(charmat::lambda_st(-2, -2)), ring_of(charmat::chi(10))));
  EXPECT_EQ(alpha10(), (IntMatrix{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(alpha5(), (IntMatrix{{1, 0, 0}, {0, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(alpha6(), (IntMatrix{{-1, 0, 0}, {2, 1, 0}, {0, 0, 1}}));
  for (const auto& sf : {charmat::chi(3), charmat::gamma(7), charmat::lambda_st(4, -1), StarForm{}}) {
    const auto r = ring_of(sf);
    EXPECT_TRUE(is_isomorphism(negated(IntMatrix::identity(3)), r, r)) << sf.str();
  }
  std::string why;
  EXPECT_FALSE(is_isomorphism(IntMatrix::identity(3), ring_of(charmat::lambda_st(1, 1)),
                              ring_of(charmat::colambda_st(1, 1)), &why));
  EXPECT_FALSE(why.empty());
  // Relations map into relations but det = 2.
  const auto r = ring_of(StarForm{});
  EXPECT_FALSE(is_isomorphism(IntMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}, r, r));
}

TEST(IsIsomorphism, InverseIsAnIsomorphismBack) {
  const std::vector<std::pair<StarForm, StarForm>> pairs{
      {charmat::lambda_st(-1, -2), charmat::chi(5)},
      {charmat::lambda_st(1, 1), charmat::chi(6)},
      {charmat::lambda_st(2, 1), charmat::lambda_st(-1, 1)},
      {charmat::colambda_st(1, 2), charmat::colambda_st(1, 2)},
      {charmat::gamma(1), charmat::chi(1)},
  };
  for (const auto& [a, b] : pairs) {
    const auto ra = ring_of(a), rb = ring_of(b);
    const auto maps = find_isomorphisms(ra, rb, 3);
    ASSERT_FALSE(maps.empty()) << a.str() << " -> " << b.str();
    for (const auto& L : maps) {
      const IntMatrix inv = unimodular_inverse(L);
      EXPECT_TRUE(is_isomorphism(inv, rb, ra)) << L.to_string();
      // The composite acts as the identity on generators.
      EXPECT_EQ(inv * L, IntMatrix::identity(3));
    }
  }
}

TEST(Search, AutomorphismsOfChiOneArePlusMinusIdentity) {
  const auto autos = automorphisms(ring_of(charmat::chi(1)), 6, 2);
  EXPECT_EQ(autos, (std::vector<IntMatrix>{negated(IntMatrix::identity(3)), IntMatrix::identity(3)}));
}

TEST(Search, TrivialRingAtBoundOneGivesSignedPermutations) {
  std::set<std::vector<std::vector<Int>>> expected;
  std::array<int, 3> p{0, 1, 2};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      std::vector<std::vector<Int>> m(3, std::vector<Int>(3, 0));
      for (int i = 0; i < 3; ++i) m[i][p[i]] = (signs >> i) & 1 ? -1 : 1;
      expected.insert(m);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  std::set<std::vector<std::vector<Int>>> got;
  for (const auto& m : automorphisms(ring_of(StarForm{}), 1)) got.insert(m.to_rows());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.size(), 48u);
}

TEST(Search, LambdaAutomorphismsContainTheExplicitSix) {
  const auto autos = automorphisms(ring_of(charmat::lambda_st(2, 5)), 6, 2);
  const auto six = lambda_st_automorphisms(2, 5);
  ASSERT_EQ(six.size(), 6u);
  for (const auto& m : six) EXPECT_TRUE(contains(autos, m)) << m.to_string();
  EXPECT_TRUE(contains(six, IntMatrix{{1, 0, 3}, {0, 1, 2}, {0, 0, -1}}));
  EXPECT_TRUE(contains(six, IntMatrix{{-1, -2, -2}, {0, 1, 2}, {0, 0, -1}}));
}

TEST(Search, FindsTheAlphaMaps) {
  const auto maps = find_isomorphisms(ring_of(charmat::lambda_st(-1, -2)), ring_of(charmat::chi(5)), 3);
  EXPECT_TRUE(contains(maps, alpha5()));
  const auto m6 = find_isomorphisms(ring_of(charmat::lambda_st(1, 1)), ring_of(charmat::chi(6)), 3);
  EXPECT_TRUE(contains(m6, alpha6()));
}

TEST(Search, NegationClosedSortedAndJobIndependent) {
  for (const auto& [a, b] : std::vector<std::pair<StarForm, StarForm>>{
           {charmat::lambda_st(1, 2), charmat::lambda_st(1, 2)},
           {charmat::colambda_st(2, 2), charmat::colambda_st(0, 2)},
           {charmat::chi(9), charmat::chi(1)},
           {StarForm{}, StarForm{}}}) {
    const auto ra = ring_of(a), rb = ring_of(b);
    const auto one = find_isomorphisms(ra, rb, 2, 1);
    const auto four = find_isomorphisms(ra, rb, 2, 4);
    EXPECT_EQ(one, four);
    for (const auto& m : one) EXPECT_TRUE(contains(one, negated(m)));
    EXPECT_TRUE(std::is_sorted(one.begin(), one.end(),
                               [](const IntMatrix& x, const IntMatrix& y) { return x.to_rows() < y.to_rows(); }));
    if (a == b) EXPECT_TRUE(contains(one, negated(IntMatrix::identity(3))));
  }
}

TEST(Search, ExhaustiveAgainstBruteForceAtBoundOne) {
  // 3^9 candidates, checked one by one.
  for (const auto& [a, b] : std::vector<std::pair<StarForm, StarForm>>{
           {charmat::lambda_st(1, 0), charmat::lambda_st(1, 0)},
           {charmat::chi(1), charmat::chi(4)},
           {charmat::colambda_st(1, 1), charmat::colambda_st(1, 1)}}) {
    const auto ra = ring_of(a), rb = ring_of(b);
    std::vector<IntMatrix> brute;
    std::array<Int, 9> e{};
    for (int code = 0; code < 19683; ++code) {
      int c = code;
      for (auto& v : e) {
        v = c % 3 - 1;
        c /= 3;
      }
      const IntMatrix L{{e[0], e[1], e[2]}, {e[3], e[4], e[5]}, {e[6], e[7], e[8]}};
      if (is_isomorphism(L, ra, rb)) brute.push_back(L);
    }
    std::sort(brute.begin(), brute.end(), [](const IntMatrix& x, const IntMatrix& y) { return x.to_rows() < y.to_rows(); });
    EXPECT_EQ(find_isomorphisms(ra, rb, 1), brute) << a.str() << " -> " << b.str();
  }
}

TEST(Search, FamilyStructure) {
  const std::vector<IntMatrix> thetas{theta(1), theta(2), theta(3), theta(4)};
  for (const auto& [s, t, x, y] : std::vector<std::array<Int, 4>>{{1, 0, -1, -2}, {2, 1, 1, 3}, {1, 2, -1, 0}, {3, -2, -3, 2}}) {
    const auto src = classes::manifold_ring(charmat::lambda_st(s, t));
    const auto dst = classes::manifold_ring(charmat::lambda_st(x, y));
    const auto maps = find_isomorphisms(src.integral, dst.integral, 3);
    EXPECT_FALSE(maps.empty());
    for (const auto& L : maps) {
      EXPECT_EQ(std::abs(L(0, 0)), 1);
      EXPECT_EQ(L(1, 0), 0);
      EXPECT_EQ(L(2, 0), 0);
      const IntMatrix block{{L(1, 1), L(1, 2)}, {L(2, 1), L(2, 2)}};
      bool is_theta = false;
      for (const auto& th : thetas) is_theta |= (block == th || block == negated(th));
      EXPECT_TRUE(is_theta) << L.to_string();
      EXPECT_EQ(((L(1, 1) % 2) + 2) % 2, 1);
      EXPECT_EQ(((L(1, 2) % 2) + 2) % 2, 0);
      EXPECT_TRUE(jupp_check(L, src, dst));
    }
  }
  for (const auto& [s, t, x, y] : std::vector<std::array<Int, 4>>{{1, 2, -3, -1}, {2, 1, 0, -1}, {1, 1, -1, 0}}) {
    const auto src = classes::manifold_ring(charmat::colambda_st(s, t));
    const auto dst = classes::manifold_ring(charmat::colambda_st(x, y));
    const auto maps = find_isomorphisms(src.integral, dst.integral, 3);
    EXPECT_FALSE(maps.empty());
    for (const auto& L : maps) {
      EXPECT_EQ(std::abs(L(0, 0)), 1);
      EXPECT_EQ(L(0, 1), 0);
      EXPECT_EQ(L(0, 2), 0);
      EXPECT_TRUE(jupp_check(L, src, dst));
    }
  }
}

TEST(Jupp, AlphaMapsAndIdentity) {
  const auto l5 = classes::manifold_ring(charmat::lambda_st(-1, -2));
  const auto l6 = classes::manifold_ring(charmat::lambda_st(1, 1));
  const auto l10 = classes::manifold_ring(charmat::lambda_st(-2, -2));
  EXPECT_TRUE(jupp_check(alpha5(), l5, classes::manifold_ring(charmat::chi(5))));
  EXPECT_TRUE(jupp_check(alpha6(), l6, classes::manifold_ring(charmat::chi(6))));
  EXPECT_TRUE(jupp_check(alpha10(), l10, classes::manifold_ring(charmat::chi(10))));
  for (const auto& sf : {charmat::chi(7), charmat::gamma(2), StarForm{}}) {
    const auto m = classes::manifold_ring(sf);
    EXPECT_TRUE(jupp_check(IntMatrix::identity(3), m, m));
  }
  try {
    jupp_check(IntMatrix::identity(3), l6, classes::manifold_ring(charmat::colambda_st(1, 1)));
    FAIL() << "accepted a non-isomorphism";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Theta, PrintedMatrices) {
  EXPECT_EQ(theta(1), (IntMatrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(theta(2), (IntMatrix{{1, 2}, {0, -1}}));
  EXPECT_EQ(theta(3), (IntMatrix{{1, 0}, {-1, -1}}));
  EXPECT_EQ(theta(4), (IntMatrix{{1, 2}, {-1, -1}}));
  EXPECT_TRUE(satisfies_theta_equations(theta(2)));
  EXPECT_TRUE(oracle::theta_equations(1, 2, 0, -1));
}

TEST(Theta, SolutionsMatchBruteForce) {
  for (int bound : {1, 2, 8}) {
    std::set<std::vector<std::vector<Int>>> brute;
    for (Int b2 = -bound; b2 <= bound; ++b2)
      for (Int c2 = -bound; c2 <= bound; ++c2)
        for (Int b3 = -bound; b3 <= bound; ++b3)
          for (Int c3 = -bound; c3 <= bound; ++c3) {
            const Int d = b2 * c3 - c2 * b3;
            if ((d == 1 || d == -1) && oracle::theta_equations(b2, c2, b3, c3)) brute.insert({{b2, c2}, {b3, c3}});
          }
    std::set<std::vector<std::vector<Int>>> got;
    for (const auto& sol : theta_solutions(bound)) got.insert(sol.matrix.to_rows());
    EXPECT_EQ(got, brute) << "bound " << bound;
  }
  const auto eight = theta_solutions(8);
  EXPECT_EQ(eight.size(), 8u);
  for (const auto& sol : eight) {
    EXPECT_NE(sol.index, 0);
    EXPECT_EQ(sol.matrix, sol.sign > 0 ? theta(sol.index) : negated(theta(sol.index)));
  }
  std::set<int> small;
  for (const auto& sol : theta_solutions(1)) small.insert(sol.index);
  EXPECT_EQ(small, (std::set<int>{1, 3}));
  EXPECT_EQ(theta_solutions(1).size(), 4u);
}
