#include <gtest/gtest.h>

#include <random>

#include "charmat.hpp"
#include "classes.hpp"
#include "errors.hpp"
#include "oracles.hpp"

using namespace qtoric;
using namespace qtoric::classes;
using charmat::StarForm;

namespace {

std::array<Int, 3> linear_coords(const ringkit::GradedRing& r, const RingElement& e) {
  const Polynomial p = r.lift(e);
  std::array<Int, 3> out{p.coefficient({1, 0, 0}), p.coefficient({0, 1, 0}), p.coefficient({0, 0, 1})};
  if (r.modulus() == 2)
    for (auto& c : out) c = ((c % 2) + 2) % 2;
  return out;
}

oracle::Deg4 quartic_coords(const ringkit::GradedRing& r, const StarForm& sf, const RingElement& e) {
  const Polynomial p = r.lift(e);
  return oracle::reduce4(sf.v, {p.coefficient({2, 0, 0}), p.coefficient({1, 1, 0}), p.coefficient({1, 0, 1}),
                                p.coefficient({0, 2, 0}), p.coefficient({0, 1, 1}), p.coefficient({0, 0, 2})});
}

}  // namespace

TEST(CharClasses, AgreeWithDirectFormulas) {
  std::mt19937_64 rng(23);
  const auto pool = charmat::enumerate_star(3);
  for (int n = 0; n < 150; ++n) {
    const auto sf = pool[rng() % pool.size()];
    const auto m = manifold_ring(sf);
    EXPECT_EQ(linear_coords(m.mod2, m.classes.w2), oracle::w2(sf.v)) << sf.str();
    EXPECT_EQ(quartic_coords(m.integral, sf, m.classes.p1), oracle::p1(sf.v)) << sf.str();
    ASSERT_FALSE(m.classes.total_sw.empty());
    ASSERT_FALSE(m.classes.total_pontryagin.empty());
    EXPECT_EQ(m.classes.total_sw[0].coeffs, std::vector<Int>{1});
    EXPECT_EQ(m.classes.total_pontryagin[0].coeffs, std::vector<Int>{1});
    EXPECT_EQ(m.classes.total_sw[1], m.classes.w2);
    EXPECT_EQ(m.classes.total_pontryagin[2], m.classes.p1);
  }
}

TEST(CharClasses, FamilyFormulas) {
  for (Int s = -3; s <= 3; ++s)
    for (Int t = -3; t <= 3; ++t) {
      const auto a = manifold_ring(charmat::lambda_st(s, t));
      const std::array<Int, 3> wa{0, ((s + 1) % 2 + 2) % 2, (t % 2 + 2) % 2};
      EXPECT_EQ(linear_coords(a.mod2, a.classes.w2), wa);
      const auto b = manifold_ring(charmat::colambda_st(s, t));
      const std::array<Int, 3> wb{((s + t) % 2 + 2) % 2, 1, 0};
      EXPECT_EQ(linear_coords(b.mod2, b.classes.w2), wb);
    }
  const auto triv = manifold_ring(StarForm{});
  EXPECT_TRUE(triv.classes.p1.is_zero());
}

TEST(CharClasses, SecondStiefelWhitneyDependsOnlyOnResiduesModTwo) {
  const auto pool = charmat::enumerate_star(2);
  std::map<std::array<Int, 6>, std::array<Int, 3>> seen;
  for (const auto& sf : pool) {
    std::array<Int, 6> residue{};
    for (std::size_t i = 0; i < 6; ++i) residue[i] = ((sf.v[i] % 2) + 2) % 2;
    const auto m = manifold_ring(sf);
    const auto w = linear_coords(m.mod2, m.classes.w2);
    const auto [it, fresh] = seen.emplace(residue, w);
    if (!fresh) EXPECT_EQ(it->second, w) << sf.str();
  }
}

TEST(CharClasses, FullPresentationMatchesSmallUnderIdentification) {
  std::vector<StarForm> forms = charmat::enumerate_star(1);
  std::mt19937_64 rng(29);
  const auto pool = charmat::enumerate_star(3);
  for (int n = 0; n < 60; ++n) forms.push_back(pool[rng() % pool.size()]);
  forms.push_back(charmat::colambda_st(1, 1));
  for (const auto& sf : forms) {
    const auto full = manifold_ring_full(polytope::cube(), charmat::to_char_matrix(sf));
    const auto small = manifold_ring(sf);
    const auto ident = ringkit::star_identification(sf);
    const auto w2 = substitute(full.mod2.lift(full.classes.w2), ident);
    EXPECT_EQ(small.mod2.reduce(w2.reduced_mod(2), 2), small.classes.w2) << sf.str();
    const auto p1 = substitute(full.integral.lift(full.classes.p1), ident);
    EXPECT_EQ(small.integral.reduce(p1, 4), small.classes.p1) << sf.str();
  }
}

TEST(CharClasses, FullClassesNeedAFullIntegralRing) {
  const auto small = ringkit::realize(ringkit::small_presentation(charmat::chi(1)), 6);
  try {
    classes_full(small);
    FAIL() << "accepted a small presentation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}
