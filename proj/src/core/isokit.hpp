#pragma once

#include <optional>
#include <string>
#include <vector>

#include "classes.hpp"
#include "ringkit.hpp"

namespace qtoric::isokit {

using ringkit::GradedRing;
using ringkit::RingElement;
using ringkit::RingPresentation;

/// Row i of L is the image of source generator i in the target generators.
std::vector<Polynomial> map_images(const IntMatrix& L);

/// Normal form in dst of alpha(r) for every relation r of src.
std::vector<RingElement> residuals(const IntMatrix& L, const RingPresentation& src, const GradedRing& dst);

/// det L = +-1 and every residual vanishes. Since alpha is then onto in
/// degree 2 and both rings are generated there with equal free ranks, the
/// induced map is bijective in every degree.
bool is_isomorphism(const IntMatrix& L, const GradedRing& src, const GradedRing& dst, std::string* why = nullptr);

inline constexpr int kMaxSearchBound = 64;

/// Every L with entries in [-bound, bound] inducing an isomorphism src -> dst,
/// sorted lexicographically by rows. Needs 3-generator presentations with
/// quadratic relations. Work is split across `jobs` threads (0 = hardware).
std::vector<IntMatrix> find_isomorphisms(const GradedRing& src, const GradedRing& dst, int bound, unsigned jobs = 1);
std::vector<IntMatrix> automorphisms(const GradedRing& ring, int bound, unsigned jobs = 1);

/// alpha(w2(src)) = w2(dst) in the mod-2 target and alpha(p1(src)) = p1(dst).
/// Throws InvalidArgument unless L is an isomorphism.
bool jupp_check(const IntMatrix& L, const classes::ManifoldRing& src, const classes::ManifoldRing& dst);

/// theta_1..theta_4, acting on (Y, Z).
IntMatrix theta(int i);

/// (2b2-c2)(b2+2b3) = (b2-c2)(c2+2c3) and (2b3-c3)(b2+b3) = (b3-c3)(c2+c3)
/// for m = [[b2, c2], [b3, c3]].
bool satisfies_theta_equations(const IntMatrix& m);

struct ThetaSolution {
  IntMatrix matrix;
  int index = 0;  // i with matrix = sign * theta_i, 0 if none
  int sign = 1;
  std::optional<Int> k12;  // (b2+2b3)/(b2-c2) when the ratio is defined
  std::optional<Int> k13;  // (b2+b3)/(b3-c3) when the ratio is defined
};

/// All 2x2 integer matrices with det +-1 and entries in [-bound, bound]
/// satisfying both equations, sorted by entries.
std::vector<ThetaSolution> theta_solutions(int bound);

/// Maps between named rings.
IntMatrix alpha5();   // lambda_{-1,-2} -> chi5
IntMatrix alpha6();   // lambda_{1,1}   -> chi6
IntMatrix alpha10();  // lambda_{-2,-2} -> chi10

/// +-[[1,0,t-s],[0,1,2],[0,0,-1]], +-[[-1,-s,-s],[0,1,2],[0,0,-1]], +-I.
std::vector<IntMatrix> lambda_st_automorphisms(Int s, Int t);

}  // namespace qtoric::isokit
