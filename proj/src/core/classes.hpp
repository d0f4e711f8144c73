#pragma once

#include <vector>

#include "ringkit.hpp"

namespace qtoric::classes {

using ringkit::GradedRing;
using ringkit::RingElement;

/// Characteristic classes of a quasitoric manifold, reduced in its rings.
/// total_sw lives in the mod-2 ring, total_pontryagin in the integral one;
/// both are indexed by cohomological degree / 2.
struct CharClassData {
  std::vector<RingElement> total_sw;
  std::vector<RingElement> total_pontryagin;
  RingElement w2;
  RingElement p1;
  /// Representatives before reduction: sum u_i mod 2 and -sum u_i^2.
  Polynomial w2_poly;
  Polynomial p1_poly;
};

/// A ring together with its mod-2 twin and its classes.
struct ManifoldRing {
  GradedRing integral;
  GradedRing mod2;
  CharClassData classes;
};

/// prod(1 + u_i) mod 2 and prod(1 - u_i^2), for linear forms u_i in the
/// generators of `integral`.
CharClassData classes_from_forms(const GradedRing& integral, const GradedRing& mod2, const std::vector<Polynomial>& u);

/// Classes of the full presentation; u_i = v_i. Throws InvalidArgument for
/// a ring that was not built from a full presentation over Z.
CharClassData classes_full(const GradedRing& ring);
ManifoldRing manifold_ring_full(const ringkit::SimplePolytope& p, const ringkit::CharMatrix& lambda);

/// u_1..u_3 are the rows of the right block, u_4..u_6 = X, Y, Z.
std::vector<Polynomial> small_forms(const charmat::StarForm& sf);
CharClassData classes_small(const charmat::StarForm& sf);
ManifoldRing manifold_ring(const charmat::StarForm& sf);

}  // namespace qtoric::classes
