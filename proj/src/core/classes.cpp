#include "classes.hpp"

#include "errors.hpp"

namespace qtoric::classes {

CharClassData classes_from_forms(const GradedRing& integral, const GradedRing& mod2, const std::vector<Polynomial>& u) {
  if (integral.modulus() != 0 || mod2.modulus() != 2) fail(ErrorCode::InvalidArgument, "expected an integral and a mod-2 ring");
  const std::size_t n = integral.num_vars();
  const int top = integral.max_degree() / 2;
  Polynomial sw = Polynomial::constant(n, 1);
  Polynomial pont = Polynomial::constant(n, 1);
  Polynomial w2(n), p1(n);
  for (const auto& ui : u) {
    if (ui.num_vars() != n) fail(ErrorCode::InvalidArgument, "linear form has the wrong number of variables");
    const Polynomial sq = ui * ui;
    sw = multiply_truncated(sw, Polynomial::constant(n, 1) + ui, top).reduced_mod(2);
    pont = multiply_truncated(pont, Polynomial::constant(n, 1) - sq, top);
    w2 += ui;
    p1 -= sq;
  }
  CharClassData out;
  out.w2_poly = w2.reduced_mod(2);
  out.p1_poly = p1;
  out.total_sw = mod2.reduce_total(sw);
  out.total_pontryagin = integral.reduce_total(pont);
  out.w2 = top >= 1 ? mod2.reduce(out.w2_poly, 2) : mod2.zero(0);
  out.p1 = top >= 2 ? integral.reduce(out.p1_poly, 4) : integral.zero(0);
  return out;
}

namespace {

std::vector<Polynomial> generator_forms(std::size_t n) {
  std::vector<Polynomial> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back(Polynomial::variable(n, i));
  return u;
}

}  // namespace

CharClassData classes_full(const GradedRing& ring) {
  if (ring.presentation().kind != ringkit::PresentationKind::Full || ring.modulus() != 0)
    fail(ErrorCode::InvalidArgument, "classes_full needs the integral ring of a full presentation");
  const GradedRing mod2 = ringkit::realize(ring.presentation(), ring.max_degree(), 2);
  return classes_from_forms(ring, mod2, generator_forms(ring.num_vars()));
}

ManifoldRing manifold_ring_full(const ringkit::SimplePolytope& p, const ringkit::CharMatrix& lambda) {
  const auto pres = ringkit::full_presentation(p, lambda);
  const int top = 2 * p.dim();
  ManifoldRing out{ringkit::realize(pres, top, 0), ringkit::realize(pres, top, 2), {}};
  out.classes = classes_from_forms(out.integral, out.mod2, generator_forms(pres.num_generators));
  return out;
}

std::vector<Polynomial> small_forms(const charmat::StarForm& sf) {
  const IntMatrix block = sf.right_block();
  std::vector<Polynomial> u;
  for (std::size_t i = 0; i < 3; ++i) u.push_back(Polynomial::linear(block.row(i)));
  for (std::size_t i = 0; i < 3; ++i) u.push_back(Polynomial::variable(3, i));
  return u;
}

ManifoldRing manifold_ring(const charmat::StarForm& sf) {
  const auto pres = ringkit::small_presentation(sf);
  ManifoldRing out{ringkit::realize(pres, 6, 0), ringkit::realize(pres, 6, 2), {}};
  out.classes = classes_from_forms(out.integral, out.mod2, small_forms(sf));
  return out;
}

CharClassData classes_small(const charmat::StarForm& sf) { return manifold_ring(sf).classes; }

}  // namespace qtoric::classes
