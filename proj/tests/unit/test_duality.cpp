#include "doctest.h"
#include "hopfalg/duality.hpp"

using namespace hopf;

TEST_CASE("psi is a Hopf isomorphism onto the dual") {
  DualityMap psi = psi_map();
  MorphismReport r = check_morphism(psi.map, psi.source, psi.target);
  CHECK(r.hopf());
  CHECK(r.bijective);
  CHECK(grouplikes(psi.target).elements.size() == 12);
}

TEST_CASE("rescaling x breaks psi") {
  DualityMap psi = psi_map(Scalar::xi());
  MorphismReport r = check_morphism(psi.map, psi.source, psi.target);
  CHECK_FALSE(r.hopf());
}

TEST_CASE("the image of x in the dual of C squares to -xi^-2 (g^2 - 1)") {
  DualityMap phi = phi_map();
  const HopfAlgebra& B = phi.target;
  const SparseVec& g = phi.images.at("g");
  // images carry the factor xi; undo it
  SparseVec x = sv_scale(phi.images.at("x"), Scalar::xi_pow(-1));
  SparseVec lhs = B.mul(x, x);
  SparseVec rhs = sv_scale(sv_axpy(B.mul(g, g), Scalar(-1), B.unit()), -Scalar::xi_pow(-2));
  CHECK(sv_sub(lhs, rhs).empty());
  CHECK_FALSE(check_morphism(phi.map, phi.source, phi.target).hopf());
  CHECK(grouplikes(B).elements.size() == 6);
}

TEST_CASE("the double of H^cop matches its presentation") {
  DoubleCheck d = check_double();
  CHECK(d.presented.dim() == 576);
  CHECK(d.computed.dim() == 576);
  CHECK(d.relations_hold());
  CHECK(d.iso.hopf());
  CHECK(d.iso.bijective);
}
