#include "closed_forms.hpp"
#include "doctest.h"
#include "hopfalg/lifting.hpp"

using namespace hopf;

TEST_CASE("bosonizations") {
  NicholsAlgebra R = nichols_algebra(Side::H, {2, 2, 0, 0});
  CHECK(R.dim() == 18);
  HopfAlgebra S = smash_product(R);
  CHECK(S.dim() == 432);
  CHECK(verify_axioms(S).ok());
  // the host sits inside as a Hopf subalgebra, and projects back
  const HopfAlgebra& H = R.module.host->hopf;
  CHECK(check_morphism(smash_inclusion(R), H, S).hopf());
  CHECK(check_morphism(smash_projection(R), S, H).hopf());
  CHECK(smash_projection(R) * smash_inclusion(R) == Matrix::identity(H.dim()));

  for (const auto& p : one_dim_parameters()) {
    if (classify_one_dim(Side::K, p).empty()) continue;
    HopfAlgebra T = smash_product(nichols_algebra(Side::K, p, 1));
    CHECK(T.dim() == 48);
    CHECK(verify_axioms(T).ok());
    break;
  }
}

TEST_CASE("a lifting with mu = 1 passes every check") {
  Lifting L = build_lifting(Family::C, lifting_parameters(Family::C).front(), Scalar(1));
  LiftingReport r = verify_lifting(L);
  CHECK(r.ok());
  CHECK(L.algebra.dim() == 432);
  Lifting B = build_lifting(Family::B, lifting_parameters(Family::B).back(), Scalar(1));
  CHECK(verify_lifting(B).ok());
}

TEST_CASE("a shifted relation is caught by the coproduct check") {
  Lifting L = build_lifting(Family::C, lifting_parameters(Family::C).back(), Scalar(1), Scalar(1));
  LiftingReport r = verify_lifting(L);
  CHECK_FALSE(r.ok());
  for (const auto& c : r.checks) {
    if (c.name == "coproduct respects relations") {
      CHECK_FALSE(c.pass);
      CHECK(c.detail.find("Delta") != std::string::npos);
    } else {
      CHECK(c.pass);
    }
  }
}

TEST_CASE("mu = 0 gives the bosonization") {
  for (Family f : {Family::C, Family::B}) {
    const Params p = lifting_parameters(f).front();
    NicholsAlgebra R = nichols_algebra(family_side(f), p);
    HopfAlgebra S = smash_product(R);
    Lifting L = build_lifting(f, p, Scalar(0));
    MorphismReport m = check_morphism(generator_matching(L, R, S), L.algebra, S);
    CHECK(m.hopf());
    CHECK(m.bijective);
  }
}

TEST_CASE("coproduct identities in T(V) # H") {
  for (Family f : {Family::C, Family::B})
    for (const auto& p : lifting_parameters(f)) {
      const Side s = family_side(f);
      YDModule M = yd_simple(s, p);
      BraidedSpace V = braided_space(M, side_letters(s, 2));
      for (const auto& id : closed_forms::lifting_identities(f, p, M, V)) {
        CAPTURE(id.name);
        CHECK(graded_smash_coproduct(M, V, id.element) == id.expected);
      }
    }
}

TEST_CASE("coproduct of a host element in T(V) # H") {
  YDModule M = yd_simple(Side::H, {2, 2, 0, 0});
  BraidedSpace V = braided_space(M, side_letters(Side::H, 2));
  const HopfAlgebra& H = M.host->hopf;
  const SparseVec a = M.host->element("a");
  Tensor one{0, sv_unit(0)};
  SmashTensor got = graded_smash_coproduct(M, V, smash_element(one, a));
  SmashTensor want;
  for (const auto& t : H.comult_basis(H.index_of("a")))
    smash_add(want, smash_tensor(one, sv_unit(t.left), one, sv_unit(t.right), t.coef));
  CHECK(got == want);
}
