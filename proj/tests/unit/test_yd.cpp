#include "closed_forms.hpp"
#include "doctest.h"
#include "hopfalg/yd.hpp"

using namespace hopf;

namespace {
Scalar xp(int e) { return Scalar::xi_pow(e); }
int m6(int a) { return ((a % 6) + 6) % 6; }
}  // namespace

TEST_CASE("catalog sizes") {
  for (Side s : {Side::H, Side::K}) {
    CHECK(yd_catalog(s, 1).size() == 24);
    CHECK(yd_catalog(s, 2).size() == 120);
  }
  CHECK(d_module_catalog().size() == 144);
}

TEST_CASE("every catalog object is Yetter-Drinfeld and braids") {
  for (Side s : {Side::H, Side::K})
    for (int d : {1, 2})
      for (const auto& e : yd_catalog(s, d)) {
        CAPTURE(e.module.name);
        CHECK(check_yd(e.module).ok());
        CHECK(braid_equation(braiding(e.module), d));
      }
}

TEST_CASE("braidings agree with the closed forms") {
  for (Side s : {Side::H, Side::K}) {
    for (const auto& e : yd_catalog(s, 2)) {
      CAPTURE(e.params.to_string());
      CHECK(braiding(e.module) == closed_forms::two_dim_braiding(s, e.params));
    }
    for (const auto& e : yd_catalog(s, 1)) CHECK(braiding(e.module)(0, 0) == closed_forms::one_dim_braiding(s, e.params));
  }
}

TEST_CASE("a wrong coaction is rejected") {
  YDModule M = yd_simple(Side::H, {0, 0, 0, 0});
  M.coaction = yd_simple(Side::H, {0, 0, 1, 1}).coaction;
  CHECK_FALSE(check_yd(M).ok());
}

TEST_CASE("double modules") {
  DModule v = d_module_two({0, 0, 0, 0});
  Matrix a(2, 2);
  a(0, 0) = -1;
  a(1, 1) = -xp(-1);
  CHECK(v.gens.at("a") == a);
  DModule t = d_module_one({0, 0, 0});
  CHECK(t.gens.at("a")(0, 0) == Scalar(1));
  CHECK(t.gens.at("x")(0, 0) == Scalar(0));
  for (const auto& m : d_module_catalog()) {
    CAPTURE(m.name);
    CHECK(d_module_relation_failure(m).empty());
  }
}

TEST_CASE("K side action") {
  YDModule W = yd_simple(Side::K, {1, 2, 0, 1});
  Matrix b = W.act("b"), a = W.act("a");
  CHECK(b(0, 1) == Scalar(1));
  CHECK(b(0, 0) == Scalar(0));
  CHECK(a(1, 1) == xp(2));
}

TEST_CASE("isomorphism testing") {
  YDModule M = yd_simple(Side::H, {1, 2, 0, 0});
  auto id = module_iso(M, M);
  REQUIRE(id.has_value());
  CHECK_FALSE(module_iso(M, yd_simple(Side::H, {2, 2, 0, 0})).has_value());
}

TEST_CASE("duals follow the index rules") {
  CHECK(module_iso(dual_module(yd_simple(Side::H, {0, 0, 0, 0})), yd_simple(Side::H, {4, 0, 1, 1})).has_value());
  CHECK(module_iso(dual_module(yd_simple(Side::K, {1, 2, 0, 1})), yd_simple(Side::K, {4, 1, 0, 1})).has_value());
  CHECK(module_iso(dual_module(yd_one_dim(Side::H, {0, 0, 0})), yd_one_dim(Side::H, {0, 0, 0})).has_value());
  for (const auto& p : parameter_set(Side::H)) {
    Params q{m6(4 - p.i), m6(-p.j), (p.k + 1) % 2, (p.iota + 1) % 2};
    CHECK(module_iso(dual_module(yd_simple(Side::H, p)), yd_simple(Side::H, q)).has_value());
  }
  for (const auto& p : parameter_set(Side::K)) {
    Params q{m6(-p.i - 1), m6(-p.j - 3), p.k, p.iota};
    CHECK(module_iso(dual_module(yd_simple(Side::K, p)), yd_simple(Side::K, q)).has_value());
  }
}

TEST_CASE("transport to the graded algebras") {
  for (Side s : {Side::H, Side::K}) {
    for (const auto& p : parameter_set(s)) {
      TwistRealization t = twist_realization(s, p);
      CHECK(check_yd(t.module).ok());
      CHECK(t.diagram == side_diagram(s, p));
    }
  }
  // the uncorrected cross coefficient on the H side fails compatibility
  CHECK_FALSE(check_yd(twist_realization(Side::H, {1, 2, 0, 0}, true).module).ok());
  GDD d = twist_realization(Side::H, {1, 2, 0, 0}).diagram;
  CHECK(d.e == -xp(-2));
}
