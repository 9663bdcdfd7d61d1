#include "doctest.h"
#include "hopfalg/roots.hpp"

using namespace hopf;

namespace {
Scalar xp(int e) { return Scalar::xi_pow(e); }
}  // namespace

TEST_CASE("Cartan entries") {
  // q11 = -1: m = 1 unless the edge is 1
  CHECK(cartan_entry({Scalar(-1), Scalar(-1), xp(2)}, 1) == 1);
  CHECK(cartan_entry({Scalar(-1), Scalar(-1), Scalar(1)}, 1) == 0);
  // label 1 with a nontrivial edge: neither branch applies
  CHECK_FALSE(cartan_entry({Scalar(1), Scalar(-1), xp(1)}, 1).has_value());
  CHECK(cartan_entry({xp(2), xp(2), Scalar(1)}, 2) == 0);
}

TEST_CASE("reflections") {
  GDD a2{Scalar(-1), Scalar(-1), Scalar(-1)};
  CHECK(reflect(a2, 1) == a2);
  for (Side s : {Side::H, Side::K})
    for (const auto& p : parameter_set(s)) {
      GDD d = side_diagram(s, p);
      for (int v : {1, 2})
        if (cartan_entry(d, v)) {
          GDD r = reflect(d, v);
          CHECK(reflect(r, v) == d);
        }
    }
  CHECK_THROWS_AS(reflect({Scalar(1), Scalar(-1), xp(1)}, 1), std::domain_error);
}

TEST_CASE("Weyl verdicts on named diagrams") {
  auto a2 = weyl_groupoid_finite({Scalar(-1), Scalar(-1), Scalar(-1)});
  CHECK(a2.finite);
  CHECK(a2.positive_roots == 3);
  // class 1 on the H side: (-1, xi^{2j}) with edge -xi^{2j}, standard B2
  auto b2 = weyl_groupoid_finite(side_diagram(Side::H, {2, 2, 0, 0}));
  CHECK(b2.finite);
  CHECK(b2.positive_roots == 4);
  // both vertex labels and edge data from class 0**
  auto inf = weyl_groupoid_finite(side_diagram(Side::H, {5, 1, 0, 1}));
  CHECK_FALSE(inf.finite);
}

TEST_CASE("verdicts agree with the classes on all parameters") {
  for (Side s : {Side::H, Side::K})
    for (const auto& p : parameter_set(s)) {
      CAPTURE(p.to_string());
      CHECK(weyl_groupoid_finite(side_diagram(s, p)).finite == (expected_nichols_dim(s, p) > 0));
    }
}

TEST_CASE("classification of named parameters") {
  auto l = classify_param(Side::H, {2, 2, 0, 0});
  CHECK(has_label(l, "L1"));
  CHECK(has_label(l, "L1*"));
  for (int i : {1, 3, 5}) CHECK(has_label(classify_param(Side::H, {i, 3, 0, 1}), "L4"));
  CHECK(has_label(classify_param(Side::H, {5, 1, 0, 1}), "L0**"));
  CHECK(normalize_label("Λ1") == "L1");
  CHECK(normalize_label("Θ0*") == "T0*");
  // a vertex labelled 1 on the K side
  GDD d = side_diagram(Side::K, {0, 1, 0, 0});
  CHECK(d.q22 == Scalar(1));
  CHECK(has_label(classify_param(Side::K, {0, 1, 0, 0}), "T0*"));
}

TEST_CASE("partition of the H side") {
  PartitionAudit a = partition_audit(Side::H);
  CHECK(a.total == 120);
  CHECK(a.unclassified.empty());
  CHECK(a.overlaps.empty());
  CHECK(a.counts["L1"] == 12);
  CHECK(a.counts["L2"] == 8);
  CHECK(a.counts["L3"] == 8);
  CHECK(a.counts["L4"] == 6);
  CHECK(a.counts["L5"] == 12);
  CHECK(a.counts["L6"] == 12);
  CHECK(a.counts["L1*"] == 4);
  CHECK(a.reflected_vertex_mismatch == 0);
}

TEST_CASE("partition of the K side is complete and disjoint") {
  PartitionAudit a = partition_audit(Side::K);
  CHECK(a.total == 120);
  CHECK(a.unclassified.empty());
  CHECK(a.overlaps.empty());
  CHECK(a.counts["T1"] == 12);
  CHECK(a.counts["T4"] == 6);
  CHECK(a.counts["T1*"] == 4);
  int finite = 0;
  for (const auto& p : parameter_set(Side::K)) finite += expected_nichols_dim(Side::K, p) > 0;
  CHECK(finite == 58);
}

TEST_CASE("parameter sets") {
  CHECK(parameter_set(Side::H).size() == 120);
  CHECK(parameter_set(Side::K).size() == 120);
  CHECK(one_dim_parameters().size() == 24);
  CHECK_FALSE(in_parameter_set(Side::H, {0, 0, 1, 0}));
  CHECK(in_parameter_set(Side::H, {0, 0, 0, 0}));
}
