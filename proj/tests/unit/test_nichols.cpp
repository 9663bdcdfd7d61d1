#include "closed_forms.hpp"
#include "doctest.h"
#include "hopfalg/nichols.hpp"
#include "hopfalg/yd.hpp"

using namespace hopf;

namespace {
BraidedSpace space(Side s, const Params& p) { return braided_space(yd_simple(s, p), side_letters(s, 2)); }
}  // namespace

TEST_CASE("elementary braidings") {
  BraidedSpace V = space(Side::H, {1, 2, 0, 0});
  CHECK(elementary_braiding(V, 2, 1) == V.c);
  Matrix c1 = elementary_braiding(V, 3, 1), c2 = elementary_braiding(V, 3, 2);
  CHECK(c1 * c2 * c1 == c2 * c1 * c2);
  CHECK(braid_equation_holds(V));
}

TEST_CASE("the recursive symmetrizer equals the sum over Matsumoto lifts") {
  for (Side s : {Side::H, Side::K})
    for (const Params& p : {Params{1, 2, 0, 0}, Params{2, 2, 0, 0}, Params{1, 3, 0, 1}, Params{0, 2, 1, 1}}) {
      if (!in_parameter_set(s, p)) continue;
      BraidedSpace V = space(s, p);
      for (int n = 2; n <= 4; ++n) CHECK(symmetrizer(V, n) == symmetrizer_bruteforce(V, n));
    }
}

TEST_CASE("one-dimensional objects with c = -1 give exterior algebras") {
  for (Side s : {Side::H, Side::K})
    for (const auto& p : one_dim_parameters()) {
      BraidedSpace V = braided_space(yd_one_dim(s, p), side_letters(s, 1));
      HilbertResult h = hilbert_function(V, 12);
      CAPTURE(p.to_string());
      if (V.c(0, 0) == Scalar(-1)) {
        CHECK(h.finite);
        CHECK(h.total == 2);
        CHECK(expected_nichols_dim_one(s, p) == 2);
      } else {
        CHECK(V.c(0, 0) == Scalar(1));
        CHECK_FALSE(h.finite);
      }
    }
}

TEST_CASE("symmetric braiding in degree two") {
  BraidedSpace V;
  V.dim = 2;
  V.c = Matrix(4, 4);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) V.c(y * 2 + x, x * 2 + y) = 1;
  CHECK(rank(symmetrizer(V, 2)) == 3);
}

TEST_CASE("Hilbert series of named classes") {
  HilbertResult h1 = hilbert_function(space(Side::H, {2, 2, 0, 0}), 12);
  CHECK(h1.total == 18);
  CHECK(h1.ranks.size() == 8);  // top degree 6, then the zero
  CHECK(h1.ranks == std::vector<int>{1, 2, 4, 4, 4, 2, 1, 0});
  for (const auto& p : parameter_set(Side::H)) {
    auto l = classify_param(Side::H, p);
    if (has_label(l, "L4")) {
      HilbertResult h = hilbert_function(space(Side::H, p), 6);
      CHECK(h.ranks == std::vector<int>{1, 2, 1, 0});
    }
    if (has_label(l, "L2")) {
      HilbertResult h = hilbert_function(space(Side::H, p), 12);
      CHECK(h.total == 36);
      CHECK(h.ranks.size() == 11);  // top degree 9
    }
  }
  for (const auto& p : parameter_set(Side::K))
    if (has_label(classify_param(Side::K, p), "T5") && class_power_exponent(Side::K, p) == 3)
      CHECK(hilbert_function(space(Side::K, p), 12).total == 6);
}

TEST_CASE("skew derivations of class 1") {
  for (Side s : {Side::H, Side::K})
    for (const auto& p : parameter_set(s)) {
      auto l = classify_param(s, p);
      if (!has_label(l, s == Side::H ? "L1" : "T1")) continue;
      BraidedSpace V = space(s, p);
      auto table = s == Side::H ? closed_forms::h_class1_derivations(p) : closed_forms::k_class1_derivations(p);
      for (const auto& d : table) {
        CAPTURE(p.to_string());
        CAPTURE(d.word);
        CHECK(tensor_equal(skew_derive(V, d.index, closed_forms::make_tensor(V, d.word)),
                           closed_forms::make_tensor(V, 2, d.value)));
      }
      CHECK(tensor_equal(skew_derive(V, 1, tensor_parse(V, V.letters[0])), tensor_parse(V, "1")));
      CHECK(skew_derive(V, 2, tensor_parse(V, V.letters[0])).is_zero());
    }
}

TEST_CASE("ideal membership") {
  BraidedSpace V = space(Side::H, {2, 2, 0, 0});
  for (const auto& r : class_relations(Side::H, {2, 2, 0, 0}, V)) {
    CHECK(in_ideal(V, r));
    CHECK(in_symmetrizer_kernel(V, r));
    CHECK(primitive_in_T(V, r));
  }
  CHECK_FALSE(in_ideal(V, tensor_parse(V, "v1*v2")));
  for (const auto& p : parameter_set(Side::H))
    if (has_label(classify_param(Side::H, p), "L4")) {
      BraidedSpace W = space(Side::H, p);
      CHECK(in_ideal(W, tensor_parse(W, "v1^2")));
      std::string rel = std::string("v1*v2 ") + (p.iota ? "- " : "+ ") + "v2*v1";
      CHECK(in_ideal(W, tensor_parse(W, rel)));
    }
}

TEST_CASE("uncorrected and corrected relations of class 3 on the K side") {
  int uncorrected_outside = 0, checked = 0;
  for (const auto& p : parameter_set(Side::K)) {
    if (!has_label(classify_param(Side::K, p), "T3")) continue;
    BraidedSpace V = space(Side::K, p);
    for (const auto& r : class_relations(Side::K, p, V)) CHECK(in_ideal(V, r));
    bool all = true;
    for (const auto& r : class_relations(Side::K, p, V, true)) all = all && in_ideal(V, r);
    uncorrected_outside += !all;
    ++checked;
    CHECK(nichols_dim_by_relations(V, class_relations(Side::K, p, V)) == 36);
  }
  CHECK(checked == 8);
  CHECK(uncorrected_outside == 6);
}

TEST_CASE("dimension by relations agrees with the symmetrizer ranks") {
  for (Side s : {Side::H, Side::K})
    for (const auto& p : parameter_set(s)) {
      const int e = expected_nichols_dim(s, p);
      if (e <= 0 || (p.i + p.j + p.k) % 3 != 0) continue;
      CAPTURE(side_name(s) + p.to_string());
      BraidedSpace V = space(s, p);
      HilbertResult h = hilbert_function(V, 12);
      CHECK(h.finite);
      CHECK(h.total == e);
      CHECK(nichols_dim_by_relations(V, class_relations(s, p, V)) == e);
    }
}
