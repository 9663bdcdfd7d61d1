#include <algorithm>
#include <map>
#include <optional>

#include "doctest.h"
#include "hopfalg/hopf.hpp"
#include "hopfalg/presentations.hpp"

using namespace hopf;

namespace {

// H built by hand on {a^i, d a^i, b a^i, c a^i} from the commutation rules,
// without the rewriting machinery. Index t*6 + i with t = 0 (1), 1 (d), 2 (b), 3 (c).
struct HandH {
  static int idx(int t, int i) { return t * 6 + ((i % 6) + 6) % 6; }

  // a^i Y = w(Y, i) Y a^i
  static Scalar pass_a(int t, int i) { return (t == 2 || t == 3) ? Scalar::xi_pow(i) : Scalar(1); }

  // X * Y for X, Y in {1, d, b, c}: (coefficient, type, extra power of a), or nothing.
  static std::optional<std::tuple<Scalar, int, int>> letters(int x, int y) {
    if (x == 0) return std::make_tuple(Scalar(1), y, 0);
    if (y == 0) return std::make_tuple(Scalar(1), x, 0);
    if (x == 1 && y == 1) return std::make_tuple(Scalar(1), 0, 2);              // d^2 = a^2
    if (x == 1 && y == 2) return std::make_tuple(-Scalar::xi(), 3, 1);          // db = -xi bd = -xi ca
    if (x == 1 && y == 3) return std::make_tuple(-Scalar::xi(), 2, 1);          // dc = -xi cd = -xi ba
    if (x == 2 && y == 1) return std::make_tuple(Scalar(1), 3, 1);              // bd = ca
    if (x == 3 && y == 1) return std::make_tuple(Scalar(1), 2, 1);              // cd = ba
    return std::nullopt;                                                         // b^2 = c^2 = bc = cb = 0
  }

  static SparseVec mult(int u, int v) {
    const int x = u / 6, i = u % 6, y = v / 6, j = v % 6;
    auto r = letters(x, y);
    if (!r) return {};
    auto [c, t, e] = *r;
    return sv_unit(idx(t, i + j + e), c * pass_a(y, i));
  }
};

HopfAlgebra hand_built_H() {
  // generator coproducts in H (x) H, then multiplicativity along X a^i
  auto gens = [](int t) -> std::vector<CoproductTerm> {
    const int a = HandH::idx(0, 1), b = HandH::idx(2, 0), c = HandH::idx(3, 0), d = HandH::idx(1, 0);
    switch (t) {
      case 0: return {{Scalar(1), a, a}, {Scalar(1), b, c}};
      case 1: return {{Scalar(1), d, d}, {Scalar(1), c, b}};
      case 2: return {{Scalar(1), a, b}, {Scalar(1), b, d}};
      default: return {{Scalar(1), c, a}, {Scalar(1), d, c}};
    }
  };
  auto mul2 = [](const std::map<std::pair<int, int>, Scalar>& x, const std::vector<CoproductTerm>& y) {
    std::map<std::pair<int, int>, Scalar> out;
    for (const auto& [k, s] : x)
      for (const auto& t : y)
        for (const auto& [l, p] : HandH::mult(k.first, t.left))
          for (const auto& [r, q] : HandH::mult(k.second, t.right)) {
            Scalar& z = out[{l, r}];
            z += s * t.coef * p * q;
          }
    for (auto it = out.begin(); it != out.end();)
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  };
  std::vector<std::string> labels;
  for (const char* t : {"", "d", "b", "c"})
    for (int i = 0; i < 6; ++i) {
      std::string a = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
      std::string w = std::string(t) + (*t && !a.empty() ? "*" : "") + a;
      labels.push_back(w.empty() ? "1" : w);
    }
  std::vector<Scalar> counit(24);
  for (int i = 0; i < 6; ++i) counit[HandH::idx(0, i)] = counit[HandH::idx(1, i)] = 1;
  return HopfAlgebra(
      "Hhand", labels, [](int u, int v) { return HandH::mult(u, v); }, sv_unit(0),
      [&](int u) {
        std::map<std::pair<int, int>, Scalar> x{{{0, 0}, Scalar(1)}};
        if (u / 6 != 0) x = mul2(x, gens(u / 6));
        for (int k = 0; k < u % 6; ++k) x = mul2(x, gens(0));
        std::vector<CoproductTerm> out;
        for (const auto& [k, s] : x) out.push_back({s, k.first, k.second});
        return out;
      },
      counit);
}

}  // namespace

TEST_CASE("realized H matches the hand-built table") {
  HopfAlgebra H = realize_hopf(fixture("H"));
  HopfAlgebra G = hand_built_H();
  REQUIRE(H.dim() == 24);
  // basis correspondence through labels
  std::vector<int> to(24, -1);
  for (int u = 0; u < 24; ++u) to[u] = G.index_of(H.labels()[u]);
  for (int u = 0; u < 24; ++u) REQUIRE(to[u] >= 0);
  auto move = [&](const SparseVec& v) {
    SparseVec r;
    for (const auto& [i, s] : v) r = sv_add(r, sv_unit(to[i], s));
    return r;
  };
  for (int u = 0; u < 24; ++u)
    for (int v = 0; v < 24; ++v) CHECK(sv_equal(move(H.mult_basis(u, v)), G.mult_basis(to[u], to[v])));
  for (int u = 0; u < 24; ++u) {
    Tensor2 a;
    for (const auto& t : H.comult_basis(u)) a.emplace_back(static_cast<uint64_t>(to[t.left]) * 24 + to[t.right], t.coef);
    std::sort(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    CHECK(a == G.comult(G.basis(to[u])));
    CHECK(H.counit_vec()[u] == G.counit_vec()[to[u]]);
  }
}

TEST_CASE("fixtures H and K satisfy the Hopf axioms") {
  for (const char* n : {"H", "K"}) {
    HopfAlgebra A = realize_hopf(fixture(n));
    CHECK(A.dim() == 24);
    CHECK(verify_axioms(A).ok());
  }
}

TEST_CASE("a perturbed product breaks associativity with a witness") {
  HopfAlgebra H = realize_hopf(fixture("H"));
  const int b = H.index_of("b");
  H.perturb_mult(b, b, H.unit());
  AxiomReport r = verify_axioms(H);
  CHECK_FALSE(r.ok());
  bool assoc_failed = false;
  for (const auto& it : r.items)
    if (it.axiom == "associativity") {
      assoc_failed = !it.pass;
      CHECK_FALSE(it.witness.empty());
    }
  CHECK(assoc_failed);
}

TEST_CASE("antipode of H in closed form") {
  HopfAlgebra H = realize_hopf(fixture("H"));
  // S(b) = -xi^{-1} c a^{-2}
  CHECK(sv_equal(H.antipode(H.elem("b")), sv_scale(H.elem("c*a^4"), -Scalar::xi_pow(-1))));
  auto S = convolution_antipode(H);
  REQUIRE(S.has_value());
  CHECK(*S == H.antipode_cols());
}

TEST_CASE("group algebra of Z6") {
  HopfAlgebra G = group_algebra_cyclic(6);
  auto S = convolution_antipode(G);
  REQUIRE(S.has_value());
  CHECK(sv_equal((*S)[1], G.basis(5)));
  G.set_antipode(*S);
  CHECK(verify_axioms(G).ok());
  CHECK(grouplikes(G).elements.size() == 6);
}

TEST_CASE("duals") {
  HopfAlgebra H = realize_hopf(fixture("H"));
  HopfAlgebra Hd = dual(H);
  CHECK(verify_axioms(Hd).ok());
  auto gl = grouplikes(Hd);
  CHECK(gl.elements.size() == 12);
  CHECK(gl.complete);
  // element orders of Z6 x Z2
  std::map<int, int> orders;
  for (const auto& g : gl.elements) {
    SparseVec p = g;
    int o = 1;
    while (!sv_equal(p, Hd.unit())) {
      p = Hd.mul(p, g);
      ++o;
    }
    orders[o]++;
  }
  CHECK(orders == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}, {6, 6}});
  // biduality: the identity matrix is a Hopf map H -> H**
  HopfAlgebra Hdd = dual(Hd);
  MorphismReport m = check_morphism(Matrix::identity(24), H, Hdd);
  CHECK(m.hopf());
  CHECK(m.bijective);
}

TEST_CASE("twists") {
  HopfAlgebra H = realize_hopf(fixture("H"));
  HopfAlgebra Hc = twist(H, false, true);
  CHECK(verify_axioms(Hc).ok());
  // Delta^cop(b) = b (x) a + d (x) b
  const int a = H.index_of("a"), b = H.index_of("b"), d = H.index_of("d");
  Tensor2 want = {{static_cast<uint64_t>(b) * 24 + a, Scalar(1)}, {static_cast<uint64_t>(d) * 24 + b, Scalar(1)}};
  std::sort(want.begin(), want.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  CHECK(Hc.comult(Hc.basis(b)) == want);
  HopfAlgebra Hoo = twist(twist(H, true, false), true, false);
  for (int u = 0; u < 24; ++u)
    for (int v = 0; v < 24; ++v) CHECK(sv_equal(Hoo.mult_basis(u, v), H.mult_basis(u, v)));
  CHECK(verify_axioms(twist(H, true, true)).ok());
}

TEST_CASE("tensor products") {
  HopfAlgebra A = realize_hopf(fixture("A"));
  HopfAlgebra k = group_algebra_cyclic(1);
  k.set_antipode(*convolution_antipode(k));
  HopfAlgebra Ak = tensor_hopf(A, k);
  CHECK(check_morphism(Matrix::identity(24), A, Ak).hopf());

  HopfAlgebra Z2 = group_algebra_cyclic(2, "h");
  Z2.set_antipode(*convolution_antipode(Z2));
  HopfAlgebra CZ = tensor_hopf(realize_hopf(fixture("C")), Z2);
  CHECK(CZ.dim() == 24);
  CHECK(verify_axioms(CZ).ok());
}

TEST_CASE("group-likes and skew primitives of H and K") {
  HopfAlgebra H = realize_hopf(fixture("H"));
  auto gl = grouplikes(H);
  REQUIRE(gl.elements.size() == 4);
  std::vector<SparseVec> want = {H.unit(), H.elem("a^3"), H.elem("d*a^2"), H.elem("d*a^5")};
  for (const auto& w : want) {
    bool found = false;
    for (const auto& g : gl.elements) found = found || sv_equal(g, w);
    CHECK(found);
  }
  auto sp = skew_primitives(H, H.unit(), H.elem("d*a^5"));
  CHECK(sp.size() == 2);
  Echelon span;
  for (const auto& v : sp) span.add(v);
  CHECK(span.contains(sv_sub(H.unit(), H.elem("d*a^5"))));
  CHECK(span.contains(H.elem("c*a^5")));

  HopfAlgebra K = realize_hopf(fixture("K"));
  auto kp = skew_primitives(K, K.unit(), K.elem("a^3"));
  Echelon ks;
  for (const auto& v : kp) ks.add(v);
  CHECK(ks.rank() == 2);
  CHECK(ks.contains(sv_sub(K.unit(), K.elem("a^3"))));
  CHECK(ks.contains(K.elem("b*a^2")));
}

TEST_CASE("double of H^cop") {
  HopfAlgebra H = realize_hopf(fixture("H"));
  HopfAlgebra D = drinfeld_double(twist(H, false, true));
  CHECK(D.dim() == 576);
  CHECK(verify_axioms(D).ok());
}

TEST_CASE("json round trip") {
  HopfAlgebra K = realize_hopf(fixture("K"));
  HopfAlgebra R = from_json(to_json(K));
  REQUIRE(R.dim() == K.dim());
  for (int u = 0; u < K.dim(); ++u) {
    CHECK(R.labels()[u] == K.labels()[u]);
    for (int v = 0; v < K.dim(); ++v) CHECK(sv_equal(R.mult_basis(u, v), K.mult_basis(u, v)));
    CHECK(R.comult(R.basis(u)) == K.comult(K.basis(u)));
  }
  CHECK(verify_axioms(R).ok());
}
