#pragma once
// Closed-form braidings and skew-derivation tables used as oracles by the
// unit and acceptance tests.

#include <string>
#include <vector>

#include "hopfalg/lifting.hpp"
#include "hopfalg/nichols.hpp"
#include "hopfalg/roots.hpp"

namespace closed_forms {

using hopf::Matrix;
using hopf::Params;
using hopf::Scalar;
using hopf::Side;
using hopf::Tensor;

inline Scalar sg(int e) { return Scalar::sign_pow(e); }
inline Scalar xp(int e) { return Scalar::xi_pow(e); }

// c(v (x) v) on one-dimensional objects.
inline Scalar one_dim_braiding(Side s, const Params& p) {
  return s == Side::H ? sg(p.i * (p.j + p.k) + p.j) : sg(p.i * p.j + p.k);
}

// Entry (x*2+y, r*2+s) is the coefficient of b_x (x) b_y in c(b_r (x) b_s).
inline Matrix two_dim_braiding(Side s, const Params& p) {
  const int i = p.i, j = p.j, k = p.k, t = p.iota;
  Matrix c(4, 4);
  if (s == Side::H) {
    const Scalar inv = (Scalar(1) - xp(2)).inverse();
    if (k == 0) {
      c(0, 0) = sg((t + 1) * j) * xp(i * j);
      c(2, 1) = sg(j * t) * xp((i + 2) * j);
      c(1, 1) = sg((t + 1) * j) * xp(i * j) + sg((j - 1) * t) * xp((i + 2) * j);
      c(1, 2) = sg((t + 1) * (j - 1)) * xp(i * j);
      c(3, 3) = sg((j - 1) * t) * xp((i + 2) * j);
      c(0, 3) = inv * sg(t * (j - 1)) * xp((j - 2) * i + 2 * j - 1) * (xp(j) - sg(t));
    } else {
      c(0, 0) = sg((j - 1) * (t + 1)) * xp(i * j);
      c(2, 1) = sg((j - 1) * t) * xp((i + 2) * j);
      c(1, 1) = sg((j - 1) * (t + 1)) * xp(i * j) + sg(j * t) * xp((i + 2) * j);
      c(1, 2) = sg((t + 1) * j) * xp(i * j);
      c(3, 3) = sg(j * t) * xp((i + 2) * j);
      c(0, 3) = inv * sg(j * t) * xp(2 * j + 2 + i * j + 4 * i) * (xp(j) + sg(t));
    }
  } else {
    c(0, 0) = xp(-i * j);
    c(2, 1) = xp(-j * (i + 1));
    c(1, 1) = xp(-i * j) + xp((3 - j) * (i + 1));
    c(1, 2) = xp(i * (3 - j));
    c(3, 3) = xp((3 - j) * (i + 1));
    c(0, 3) = xp(4 * i - i * j + 2 - j) + xp(i - i * j + 2);
    c = c.scaled(sg(k * t));
  }
  return c;
}

// d_i(word) = value, letters spelled with '1' and '2'.
struct Derivation {
  std::string word;
  int index;
  std::vector<std::pair<Scalar, std::string>> value;
};

inline Tensor make_tensor(const hopf::BraidedSpace& V, const std::string& word) {
  std::vector<int> letters;
  for (char ch : word) letters.push_back(ch - '1');
  return hopf::tensor_word(V, letters);
}

inline Tensor make_tensor(const hopf::BraidedSpace& V, int degree,
                          const std::vector<std::pair<Scalar, std::string>>& terms) {
  Tensor t;
  t.degree = degree;
  for (const auto& [c, w] : terms) t.v = hopf::sv_add(t.v, hopf::sv_scale(make_tensor(V, w).v, c));
  return t;
}

// Class 1 on the H side.
inline std::vector<Derivation> h_class1_derivations(const Params& p) {
  const int j = p.j, t = p.iota;
  const Scalar A = (sg(t) * xp(-2 * j) + sg(t + 1) * xp(2 * j)) * xp(4) / (Scalar(1) + xp(5));
  return {
      {"111", 1, {}},
      {"111", 2, {}},
      {"112", 1, {{1, "12"}, {sg(t + 1) * xp(-2 * j), "21"}}},
      {"112", 2, {{xp(2 * j), "11"}}},
      {"121", 1, {{sg(t + 1) * xp(-2 * j), "12"}}},
      {"121", 2, {{sg(t) * xp(-2 * j), "11"}}},
      {"211", 1, {{sg(t), "21"}}},
      {"211", 2, {{1, "11"}}},
      {"222", 1, {{(Scalar(1) + xp(4 * j)) * A, "12"}, {sg(t + 1) * xp(2 * j) * A, "21"}}},
      {"222", 2, {}},
      {"122", 1, {{A * xp(2 * j), "11"}, {-xp(4 * j), "22"}}},
      {"122", 2, {{sg(t + 1), "12"}}},
      {"221", 1, {{A, "11"}, {xp(4 * j), "22"}}},
      {"221", 2, {{-xp(2 * j), "21"}}},
      {"212", 1, {{sg(t) * xp(-2 * j) * A, "11"}}},
      {"212", 2, {{1, "12"}, {sg(t) * xp(2 * j), "21"}}},
  };
}

// Class 1 on the K side.
inline std::vector<Derivation> k_class1_derivations(const Params& p) {
  const int i = p.i, j = p.j;
  return {
      {"111", 1, {}},
      {"111", 2, {}},
      {"112", 1, {{1, "12"}, {-xp(-j * (i + 1)), "21"}}},
      {"112", 2, {{xp(-2 * j * (i + 1)), "11"}}},
      {"121", 1, {{sg(i) * xp(-2 * i * j), "12"}}},
      {"121", 2, {{xp(-j * (i + 1)), "11"}}},
      {"211", 1, {{sg(i + 1), "21"}}},
      {"211", 2, {{1, "11"}}},
      {"222", 1, {{-xp(-2 * i * j) * (sg(i) + xp(-j)), "12"}, {xp(-2 * i * j) * (Scalar(1) + sg(i) * xp(-j)), "21"}}},
      {"222", 2, {}},
      {"122", 1, {{-xp(-2 * i * j), "22"}, {xp(-2 * i * j) * (sg(i) + xp(-j)), "11"}}},
      {"122", 2, {{xp(-j * (i + 1)) * (Scalar(1) + xp(-2 * i * j)), "12"}}},
      {"221", 1, {{xp(-i * j) * (sg(i) + xp(-j)), "11"}, {xp(-2 * i * j), "22"}}},
      {"221", 2, {{Scalar(1) + xp(-2 * j), "21"}}},
      {"212", 1, {{xp(-j * (i + 1)) * (xp(-j * (i + 1)) + sg(i) * xp(-i * j)), "11"}}},
      {"212", 2, {{1, "12"}, {sg(i * j) * xp(-j), "21"}}},
  };
}


// Coproduct identities in T(V) # H used to pin down the liftings.
struct CoproductIdentity {
  std::string name;
  hopf::SmashElement element;
  hopf::SmashTensor expected;
};

inline std::vector<CoproductIdentity> lifting_identities(hopf::Family f, const Params& p, const hopf::YDModule& M,
                                                         const hopf::BraidedSpace& V) {
  using hopf::smash_add;
  using hopf::smash_tensor;
  const auto& host = *M.host;
  const hopf::SparseVec one = host.hopf.unit();
  auto h = [&](const char* text) { return host.element(text); };
  auto T = [&](int degree, const std::vector<std::pair<Scalar, std::string>>& terms) {
    return make_tensor(V, degree, terms);
  };
  const Tensor empty{0, hopf::sv_unit(0)};
  const int j = p.j;
  std::vector<CoproductIdentity> out;
  // primitive-like: x (x) 1 + g (x) x + sum c_i h_i (x) y_i
  auto identity = [&](const std::string& name, const Tensor& x, const hopf::SparseVec& g,
                      const std::vector<std::tuple<Scalar, hopf::SparseVec, Tensor>>& extra) {
    hopf::SmashTensor e = smash_tensor(x, one, empty, one);
    smash_add(e, smash_tensor(empty, g, x, one));
    for (const auto& [c, hh, y] : extra) smash_add(e, smash_tensor(empty, hh, y, one, c));
    out.push_back({name, hopf::smash_element(x, one), e});
  };
  if (f == hopf::Family::C) {
    const Scalar den = Scalar(1) + xp(5);
    const Tensor X = T(3, {{xp(2 * j), "112"}, {xp(-2 * j), "121"}, {1, "211"}});
    const Tensor Y = T(3, {{(Scalar(1) - xp(2 * j)) * xp(4) / den, "112"}, {(Scalar(1) - xp(4 * j)) * xp(4) / den, "121"}, {1, "222"}});
    const Tensor Z = T(3, {{1, "122"}, {1, "212"}, {1, "221"}});
    const Tensor v13 = T(3, {{1, "111"}});
    const Scalar ti = Scalar::theta().inverse();
    const Scalar x1 = ti * hopf::h_const_x1(p), x2 = ti * hopf::h_const_x2(p);
    if (p.k == 0) {
      identity("Delta(v1^3)", v13, one, {{x2, h("b*a^5"), X}});
      identity("Delta(X)", X, h("d*a^5"), {});
      identity("Delta(Y)", Y, h("d*a^5"), {});
      identity("Delta(Z)", Z, one, {{x1, h("b*a^5"), X}, {Scalar(-2) * xp(j) * x2, h("b*a^5"), Y}});
    } else {
      identity("Delta(v1^3)", v13, h("d*a^2"), {{x2, h("c*a^2"), X}});
      identity("Delta(X)", X, h("a^3"), {});
      identity("Delta(Y)", Y, h("a^3"), {});
      identity("Delta(Z)", Z, h("d*a^2"), {{x1, h("c*a^2"), X}, {Scalar(2) * xp(j) * x2, h("c*a^2"), Y}});
    }
  } else {
    const std::string ci = p.iota ? "c*" : "";
    auto hc = [&](const std::string& w) { return host.element(w.empty() ? (p.iota ? "c" : "1") : ci + w); };
    const Tensor X = T(3, {{1, "211"}, {xp(j), "121"}, {xp(2 * j), "112"}});
    const Tensor Y = T(3, {{1, "222"}, {1, "112"}, {1, "211"}, {1, "121"}});
    const Tensor Z = T(3, {{1, "221"}, {1, "122"}, {1, "212"}});
    const Tensor e13 = T(3, {{1, "111"}});
    identity("Delta(e1^3)", e13, hc(""), {{xp(2) * (Scalar(1) + xp(j)), hc("b*a^5"), X}});
    identity("Delta(X)", X, hc("a^3"), {});
    identity("Delta(Y)", Y, hc("a^3"), {});
    identity("Delta(Z)", Z, hc(""), {{Scalar(2) * xp(2), hc("b*a^5"), Y}, {xp(j - 1) - xp(2), hc("b*a^5"), X}});
  }
  return out;
}

}  // namespace closed_forms
