#include "hopfalg/duality.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopf {

namespace {

std::string power(const std::string& letter, int e) {
  if (e == 0) return "1";
  return e == 1 ? letter : letter + "^" + std::to_string(e);
}

std::string times(const std::string& u, const std::string& w) {
  if (u == "1") return w;
  if (w == "1") return u;
  return u + "*" + w;
}

SparseVec word_image(const HopfAlgebra& B, const Fixture& f, const Word& w,
                     const std::map<std::string, SparseVec>& images) {
  const Alphabet& Al = f.alphabet;
  SparseVec v = B.unit();
  for (uint8_t l : w) {
    const std::string& name = Al.letters()[l];
    auto it = images.find(name);
    if (it != images.end()) {
      v = B.mul(v, it->second);
      continue;
    }
    auto def = f.composite.find(name);
    if (def == f.composite.end()) throw std::invalid_argument("no image for letter " + name);
    v = B.mul(v, word_image(B, f, Al.parse_word(def->second), images));
  }
  return v;
}

}  // namespace

SparseVec evaluate_in(const HopfAlgebra& B, const Fixture& f, const Poly& p,
                      const std::map<std::string, SparseVec>& images) {
  SparseVec r;
  for (const auto& [m, c] : p) r = sv_axpy(r, c, word_image(B, f, m.w, images));
  return r;
}

Matrix map_from_letter_images(const Fixture& f, const HopfAlgebra& A, const HopfAlgebra& B,
                              const std::map<std::string, SparseVec>& images) {
  std::vector<SparseVec> cols;
  cols.reserve(A.dim());
  for (const auto& label : A.labels()) cols.push_back(word_image(B, f, f.alphabet.parse_word(label), images));
  return linear_map_from_columns(cols, B.dim());
}

std::vector<SparseVec> dual_basis(const HopfAlgebra& A, const RewritingSystem& sys,
                                  const std::vector<std::string>& words) {
  const int n = A.dim();
  if (static_cast<int>(words.size()) != n) throw std::invalid_argument("dual_basis needs dim(A) words");
  Matrix P(n, n);
  for (int m = 0; m < n; ++m)
    for (const auto& [i, c] : realize_element(A, sys, words[m])) P(i, m) = c;
  auto inv = inverse(P);
  if (!inv) throw std::invalid_argument("words do not form a basis");
  std::vector<SparseVec> out(n);
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      if (!(*inv)(m, i).is_zero()) out[m].emplace_back(i, (*inv)(m, i));
  return out;
}

DualityMap psi_map(const Scalar& x_scale) {
  Fixture fh = fixture("H"), fa = fixture("A");
  HopfAlgebra H = realize_hopf(fh);
  DualityMap d{realize_hopf(fa), dual(H), {}, {}};
  // basis {a^i, d a^i, b a^i, c a^i}
  std::vector<std::string> words;
  for (const char* l : {"1", "d", "b", "c"})
    for (int i = 0; i < 6; ++i) words.push_back(times(l, power("a", i)));
  auto star = dual_basis(H, fh.system, words);
  auto A = [&](int i) { return star[i]; };
  auto D = [&](int i) { return star[6 + i]; };
  auto Bs = [&](int i) { return star[12 + i]; };
  auto C = [&](int i) { return star[18 + i]; };
  SparseVec g, h, x;
  for (int i = 0; i < 6; ++i) {
    g = sv_axpy(sv_axpy(g, Scalar::xi_pow(i), A(i)), Scalar::xi_pow(i + 1), D(i));
    h = sv_axpy(sv_axpy(h, Scalar(1), A(i)), Scalar(-1), D(i));
    x = sv_axpy(sv_axpy(x, Scalar(1), Bs(i)), Scalar(1), C(i));
  }
  d.images = {{"g", g}, {"h", h}, {"x", sv_scale(x, Scalar::theta() * x_scale)}};
  d.map = map_from_letter_images(fa, d.source, d.target, d.images);
  return d;
}

DualityMap phi_map(const Scalar& x_scale) {
  Fixture fc = fixture("C"), fa = fixture("A1");
  HopfAlgebra C = realize_hopf(fc);
  DualityMap d{realize_hopf(fa), dual(C), {}, {}};
  // basis {a^j, b a^j}
  std::vector<std::string> words;
  for (const char* l : {"1", "b"})
    for (int j = 0; j < 6; ++j) words.push_back(times(l, power("a", j)));
  auto star = dual_basis(C, fc.system, words);
  SparseVec g, x;
  for (int j = 0; j < 6; ++j) {
    g = sv_axpy(g, Scalar::xi_pow(-j), star[j]);
    x = sv_axpy(x, Scalar(1), star[6 + j]);
  }
  d.images = {{"g", g}, {"x", sv_scale(x, Scalar::xi_pow(1) * x_scale)}};
  d.map = map_from_letter_images(fa, d.source, d.target, d.images);
  return d;
}

bool DoubleCheck::relations_hold() const {
  for (const auto& r : relations)
    if (!r.second) return false;
  return !relations.empty();
}

DoubleCheck check_double() {
  Fixture fd = fixture("D"), fh = fixture("H");
  HopfAlgebra H = realize_hopf(fh);
  DualityMap psi = psi_map();
  DoubleCheck out{realize_hopf(fd), drinfeld_double(twist(H, false, true)), {}, {}};
  const HopfAlgebra& D = out.computed;
  const int na = H.dim();
  // D(H^cop) lives on dual(H^cop) (x) H^cop with basis index f * dim(H) + a
  auto left = [&](const SparseVec& f) {
    SparseVec r;
    for (const auto& [i, c] : f)
      for (const auto& [j, u] : H.unit()) r.emplace_back(i * na + j, c * u);
    return r;
  };
  auto right = [&](const SparseVec& a) {
    SparseVec r;
    for (int i = 0; i < na; ++i)
      if (!H.counit_vec()[i].is_zero())
        for (const auto& [j, c] : a) r.emplace_back(i * na + j, H.counit_vec()[i] * c);
    std::sort(r.begin(), r.end(), [](const Term& p, const Term& q) { return p.first < q.first; });
    return r;
  };
  std::map<std::string, SparseVec> images;
  for (const auto& [l, v] : psi.images) images[l] = left(v);
  for (const char* l : {"a", "b", "c", "d"}) images[l] = right(realize_element(H, fh.system, l));
  for (const auto& r : fd.relations)
    out.relations.emplace_back(format_poly(fd.alphabet, r), evaluate_in(D, fd, r, images).empty());
  out.iso = check_morphism(map_from_letter_images(fd, out.presented, D, images), out.presented, D);
  return out;
}

}  // namespace hopf
