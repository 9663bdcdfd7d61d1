#include "hopfalg/nichols.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hopfalg/yd.hpp"

namespace hopf {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

SparseVec accum_take(KeyAccum& acc) {
  SparseVec out;
  for (auto& [k, s] : acc.take_sorted()) out.emplace_back(static_cast<int>(k), std::move(s));
  return out;
}

// Columns of c as sparse lists.
std::vector<std::vector<std::pair<int, Scalar>>> c_columns(const BraidedSpace& V) {
  const int dd = V.dim * V.dim;
  std::vector<std::vector<std::pair<int, Scalar>>> cols(dd);
  for (int col = 0; col < dd; ++col)
    for (int r = 0; r < dd; ++r)
      if (!V.c(r, col).is_zero()) cols[col].emplace_back(r, V.c(r, col));
  return cols;
}

// Split a degree-n tensor by its first letter.
std::vector<SparseVec> split_first(int dim, int n, const SparseVec& t) {
  std::vector<SparseVec> parts(dim);
  const int w = ipow(dim, n - 1);
  for (const auto& [idx, s] : t) parts[idx / w].emplace_back(idx % w, s);
  return parts;
}

SparseVec prefix(int dim, int n, int x, const SparseVec& t) {  // e_x (x) t, t of degree n-1
  SparseVec out;
  const int off = x * ipow(dim, n - 1);
  for (const auto& [idx, s] : t) out.emplace_back(off + idx, s);
  return out;
}

SparseVec comp(const BraidedSpace& V, int k, int n, const SparseVec& t) {
  if (t.empty()) return {};
  if (k == 0 || k == n) return t;
  auto parts = split_first(V.dim, n, t);
  SparseVec out;
  for (int x = 0; x < V.dim; ++x) {
    if (parts[x].empty()) continue;
    out = sv_add(out, prefix(V.dim, n, x, comp(V, k - 1, n - 1, parts[x])));
    SparseVec b = prefix(V.dim, n, x, comp(V, k, n - 1, parts[x]));
    for (int i = 1; i <= k; ++i) b = apply_c(V, n, i, b);
    out = sv_add(out, b);
  }
  return out;
}

Alphabet letters_alphabet(const BraidedSpace& V) {
  return Alphabet(V.letters, std::vector<int>(V.letters.size(), 1));
}

}  // namespace

BraidedSpace braided_space(const YDModule& M, std::vector<std::string> letters) {
  BraidedSpace V;
  V.dim = M.dim;
  V.c = braiding(M);
  if (letters.empty())
    for (int i = 0; i < M.dim; ++i) letters.push_back("v" + std::to_string(i + 1));
  V.letters = std::move(letters);
  return V;
}

bool braid_equation_holds(const BraidedSpace& V) {
  Matrix I = Matrix::identity(V.dim);
  Matrix c1 = V.c.kron(I), c2 = I.kron(V.c);
  return c1 * c2 * c1 == c2 * c1 * c2;
}

Tensor tensor_word(const BraidedSpace& V, const std::vector<int>& letters, const Scalar& c) {
  int idx = 0;
  for (int l : letters) idx = idx * V.dim + l;
  Tensor t;
  t.degree = static_cast<int>(letters.size());
  if (!c.is_zero()) t.v.emplace_back(idx, c);
  return t;
}

Tensor tensor_parse(const BraidedSpace& V, const std::string& text) {
  Alphabet A = letters_alphabet(V);
  Poly p = parse_poly(A, text);
  Tensor t;
  t.degree = -1;
  KeyAccum acc;
  for (const auto& [m, c] : p) {
    int n = static_cast<int>(m.w.size());
    if (t.degree >= 0 && n != t.degree) throw std::invalid_argument("tensor is not homogeneous: " + text);
    t.degree = n;
    int idx = 0;
    for (uint8_t l : m.w) idx = idx * V.dim + l;
    acc.add(idx, c);
  }
  if (t.degree < 0) t.degree = 0;
  t.v = accum_take(acc);
  return t;
}

std::string tensor_format(const BraidedSpace& V, const Tensor& t) {
  Alphabet A = letters_alphabet(V);
  Poly p;
  for (const auto& [idx, s] : t.v) {
    Word w(t.degree);
    int r = idx;
    for (int q = t.degree - 1; q >= 0; --q) {
      w[q] = static_cast<uint8_t>(r % V.dim);
      r /= V.dim;
    }
    poly_add_term(p, A.mono(w), s);
  }
  return format_poly(A, p);
}

bool tensor_equal(const Tensor& a, const Tensor& b) {
  if (a.v.empty() && b.v.empty()) return true;
  return a.degree == b.degree && sv_equal(a.v, b.v);
}

SparseVec apply_c(const BraidedSpace& V, int n, int i, const SparseVec& t) {
  if (i < 1 || i >= n) throw std::out_of_range("braiding slot out of range");
  static thread_local const BraidedSpace* cached = nullptr;
  static thread_local Matrix cached_c;
  static thread_local std::vector<std::vector<std::pair<int, Scalar>>> cols;
  if (cached != &V || !(cached_c == V.c)) {
    cols = c_columns(V);
    cached = &V;
    cached_c = V.c;
  }
  const int d = V.dim;
  const int wp = ipow(d, n - i), wq = wp / d;  // weights of slots i and i+1
  KeyAccum acc;
  for (const auto& [idx, s] : t) {
    int x = (idx / wp) % d, y = (idx / wq) % d;
    int base = idx - x * wp - y * wq;
    for (const auto& [r, cs] : cols[x * d + y]) acc.add(base + (r / d) * wp + (r % d) * wq, s * cs);
  }
  return accum_take(acc);
}

Matrix elementary_braiding(const BraidedSpace& V, int n, int i) {
  const int N = ipow(V.dim, n);
  Matrix m(N, N);
  for (int col = 0; col < N; ++col)
    for (const auto& [r, s] : apply_c(V, n, i, sv_unit(col))) m(r, col) = s;
  return m;
}

SparseVec apply_T(const BraidedSpace& V, int n, const SparseVec& t) {
  SparseVec u = t;
  for (int i = n - 1; i >= 1; --i) u = sv_add(t, apply_c(V, n, i, u));
  return u;
}

SparseVec apply_T_prime(const BraidedSpace& V, int n, const SparseVec& t) {
  SparseVec u = t, acc = t;
  for (int i = 1; i < n; ++i) {
    u = apply_c(V, n, i, u);
    acc = sv_add(acc, u);
  }
  return acc;
}

SparseVec apply_symmetrizer(const BraidedSpace& V, int n, const SparseVec& t) {
  if (n <= 1 || t.empty()) return t;
  auto parts = split_first(V.dim, n, t);
  SparseVec inner;
  for (int x = 0; x < V.dim; ++x)
    if (!parts[x].empty()) inner = sv_add(inner, prefix(V.dim, n, x, apply_symmetrizer(V, n - 1, parts[x])));
  return apply_T_prime(V, n, inner);
}

Matrix symmetrizer(const BraidedSpace& V, int n) {
  const int N = ipow(V.dim, n);
  Matrix m(N, N);
  for (int col = 0; col < N; ++col)
    for (const auto& [r, s] : apply_symmetrizer(V, n, sv_unit(col))) m(r, col) = s;
  return m;
}

Matrix symmetrizer_bruteforce(const BraidedSpace& V, int n) {
  const int N = ipow(V.dim, n);
  Matrix total(N, N);
  std::vector<Matrix> c;
  for (int i = 1; i < n; ++i) c.push_back(elementary_braiding(V, n, i));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // reduced word by bubble sort: each adjacent swap removes one inversion
    std::vector<int> p = perm, word;
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (int i = 0; i + 1 < n; ++i)
        if (p[i] > p[i + 1]) {
          std::swap(p[i], p[i + 1]);
          word.push_back(i);
          swapped = true;
        }
    }
    Matrix m = Matrix::identity(N);
    for (int s : word) m = m * c[s];
    total = total + m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

HilbertResult hilbert_function(const BraidedSpace& V, int cap, const std::function<void(int, int)>& progress) {
  HilbertResult r;
  r.ranks.push_back(1);
  r.total = 1;
  if (cap < 1) return r;
  std::vector<SparseVec> prev;
  for (int x = 0; x < V.dim; ++x) prev.push_back(sv_unit(x));
  r.ranks.push_back(V.dim);
  r.total += V.dim;
  if (progress) progress(1, V.dim);
  if (V.dim == 0) {
    r.finite = true;
    return r;
  }
  for (int n = 2; n <= cap; ++n) {
    Echelon E;
    for (int x = 0; x < V.dim; ++x)
      for (const auto& b : prev) E.add(apply_T_prime(V, n, prefix(V.dim, n, x, b)));
    int rank = E.rank();
    r.ranks.push_back(rank);
    r.total += rank;
    if (progress) progress(n, rank);
    if (rank == 0) {
      r.finite = true;
      return r;
    }
    prev.clear();
    for (const auto& [piv, row] : E.rows()) prev.push_back(row);
  }
  return r;
}

Tensor coproduct_component(const BraidedSpace& V, int k, const Tensor& t) {
  if (k < 0 || k > t.degree) throw std::out_of_range("coproduct component out of range");
  return {t.degree, comp(V, k, t.degree, t.v)};
}

Tensor skew_derive(const BraidedSpace& V, int i, const Tensor& t) {
  if (t.degree < 1) throw std::invalid_argument("skew derivation of a degree-0 tensor");
  SparseVec d = apply_T(V, t.degree, t.v);
  Tensor out;
  out.degree = t.degree - 1;
  const int w = ipow(V.dim, t.degree - 1);
  for (const auto& [idx, s] : d)
    if (idx / w == i - 1) out.v.emplace_back(idx % w, s);
  return out;
}

bool in_ideal(const BraidedSpace& V, const Tensor& t) {
  if (t.is_zero()) return true;
  if (t.degree <= 1) return false;
  for (int i = 1; i <= V.dim; ++i)
    if (!in_ideal(V, skew_derive(V, i, t))) return false;
  return true;
}

bool in_symmetrizer_kernel(const BraidedSpace& V, const Tensor& t) {
  return apply_symmetrizer(V, t.degree, t.v).empty();
}

bool primitive_in_T(const BraidedSpace& V, const Tensor& t) {
  for (int k = 1; k < t.degree; ++k)
    if (!coproduct_component(V, k, t).is_zero()) return false;
  return true;
}

std::vector<std::vector<int>> rewriting_spelling(const BraidedSpace& V) {
  if (V.dim == 1) return {{0}};
  if (V.dim == 2) return {{1}, {0, 1}, {0}};
  throw std::invalid_argument("relation counting is implemented for dimension 1 and 2");
}

std::vector<int> rewriting_letters(const BraidedSpace& V) {
  if (V.dim == 1) return {0};
  if (V.dim == 2) return {2, 0};
  throw std::invalid_argument("relation counting is implemented for dimension 1 and 2");
}

RewritingSystem nichols_rewriting(const BraidedSpace& V, const std::vector<Tensor>& relations) {
  Alphabet A;
  const std::vector<int> map_letter = rewriting_letters(V);
  std::vector<Poly> polys;
  if (V.dim == 1) {
    A = Alphabet({V.letters[0]}, {1});
  } else {
    const std::string& l1 = V.letters[0];
    const std::string& l2 = V.letters[1];
    A = Alphabet({l2, l1.substr(0, l1.size() - 1) + "12", l1}, {4, 7, 3});
    polys.push_back(poly_add(parse_poly(A, l1 + "*" + l2), poly_scale(parse_poly(A, A.letters()[1]), Scalar(-1))));
  }
  for (const auto& t : relations) {
    Poly p;
    for (const auto& [idx, s] : t.v) {
      Word w(t.degree);
      int r = idx;
      for (int q = t.degree - 1; q >= 0; --q) {
        w[q] = static_cast<uint8_t>(map_letter[r % V.dim]);
        r /= V.dim;
      }
      poly_add_term(p, A.mono(w), s);
    }
    if (!p.empty()) polys.push_back(p);
  }
  return complete_relations(A, polys);
}

std::optional<int> nichols_dim_by_relations(const BraidedSpace& V, const std::vector<Tensor>& relations,
                                            std::size_t max_count) {
  RewritingSystem sys = nichols_rewriting(V, relations);
  try {
    return static_cast<int>(sys.irreducible_monomials(-1, max_count).size());
  } catch (const IrreducibleOverflow&) {
    return std::nullopt;
  }
}

std::vector<std::string> side_letters(Side s, int dim) {
  const std::string b = s == Side::H ? "v" : "e";
  if (dim == 1) return {b};
  std::vector<std::string> out;
  for (int i = 1; i <= dim; ++i) out.push_back(b + std::to_string(i));
  return out;
}

namespace {

Scalar sgn(int e) { return Scalar::sign_pow(e); }
Scalar xp(int e) { return Scalar::xi_pow(e); }

// Relation from (coefficient, word) pairs; words spelled with '1' and '2'.
Tensor rel(const BraidedSpace& V, std::initializer_list<std::pair<Scalar, const char*>> terms) {
  Tensor t;
  KeyAccum acc;
  for (const auto& [c, w] : terms) {
    std::vector<int> letters;
    for (const char* q = w; *q; ++q) letters.push_back(*q - '1');
    Tensor m = tensor_word(V, letters, c);
    t.degree = m.degree;
    for (const auto& [idx, s] : m.v) acc.add(idx, s);
  }
  t.v = accum_take(acc);
  return t;
}

Tensor power(const BraidedSpace& V, int letter, int n) {
  return tensor_word(V, std::vector<int>(n, letter));
}

int ord(const Scalar& q) {
  auto n = order_of_root_of_unity(q, 12);
  if (!n) throw std::logic_error("not a root of unity of order <= 12");
  return *n;
}

}  // namespace

std::vector<Tensor> class_relations(Side s, const Params& p, const BraidedSpace& V, bool uncorrected) {
  auto labels = classify_param(s, p);
  const int i = p.i, j = p.j, k = p.k, t = p.iota;
  const Scalar one(1);
  std::vector<Tensor> r;
  if (s == Side::H) {
    const Scalar den = one + xp(5);
    if (has_label(labels, "L1")) {
      r.push_back(power(V, 0, 3));
      r.push_back(rel(V, {{xp(2 * j), "112"}, {sgn(t) * xp(-2 * j), "121"}, {one, "211"}}));
      r.push_back(rel(V, {{one, "122"}, {sgn(t), "212"}, {one, "221"}}));
      r.push_back(rel(V, {{sgn(t) * (one - xp(2 * j)) * xp(4) / den, "112"},
                          {(one - xp(-2 * j)) * xp(4) / den, "121"},
                          {one, "222"}}));
    } else if (has_label(labels, "L2")) {
      r.push_back(power(V, 0, 3));
      r.push_back(rel(V, {{xp(2 * j), "112"}, {sgn(k) * xp(j), "121"}, {one, "211"}}));
      r.push_back(rel(V, {{one, "221"}, {sgn(t) * xp(2 * j) + sgn(k) * xp(j), "212"}, {-one, "122"}}));
      r.push_back(power(V, 1, 6));
    } else if (has_label(labels, "L3")) {
      r.push_back(power(V, 0, 6));
      r.push_back(rel(V, {{sgn(k + t) * xp(-j), "112"}, {sgn(t) + sgn(k) * xp(-j), "121"}, {one, "211"}}));
      r.push_back(rel(V, {{sgn(t + 1) * Scalar(Rational(1, 3)) * (xp(1) + xp(2)), "111"},
                          {one, "122"},
                          {sgn(t), "212"},
                          {one, "221"}}));
      r.push_back(rel(V, {{sgn(t) * xp(1 - 2 * j) / den, "112"}, {sgn(k + t) * xp(1 - j) / den, "121"}, {one, "222"}}));
    } else if (has_label(labels, "L4")) {
      r.push_back(power(V, 0, 2));
      r.push_back(rel(V, {{one, "12"}, {sgn(t), "21"}}));
      r.push_back(power(V, 1, 2));
    } else if (has_label(labels, "L5")) {
      r.push_back(power(V, 0, 2));
      r.push_back(rel(V, {{one, "12"}, {sgn(k) * xp(5 * j), "21"}}));
      r.push_back(power(V, 1, ord(sgn(k + t - 1) * xp(-j))));
    } else if (has_label(labels, "L6")) {
      r.push_back(rel(V, {{one, "12"}, {sgn(t), "21"}}));
      r.push_back(rel(V, {{one, "22"}, {(one - xp(2)).inverse() * xp(2 + 4 * i) * sgn(t), "11"}}));
      r.push_back(power(V, 0, ord(sgn(t + 1 + k) * xp(j))));
    }
  } else {
    const int kt = k * t;
    if (has_label(labels, "T1")) {
      r.push_back(power(V, 0, 3));
      r.push_back(rel(V, {{one, "211"}, {xp(j), "121"}, {xp(2 * j), "112"}}));
      r.push_back(rel(V, {{one, "222"}, {sgn(j), "112"}, {sgn(j), "211"}, {one, "121"}}));
      r.push_back(rel(V, {{one, "221"}, {one, "122"}, {sgn(j), "212"}}));
    } else if (has_label(labels, "T2")) {
      r.push_back(power(V, 0, 6));
      r.push_back(rel(V, {{one, "112"}, {sgn(kt) * (one + sgn(kt) * xp(j)), "121"}, {sgn(kt) * xp(j), "211"}}));
      r.push_back(rel(V, {{sgn(kt), "111"}, {one, "221"}, {sgn(kt), "212"}, {one, "122"}}));
      r.push_back(rel(V, {{sgn(kt), "112"}, {one, "121"}, {sgn(kt), "211"}, {one, "222"}}));
    } else if (has_label(labels, "T3")) {
      r.push_back(power(V, 0, 3));
      r.push_back(rel(V, {{one, "211"}, {xp(j), "121"}, {xp(2 * j), "112"}}));
      r.push_back(power(V, 1, 6));
      // The uncorrected middle coefficient xi^{2j} - (-1)^{k iota} xi^j is off by the sign (-1)^{k iota + 1}.
      const Scalar mid = uncorrected ? xp(2 * j) - sgn(kt) * xp(j) : sgn(kt + 1) * xp(2 * j) + xp(j);
      r.push_back(rel(V, {{one, "221"}, {mid, "212"}, {-one, "122"}}));
    } else if (has_label(labels, "T4")) {
      r.push_back(power(V, 0, 2));
      r.push_back(rel(V, {{one, "12"}, {sgn(j), "21"}}));
      r.push_back(power(V, 1, 2));
    } else if (has_label(labels, "T5")) {
      r.push_back(power(V, 0, 2));
      r.push_back(rel(V, {{one, "12"}, {xp(-j), "21"}}));
      r.push_back(power(V, 1, ord(sgn(i) * xp(-j))));
    } else if (has_label(labels, "T6")) {
      r.push_back(power(V, 0, ord(sgn(i) * xp(j))));
      // Often written as a commutator; e1 and e2 anticommute when i is odd.
      r.push_back(rel(V, {{one, "12"}, {uncorrected ? -one : sgn(i + 1), "21"}}));
      r.push_back(rel(V, {{one, "22"}, {xp(i - 1), "11"}}));
    }
  }
  return r;
}

std::vector<Tensor> class_relations_one_dim(Side s, const Params& p, const BraidedSpace& V) {
  if (classify_one_dim(s, p).empty()) return {};
  return {power(V, 0, 2)};
}

}  // namespace hopf
