#include "hopfalg/lifting.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace hopf {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int unit_index(const HopfAlgebra& H) {
  const SparseVec& u = H.unit();
  if (u.size() != 1 || !u[0].second.is_one()) throw std::logic_error(H.name() + ": unit is not a basis element");
  return u[0].first;
}

SparseVec mul_sparse(const std::vector<SparseVec>& table, int dim, const SparseVec& x, const SparseVec& y) {
  KeyAccum acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& [k, c] : table[static_cast<std::size_t>(i) * dim + j]) acc.add(k, a * b * c);
  SparseVec out;
  for (auto& [k, s] : acc.take_sorted()) out.emplace_back(static_cast<int>(k), std::move(s));
  return out;
}

SparseVec take(KeyAccum& acc) {
  SparseVec out;
  for (auto& [k, s] : acc.take_sorted()) out.emplace_back(static_cast<int>(k), std::move(s));
  return out;
}

// Delta^{(n)}(g) acting factorwise on a degree-n tensor.
SparseVec tensor_action(const YDModule& M, int g, int n, const SparseVec& t) {
  const HopfAlgebra& H = M.host->hopf;
  if (n == 0) {
    const Scalar& e = H.counit_vec()[g];
    return e.is_zero() ? SparseVec{} : sv_scale(t, e);
  }
  const int d = M.dim, w = ipow(d, n - 1);
  std::vector<SparseVec> parts(d);
  for (const auto& [idx, s] : t) parts[idx / w].emplace_back(idx % w, s);
  KeyAccum acc;
  for (const auto& term : H.comult_basis(g)) {
    for (int x = 0; x < d; ++x) {
      if (parts[x].empty()) continue;
      SparseVec rest = tensor_action(M, term.right, n - 1, parts[x]);
      if (rest.empty()) continue;
      const Matrix& act = M.action[term.left];
      for (int y = 0; y < d; ++y) {
        if (act(y, x).is_zero()) continue;
        const Scalar c = term.coef * act(y, x);
        for (const auto& [r, s] : rest) acc.add(y * w + r, c * s);
      }
    }
  }
  return take(acc);
}

SparseVec word_tensor(int dim, const std::vector<int>& letters) {
  int idx = 0;
  for (int l : letters) idx = idx * dim + l;
  return sv_unit(idx);
}

}  // namespace

// ---------------------------------------------------------------------------

SparseVec NicholsAlgebra::project(int degree, const SparseVec& t) const {
  const std::vector<int> letter = rewriting_letters(space);
  KeyAccum acc;
  for (const auto& [idx, s] : t) {
    Word w(degree);
    int r = idx;
    for (int q = degree - 1; q >= 0; --q) {
      w[q] = static_cast<uint8_t>(letter[r % space.dim]);
      r /= space.dim;
    }
    for (const auto& [m, c] : system.normal_form(w)) acc.add(index.at(m.w), s * c);
  }
  return take(acc);
}

SparseVec NicholsAlgebra::mul(int u, int w) const {
  Word x = basis[u];
  x.insert(x.end(), basis[w].begin(), basis[w].end());
  SparseVec out;
  for (const auto& [m, c] : system.normal_form(x)) out.emplace_back(index.at(m.w), c);
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  return out;
}

NicholsAlgebra nichols_algebra(const YDModule& M, const std::vector<std::string>& letters,
                               const std::vector<Tensor>& relations) {
  NicholsAlgebra R;
  R.module = M;
  R.space = braided_space(M, letters);
  R.system = nichols_rewriting(R.space, relations);
  R.basis = R.system.irreducible_monomials(-1, 5000);
  const auto spelling = rewriting_spelling(R.space);
  for (std::size_t b = 0; b < R.basis.size(); ++b) {
    R.index[R.basis[b]] = static_cast<int>(b);
    std::vector<int> s;
    for (uint8_t l : R.basis[b]) s.insert(s.end(), spelling[l].begin(), spelling[l].end());
    R.spelled.push_back(std::move(s));
  }
  return R;
}

NicholsAlgebra nichols_algebra(Side s, const Params& p, int dimension) {
  auto letters = side_letters(s, dimension);
  YDModule M = dimension == 1 ? yd_one_dim(s, p) : yd_simple(s, p);
  BraidedSpace V = braided_space(M, letters);
  auto rels = dimension == 1 ? class_relations_one_dim(s, p, V) : class_relations(s, p, V);
  if (rels.empty()) throw std::invalid_argument("no finite Nichols algebra for " + p.to_string());
  return nichols_algebra(M, letters, rels);
}

HopfAlgebra smash_product(const NicholsAlgebra& R) {
  const HopfAlgebra& H = R.module.host->hopf;
  const int dH = H.dim(), dR = R.dim(), d = R.space.dim;
  const int one = unit_index(H);
  const int empty = R.index.at(Word{});

  std::vector<SparseVec> rmul(static_cast<std::size_t>(dR) * dR);
  for (int u = 0; u < dR; ++u)
    for (int w = 0; w < dR; ++w) rmul[static_cast<std::size_t>(u) * dR + w] = R.mul(u, w);

  // Host action on the basis of R, word by word.
  const auto spelling = rewriting_spelling(R.space);
  const int nl = static_cast<int>(spelling.size());
  std::vector<std::vector<SparseVec>> act_letter(dH, std::vector<SparseVec>(nl));
  for (int g = 0; g < dH; ++g)
    for (int l = 0; l < nl; ++l) {
      const int n = static_cast<int>(spelling[l].size());
      act_letter[g][l] = R.project(n, tensor_action(R.module, g, n, word_tensor(d, spelling[l])));
    }
  std::vector<std::vector<SparseVec>> act(dH, std::vector<SparseVec>(dR));
  std::vector<std::vector<char>> done(dH, std::vector<char>(dR, 0));
  std::function<const SparseVec&(int, int)> act_word = [&](int g, int r) -> const SparseVec& {
    if (done[g][r]) return act[g][r];
    const Word& w = R.basis[r];
    SparseVec out;
    if (w.empty()) {
      if (!H.counit_vec()[g].is_zero()) out = sv_unit(empty, H.counit_vec()[g]);
    } else {
      const int rest = R.index.at(Word(w.begin() + 1, w.end()));
      for (const auto& term : H.comult_basis(g)) {
        SparseVec p = mul_sparse(rmul, dR, act_letter[term.left][w[0]], act_word(term.right, rest));
        out = sv_axpy(out, term.coef, p);
      }
    }
    act[g][r] = std::move(out);
    done[g][r] = 1;
    return act[g][r];
  };
  for (int g = 0; g < dH; ++g)
    for (int r = 0; r < dR; ++r) act_word(g, r);

  // Braided coproduct and coaction on the basis of R.
  std::vector<std::vector<CoproductTerm>> rcomult(dR);
  std::vector<std::vector<CoactionTerm>> rcoact(dR);
  for (int r = 0; r < dR; ++r) {
    const int n = static_cast<int>(R.spelled[r].size());
    Tensor t{n, word_tensor(d, R.spelled[r])};
    KeyAccum acc;
    for (int k = 0; k <= n; ++k) {
      const int w = ipow(d, n - k);
      std::map<int, SparseVec> by_left;
      for (const auto& [idx, s] : coproduct_component(R.space, k, t).v) by_left[idx / w].emplace_back(idx % w, s);
      for (const auto& [left, right] : by_left) {
        SparseVec pl = R.project(k, sv_unit(left));
        SparseVec pr = R.project(n - k, right);
        for (const auto& [a, ca] : pl)
          for (const auto& [b, cb] : pr) acc.add(static_cast<uint64_t>(a) * dR + b, ca * cb);
      }
    }
    for (auto& [key, s] : acc.take_sorted())
      rcomult[r].push_back({s, static_cast<int>(key / dR), static_cast<int>(key % dR)});
    std::map<int, SparseVec> by_h;
    for (const auto& [key, s] : tensor_coaction(R.module, n, t.v)) by_h[key.first].emplace_back(key.second, s);
    for (const auto& [h, tv] : by_h)
      for (const auto& [m, s] : R.project(n, tv)) rcoact[r].push_back({s, h, m});
  }

  std::vector<std::string> labels;
  const auto& hl = H.labels();
  for (int r = 0; r < dR; ++r)
    for (int h = 0; h < dH; ++h) {
      std::string rw = R.system.alphabet().format(R.basis[r]);
      if (r == empty) labels.push_back(hl[h]);
      else if (h == one) labels.push_back(rw);
      else labels.push_back(rw + "*" + hl[h]);
    }

  auto mult = [&](int i, int j) {
    const int r = i / dH, g = i % dH, s = j / dH, h = j % dH;
    KeyAccum acc;
    for (const auto& term : H.comult_basis(g)) {
      const SparseVec& gs = act[term.left][s];
      if (gs.empty()) continue;
      const SparseVec hh = H.mult_basis(term.right, h);
      for (const auto& [s2, cs] : gs)
        for (const auto& [u, cu] : rmul[static_cast<std::size_t>(r) * dR + s2])
          for (const auto& [w, cw] : hh) acc.add(static_cast<uint64_t>(u) * dH + w, term.coef * cs * cu * cw);
    }
    return take(acc);
  };
  auto comult = [&](int i) {
    const int r = i / dH, h = i % dH;
    const auto hcop = H.comult_basis(h);
    KeyAccum acc;
    const uint64_t N = static_cast<uint64_t>(dR) * dH;
    for (const auto& t1 : rcomult[r])
      for (const auto& t2 : rcoact[t1.right])
        for (const auto& t3 : hcop)
          for (const auto& [w, cw] : H.mult_basis(t2.h, t3.left))
            acc.add((static_cast<uint64_t>(t1.left) * dH + w) * N + static_cast<uint64_t>(t2.m) * dH + t3.right,
                    t1.coef * t2.coef * t3.coef * cw);
    std::vector<CoproductTerm> out;
    for (auto& [key, s] : acc.take_sorted())
      out.push_back({s, static_cast<int>(key / N), static_cast<int>(key % N)});
    return out;
  };
  std::vector<Scalar> counit(static_cast<std::size_t>(dR) * dH);
  for (int h = 0; h < dH; ++h) counit[static_cast<std::size_t>(empty) * dH + h] = H.counit_vec()[h];

  HopfAlgebra A("B(" + R.module.name + ")#" + H.name(), labels, mult,
                sv_unit(empty * dH + one), comult, counit);

  // Generators: letters of V and the host generators.
  std::vector<SparseVec> gens;
  const auto vletter = rewriting_letters(R.space);
  for (int x = 0; x < d; ++x) gens.push_back(sv_unit(R.index.at(Word{static_cast<uint8_t>(vletter[x])}) * dH + one));
  for (const auto& g : H.generators()) {
    SparseVec v;
    for (const auto& [h, c] : g) v.emplace_back(empty * dH + h, c);
    gens.push_back(v);
  }
  A.set_generators(gens);

  // Antipode from S(r # h) = S(1 # h) S(r # 1) and the letters of R.
  std::vector<std::pair<int, SparseVec>> seeds;
  std::vector<std::tuple<int, int, int>> factors;
  for (int h = 0; h < dH; ++h) {
    SparseVec v;
    for (const auto& [w, c] : H.antipode_cols()[h]) v.emplace_back(empty * dH + w, c);
    seeds.emplace_back(empty * dH + h, v);
  }
  for (int x = 0; x < d; ++x) {
    const int r = R.index.at(Word{static_cast<uint8_t>(vletter[x])});
    SparseVec s;
    for (const auto& t : rcoact[r]) {
      SparseVec left;
      for (const auto& [w, c] : H.antipode_cols()[t.h]) left.emplace_back(empty * dH + w, c);
      s = sv_axpy(s, -t.coef, A.mul(left, sv_unit(t.m * dH + one)));
    }
    seeds.emplace_back(r * dH + one, s);
  }
  std::vector<int> order(dR);
  for (int r = 0; r < dR; ++r) order[r] = r;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return R.basis[a].size() < R.basis[b].size(); });
  auto check_factor = [&](int b, int l, int r) {
    SparseVec p = A.mult_basis(l, r);
    if (p.size() != 1 || p[0].first != b || !p[0].second.is_one())
      throw std::logic_error("smash product: no factorization certificate for " + A.labels()[b]);
    factors.emplace_back(b, l, r);
  };
  for (int r : order) {
    const Word& w = R.basis[r];
    if (w.empty()) continue;
    if (w.size() == 1) {
      if (spelling[w[0]].size() == 1) continue;  // seeded
      std::vector<int> sp = spelling[w[0]];
      int l = R.index.at(Word{static_cast<uint8_t>(vletter[sp[0]])});
      int rr = R.index.at(Word{static_cast<uint8_t>(vletter[sp[1]])});
      check_factor(r * dH + one, l * dH + one, rr * dH + one);
      continue;
    }
    const int first = R.index.at(Word{w[0]});
    const int rest = R.index.at(Word(w.begin() + 1, w.end()));
    check_factor(r * dH + one, first * dH + one, rest * dH + one);
  }
  for (int r = 0; r < dR; ++r)
    for (int h = 0; h < dH; ++h)
      if (r != empty && h != one) check_factor(r * dH + h, r * dH + one, empty * dH + h);
  A.set_antipode(antipode_from_factorization(A, factors, seeds));
  return A;
}

Matrix smash_inclusion(const NicholsAlgebra& R) {
  const int dH = R.module.host->hopf.dim();
  const int empty = R.index.at(Word{});
  Matrix m(R.dim() * dH, dH);
  for (int h = 0; h < dH; ++h) m(empty * dH + h, h) = Scalar(1);
  return m;
}

Matrix smash_projection(const NicholsAlgebra& R) {
  const int dH = R.module.host->hopf.dim();
  const int empty = R.index.at(Word{});
  Matrix m(dH, R.dim() * dH);
  for (int h = 0; h < dH; ++h) m(h, empty * dH + h) = Scalar(1);
  return m;
}

// ---------------------------------------------------------------------------

SmashElement smash_element(const Tensor& t, const SparseVec& h) {
  SmashElement x;
  for (const auto& [i, a] : t.v)
    for (const auto& [g, b] : h) x[{t.degree, i, g}] += a * b;
  std::erase_if(x, [](const auto& e) { return e.second.is_zero(); });
  return x;
}

SmashTensor smash_tensor(const Tensor& t1, const SparseVec& h1, const Tensor& t2, const SparseVec& h2,
                         const Scalar& c) {
  SmashTensor out;
  for (const auto& [k1, a] : smash_element(t1, h1))
    for (const auto& [k2, b] : smash_element(t2, h2)) out[{k1, k2}] += c * a * b;
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

void smash_add(SmashTensor& x, const SmashTensor& y, const Scalar& c) {
  for (const auto& [k, s] : y) x[k] += c * s;
  std::erase_if(x, [](const auto& e) { return e.second.is_zero(); });
}

std::map<std::pair<int, int>, Scalar> tensor_coaction(const YDModule& M, int degree, const SparseVec& t) {
  const HopfAlgebra& H = M.host->hopf;
  std::map<std::pair<int, int>, Scalar> out;
  if (degree == 0) {
    const int one = unit_index(H);
    for (const auto& [idx, s] : t) out[{one, idx}] += s;
    return out;
  }
  const int d = M.dim, w = ipow(d, degree - 1);
  std::vector<SparseVec> parts(d);
  for (const auto& [idx, s] : t) parts[idx / w].emplace_back(idx % w, s);
  for (int x = 0; x < d; ++x) {
    if (parts[x].empty()) continue;
    auto rest = tensor_coaction(M, degree - 1, parts[x]);
    for (const auto& term : M.coaction[x])
      for (const auto& [key, s] : rest)
        for (const auto& [h, ch] : H.mult_basis(term.h, key.first))
          out[{h, term.m * w + key.second}] += term.coef * s * ch;
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

SmashTensor graded_smash_coproduct(const YDModule& M, const BraidedSpace& V, const SmashElement& x) {
  const HopfAlgebra& H = M.host->hopf;
  SmashTensor out;
  for (const auto& [key, c] : x) {
    const int n = key.degree;
    const Tensor t{n, sv_unit(key.index)};
    const auto hcop = H.comult_basis(key.h);
    for (int k = 0; k <= n; ++k) {
      const int w = ipow(V.dim, n - k);
      for (const auto& [idx, c1] : coproduct_component(V, k, t).v) {
        for (const auto& [hk, c2] : tensor_coaction(M, n - k, sv_unit(idx % w)))
          for (const auto& t3 : hcop)
            for (const auto& [g, cg] : H.mult_basis(hk.first, t3.left))
              out[{{k, idx / w, g}, {n - k, hk.second, t3.right}}] += c * c1 * c2 * t3.coef * cg;
      }
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

std::string format_smash(const YDModule& M, const BraidedSpace& V, const SmashTensor& x) {
  if (x.empty()) return "0";
  const auto& hl = M.host->hopf.labels();
  auto part = [&](const SmashKey& k) {
    std::string t = k.degree == 0 ? "1" : tensor_format(V, Tensor{k.degree, sv_unit(k.index)});
    return t + "#" + hl[k.h];
  };
  std::string out;
  for (const auto& [k, s] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + s.to_string() + ")*" + part(k.first) + " (x) " + part(k.second);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string family_name(Family f) { return f == Family::C ? "C" : "B"; }

Family parse_family(const std::string& name) {
  if (name == "C" || name == "c") return Family::C;
  if (name == "B" || name == "b") return Family::B;
  throw std::invalid_argument("unknown lifting family '" + name + "' (expected C or B)");
}

Side family_side(Family f) { return f == Family::C ? Side::H : Side::K; }

std::vector<Params> lifting_parameters(Family f) {
  const Side s = family_side(f);
  const std::string label = f == Family::C ? "L1*" : "T1*";
  std::vector<Params> out;
  for (const auto& p : parameter_set(s))
    if (has_label(classify_param(s, p), label)) out.push_back(p);
  return out;
}

Lifting build_lifting(Family f, const Params& p, const Scalar& mu, const Scalar& z_shift) {
  const auto allowed = lifting_parameters(f);
  if (std::find(allowed.begin(), allowed.end(), p) == allowed.end())
    throw std::invalid_argument("parameters " + p.to_string() + " do not index a lifting of family " + family_name(f));
  FixtureParams fp;
  fp.i = p.i;
  fp.j = p.j;
  fp.k = p.k;
  fp.iota = p.iota;
  fp.mu = mu;
  Lifting L{f, p, mu, fixture(f == Family::C ? "Cfam" : "Bfam", fp), {}, {}};
  L.algebra = realize_hopf(L.fixture);
  L.checked_relations = L.fixture.relations;
  if (!z_shift.is_zero()) {
    // Z = v1 v2^2 + v2 v1 v2 + v2^2 v1 (or its e-analogue) = const * w with w a host word.
    const Alphabet& Al = L.fixture.alphabet;
    const std::string z = f == Family::C ? "v1*v2^2" : "e1*e2^2";
    const std::string w = f == Family::C ? (p.k == 0 ? "b*a^5" : "c*a^2") : (p.iota ? "c*b*a^5" : "b*a^5");
    const Mono zm = Al.mono(Al.parse_word(z));
    auto it = std::find_if(L.checked_relations.begin(), L.checked_relations.end(),
                           [&](const Poly& r) { return r.count(zm) > 0; });
    if (it == L.checked_relations.end()) throw std::logic_error("Z relation not found");
    poly_add_term(*it, Al.mono(Al.parse_word(w)), -z_shift);
  }
  return L;
}

Tensor2 relation_coproduct(const HopfAlgebra& A, const RewritingSystem& sys, const Poly& r) {
  const Alphabet& Al = sys.alphabet();
  std::vector<Tensor2> letter(Al.size());
  for (int x = 0; x < Al.size(); ++x) letter[x] = A.comult(realize_element(A, sys, Al.letters()[x]));
  const SparseVec& u = A.unit();
  Tensor2 unit;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : u) unit.emplace_back(static_cast<uint64_t>(i) * A.dim() + j, a * b);
  std::map<uint64_t, Scalar> acc;
  for (const auto& [m, c] : r) {
    Tensor2 t = unit;
    for (uint8_t l : m.w) t = A.tensor_mul(t, letter[l]);
    for (const auto& [k, s] : t) acc[k] += c * s;
  }
  Tensor2 out;
  for (auto& [k, s] : acc)
    if (!s.is_zero()) out.emplace_back(k, s);
  return out;
}

bool LiftingReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const LiftingCheck& c) { return c.pass; });
}

std::string LiftingReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : checks) j.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return nlohmann::json({{"ok", ok()}, {"checks", j}}).dump(2);
}

LiftingReport verify_lifting(const Lifting& L) {
  const HopfAlgebra& A = L.algebra;
  const RewritingSystem& sys = L.fixture.system;
  LiftingReport rep;

  rep.checks.push_back({"dimension", A.dim() == 432, "dim " + std::to_string(A.dim())});

  AxiomReport ax = verify_axioms(A);
  rep.checks.push_back({"hopf axioms", ax.ok(), ax.ok() ? "" : ax.summary()});

  {
    LiftingCheck c{"coproduct respects relations", true, ""};
    for (const auto& r : L.checked_relations) {
      SparseVec v = realize_poly(A, sys, r);
      Tensor2 d = relation_coproduct(A, sys, r);
      if (!v.empty() || !d.empty()) {
        c.pass = false;
        c.detail = format_poly(sys.alphabet(), r) + ": Delta = " + (d.empty() ? "0" : A.format(d)) +
                   (v.empty() ? "" : "; the relation itself is " + A.format(v));
        break;
      }
    }
    rep.checks.push_back(c);
  }

  {
    const Side s = family_side(L.family);
    HostPtr host = host_algebra(s == Side::H ? "H" : "K");
    const HopfAlgebra& H = host->hopf;
    std::vector<SparseVec> gens;
    for (const auto& l : host->fixture.alphabet.letters()) gens.push_back(realize_element(A, sys, l));
    const int sub = static_cast<int>(generated_subalgebra(A, gens).size());
    std::vector<SparseVec> cols;
    for (const auto& label : H.labels()) cols.push_back(realize_element(A, sys, label));
    MorphismReport m = check_morphism(linear_map_from_columns(cols, A.dim()), H, A);
    const bool pass = sub == 24 && m.hopf() && m.rank == 24;
    rep.checks.push_back({"coradical Hopf subalgebra",
                          pass,
                          "dim " + std::to_string(sub) + ", embedding of " + H.name() + (m.hopf() ? " is a Hopf map" : " fails: " + m.witness) +
                              ", rank " + std::to_string(m.rank)});
  }

  if (L.family == Family::B && L.params.iota == 0) {
    SparseVec c = realize_element(A, sys, "c");
    bool central = true;
    std::string witness;
    for (const auto& l : sys.alphabet().letters()) {
      SparseVec x = realize_element(A, sys, l);
      if (!sv_equal(A.mul(c, x), A.mul(x, c))) {
        central = false;
        witness = "c does not commute with " + l;
        break;
      }
    }
    const bool grouplike = is_grouplike(A, c);
    rep.checks.push_back({"c central group-like", central && grouplike,
                          witness.empty() ? (grouplike ? "" : "c is not group-like") : witness});
  } else {
    rep.checks.push_back({"c central group-like", true, "not applicable"});
  }
  return rep;
}

Matrix generator_matching(const Lifting& L, const NicholsAlgebra& R, const HopfAlgebra& smash) {
  const RewritingSystem& sys = L.fixture.system;
  const Alphabet& Al = sys.alphabet();
  const HopfAlgebra& H = R.module.host->hopf;
  const int dH = H.dim(), one = unit_index(H), empty = R.index.at(Word{});
  const auto vletter = rewriting_letters(R.space);
  std::map<std::string, SparseVec> image;
  for (int x = 0; x < R.space.dim; ++x)
    image[R.space.letters[x]] = sv_unit(R.index.at(Word{static_cast<uint8_t>(vletter[x])}) * dH + one);
  for (const auto& l : R.module.host->fixture.alphabet.letters()) {
    SparseVec v;
    for (const auto& [h, c] : R.module.host->element(l)) v.emplace_back(empty * dH + h, c);
    image[l] = v;
  }
  for (const auto& [name, def] : L.fixture.composite) {
    SparseVec v = smash.unit();
    for (uint8_t l : Al.parse_word(def)) v = smash.mul(v, image.at(Al.letters()[l]));
    image[name] = v;
  }
  std::vector<SparseVec> cols;
  for (const auto& label : L.algebra.labels()) {
    SparseVec v = smash.unit();
    for (uint8_t l : Al.parse_word(label)) v = smash.mul(v, image.at(Al.letters()[l]));
    cols.push_back(v);
  }
  return linear_map_from_columns(cols, smash.dim());
}

}  // namespace hopf
