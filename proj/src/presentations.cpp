#include "hopfalg/presentations.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hopf {

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  for (uint8_t c : w) h = (h ^ c) * 1099511628211ull;
  return h ^ w.size();
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> letters, std::vector<int> weights)
    : letters_(std::move(letters)), weights_(std::move(weights)) {
  if (letters_.size() != weights_.size()) throw std::invalid_argument("alphabet: weights do not match letters");
  if (letters_.size() > 250) throw std::invalid_argument("alphabet too large");
  for (int w : weights_)
    if (w <= 0) throw std::invalid_argument("alphabet: weights must be positive");
}

int Alphabet::index(const std::string& letter) const {
  for (int i = 0; i < size(); ++i)
    if (letters_[i] == letter) return i;
  return -1;
}

int Alphabet::weight(const Word& w) const {
  int s = 0;
  for (uint8_t c : w) s += weights_[c];
  return s;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += letters_[w[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Word Alphabet::parse_word(const std::string& text) const {
  Word w;
  std::string t = trim(text);
  if (t.empty() || t == "1") return w;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    tok = trim(tok);
    if (tok.empty()) throw std::invalid_argument("bad word: " + text);
    if (tok == "1") continue;
    int power = 1;
    auto caret = tok.find('^');
    std::string name = tok;
    if (caret != std::string::npos) {
      name = trim(tok.substr(0, caret));
      std::string e = trim(tok.substr(caret + 1));
      if (e.empty() || !std::all_of(e.begin(), e.end(), ::isdigit)) throw std::invalid_argument("bad exponent in " + text);
      power = std::stoi(e);
    }
    int idx = index(name);
    if (idx < 0) throw std::invalid_argument("unknown letter '" + name + "'");
    for (int i = 0; i < power; ++i) w.push_back(static_cast<uint8_t>(idx));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Polynomials

void poly_add_term(Poly& p, const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b) poly_add_term(r, m, c);
  return r;
}

Poly poly_scale(const Poly& a, const Scalar& s) {
  Poly r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : a) r.emplace(m, c * s);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m{ma.weight + mb.weight, ma.w};
      m.w.insert(m.w.end(), mb.w.begin(), mb.w.end());
      poly_add_term(r, m, ca * cb);
    }
  return r;
}

Poly poly_word(const Alphabet& A, const Word& w, const Scalar& c) {
  Poly r;
  poly_add_term(r, A.mono(w), c);
  return r;
}

Poly parse_poly(const Alphabet& A, const std::string& text) {
  // split into signed top-level terms
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0;
  int sign = 1;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!trim(cur).empty()) {
        terms.emplace_back(sign, cur);
        sign = 1;
      }
      cur.clear();
      if (ch == '-') sign = -sign;
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses: " + text);
  if (!trim(cur).empty()) terms.emplace_back(sign, cur);

  Poly p;
  for (auto& [sg, body] : terms) {
    std::string t = trim(body);
    Scalar c(sg);
    if (t == "0") continue;
    if (!t.empty() && t[0] == '(') {
      int d = 0;
      std::size_t close = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '(') ++d;
        if (t[i] == ')' && --d == 0) {
          close = i;
          break;
        }
      }
      c = c * Scalar::parse(t.substr(1, close - 1));
      t = trim(t.substr(close + 1));
      if (!t.empty() && t[0] == '*') t = trim(t.substr(1));
    }
    poly_add_term(p, A.mono(A.parse_word(t)), c);
  }
  return p;
}

std::string format_poly(const Alphabet& A, const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const Scalar& c = it->second;
    std::string w = A.format(it->first.w);
    std::string term;
    bool neg = false;
    if (c.is_one()) {
      term = w;
    } else if ((-c).is_one()) {
      term = w;
      neg = true;
    } else {
      term = "(" + c.to_string() + ")" + (it->first.w.empty() ? "" : "*" + w);
    }
    if (first) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting

RewritingSystem::RewritingSystem(Alphabet alphabet, std::vector<Rule> rules)
    : alph_(std::move(alphabet)), rules_(std::move(rules)) {
  index_rules();
}

void RewritingSystem::index_rules() {
  by_first_.assign(alph_.size(), {});
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    if (rules_[r].lhs.empty()) throw std::invalid_argument("rule with empty left side");
    by_first_[rules_[r].lhs[0]].push_back(static_cast<int>(r));
  }
  cache_.clear();
}

std::string RewritingSystem::well_formed() const {
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    Mono lead = alph_.mono(rules_[r].lhs);
    for (const auto& [m, c] : rules_[r].rhs)
      if (!(m < lead)) return "rule " + std::to_string(r) + " (" + alph_.format(rules_[r].lhs) + ") is not decreasing";
  }
  return "";
}

bool RewritingSystem::find_match(const Word& w, int& rule, int& pos) const {
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (int r : by_first_[w[p]]) {
      const Word& l = rules_[r].lhs;
      if (p + l.size() > w.size()) continue;
      if (std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(p))) {
        rule = r;
        pos = static_cast<int>(p);
        return true;
      }
    }
  }
  return false;
}

bool RewritingSystem::is_normal(const Word& w) const {
  int r, p;
  return !find_match(w, r, p);
}

Poly RewritingSystem::normal_form(const Word& w) const {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  int r, pos;
  Poly out;
  if (!find_match(w, r, pos)) {
    out = poly_word(alph_, w);
  } else {
    const Rule& rule = rules_[r];
    for (const auto& [m, c] : rule.rhs) {
      Word nw(w.begin(), w.begin() + pos);
      nw.insert(nw.end(), m.w.begin(), m.w.end());
      nw.insert(nw.end(), w.begin() + pos + static_cast<long>(rule.lhs.size()), w.end());
      for (const auto& [m2, c2] : normal_form(nw)) poly_add_term(out, m2, c * c2);
    }
  }
  cache_.emplace(w, out);
  return out;
}

Poly RewritingSystem::reduce(const Poly& p) const {
  Poly out;
  for (const auto& [m, c] : p)
    for (const auto& [m2, c2] : normal_form(m.w)) poly_add_term(out, m2, c * c2);
  return out;
}

namespace {

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Poly lift_left(const Alphabet& A, const Word& u, const Poly& p) { return poly_mul(poly_word(A, u), p); }
Poly lift_right(const Alphabet& A, const Poly& p, const Word& v) { return poly_mul(p, poly_word(A, v)); }

// All critical pairs of a rule list: overlaps and inclusions.
template <class Fn>
void for_each_ambiguity(const Alphabet& A, const std::vector<Rule>& rules, Fn fn) {
  for (std::size_t r1 = 0; r1 < rules.size(); ++r1) {
    const Word& l1 = rules[r1].lhs;
    for (std::size_t r2 = 0; r2 < rules.size(); ++r2) {
      const Word& l2 = rules[r2].lhs;
      std::size_t mn = std::min(l1.size(), l2.size());
      for (std::size_t k = 1; k < mn; ++k) {
        if (!std::equal(l1.end() - static_cast<long>(k), l1.end(), l2.begin())) continue;
        Word tail(l2.begin() + static_cast<long>(k), l2.end());
        Word head(l1.begin(), l1.end() - static_cast<long>(k));
        Word w = concat(l1, tail);
        Poly a = lift_right(A, rules[r1].rhs, tail);
        Poly b = lift_left(A, head, rules[r2].rhs);
        fn(w, static_cast<int>(r1), static_cast<int>(r2), a, b);
      }
      if (r1 != r2 && l2.size() <= l1.size()) {
        for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
          if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<long>(p))) continue;
          Word head(l1.begin(), l1.begin() + static_cast<long>(p));
          Word tail(l1.begin() + static_cast<long>(p + l2.size()), l1.end());
          Poly b = lift_right(A, lift_left(A, head, rules[r2].rhs), tail);
          fn(l1, static_cast<int>(r1), static_cast<int>(r2), rules[r1].rhs, b);
        }
      }
    }
  }
}

}  // namespace

std::vector<Ambiguity> RewritingSystem::overlap_check() const {
  std::vector<Ambiguity> bad;
  for_each_ambiguity(alph_, rules_, [&](const Word& w, int r1, int r2, const Poly& a, const Poly& b) {
    Poly d = reduce(poly_add(a, poly_scale(b, Scalar(-1))));
    if (!d.empty()) bad.push_back({w, r1, r2, d});
  });
  return bad;
}

std::vector<Word> RewritingSystem::irreducible_monomials(int max_weight, std::size_t max_count) const {
  // Extending a normal word on the right can only create a match at a suffix.
  std::vector<std::vector<int>> by_last(alph_.size());
  for (std::size_t r = 0; r < rules_.size(); ++r) by_last[rules_[r].lhs.back()].push_back(static_cast<int>(r));
  std::vector<Word> out{Word{}};
  std::size_t head = 0;
  while (head < out.size()) {
    Word base = out[head++];
    int bw = alph_.weight(base);
    for (int x = 0; x < alph_.size(); ++x) {
      if (max_weight >= 0 && bw + alph_.weights()[x] > max_weight) continue;
      Word w = base;
      w.push_back(static_cast<uint8_t>(x));
      bool ok = true;
      for (int r : by_last[x]) {
        const Word& l = rules_[r].lhs;
        if (l.size() <= w.size() && std::equal(l.begin(), l.end(), w.end() - static_cast<long>(l.size()))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      out.push_back(std::move(w));
      if (out.size() > max_count)
        throw IrreducibleOverflow("more than " + std::to_string(max_count) + " irreducible monomials");
    }
  }
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return alph_.mono(a) < alph_.mono(b); });
  return out;
}

std::string RewritingSystem::to_text() const {
  std::string out = "letters:";
  for (int i = 0; i < alph_.size(); ++i) out += " " + alph_.letters()[i] + ":" + std::to_string(alph_.weights()[i]);
  out += "\n";
  for (const auto& r : rules_) out += alph_.format(r.lhs) + " -> " + format_poly(alph_, r.rhs) + "\n";
  return out;
}

RewritingSystem RewritingSystem::from_text(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  Alphabet A;
  bool have_alpha = false;
  std::vector<Rule> rules;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("letters:", 0) == 0) {
      std::stringstream ls(line.substr(8));
      std::string tok;
      std::vector<std::string> names;
      std::vector<int> weights;
      while (ls >> tok) {
        auto colon = tok.find(':');
        names.push_back(tok.substr(0, colon));
        weights.push_back(colon == std::string::npos ? 1 : std::stoi(tok.substr(colon + 1)));
      }
      A = Alphabet(names, weights);
      have_alpha = true;
      continue;
    }
    if (!have_alpha) throw std::invalid_argument("line " + std::to_string(lineno) + ": rules before 'letters:'");
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing '->'");
    Rule r;
    r.lhs = A.parse_word(line.substr(0, arrow));
    if (r.lhs.empty()) throw std::invalid_argument("line " + std::to_string(lineno) + ": empty left side");
    r.rhs = parse_poly(A, line.substr(arrow + 2));
    rules.push_back(std::move(r));
  }
  if (!have_alpha) throw std::invalid_argument("missing 'letters:' line");
  return RewritingSystem(A, std::move(rules));
}

// ---------------------------------------------------------------------------
// Completion

RewritingSystem complete_relations(const Alphabet& A, const std::vector<Poly>& relations, std::size_t max_rules) {
  std::vector<Rule> rules;
  std::deque<Poly> queue(relations.begin(), relations.end());
  auto contains = [](const Word& big, const Word& small) {
    if (small.size() > big.size()) return false;
    return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
  };
  for (;;) {
    while (!queue.empty()) {
      RewritingSystem sys(A, rules);
      Poly p = sys.reduce(queue.front());
      queue.pop_front();
      if (p.empty()) continue;
      auto lead = std::prev(p.end());
      Scalar inv = lead->second.inverse();
      Rule nr;
      nr.lhs = lead->first.w;
      p.erase(lead);
      nr.rhs = poly_scale(p, -inv);
      std::vector<Rule> kept;
      for (auto& r : rules) {
        if (contains(r.lhs, nr.lhs)) {
          Poly back = poly_word(A, r.lhs);
          back = poly_add(back, poly_scale(r.rhs, Scalar(-1)));
          queue.push_back(std::move(back));
        } else {
          kept.push_back(std::move(r));
        }
      }
      kept.push_back(std::move(nr));
      rules = std::move(kept);
      if (rules.size() > max_rules) throw std::runtime_error("completion exceeded the rule limit");
      RewritingSystem upd(A, rules);
      for (auto& r : rules) r.rhs = upd.reduce(r.rhs);
    }
    std::vector<Poly> fresh;
    for_each_ambiguity(A, rules, [&](const Word&, int, int, const Poly& a, const Poly& b) {
      fresh.push_back(poly_add(a, poly_scale(b, Scalar(-1))));
    });
    RewritingSystem sys(A, rules);
    for (auto& f : fresh) {
      Poly d = sys.reduce(f);
      if (!d.empty()) queue.push_back(std::move(d));
    }
    if (queue.empty()) break;
  }
  std::sort(rules.begin(), rules.end(), [&](const Rule& a, const Rule& b) { return A.mono(a.lhs) < A.mono(b.lhs); });
  return RewritingSystem(A, std::move(rules));
}

int homogeneous_quotient_dim(const Alphabet& A, const std::vector<Poly>& relations, int w) {
  // all words of weight exactly w
  std::vector<Word> words;
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& u : frontier) {
      int uw = A.weight(u);
      if (uw == w) {
        words.push_back(u);
        continue;
      }
      for (int x = 0; x < A.size(); ++x)
        if (uw + A.weights()[x] <= w) {
          Word v = u;
          v.push_back(static_cast<uint8_t>(x));
          next.push_back(std::move(v));
        }
    }
    frontier = std::move(next);
  }
  std::unordered_map<Word, int, WordHash> idx;
  for (std::size_t i = 0; i < words.size(); ++i) idx[words[i]] = static_cast<int>(i);
  // words of each weight, for the multipliers
  std::vector<std::vector<Word>> by_weight(static_cast<std::size_t>(w) + 1);
  by_weight[0].push_back({});
  std::vector<Word> all{Word{}};
  for (std::size_t h = 0; h < all.size(); ++h) {
    for (int x = 0; x < A.size(); ++x) {
      Word v = all[h];
      v.push_back(static_cast<uint8_t>(x));
      int vw = A.weight(v);
      if (vw > w) continue;
      by_weight[vw].push_back(v);
      all.push_back(std::move(v));
    }
  }
  Echelon ech;
  for (const Poly& r : relations) {
    if (r.empty()) continue;
    int rw = r.begin()->first.weight;
    for (const auto& [m, c] : r)
      if (m.weight != rw) throw std::invalid_argument("homogeneous_quotient_dim: relation is not homogeneous");
    if (rw > w) continue;
    for (int lw = 0; lw <= w - rw; ++lw) {
      for (const Word& u : by_weight[lw])
        for (const Word& v : by_weight[w - rw - lw]) {
          SparseVec row;
          std::map<int, Scalar> acc;
          for (const auto& [m, c] : r) acc[idx.at(concat(concat(u, m.w), v))] += c;
          for (auto& [i, c] : acc)
            if (!c.is_zero()) row.emplace_back(i, c);
          ech.add(row);
        }
    }
  }
  return static_cast<int>(words.size()) - ech.rank();
}

// ---------------------------------------------------------------------------
// Realization

RealizedAlgebra realize_algebra(const RewritingSystem& sys, std::size_t max_dim) {
  RealizedAlgebra R;
  R.basis = sys.irreducible_monomials(-1, max_dim);
  const int n = static_cast<int>(R.basis.size());
  for (int i = 0; i < n; ++i) R.index[R.basis[i]] = i;
  const Alphabet& A = sys.alphabet();
  auto to_vec = [&](const Poly& p) {
    SparseVec v;
    for (const auto& [m, c] : p) {
      auto it = R.index.find(m.w);
      if (it == R.index.end()) throw std::runtime_error("normal form outside the normal basis: " + A.format(m.w));
      v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    return v;
  };
  // left multiplication by each letter on the basis
  std::vector<std::vector<SparseVec>> left(A.size(), std::vector<SparseVec>(n));
  for (int x = 0; x < A.size(); ++x)
    for (int j = 0; j < n; ++j) {
      Word w{static_cast<uint8_t>(x)};
      w.insert(w.end(), R.basis[j].begin(), R.basis[j].end());
      left[x][j] = to_vec(sys.normal_form(w));
    }
  R.table.assign(static_cast<std::size_t>(n) * n, {});
  // rows in order of word length so that the suffix row is ready
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return R.basis[a].size() < R.basis[b].size(); });
  DenseAccum acc(n);
  for (int u : order) {
    const Word& wu = R.basis[u];
    if (wu.empty()) {
      for (int j = 0; j < n; ++j) R.table[static_cast<std::size_t>(u) * n + j] = sv_unit(j);
      continue;
    }
    int x = wu[0];
    Word suffix(wu.begin() + 1, wu.end());
    int s = R.index.at(suffix);
    for (int j = 0; j < n; ++j) {
      for (const auto& [k, c] : R.table[static_cast<std::size_t>(s) * n + j]) acc.add_scaled(left[x][k], c);
      R.table[static_cast<std::size_t>(u) * n + j] = acc.take();
    }
  }
  return R;
}

SparseVec realize_poly(const HopfAlgebra& A, const RewritingSystem& sys, const Poly& p) {
  SparseVec v;
  std::map<int, Scalar> acc;
  for (const auto& [m, c] : sys.reduce(p)) {
    int idx = A.index_of(sys.alphabet().format(m.w));
    if (idx < 0) throw std::runtime_error("word not in basis: " + sys.alphabet().format(m.w));
    acc[idx] += c;
  }
  for (auto& [i, c] : acc)
    if (!c.is_zero()) v.emplace_back(i, c);
  return v;
}

SparseVec realize_element(const HopfAlgebra& A, const RewritingSystem& sys, const std::string& poly_text) {
  return realize_poly(A, sys, parse_poly(sys.alphabet(), poly_text));
}

HopfAlgebra realize_hopf(const Fixture& f) {
  const RewritingSystem& sys = f.system;
  const Alphabet& Al = sys.alphabet();
  RealizedAlgebra R = realize_algebra(sys);
  const int n = static_cast<int>(R.basis.size());
  std::vector<std::string> labels;
  for (const Word& w : R.basis) labels.push_back(Al.format(w));
  const int one = R.index.at(Word{});
  auto mult = [&](int i, int j) { return R.table[static_cast<std::size_t>(i) * n + j]; };

  HopfAlgebra alg(f.name, labels, mult, sv_unit(one), [](int) { return std::vector<CoproductTerm>{}; },
                  std::vector<Scalar>(n));
  auto elem = [&](const std::string& text) { return realize_element(alg, sys, text); };

  auto tensor_of = [&](const SparseVec& l, const SparseVec& r) {
    Tensor2 t;
    for (const auto& [i, a] : l)
      for (const auto& [j, b] : r) t.emplace_back(static_cast<uint64_t>(i) * n + j, a * b);
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return t;
  };
  auto tensor_add = [&](const Tensor2& x, const Tensor2& y) {
    KeyAccum acc;
    for (const auto& [k, s] : x) acc.add(k, s);
    for (const auto& [k, s] : y) acc.add(k, s);
    return acc.take_sorted();
  };

  const int L = Al.size();
  std::vector<Tensor2> letter_cop(L);
  std::vector<Scalar> letter_eps(L);
  std::vector<bool> is_composite(L, false);
  for (int x = 0; x < L; ++x) {
    const std::string& name = Al.letters()[x];
    if (f.composite.count(name)) {
      is_composite[x] = true;
      continue;
    }
    auto it = f.coproduct.find(name);
    if (it == f.coproduct.end()) throw std::runtime_error(f.name + ": no coproduct for letter " + name);
    Tensor2 t;
    for (const auto& term : it->second)
      t = tensor_add(t, tensor_of(elem(term.left), sv_scale(elem(term.right), term.coef)));
    letter_cop[x] = t;
    auto e = f.counit.find(name);
    if (e == f.counit.end()) throw std::runtime_error(f.name + ": no counit for letter " + name);
    letter_eps[x] = e->second;
  }
  for (int x = 0; x < L; ++x) {
    if (!is_composite[x]) continue;
    Word parts = Al.parse_word(f.composite.at(Al.letters()[x]));
    Tensor2 t{{static_cast<uint64_t>(one) * n + one, Scalar(1)}};
    Scalar e(1);
    for (uint8_t p : parts) {
      t = alg.tensor_mul(t, letter_cop[p]);
      e *= letter_eps[p];
    }
    letter_cop[x] = t;
    letter_eps[x] = e;
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return R.basis[a].size() < R.basis[b].size(); });
  std::vector<Tensor2> cop(n);
  std::vector<Scalar> eps(n);
  for (int u : order) {
    const Word& w = R.basis[u];
    if (w.empty()) {
      cop[u] = {{static_cast<uint64_t>(one) * n + one, Scalar(1)}};
      eps[u] = Scalar(1);
      continue;
    }
    int s = R.index.at(Word(w.begin() + 1, w.end()));
    cop[u] = alg.tensor_mul(letter_cop[w[0]], cop[s]);
    eps[u] = letter_eps[w[0]] * eps[s];
  }

  auto comult = [&](int i) {
    std::vector<CoproductTerm> out;
    for (const auto& [k, s] : cop[i]) out.push_back({s, static_cast<int>(k / n), static_cast<int>(k % n)});
    return out;
  };
  HopfAlgebra H(f.name, labels, mult, sv_unit(one), comult, eps);

  // Antipode on letters: closed forms, then derived from the coproduct.
  std::vector<std::optional<SparseVec>> S_letter(L);
  for (int x = 0; x < L; ++x) {
    auto it = f.antipode.find(Al.letters()[x]);
    if (it != f.antipode.end()) S_letter[x] = realize_element(H, sys, it->second);
  }
  std::vector<std::optional<SparseVec>> S_basis(n);
  auto S_of_basis = [&](int b) -> std::optional<SparseVec> {
    if (S_basis[b]) return S_basis[b];
    SparseVec v = sv_unit(one);
    for (uint8_t x : R.basis[b]) {
      if (!S_letter[x]) return std::nullopt;
      v = H.mul(*S_letter[x], v);
    }
    return S_basis[b] = v;
  };
  for (bool progress = true; progress;) {
    progress = false;
    for (int x = 0; x < L; ++x) {
      if (S_letter[x]) continue;
      if (is_composite[x]) {
        Word parts = Al.parse_word(f.composite.at(Al.letters()[x]));
        bool ok = true;
        SparseVec v = sv_unit(one);
        for (uint8_t p : parts) {
          if (!S_letter[p]) {
            ok = false;
            break;
          }
          v = H.mul(*S_letter[p], v);
        }
        if (ok) {
          S_letter[x] = v;
          progress = true;
        }
        continue;
      }
      auto xi = R.index.find(Word{static_cast<uint8_t>(x)});
      if (xi == R.index.end()) continue;
      const int vx = xi->second;
      // Delta(v) = v (x) 1 + sum l (x) r  gives  S(v) = -sum S(l) r
      // Delta(v) = 1 (x) v + sum l (x) r  gives  S(v) = -sum l S(r)
      for (int side = 0; side < 2 && !S_letter[x]; ++side) {
        uint64_t key = side == 0 ? static_cast<uint64_t>(vx) * n + one : static_cast<uint64_t>(one) * n + vx;
        bool found = false, ok = true;
        SparseVec acc;
        for (const auto& [k, s] : cop[vx]) {
          if (k == key && s.is_one()) {
            found = true;
            continue;
          }
          int l = static_cast<int>(k / n), r = static_cast<int>(k % n);
          if (side == 0) {
            auto sl = S_of_basis(l);
            if (!sl) {
              ok = false;
              break;
            }
            acc = sv_axpy(acc, -s, H.mul(*sl, sv_unit(r)));
          } else {
            auto sr = S_of_basis(r);
            if (!sr) {
              ok = false;
              break;
            }
            acc = sv_axpy(acc, -s, H.mul(sv_unit(l), *sr));
          }
        }
        if (found && ok) {
          S_letter[x] = acc;
          progress = true;
        }
      }
    }
  }
  for (int x = 0; x < L; ++x)
    if (!S_letter[x]) throw std::runtime_error(f.name + ": could not determine the antipode of " + Al.letters()[x]);
  std::vector<SparseVec> S(n);
  for (int b = 0; b < n; ++b) S[b] = *S_of_basis(b);
  H.set_antipode(std::move(S));

  std::vector<SparseVec> gens;
  for (int x = 0; x < L; ++x)
    if (!is_composite[x]) gens.push_back(realize_poly(H, sys, poly_word(Al, Word{static_cast<uint8_t>(x)})));
  H.set_generators(std::move(gens));
  return H;
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

std::string pw(const std::string& letter, int e, int mod = 6) {
  e = ((e % mod) + mod) % mod;
  if (e == 0) return "1";
  if (e == 1) return letter;
  return letter + "^" + std::to_string(e);
}

std::string cat(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + "*" + b;
}

Scalar X(long long k) { return Scalar::xi_pow(k); }

struct Builder {
  Fixture f;
  void alphabet(std::vector<std::string> names, std::vector<int> weights) { f.alphabet = Alphabet(names, weights); }
  // relation sum c_i w_i = 0
  void rel(std::initializer_list<std::pair<Scalar, std::string>> terms) {
    Poly p;
    for (const auto& [c, w] : terms) poly_add_term(p, f.alphabet.mono(f.alphabet.parse_word(w)), c);
    f.relations.push_back(p);
  }
  void cop(const std::string& letter, std::vector<TensorTerm> terms) { f.coproduct[letter] = std::move(terms); }
  Fixture done(int expected) {
    f.system = complete_relations(f.alphabet, f.relations);
    f.expected_dim = expected;
    return f;
  }
};

void h_relations(Builder& b) {
  const Scalar xi = X(1);
  b.rel({{1, "a^6"}, {-1, "1"}});
  b.rel({{1, "b^2"}});
  b.rel({{1, "c^2"}});
  b.rel({{1, "d^6"}, {-1, "1"}});
  b.rel({{1, "a^2"}, {-1, "d^2"}});
  b.rel({{1, "a*d"}, {-1, "d*a"}});
  b.rel({{1, "b*c"}});
  b.rel({{1, "c*b"}});
  b.rel({{1, "a*b"}, {-xi, "b*a"}});
  b.rel({{1, "a*c"}, {-xi, "c*a"}});
  b.rel({{1, "d*b"}, {xi, "b*d"}});
  b.rel({{1, "d*c"}, {xi, "c*d"}});
  b.rel({{1, "b*d"}, {-1, "c*a"}});
  b.rel({{1, "b*a"}, {-1, "c*d"}});
}

void h_coalgebra(Builder& b, bool cop) {
  auto T = [&](const std::string& l, const std::string& r) { return cop ? TensorTerm{1, r, l} : TensorTerm{1, l, r}; };
  b.cop("a", {T("a", "a"), T("b", "c")});
  b.cop("b", {T("a", "b"), T("b", "d")});
  b.cop("c", {T("c", "a"), T("d", "c")});
  b.cop("d", {T("d", "d"), T("c", "b")});
  b.f.counit["a"] = 1;
  b.f.counit["b"] = 0;
  b.f.counit["c"] = 0;
  b.f.counit["d"] = 1;
  if (!cop) {
    b.f.antipode["a"] = "a^5";
    b.f.antipode["b"] = "(-x^5)*c*a^4";
    b.f.antipode["c"] = "(x^5)*b*a^4";
    b.f.antipode["d"] = "d*a^4";
  } else {
    // inverse antipode
    b.f.antipode["a"] = "a^5";
    b.f.antipode["b"] = "(x^5)*c*a^4";
    b.f.antipode["c"] = "(-x^5)*b*a^4";
    b.f.antipode["d"] = "d*a^4";
  }
}

void k_relations(Builder& b, bool with_c) {
  const Scalar xi = X(1);
  b.rel({{1, "a^6"}, {-1, "1"}});
  b.rel({{1, "b^2"}});
  b.rel({{1, "b*a"}, {-xi, "a*b"}});
  if (with_c) {
    b.rel({{1, "c^2"}, {-1, "1"}});
    b.rel({{1, "a*c"}, {-1, "c*a"}});
    b.rel({{1, "b*c"}, {-1, "c*b"}});
  }
}

void k_coalgebra(Builder& b, bool with_c) {
  b.cop("a", {{1, "a", "a"}, {X(4) + X(5), "b", "b*a^3"}});
  b.cop("b", {{1, "b", "a^4"}, {1, "a", "b"}});
  b.f.counit["a"] = 1;
  b.f.counit["b"] = 0;
  b.f.antipode["a"] = "a^5";
  b.f.antipode["b"] = "(x^-2)*b*a";
  if (with_c) {
    b.cop("c", {{1, "c", "c"}});
    b.f.counit["c"] = 1;
    b.f.antipode["c"] = "c";
  }
}

// g, h, x with x central-ish relations; variant selects A, A', grA, grA'.
Fixture small_gx(const std::string& name, bool primed, bool graded, bool with_h) {
  Builder b;
  b.f.name = name;
  if (with_h) {
    b.alphabet({"g", "h", "x"}, {1, 1, 2});
  } else {
    b.alphabet({"g", "x"}, {1, 2});
  }
  b.rel({{1, "g^6"}, {-1, "1"}});
  if (with_h) {
    b.rel({{1, "h^2"}, {-1, "1"}});
    b.rel({{1, "h*g"}, {-1, "g*h"}});
    b.rel({{1, "x*h"}, {primed ? -1 : 1, "h*x"}});
  }
  b.rel({{1, "x*g"}, {primed ? 1 : -1, "g*x"}});
  if (graded) {
    b.rel({{1, "x^2"}});
  } else if (primed) {
    b.rel({{1, "x^2"}, {-1, "g^2"}, {1, "1"}});
  } else {
    b.rel({{1, "x^2"}, {1, "g^2"}, {-1, "1"}});
  }
  b.cop("g", {{1, "g", "g"}});
  b.f.counit["g"] = 1;
  b.f.antipode["g"] = "g^5";
  if (with_h) {
    b.cop("h", {{1, "h", "h"}});
    b.f.counit["h"] = 1;
    b.f.antipode["h"] = "h";
  }
  b.cop("x", {{1, "x", "1"}, {1, primed ? "g" : "g*h", "x"}});
  b.f.counit["x"] = 0;
  return b.done(with_h ? 24 : 12);
}

Fixture double_presentation() {
  Builder b;
  b.f.name = "D";
  b.alphabet({"g", "h", "x", "d", "c", "b", "a"}, {1, 1, 4, 2, 1, 1, 1});
  const Scalar xi = X(1), th = Scalar::theta();
  h_relations(b);
  b.rel({{1, "g^6"}, {-1, "1"}});
  b.rel({{1, "h^2"}, {-1, "1"}});
  b.rel({{1, "h*g"}, {-1, "g*h"}});
  b.rel({{1, "x*g"}, {-1, "g*x"}});
  b.rel({{1, "x*h"}, {1, "h*x"}});
  b.rel({{1, "x^2"}, {1, "g^2"}, {-1, "1"}});
  for (const char* l : {"a", "d"}) {
    b.rel({{1, std::string(l) + "*g"}, {-1, "g*" + std::string(l)}});
    b.rel({{1, std::string(l) + "*h"}, {-1, "h*" + std::string(l)}});
  }
  for (const char* l : {"b", "c"}) {
    b.rel({{1, std::string(l) + "*g"}, {-1, "g*" + std::string(l)}});
    b.rel({{1, std::string(l) + "*h"}, {1, "h*" + std::string(l)}});
  }
  const Scalar k = th * X(-1);  // theta xi^-1
  b.rel({{1, "a*x"}, {-X(-1), "x*a"}, {k, "c"}, {-k, "g*h*b"}});
  b.rel({{1, "d*x"}, {X(-1), "x*d"}, {k, "g*h*c"}, {-k, "b"}});
  b.rel({{1, "b*x"}, {-X(-1), "x*b"}, {k, "d"}, {-k, "g*h*a"}});
  b.rel({{1, "c*x"}, {X(-1), "x*c"}, {k, "g*h*d"}, {-k, "a"}});
  (void)xi;
  h_coalgebra(b, true);
  b.cop("g", {{1, "g", "g"}});
  b.cop("h", {{1, "h", "h"}});
  b.cop("x", {{1, "1", "x"}, {1, "x", "g*h"}});
  b.f.counit["g"] = 1;
  b.f.counit["h"] = 1;
  b.f.counit["x"] = 0;
  b.f.antipode["g"] = "g^5";
  b.f.antipode["h"] = "h";
  return b.done(576);
}

}  // namespace

std::vector<std::string> fixture_names() { return {"H", "K", "A", "A'", "A1", "C", "grA", "grA'", "D", "Cfam", "Bfam"}; }

Fixture fixture(const std::string& name, const FixtureParams& p) {
  const Scalar xi = X(1);
  if (name == "H") {
    Builder b;
    b.f.name = "H";
    b.alphabet({"d", "c", "b", "a"}, {2, 1, 1, 1});
    h_relations(b);
    h_coalgebra(b, false);
    return b.done(24);
  }
  if (name == "K" || name == "C") {
    const bool with_c = name == "K";
    Builder b;
    b.f.name = name;
    if (with_c) {
      b.alphabet({"c", "b", "a"}, {1, 1, 1});
    } else {
      b.alphabet({"b", "a"}, {1, 1});
    }
    k_relations(b, with_c);
    k_coalgebra(b, with_c);
    return b.done(with_c ? 24 : 12);
  }
  if (name == "A") return small_gx("A", false, false, true);
  if (name == "A'") return small_gx("A'", true, false, true);
  if (name == "A1") return small_gx("A1", true, false, false);
  if (name == "grA") return small_gx("grA", false, true, true);
  if (name == "grA'") return small_gx("grA'", true, true, true);
  if (name == "D") return double_presentation();
  if (name == "Cfam") {
    const int j = p.j, k = p.k;
    if (!((k == 0 && (j == 2 || j == 4)) || (k == 1 && (j == 1 || j == 5))))
      throw std::invalid_argument("Cfam needs k=0, j in {2,4} or k=1, j in {1,5}");
    Builder b;
    b.f.name = "C(2," + std::to_string(j) + "," + std::to_string(k) + ",0;" + p.mu.to_string() + ")";
    b.alphabet({"v2", "v12", "v1", "d", "c", "b", "a"}, {4, 7, 3, 2, 1, 1, 1});
    h_relations(b);
    b.rel({{1, "a*v1"}, {-X(5), "v1*a"}});
    b.rel({{1, "a*v2"}, {-X(4), "v2*a"}, {-1, "v1*c"}});
    b.rel({{1, "b*v1"}, {-X(5), "v1*b"}});
    b.rel({{1, "b*v2"}, {-X(4), "v2*b"}, {-1, "v1*d"}});
    b.rel({{1, "c*v1"}, {-X(2), "v1*c"}});
    b.rel({{1, "c*v2"}, {-X(4), "v2*c"}, {-1, "v1*a"}});
    b.rel({{1, "d*v1"}, {-X(2), "v1*d"}});
    b.rel({{1, "d*v2"}, {-X(4), "v2*d"}, {-1, "v1*b"}});
    b.rel({{1, "v1*v2"}, {-1, "v12"}});
    b.rel({{1, "v1^3"}});
    b.rel({{X(2 * j), "v1^2*v2"}, {X(-2 * j), "v1*v2*v1"}, {1, "v2*v1^2"}});
    const Scalar den = Scalar(1) + X(5);
    const Scalar c1 = (Scalar(1) - X(2 * j)) * X(4) / den;
    const Scalar c2 = (Scalar(1) - X(4 * j)) * X(4) / den;
    const Scalar& mu = p.mu;
    const Scalar two(2);
    if (k == 0) {
      b.rel({{c1, "v1^2*v2"}, {c2, "v1*v2*v1"}, {1, "v2^3"}, {-mu, "1"}, {mu, "d*a^5"}});
      b.rel({{1, "v1*v2^2"}, {1, "v2*v1*v2"}, {1, "v2^2*v1"}, {two * mu * X(4), "b*a^5"}});
    } else {
      b.rel({{c1, "v1^2*v2"}, {c2, "v1*v2*v1"}, {1, "v2^3"}, {-mu, "1"}, {mu, "a^3"}});
      b.rel({{1, "v1*v2^2"}, {1, "v2*v1*v2"}, {1, "v2^2*v1"}, {two * mu * X(4), "c*a^2"}});
    }
    h_coalgebra(b, false);
    const Scalar inv = (Scalar(1) - X(2)).inverse() * X(-1);
    if (k == 0) {
      b.cop("v1", {{1, "v1", "1"}, {1, pw("a", j), "v1"}, {-xi * (Scalar(1) + X(j)), cat("b", pw("a", j - 1)), "v2"}});
      b.cop("v2", {{1, "v2", "1"}, {1, cat("d", pw("a", j - 1)), "v2"}, {-inv * (Scalar(1) - X(j)), cat("c", pw("a", j - 1)), "v1"}});
    } else {
      b.cop("v1", {{1, "v1", "1"}, {1, cat("d", pw("a", j - 1)), "v1"}, {-xi * (Scalar(1) - X(j)), cat("c", pw("a", j - 1)), "v2"}});
      b.cop("v2", {{1, "v2", "1"}, {1, pw("a", j), "v2"}, {-inv * (Scalar(1) + X(j)), cat("b", pw("a", j - 1)), "v1"}});
    }
    b.f.counit["v1"] = 0;
    b.f.counit["v2"] = 0;
    b.f.composite["v12"] = "v1*v2";
    return b.done(432);
  }
  if (name == "Bfam") {
    const int j = p.j, iota = p.iota;
    if (!((j == 2 || j == 4) && (iota == 0 || iota == 1))) throw std::invalid_argument("Bfam needs j in {2,4}, iota in {0,1}");
    Builder b;
    b.f.name = "B(1," + std::to_string(j) + ",0," + std::to_string(iota) + ";" + p.mu.to_string() + ")";
    b.alphabet({"e2", "e12", "e1", "c", "b", "a"}, {7, 10, 3, 1, 1, 1});
    k_relations(b, true);
    b.rel({{1, "a*e1"}, {-xi, "e1*a"}});
    b.rel({{1, "a*e2"}, {-X(2), "e2*a"}, {-(X(4) + X(5)), "e1*b*a^3"}});
    b.rel({{1, "b*e1"}, {-xi, "e1*b"}});
    b.rel({{1, "b*e2"}, {-X(2), "e2*b"}, {-1, "e1*a^4"}});
    b.rel({{1, "c*e1"}, {-1, "e1*c"}});
    b.rel({{1, "c*e2"}, {-1, "e2*c"}});
    b.rel({{1, "e1*e2"}, {-1, "e12"}});
    b.rel({{1, "e1^3"}});
    b.rel({{1, "e2*e1^2"}, {X(j), "e1*e2*e1"}, {X(2 * j), "e1^2*e2"}});
    const std::string ci = iota ? "c" : "1";
    const Scalar& mu = p.mu;
    b.rel({{1, "e2^3"}, {1, "e1^2*e2"}, {1, "e2*e1^2"}, {1, "e1*e2*e1"}, {-mu, "1"}, {mu, cat(ci, "a^3")}});
    b.rel({{1, "e2^2*e1"}, {1, "e1*e2^2"}, {1, "e2*e1*e2"}, {Scalar(2) * X(2) * mu, cat(ci, "b*a^5")}});
    k_coalgebra(b, true);
    const int i = 1;
    b.cop("e1", {{1, "e1", "1"}, {1, cat(ci, pw("a", -j)), "e1"}, {X(4) * (X(4 * i) - X(i + j)), cat(ci, cat("b", pw("a", -1 - j))), "e2"}});
    b.cop("e2", {{1, "e2", "1"}, {1, cat(ci, pw("a", 3 - j)), "e2"}, {X(2 * i) + X(j - i), cat(ci, cat("b", pw("a", 2 - j))), "e1"}});
    b.f.counit["e1"] = 0;
    b.f.counit["e2"] = 0;
    b.f.composite["e12"] = "e1*e2";
    return b.done(432);
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace hopf
