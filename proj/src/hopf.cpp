#include "hopfalg/hopf.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace hopf {

ScalarPool::ScalarPool() { intern(Scalar()); }

uint32_t ScalarPool::intern(const Scalar& s) {
  auto it = ids_.find(s);
  if (it != ids_.end()) return it->second;
  uint32_t id = static_cast<uint32_t>(vals_.size());
  vals_.push_back(s);
  ids_.emplace(s, id);
  return id;
}

void TermTable::push_row(const std::vector<Entry>& entries) {
  entries_.insert(entries_.end(), entries.begin(), entries.end());
  offs_.push_back(entries_.size());
}

void TermTable::replace_row(std::size_t r, const std::vector<Entry>& entries) {
  std::vector<Entry> all;
  std::vector<std::size_t> offs{0};
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i == r) {
      all.insert(all.end(), entries.begin(), entries.end());
    } else {
      Row row = this->row(i);
      all.insert(all.end(), row.begin(), row.end());
    }
    offs.push_back(all.size());
  }
  entries_ = std::move(all);
  offs_ = std::move(offs);
}

namespace {

std::string key3(const HopfAlgebra& A, int i, int j, int k) {
  return "(" + A.labels()[i] + ", " + A.labels()[j] + ", " + A.labels()[k] + ")";
}

Tensor2 merge_tensor(std::vector<std::pair<uint64_t, Scalar>> v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Tensor2 out;
  for (auto& [k, s] : v) {
    if (!out.empty() && out.back().first == k) {
      out.back().second += s;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!s.is_zero()) {
      out.emplace_back(k, std::move(s));
    }
  }
  return out;
}

bool tensor_equal(const Tensor2& a, const Tensor2& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
  return true;
}

}  // namespace

HopfAlgebra::HopfAlgebra(std::string name, std::vector<std::string> labels, const MultFn& mult, SparseVec unit,
                         const ComultFn& comult, std::vector<Scalar> counit)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      pool_(std::make_shared<ScalarPool>()),
      unit_(std::move(unit)),
      counit_(std::move(counit)) {
  const int n = dim();
  counit_.resize(n);
  mult_.reserve_rows(static_cast<std::size_t>(n) * n);
  std::vector<TermTable::Entry> row;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      row.clear();
      for (const auto& [k, s] : mult(i, j)) {
        if (k < 0 || k >= n) throw std::out_of_range("product index out of range");
        if (!s.is_zero()) row.push_back({k, 0, pool_->intern(s)});
      }
      mult_.push_row(row);
    }
  comult_.reserve_rows(n);
  for (int i = 0; i < n; ++i) {
    row.clear();
    std::vector<std::pair<uint64_t, Scalar>> terms;
    for (const auto& t : comult(i)) {
      if (t.left < 0 || t.left >= n || t.right < 0 || t.right >= n)
        throw std::out_of_range("coproduct index out of range");
      terms.emplace_back(static_cast<uint64_t>(t.left) * n + t.right, t.coef);
    }
    for (const auto& [k, s] : merge_tensor(std::move(terms)))
      row.push_back({static_cast<int32_t>(k / n), static_cast<int32_t>(k % n), pool_->intern(s)});
    comult_.push_row(row);
  }
}

int HopfAlgebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

SparseVec HopfAlgebra::elem(const std::string& label) const {
  int i = index_of(label);
  if (i < 0) throw std::invalid_argument("unknown basis label " + label + " in " + name_);
  return sv_unit(i);
}

SparseVec HopfAlgebra::mult_basis(int i, int j) const {
  SparseVec v;
  for (const auto& e : mult_row(i, j)) v.emplace_back(e.a, scalar(e.s));
  std::sort(v.begin(), v.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  return v;
}

SparseVec HopfAlgebra::mul(const SparseVec& x, const SparseVec& y) const {
  if (x.empty() || y.empty()) return {};
  thread_local DenseAccum acc;
  thread_local int acc_dim = -1;
  if (acc_dim != dim()) {
    acc.resize(dim());
    acc_dim = dim();
  }
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      Scalar ab = a * b;
      for (const auto& e : mult_row(i, j)) acc.add(e.a, ab.is_one() ? scalar(e.s) : ab * scalar(e.s));
    }
  return acc.take();
}

SparseVec HopfAlgebra::mul_right_basis(const SparseVec& x, int j) const { return mul(x, sv_unit(j)); }

std::vector<CoproductTerm> HopfAlgebra::comult_basis(int i) const {
  std::vector<CoproductTerm> out;
  for (const auto& e : comult_row(i)) out.push_back({scalar(e.s), e.a, e.b});
  return out;
}

Tensor2 HopfAlgebra::comult(const SparseVec& x) const {
  std::vector<std::pair<uint64_t, Scalar>> terms;
  const uint64_t n = dim();
  for (const auto& [i, a] : x)
    for (const auto& e : comult_row(i)) terms.emplace_back(e.a * n + e.b, a * scalar(e.s));
  return merge_tensor(std::move(terms));
}

Scalar HopfAlgebra::counit(const SparseVec& x) const {
  Scalar s;
  for (const auto& [i, a] : x)
    if (!counit_[i].is_zero()) s += a * counit_[i];
  return s;
}

Tensor2 HopfAlgebra::tensor_mul(const Tensor2& x, const Tensor2& y) const {
  KeyAccum acc;
  const uint64_t n = dim();
  for (const auto& [kx, a] : x) {
    int i1 = static_cast<int>(kx / n), i2 = static_cast<int>(kx % n);
    for (const auto& [ky, b] : y) {
      int j1 = static_cast<int>(ky / n), j2 = static_cast<int>(ky % n);
      auto r1 = mult_row(i1, j1);
      if (r1.empty()) continue;
      auto r2 = mult_row(i2, j2);
      if (r2.empty()) continue;
      Scalar ab = a * b;
      for (const auto& e1 : r1) {
        Scalar c1 = ab * scalar(e1.s);
        for (const auto& e2 : r2) acc.add(e1.a * n + e2.a, c1 * scalar(e2.s));
      }
    }
  }
  return acc.take_sorted();
}

SparseVec HopfAlgebra::antipode(const SparseVec& x) const {
  if (antipode_.empty()) throw std::logic_error("antipode not computed for " + name_);
  SparseVec r;
  for (const auto& [i, a] : x) r = sv_axpy(r, a, antipode_[i]);
  return r;
}

Matrix HopfAlgebra::antipode_matrix() const {
  Matrix m(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (const auto& [k, s] : antipode_[i]) m(k, i) = s;
  return m;
}

void HopfAlgebra::perturb_mult(int i, int j, const SparseVec& v) {
  std::vector<TermTable::Entry> row;
  for (const auto& [k, s] : v) row.push_back({k, 0, pool_->intern(s)});
  mult_.replace_row(static_cast<std::size_t>(i) * dim() + j, row);
}

std::string HopfAlgebra::format(const SparseVec& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [i, s] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + s.to_string() + ")*" + labels_[i];
  }
  return out;
}

std::string HopfAlgebra::format(const Tensor2& x) const {
  if (x.empty()) return "0";
  std::string out;
  const uint64_t n = dim();
  for (const auto& [k, s] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + s.to_string() + ")*" + labels_[k / n] + "⊗" + labels_[k % n];
  }
  return out;
}

SparseVec HopfAlgebra::power(const SparseVec& x, int n) const {
  SparseVec r = unit_;
  for (int i = 0; i < n; ++i) r = mul(r, x);
  return r;
}

bool AxiomReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& it : items) {
    os << (it.pass ? "PASS " : "FAIL ") << it.axiom;
    if (!it.pass && !it.witness.empty()) os << "  witness " << it.witness;
    os << "\n";
  }
  return os.str();
}

std::vector<SparseVec> generated_subalgebra(const HopfAlgebra& A, const std::vector<SparseVec>& gens) {
  Echelon span;
  std::deque<SparseVec> queue;
  if (span.add(A.unit())) queue.push_back(A.unit());
  while (!queue.empty() && span.rank() < A.dim()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      SparseVec w = A.mul(g, v);
      if (span.add(w)) queue.push_back(std::move(w));
    }
  }
  std::vector<SparseVec> rows;
  for (const auto& [p, r] : span.rows()) rows.push_back(r);
  return rows;
}

std::vector<SparseVec> find_generators(const HopfAlgebra& A) {
  std::vector<SparseVec> gens;
  Echelon span;
  for (const auto& r : generated_subalgebra(A, gens)) span.add(r);
  for (int i = 0; i < A.dim() && span.rank() < A.dim(); ++i) {
    if (span.contains(sv_unit(i))) continue;
    gens.push_back(sv_unit(i));
    span = Echelon();
    for (const auto& r : generated_subalgebra(A, gens)) span.add(r);
  }
  return gens;
}

namespace {

struct Checker {
  const HopfAlgebra& A;
  AxiomReport& rep;
  int n;

  void item(const std::string& name, bool pass, const std::string& witness = "") {
    rep.items.push_back({name, pass, witness});
  }

  void unit_laws() {
    bool pass = true;
    std::string w;
    const auto& u = A.unit();
    for (int i = 0; i < n && pass; ++i) {
      SparseVec e = sv_unit(i);
      if (!sv_equal(A.mul(u, e), e) || !sv_equal(A.mul(e, u), e)) {
        pass = false;
        w = A.labels()[i];
      }
    }
    item("unit", pass, w);
  }

  // (e_x e_y) e_z - e_x (e_y e_z)
  bool assoc_triple(int x, int y, int z, DenseAccum& acc) {
    for (const auto& e : A.mult_row(x, y)) {
      const Scalar& c = A.scalar(e.s);
      for (const auto& f : A.mult_row(e.a, z)) acc.add(f.a, c * A.scalar(f.s));
    }
    for (const auto& e : A.mult_row(y, z)) {
      const Scalar& c = A.scalar(e.s);
      for (const auto& f : A.mult_row(x, e.a)) acc.add(f.a, -(c * A.scalar(f.s)));
    }
    return acc.take().empty();
  }

  void associativity_full() {
    DenseAccum acc(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!assoc_triple(x, y, z, acc)) {
            item("associativity", false, key3(A, x, y, z));
            return;
          }
    item("associativity", true);
  }

  void associativity_reduced() {
    DenseAccum acc(n);
    const auto& gens = A.generators();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::vector<SparseVec> left(n);
      for (int s = 0; s < n; ++s) left[s] = A.mul(gens[gi], sv_unit(s));
      for (int y = 0; y < n; ++y) {
        const SparseVec& u = left[y];
        for (int z = 0; z < n; ++z) {
          for (const auto& [t, c] : u)
            for (const auto& f : A.mult_row(t, z)) acc.add(f.a, c * A.scalar(f.s));
          for (const auto& e : A.mult_row(y, z)) {
            const Scalar& d = A.scalar(e.s);
            for (const auto& [k, s] : left[e.a]) acc.add(k, -(d * s));
          }
          if (!acc.take().empty()) {
            item("associativity", false,
                 "(generator " + std::to_string(gi) + ", " + A.labels()[y] + ", " + A.labels()[z] + ")");
            return;
          }
        }
      }
    }
    item("associativity", true);
  }

  void counit_laws() {
    for (int i = 0; i < n; ++i) {
      SparseVec l, r;
      for (const auto& e : A.comult_row(i)) {
        const Scalar& c = A.scalar(e.s);
        l = sv_axpy(l, c * A.counit_vec()[e.a], sv_unit(e.b));
        r = sv_axpy(r, c * A.counit_vec()[e.b], sv_unit(e.a));
      }
      if (!sv_equal(l, sv_unit(i)) || !sv_equal(r, sv_unit(i))) {
        item("counit", false, A.labels()[i]);
        return;
      }
    }
    item("counit", true);
  }

  void coassociativity() {
    const uint64_t N = n;
    for (int i = 0; i < n; ++i) {
      KeyAccum acc;
      for (const auto& e : A.comult_row(i)) {
        const Scalar& c = A.scalar(e.s);
        for (const auto& f : A.comult_row(e.a)) acc.add((f.a * N + f.b) * N + e.b, c * A.scalar(f.s));
        for (const auto& f : A.comult_row(e.b)) acc.add((e.a * N + f.a) * N + f.b, -(c * A.scalar(f.s)));
      }
      if (!acc.take_sorted().empty()) {
        item("coassociativity", false, A.labels()[i]);
        return;
      }
    }
    item("coassociativity", true);
  }

  void unit_counit_compat() {
    Tensor2 d1 = A.comult(A.unit());
    Tensor2 uu;
    {
      std::vector<std::pair<uint64_t, Scalar>> t;
      for (const auto& [i, a] : A.unit())
        for (const auto& [j, b] : A.unit()) t.emplace_back(static_cast<uint64_t>(i) * n + j, a * b);
      uu = merge_tensor(std::move(t));
    }
    item("comult(1) = 1⊗1", tensor_equal(d1, uu));
    item("counit(1) = 1", A.counit(A.unit()).is_one());
  }

  void counit_multiplicative() {
    const auto& eps = A.counit_vec();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        Scalar s;
        for (const auto& e : A.mult_row(x, y))
          if (!eps[e.a].is_zero()) s += A.scalar(e.s) * eps[e.a];
        if (s != eps[x] * eps[y]) {
          item("counit multiplicative", false, "(" + A.labels()[x] + ", " + A.labels()[y] + ")");
          return;
        }
      }
    }
    item("counit multiplicative", true);
  }

  void comult_multiplicative(bool reduced) {
    std::vector<Tensor2> dcache(n);
    std::vector<char> have(n, 0);
    auto D = [&](int i) -> const Tensor2& {
      if (!have[i]) {
        dcache[i] = A.comult(sv_unit(i));
        have[i] = 1;
      }
      return dcache[i];
    };
    if (reduced) {
      const auto& gens = A.generators();
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Tensor2 dg = A.comult(gens[gi]);
        for (int y = 0; y < n; ++y) {
          Tensor2 lhs = A.comult(A.mul(gens[gi], sv_unit(y)));
          Tensor2 rhs = A.tensor_mul(dg, D(y));
          if (!tensor_equal(lhs, rhs)) {
            item("comult multiplicative", false, "(generator " + std::to_string(gi) + ", " + A.labels()[y] + ")");
            return;
          }
        }
      }
    } else {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          Tensor2 lhs = A.comult(A.mult_basis(x, y));
          Tensor2 rhs = A.tensor_mul(D(x), D(y));
          if (!tensor_equal(lhs, rhs)) {
            item("comult multiplicative", false, "(" + A.labels()[x] + ", " + A.labels()[y] + ")");
            return;
          }
        }
    }
    item("comult multiplicative", true);
  }

  void generation() {
    auto span = generated_subalgebra(A, A.generators());
    item("generators span", static_cast<int>(span.size()) == n,
         std::to_string(span.size()) + " of " + std::to_string(n));
  }

  void antipode() {
    if (!A.has_antipode()) {
      item("antipode", false, "not computed");
      return;
    }
    std::string w;
    item("antipode", check_antipode(A, A.antipode_cols(), &w), w);
  }
};

}  // namespace

bool check_antipode(const HopfAlgebra& A, const std::vector<SparseVec>& S, std::string* witness) {
  const int n = A.dim();
  DenseAccum acc(n);
  for (int i = 0; i < n; ++i) {
    for (int side = 0; side < 2; ++side) {
      for (const auto& e : A.comult_row(i)) {
        const Scalar& c = A.scalar(e.s);
        SparseVec p = side == 0 ? A.mul(S[e.a], sv_unit(e.b)) : A.mul(sv_unit(e.a), S[e.b]);
        acc.add_scaled(p, c);
      }
      acc.add_scaled(A.unit(), -A.counit_vec()[i]);
      if (!acc.take().empty()) {
        if (witness) *witness = A.labels()[i] + (side == 0 ? " (left)" : " (right)");
        return false;
      }
    }
  }
  return true;
}

AxiomReport verify_axioms(const HopfAlgebra& A, const VerifyOptions& opt) {
  AxiomReport rep;
  Checker ch{A, rep, A.dim()};
  bool reduced = A.dim() > opt.full_check_max_dim && !A.generators().empty();
  rep.reduced = reduced;
  ch.unit_laws();
  if (reduced) {
    ch.generation();
    ch.associativity_reduced();
  } else {
    ch.associativity_full();
  }
  ch.counit_laws();
  ch.coassociativity();
  ch.unit_counit_compat();
  ch.counit_multiplicative();
  ch.comult_multiplicative(reduced);
  ch.antipode();
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> suffixed(const std::vector<std::string>& labels, const std::string& suf) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l + suf);
  return out;
}

std::vector<SparseVec> transpose_cols(const std::vector<SparseVec>& cols, int n) {
  std::vector<SparseVec> t(n);
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (const auto& [i, s] : cols[j]) t[i].emplace_back(j, s);
  return t;
}

std::vector<SparseVec> matrix_cols(const Matrix& m) {
  std::vector<SparseVec> cols(m.cols());
  for (int j = 0; j < m.cols(); ++j) cols[j] = m.column(j);
  return cols;
}

}  // namespace

HopfAlgebra dual(const HopfAlgebra& A) {
  const int n = A.dim();
  // product of dual basis elements from the coproduct of A
  std::vector<std::vector<std::pair<int, Scalar>>> prod(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (const auto& e : A.comult_row(k)) prod[static_cast<std::size_t>(e.a) * n + e.b].emplace_back(k, A.scalar(e.s));
  std::vector<std::vector<CoproductTerm>> cop(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& e : A.mult_row(i, j)) cop[e.a].push_back({A.scalar(e.s), i, j});
  SparseVec unit;
  for (int i = 0; i < n; ++i)
    if (!A.counit_vec()[i].is_zero()) unit.emplace_back(i, A.counit_vec()[i]);
  std::vector<Scalar> counit(n);
  for (const auto& [i, s] : A.unit()) counit[i] = s;
  HopfAlgebra D(
      A.name() + "*", suffixed(A.labels(), "*"),
      [&](int i, int j) {
        SparseVec v(prod[static_cast<std::size_t>(i) * n + j].begin(), prod[static_cast<std::size_t>(i) * n + j].end());
        std::sort(v.begin(), v.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        return v;
      },
      unit, [&](int k) { return cop[k]; }, counit);
  if (A.has_antipode()) D.set_antipode(transpose_cols(A.antipode_cols(), n));
  D.set_generators(find_generators(D));
  return D;
}

HopfAlgebra twist(const HopfAlgebra& A, bool op, bool cop) {
  std::string suffix;
  if (op && cop) {
    suffix = "^opcop";
  } else if (op) {
    suffix = "^op";
  } else if (cop) {
    suffix = "^cop";
  }
  HopfAlgebra T(
      A.name() + suffix, A.labels(), [&](int i, int j) { return op ? A.mult_basis(j, i) : A.mult_basis(i, j); },
      A.unit(),
      [&](int i) {
        auto t = A.comult_basis(i);
        if (cop)
          for (auto& x : t) std::swap(x.left, x.right);
        return t;
      },
      A.counit_vec());
  if (A.has_antipode()) {
    if (op != cop) {
      auto inv = inverse(A.antipode_matrix());
      if (!inv) throw std::runtime_error("antipode of " + A.name() + " is not invertible");
      T.set_antipode(matrix_cols(*inv));
    } else {
      T.set_antipode(A.antipode_cols());
    }
  }
  T.set_generators(A.generators());
  return T;
}

HopfAlgebra tensor_hopf(const HopfAlgebra& A, const HopfAlgebra& B) {
  const int na = A.dim(), nb = B.dim();
  std::vector<std::string> labels;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) labels.push_back(A.labels()[i] + "⊗" + B.labels()[j]);
  auto pair_vec = [&](const SparseVec& x, const SparseVec& y) {
    SparseVec r;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) r.emplace_back(i * nb + j, a * b);
    std::sort(r.begin(), r.end(), [](const Term& p, const Term& q) { return p.first < q.first; });
    return r;
  };
  std::vector<Scalar> counit(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) counit[i * nb + j] = A.counit_vec()[i] * B.counit_vec()[j];
  HopfAlgebra T(
      A.name() + "⊗" + B.name(), labels,
      [&](int x, int y) { return pair_vec(A.mult_basis(x / nb, y / nb), B.mult_basis(x % nb, y % nb)); },
      pair_vec(A.unit(), B.unit()),
      [&](int x) {
        std::vector<CoproductTerm> t;
        for (const auto& e : A.comult_row(x / nb))
          for (const auto& f : B.comult_row(x % nb))
            t.push_back({A.scalar(e.s) * B.scalar(f.s), e.a * nb + f.a, e.b * nb + f.b});
        return t;
      },
      counit);
  if (A.has_antipode() && B.has_antipode()) {
    std::vector<SparseVec> S(na * nb);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j) S[i * nb + j] = pair_vec(A.antipode_cols()[i], B.antipode_cols()[j]);
    T.set_antipode(S);
  }
  std::vector<SparseVec> gens;
  for (const auto& g : A.generators()) gens.push_back(pair_vec(g, B.unit()));
  for (const auto& g : B.generators()) gens.push_back(pair_vec(A.unit(), g));
  T.set_generators(gens);
  return T;
}

HopfAlgebra drinfeld_double_paired(const HopfAlgebra& B, const HopfAlgebra& A, const Matrix& pairing) {
  const int nb = B.dim(), na = A.dim();
  if (pairing.rows() != nb || pairing.cols() != na) throw std::invalid_argument("pairing shape mismatch");
  if (!A.has_antipode() || !B.has_antipode()) throw std::invalid_argument("double needs antipodes");
  auto sinv = inverse(A.antipode_matrix());
  if (!sinv) throw std::runtime_error("antipode not invertible");
  // Q(f, a) = <f, S^{-1}(a)>
  Matrix Q = pairing * *sinv;

  struct T3 {
    Scalar c;
    int x, y, z;
  };
  auto delta2 = [](const HopfAlgebra& X, int i) {
    std::vector<T3> out;
    for (const auto& e : X.comult_row(i))
      for (const auto& f : X.comult_row(e.a)) out.push_back({X.scalar(e.s) * X.scalar(f.s), f.a, f.b, e.b});
    return out;
  };
  std::vector<std::vector<T3>> d2a(na), d2b(nb);
  for (int a = 0; a < na; ++a) d2a[a] = delta2(A, a);
  for (int f = 0; f < nb; ++f) d2b[f] = delta2(B, f);

  // straighten[a][f] = (1 ⊗ a)(f ⊗ 1) as combination of f'' ⊗ a''
  std::vector<std::vector<SparseVec>> straighten(na, std::vector<SparseVec>(nb));
  DenseAccum acc(static_cast<std::size_t>(nb) * na);
  for (int a = 0; a < na; ++a)
    for (int f = 0; f < nb; ++f) {
      for (const auto& ta : d2a[a])
        for (const auto& tf : d2b[f]) {
          const Scalar& p1 = Q(tf.x, ta.z);
          if (p1.is_zero()) continue;
          const Scalar& p3 = pairing(tf.z, ta.x);
          if (p3.is_zero()) continue;
          acc.add(static_cast<std::size_t>(tf.y) * na + ta.y, ta.c * tf.c * p1 * p3);
        }
      straighten[a][f] = acc.take();
    }

  std::vector<std::string> labels;
  for (int f = 0; f < nb; ++f)
    for (int a = 0; a < na; ++a) labels.push_back(B.labels()[f] + "⊗" + A.labels()[a]);
  auto pack = [&](const SparseVec& x, const SparseVec& y) {
    SparseVec r;
    for (const auto& [i, s] : x)
      for (const auto& [j, t] : y) r.emplace_back(i * na + j, s * t);
    std::sort(r.begin(), r.end(), [](const Term& p, const Term& q) { return p.first < q.first; });
    return r;
  };
  std::vector<Scalar> counit(nb * na);
  for (int f = 0; f < nb; ++f)
    for (int a = 0; a < na; ++a) counit[f * na + a] = B.counit_vec()[f] * A.counit_vec()[a];

  DenseAccum macc(static_cast<std::size_t>(nb) * na);
  HopfAlgebra D(
      "D(" + A.name() + ")", labels,
      [&](int x, int y) {
        int f = x / na, a = x % na, f2 = y / na, a2 = y % na;
        for (const auto& [k, c] : straighten[a][f2]) {
          int fpp = k / na, app = k % na;
          auto left = B.mult_row(f, fpp);
          auto right = A.mult_row(app, a2);
          for (const auto& e : left)
            for (const auto& g : right)
              macc.add(static_cast<std::size_t>(e.a) * na + g.a, c * B.scalar(e.s) * A.scalar(g.s));
        }
        return macc.take();
      },
      pack(B.unit(), A.unit()),
      [&](int x) {
        int f = x / na, a = x % na;
        std::vector<CoproductTerm> t;
        for (const auto& e : B.comult_row(f))
          for (const auto& g : A.comult_row(a))
            t.push_back({B.scalar(e.s) * A.scalar(g.s), e.b * na + g.a, e.a * na + g.b});
        return t;
      },
      counit);

  // S(f ⊗ a) = (1 ⊗ S(a)) (S_B^{-1}(f) ⊗ 1)
  auto sbinv = inverse(B.antipode_matrix());
  if (!sbinv) throw std::runtime_error("antipode not invertible");
  std::vector<SparseVec> S(nb * na);
  for (int f = 0; f < nb; ++f) {
    SparseVec sf = pack(sbinv->column(f), A.unit());
    for (int a = 0; a < na; ++a) S[f * na + a] = D.mul(pack(B.unit(), A.antipode_cols()[a]), sf);
  }
  D.set_antipode(S);
  std::vector<SparseVec> gens;
  std::vector<SparseVec> gb = B.generators().empty() ? find_generators(B) : B.generators();
  std::vector<SparseVec> ga = A.generators().empty() ? find_generators(A) : A.generators();
  for (const auto& g : gb) gens.push_back(pack(g, A.unit()));
  for (const auto& g : ga) gens.push_back(pack(B.unit(), g));
  D.set_generators(gens);
  return D;
}

HopfAlgebra drinfeld_double(const HopfAlgebra& A) {
  HopfAlgebra Ad = dual(A);
  return drinfeld_double_paired(Ad, A, Matrix::identity(A.dim()));
}

HopfAlgebra group_algebra_cyclic(int n, const std::string& gen) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? gen : gen + "^" + std::to_string(i)));
  HopfAlgebra G(
      "k[Z" + std::to_string(n) + "]", labels, [n](int i, int j) { return sv_unit((i + j) % n); }, sv_unit(0),
      [](int i) { return std::vector<CoproductTerm>{{Scalar(1), i, i}}; }, std::vector<Scalar>(n, Scalar(1)));
  if (n > 1) G.set_generators({sv_unit(1)});
  return G;
}

// ---------------------------------------------------------------------------

bool is_grouplike(const HopfAlgebra& A, const SparseVec& x) {
  if (!A.counit(x).is_one()) return false;
  Tensor2 d = A.comult(x);
  std::vector<std::pair<uint64_t, Scalar>> t;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : x) t.emplace_back(static_cast<uint64_t>(i) * A.dim() + j, a * b);
  return tensor_equal(d, merge_tensor(std::move(t)));
}

namespace {

// Matrix of the operator x -> (e_k^* ⊗ id) Δ(x).
Matrix hit_operator(const HopfAlgebra& A, const SparseVec& phi) {
  const int n = A.dim();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (const auto& e : A.comult_row(i)) {
      Scalar p = sv_get(phi, e.a);
      if (!p.is_zero()) m(e.b, i) += p * A.scalar(e.s);
    }
  return m;
}

Matrix cols_to_matrix(const std::vector<SparseVec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (const auto& [i, s] : cols[j]) m(i, j) = s;
  return m;
}

// Basis (columns) of {v in span(U) : M v = lambda v}; U has independent columns.
Matrix eigen_restrict(const Matrix& M, const Matrix& U, const Scalar& lambda) {
  Matrix MU = M * U - U.scaled(lambda);
  Matrix ns = nullspace(MU);
  return U * ns;
}

std::vector<Scalar> eigen_candidates() {
  std::vector<Scalar> c{Scalar(0)};
  for (int k = 0; k < 6; ++k) c.push_back(Scalar::xi_pow(k));
  for (int k = 0; k < 6; ++k) c.push_back(Scalar::theta() * Scalar::xi_pow(k));
  for (int k = 0; k < 6; ++k) c.push_back(Scalar::theta().inverse() * Scalar::xi_pow(k));
  for (long long p : {2, 3, -2, -3}) c.push_back(Scalar(Rational(p)));
  for (long long p : {2, 3, -2, -3}) c.push_back(Scalar(Rational(1, p)));
  return c;
}

}  // namespace

GrouplikeResult grouplikes(const HopfAlgebra& A) {
  const int n = A.dim();
  GrouplikeResult res;
  HopfAlgebra R = dual(A);
  // commutator ideal of A*
  Echelon C;
  std::deque<SparseVec> queue;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SparseVec c = sv_sub(R.mult_basis(i, j), R.mult_basis(j, i));
      if (C.add(c)) queue.push_back(c);
    }
  while (!queue.empty()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      SparseVec l = R.mul(sv_unit(k), v);
      if (C.add(l)) queue.push_back(l);
      SparseVec r = R.mul(v, sv_unit(k));
      if (C.add(r)) queue.push_back(r);
    }
  }
  C.make_reduced();
  // quotient coordinates: non-pivot columns
  std::vector<int> qcols;
  for (int i = 0; i < n; ++i)
    if (!C.rows().count(i)) qcols.push_back(i);
  const int q = static_cast<int>(qcols.size());
  auto to_quot = [&](const SparseVec& v) {
    SparseVec r = C.reduce(v);
    std::vector<Scalar> out(q);
    for (const auto& [i, s] : r) {
      auto it = std::lower_bound(qcols.begin(), qcols.end(), i);
      out[it - qcols.begin()] = s;
    }
    return out;
  };
  // left multiplication matrices in the quotient
  std::vector<Matrix> L(q, Matrix(q, q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      auto v = to_quot(R.mult_basis(qcols[a], qcols[b]));
      for (int c = 0; c < q; ++c) L[a](c, b) = v[c];
    }
  Matrix gram(q, q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      auto v = to_quot(R.mult_basis(qcols[a], qcols[b]));
      Scalar tr;
      for (int c = 0; c < q; ++c)
        if (!v[c].is_zero())
          for (int d = 0; d < q; ++d)
            if (!L[c](d, d).is_zero()) tr += v[c] * L[c](d, d);
      gram(a, b) = tr;
    }
  Matrix rad = nullspace(gram);
  res.bound = q - rad.cols();
  // ideal J = C + lifts of radical
  std::vector<SparseVec> J;
  for (const auto& [p, r] : C.rows()) J.push_back(r);
  for (int k = 0; k < rad.cols(); ++k) {
    SparseVec v;
    for (int a = 0; a < q; ++a)
      if (!rad(a, k).is_zero()) v.emplace_back(qcols[a], rad(a, k));
    J.push_back(v);
  }
  // M = common kernel of the hit operators of J
  std::vector<SparseVec> rows;
  for (const auto& phi : J) {
    Matrix h = hit_operator(A, phi);
    for (int i = 0; i < n; ++i) {
      SparseVec row;
      for (int j = 0; j < n; ++j)
        if (!h(i, j).is_zero()) row.emplace_back(j, h(i, j));
      if (!row.empty()) rows.push_back(row);
    }
  }
  Matrix K(static_cast<int>(rows.size()), n);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (const auto& [j, s] : rows[i]) K(i, j) = s;
  Matrix M = nullspace(K);
  // split M into joint eigenlines of the coordinate hit operators
  std::vector<Matrix> pieces{M};
  auto cands = eigen_candidates();
  bool stuck = false;
  for (int k = 0; k < n && !stuck; ++k) {
    bool all_lines = std::all_of(pieces.begin(), pieces.end(), [](const Matrix& p) { return p.cols() <= 1; });
    if (all_lines) break;
    Matrix op = hit_operator(A, sv_unit(k));
    std::vector<Matrix> next;
    for (const auto& U : pieces) {
      if (U.cols() <= 1) {
        next.push_back(U);
        continue;
      }
      int found = 0;
      for (const auto& lam : cands) {
        Matrix V = eigen_restrict(op, U, lam);
        if (V.cols() > 0) {
          found += V.cols();
          next.push_back(V);
        }
      }
      if (found != U.cols()) stuck = true;
    }
    pieces = std::move(next);
  }
  for (const auto& U : pieces) {
    if (U.cols() != 1) continue;
    SparseVec t = U.column(0);
    Scalar e = A.counit(t);
    if (e.is_zero()) continue;
    t = sv_scale(t, e.inverse());
    if (is_grouplike(A, t)) res.elements.push_back(t);
  }
  std::sort(res.elements.begin(), res.elements.end(), [](const SparseVec& x, const SparseVec& y) {
    return x.front().first < y.front().first;
  });
  res.complete = !stuck && static_cast<int>(res.elements.size()) == res.bound;
  return res;
}

std::vector<SparseVec> skew_primitives(const HopfAlgebra& A, const SparseVec& g, const SparseVec& h) {
  const int n = A.dim();
  const uint64_t N = n;
  std::map<uint64_t, int> rowid;
  std::vector<Tensor2> cols(n);
  for (int m = 0; m < n; ++m) {
    std::vector<std::pair<uint64_t, Scalar>> t;
    for (const auto& e : A.comult_row(m)) t.emplace_back(e.a * N + e.b, A.scalar(e.s));
    for (const auto& [j, s] : g) t.emplace_back(m * N + j, -s);
    for (const auto& [i, s] : h) t.emplace_back(i * N + m, -s);
    cols[m] = merge_tensor(std::move(t));
    for (const auto& [k, s] : cols[m]) rowid.emplace(k, 0);
  }
  int r = 0;
  for (auto& [k, id] : rowid) id = r++;
  Matrix E(r, n);
  for (int m = 0; m < n; ++m)
    for (const auto& [k, s] : cols[m]) E(rowid[k], m) = s;
  Matrix ns = nullspace(E);
  std::vector<SparseVec> out;
  for (int k = 0; k < ns.cols(); ++k) out.push_back(ns.column(k));
  return out;
}

Matrix linear_map_from_columns(const std::vector<SparseVec>& cols, int target_dim) {
  return cols_to_matrix(cols, target_dim);
}

MorphismReport check_morphism(const Matrix& f, const HopfAlgebra& A, const HopfAlgebra& B) {
  if (f.rows() != B.dim() || f.cols() != A.dim()) throw std::invalid_argument("morphism shape mismatch");
  MorphismReport rep;
  const int na = A.dim();
  std::vector<SparseVec> img(na);
  for (int i = 0; i < na; ++i) img[i] = f.column(i);
  auto apply = [&](const SparseVec& x) {
    SparseVec r;
    for (const auto& [i, s] : x) r = sv_axpy(r, s, img[i]);
    return r;
  };
  rep.unit = sv_equal(apply(A.unit()), B.unit());
  if (!rep.unit) rep.witness = "unit";
  rep.counit = true;
  for (int i = 0; i < na && rep.counit; ++i)
    if (B.counit(img[i]) != A.counit_vec()[i]) {
      rep.counit = false;
      rep.witness = "counit at " + A.labels()[i];
    }
  rep.comult = true;
  const uint64_t nb = B.dim();
  for (int i = 0; i < na && rep.comult; ++i) {
    std::vector<std::pair<uint64_t, Scalar>> t;
    for (const auto& e : A.comult_row(i))
      for (const auto& [p, s] : img[e.a])
        for (const auto& [q, u] : img[e.b]) t.emplace_back(p * nb + q, A.scalar(e.s) * s * u);
    if (!tensor_equal(merge_tensor(std::move(t)), B.comult(img[i]))) {
      rep.comult = false;
      rep.witness = "comult at " + A.labels()[i];
    }
  }
  rep.mult = true;
  const bool reduced = !A.generators().empty() && na > 48;
  if (reduced) {
    for (std::size_t gi = 0; gi < A.generators().size() && rep.mult; ++gi) {
      const SparseVec& g = A.generators()[gi];
      SparseVec fg = apply(g);
      for (int y = 0; y < na && rep.mult; ++y)
        if (!sv_equal(apply(A.mul(g, sv_unit(y))), B.mul(fg, img[y]))) {
          rep.mult = false;
          rep.witness = "mult at (generator " + std::to_string(gi) + ", " + A.labels()[y] + ")";
        }
    }
    if (rep.mult) {
      auto span = generated_subalgebra(A, A.generators());
      if (static_cast<int>(span.size()) != na) {
        rep.mult = false;
        rep.witness = "generators do not span the source";
      }
    }
  } else {
    for (int x = 0; x < na && rep.mult; ++x)
      for (int y = 0; y < na && rep.mult; ++y)
        if (!sv_equal(apply(A.mult_basis(x, y)), B.mul(img[x], img[y]))) {
          rep.mult = false;
          rep.witness = "mult at (" + A.labels()[x] + ", " + A.labels()[y] + ")";
        }
  }
  std::vector<SparseVec> rows(img.begin(), img.end());
  rep.rank = sparse_rank(rows);
  rep.bijective = na == B.dim() && rep.rank == na;
  return rep;
}

std::optional<std::vector<SparseVec>> convolution_antipode(const HopfAlgebra& A) {
  const int n = A.dim();
  using Conv = std::vector<SparseVec>;  // f(e_i) columns
  auto convolve_id = [&](const Conv& f) {
    Conv r(n);
    for (int b = 0; b < n; ++b) {
      SparseVec acc;
      for (const auto& e : A.comult_row(b)) acc = sv_axpy(acc, A.scalar(e.s), A.mul(f[e.a], sv_unit(e.b)));
      r[b] = std::move(acc);
    }
    return r;
  };
  auto flatten = [&](const Conv& f) {
    SparseVec v;
    for (int b = 0; b < n; ++b)
      for (const auto& [k, s] : f[b]) v.emplace_back(b * n + k, s);
    return v;
  };
  Conv unit(n);
  for (int b = 0; b < n; ++b) unit[b] = sv_scale(A.unit(), A.counit_vec()[b]);
  std::vector<Conv> powers{unit};
  Echelon ech;
  const int track = n * n;
  auto tracked = [&](const Conv& f, int m) {
    SparseVec v = flatten(f);
    v.emplace_back(track + m, Scalar(1));
    return v;
  };
  ech.add(tracked(unit, 0));
  const int max_deg = n * n + 1;
  for (int m = 1; m <= max_deg; ++m) {
    Conv next = convolve_id(powers.back());
    SparseVec rem = ech.reduce(tracked(next, m));
    powers.push_back(std::move(next));
    if (!rem.empty() && rem.front().first >= track) {
      // sum_i alpha_i id^{*i} = 0
      std::vector<Scalar> alpha(m + 1);
      for (const auto& [k, s] : rem) alpha[k - track] = s;
      if (alpha[0].is_zero()) return std::nullopt;
      Conv S(n);
      Scalar inv = -alpha[0].inverse();
      for (int i = 1; i <= m; ++i) {
        if (alpha[i].is_zero()) continue;
        for (int b = 0; b < n; ++b) S[b] = sv_axpy(S[b], alpha[i] * inv, powers[i - 1][b]);
      }
      if (!check_antipode(A, S)) return std::nullopt;
      return S;
    }
    ech.add(rem);
  }
  return std::nullopt;
}

std::vector<SparseVec> antipode_from_factorization(const HopfAlgebra& A,
                                                   const std::vector<std::tuple<int, int, int>>& factors,
                                                   const std::vector<std::pair<int, SparseVec>>& seeds) {
  std::vector<SparseVec> S(A.dim());
  std::vector<char> known(A.dim(), 0);
  for (const auto& [i, v] : seeds) {
    S[i] = v;
    known[i] = 1;
  }
  for (const auto& [b, l, r] : factors) {
    if (known[b]) continue;
    if (!known[l] || !known[r]) throw std::logic_error("factorization order violates dependencies");
    S[b] = A.mul(S[r], S[l]);
    known[b] = 1;
  }
  for (int i = 0; i < A.dim(); ++i)
    if (!known[i]) throw std::logic_error("antipode left undetermined at " + A.labels()[i]);
  return S;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json vec_json(const SparseVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [i, s] : v) a.push_back({i, s.to_string()});
  return a;
}

SparseVec vec_from(const nlohmann::json& a) {
  SparseVec v;
  for (const auto& t : a) v.emplace_back(t.at(0).get<int>(), Scalar::parse(t.at(1).get<std::string>()));
  std::sort(v.begin(), v.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  return v;
}

}  // namespace

std::string to_json(const HopfAlgebra& A) {
  using nlohmann::json;
  const int n = A.dim();
  json j;
  j["name"] = A.name();
  j["basis"] = A.labels();
  j["unit"] = vec_json(A.unit());
  json eps = json::array();
  for (const auto& s : A.counit_vec()) eps.push_back(s.to_string());
  j["counit"] = eps;
  json mult = json::array();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto v = A.mult_basis(x, y);
      if (!v.empty()) mult.push_back({x, y, vec_json(v)});
    }
  j["mult"] = mult;
  json cop = json::array();
  for (int i = 0; i < n; ++i) {
    json terms = json::array();
    for (const auto& e : A.comult_row(i)) terms.push_back({e.a, e.b, A.scalar(e.s).to_string()});
    cop.push_back(terms);
  }
  j["comult"] = cop;
  if (A.has_antipode()) {
    json S = json::array();
    for (const auto& c : A.antipode_cols()) S.push_back(vec_json(c));
    j["antipode"] = S;
  }
  json gens = json::array();
  for (const auto& g : A.generators()) gens.push_back(vec_json(g));
  j["generators"] = gens;
  return j.dump();
}

HopfAlgebra from_json(const std::string& text) {
  using nlohmann::json;
  json j = json::parse(text);
  auto labels = j.at("basis").get<std::vector<std::string>>();
  const int n = static_cast<int>(labels.size());
  std::vector<SparseVec> prod(static_cast<std::size_t>(n) * n);
  for (const auto& m : j.at("mult")) prod[m.at(0).get<std::size_t>() * n + m.at(1).get<int>()] = vec_from(m.at(2));
  std::vector<std::vector<CoproductTerm>> cop(n);
  const auto& jc = j.at("comult");
  for (int i = 0; i < n; ++i)
    for (const auto& t : jc.at(i))
      cop[i].push_back({Scalar::parse(t.at(2).get<std::string>()), t.at(0).get<int>(), t.at(1).get<int>()});
  std::vector<Scalar> eps;
  for (const auto& s : j.at("counit")) eps.push_back(Scalar::parse(s.get<std::string>()));
  HopfAlgebra A(
      j.value("name", std::string("A")), labels,
      [&](int x, int y) { return prod[static_cast<std::size_t>(x) * n + y]; }, vec_from(j.at("unit")),
      [&](int i) { return cop[i]; }, eps);
  if (j.contains("antipode")) {
    std::vector<SparseVec> S;
    for (const auto& c : j.at("antipode")) S.push_back(vec_from(c));
    A.set_antipode(S);
  }
  if (j.contains("generators")) {
    std::vector<SparseVec> g;
    for (const auto& c : j.at("generators")) g.push_back(vec_from(c));
    A.set_generators(g);
  }
  return A;
}

}  // namespace hopf
