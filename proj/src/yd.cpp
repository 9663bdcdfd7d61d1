#include "hopfalg/yd.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace hopf {

namespace {

int mod6(int a) { return ((a % 6) + 6) % 6; }
Scalar sgn(int e) { return Scalar::sign_pow(e); }
Scalar xp(int e) { return Scalar::xi_pow(e); }

// "d*a^5" from (letter, exponent) pairs; zero exponents dropped.
std::string mono(std::initializer_list<std::pair<const char*, int>> parts) {
  std::string out;
  for (const auto& [l, e] : parts) {
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += l;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Matrix diag2(const Scalar& x, const Scalar& y) {
  Matrix m(2, 2);
  m(0, 0) = x;
  m(1, 1) = y;
  return m;
}

Matrix entry2(int r, int c, const Scalar& s) {
  Matrix m(2, 2);
  m(r, c) = s;
  return m;
}

Matrix scalar1(const Scalar& s) {
  Matrix m(1, 1);
  m(0, 0) = s;
  return m;
}

Matrix combine(const std::vector<Matrix>& mats, const SparseVec& v, int dim) {
  Matrix r(dim, dim);
  for (const auto& [k, s] : v) r = r + mats[k].scaled(s);
  return r;
}

std::optional<Matrix> invertible_in_span(const Matrix& basis, int rows, int cols) {
  if (basis.cols() == 0 || rows != cols) return std::nullopt;
  auto as_matrix = [&](const std::vector<Scalar>& coeffs) {
    Matrix T(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        Scalar s(0);
        for (int t = 0; t < basis.cols(); ++t)
          if (!coeffs[t].is_zero()) s += coeffs[t] * basis(r * cols + c, t);
        T(r, c) = s;
      }
    return T;
  };
  const int n = basis.cols();
  std::vector<std::vector<Scalar>> tries;
  for (int t = 0; t < n; ++t) {
    std::vector<Scalar> c(n, Scalar(0));
    c[t] = 1;
    tries.push_back(c);
  }
  for (int p = 1; p <= 3; ++p) {
    std::vector<Scalar> c(n);
    for (int t = 0; t < n; ++t) c[t] = Scalar(1 + t * p + t * t);
    tries.push_back(c);
  }
  for (const auto& c : tries) {
    Matrix T = as_matrix(c);
    if (!determinant(T).is_zero()) return T;
  }
  return std::nullopt;
}

using EqRows = std::vector<std::map<int, Scalar>>;

Matrix rows_to_matrix(const EqRows& rows, int unknowns) {
  int n = 0;
  for (const auto& r : rows)
    if (!r.empty()) ++n;
  Matrix m(n, unknowns);
  int i = 0;
  for (const auto& r : rows) {
    if (r.empty()) continue;
    for (const auto& [c, s] : r) m(i, c) = s;
    ++i;
  }
  return m;
}

void add_to(std::map<int, Scalar>& row, int c, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = row.emplace(c, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) row.erase(it);
  }
}

// Equations T A - B T = 0 for one generator (unknown index r*dimA + s).
void intertwine_rows(const Matrix& A, const Matrix& B, int dim, EqRows& out) {
  for (int r = 0; r < dim; ++r)
    for (int s = 0; s < dim; ++s) {
      std::map<int, Scalar> row;
      for (int t = 0; t < dim; ++t) {
        add_to(row, r * dim + t, A(t, s));
        add_to(row, t * dim + s, -B(r, t));
      }
      out.push_back(std::move(row));
    }
}

}  // namespace

// ---------------------------------------------------------------------------

SparseVec HostAlgebra::word(const Word& w) const {
  return realize_poly(hopf, fixture.system, poly_word(fixture.alphabet, w));
}

SparseVec HostAlgebra::element(const std::string& text) const { return realize_element(hopf, fixture.system, text); }

int HostAlgebra::letter_index(const std::string& letter) const {
  int i = hopf.index_of(letter);
  if (i < 0) throw std::invalid_argument("generator " + letter + " is not a basis word of " + fixture.name);
  return i;
}

HostPtr host_algebra(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, HostPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto h = std::make_shared<HostAlgebra>();
  h->fixture = fixture(name);
  h->hopf = realize_hopf(h->fixture);
  auto inv = inverse(h->hopf.antipode_matrix());
  if (!inv) throw std::runtime_error("antipode of " + name + " is not invertible");
  for (int i = 0; i < h->hopf.dim(); ++i) h->antipode_inverse.push_back(inv->column(i));
  cache[name] = h;
  return h;
}

std::vector<Matrix> action_from_generators(const HostAlgebra& host, const std::map<std::string, Matrix>& gens) {
  const auto& A = host.fixture.alphabet;
  int dim = gens.begin()->second.rows();
  std::vector<Matrix> out;
  for (const auto& label : host.hopf.labels()) {
    Matrix m = Matrix::identity(dim);
    for (uint8_t l : A.parse_word(label)) m = m * gens.at(A.letters()[l]);
    out.push_back(m);
  }
  return out;
}

std::vector<CoactionTerm> coaction_terms(const HostAlgebra& host,
                                         const std::vector<std::tuple<Scalar, std::string, int>>& parts) {
  std::map<std::pair<int, int>, Scalar> acc;
  for (const auto& [c, text, m] : parts) {
    if (c.is_zero()) continue;
    for (const auto& [h, s] : host.element(text)) acc[{h, m}] += c * s;
  }
  std::vector<CoactionTerm> out;
  for (const auto& [key, s] : acc)
    if (!s.is_zero()) out.push_back({s, key.first, key.second});
  return out;
}

YDCheck check_yd(const YDModule& M) {
  YDCheck r;
  const HopfAlgebra& H = M.host->hopf;
  const int D = H.dim(), n = M.dim;
  std::ostringstream w;

  // representation
  r.representation = combine(M.action, H.unit(), n) == Matrix::identity(n);
  if (!r.representation) w << "unit does not act as identity; ";
  for (int i = 0; i < D && r.representation; ++i)
    for (int j = 0; j < D; ++j)
      if (M.action[i] * M.action[j] != combine(M.action, H.mult_basis(i, j), n)) {
        r.representation = false;
        w << "action not multiplicative at (" << H.labels()[i] << ", " << H.labels()[j] << "); ";
        break;
      }

  // comodule
  r.comodule = true;
  for (int v = 0; v < n && r.comodule; ++v) {
    std::vector<Scalar> eps(n, Scalar(0));
    KeyAccum acc;
    for (const auto& t : M.coaction[v]) {
      eps[t.m] += t.coef * H.counit_vec()[t.h];
      for (const auto& ct : H.comult_basis(t.h))
        acc.add((static_cast<uint64_t>(ct.left) * D + ct.right) * n + t.m, t.coef * ct.coef);
      for (const auto& t2 : M.coaction[t.m])
        acc.add((static_cast<uint64_t>(t.h) * D + t2.h) * n + t2.m, -(t.coef * t2.coef));
    }
    for (int m = 0; m < n; ++m)
      if (eps[m] != Scalar(m == v ? 1 : 0)) {
        r.comodule = false;
        w << "coaction not counital at v" << v + 1 << "; ";
      }
    if (!acc.take_sorted().empty()) {
      r.comodule = false;
      w << "coaction not coassociative at v" << v + 1 << "; ";
    }
  }

  // compatibility
  r.compatibility = true;
  for (int h = 0; h < D && r.compatibility; ++h) {
    std::vector<std::tuple<Scalar, int, int, int>> d2;
    for (const auto& t : H.comult_basis(h))
      for (const auto& t2 : H.comult_basis(t.left)) d2.emplace_back(t.coef * t2.coef, t2.left, t2.right, t.right);
    for (int v = 0; v < n; ++v) {
      KeyAccum acc;
      for (int x = 0; x < n; ++x) {
        const Scalar& c = M.action[h](x, v);
        if (c.is_zero()) continue;
        for (const auto& t : M.coaction[x]) acc.add(static_cast<uint64_t>(t.h) * n + t.m, c * t.coef);
      }
      for (const auto& [c, h1, h2, h3] : d2)
        for (const auto& t : M.coaction[v]) {
          SparseVec left = H.mul(H.mult_basis(h1, t.h), H.antipode_cols()[h3]);
          for (int y = 0; y < n; ++y) {
            const Scalar& a = M.action[h2](y, t.m);
            if (a.is_zero()) continue;
            Scalar f = c * t.coef * a;
            for (const auto& [k, s] : left) acc.add(static_cast<uint64_t>(k) * n + y, -(f * s));
          }
        }
      if (!acc.take_sorted().empty()) {
        r.compatibility = false;
        w << "compatibility fails at (" << H.labels()[h] << ", v" << v + 1 << "); ";
        break;
      }
    }
  }
  r.witness = w.str();
  return r;
}

Matrix braiding(const YDModule& M) {
  const int n = M.dim;
  Matrix c(n * n, n * n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      for (const auto& t : M.coaction[v])
        for (int x = 0; x < n; ++x) {
          const Scalar& a = M.action[t.h](x, w);
          if (!a.is_zero()) c(x * n + t.m, v * n + w) += t.coef * a;
        }
  return c;
}

bool braid_equation(const Matrix& c, int dim) {
  Matrix I = Matrix::identity(dim);
  Matrix c1 = c.kron(I), c2 = I.kron(c);
  return c1 * c2 * c1 == c2 * c1 * c2;
}

YDModule dual_module(const YDModule& M) {
  const HopfAlgebra& H = M.host->hopf;
  YDModule d;
  d.host = M.host;
  d.name = M.name + "*";
  d.dim = M.dim;
  for (int h = 0; h < H.dim(); ++h) d.action.push_back(combine(M.action, H.antipode_cols()[h], M.dim).transpose());
  d.coaction.assign(M.dim, {});
  std::vector<std::map<std::pair<int, int>, Scalar>> acc(M.dim);
  for (int v = 0; v < M.dim; ++v)
    for (const auto& t : M.coaction[v])
      for (const auto& [k, s] : M.host->antipode_inverse[t.h]) acc[t.m][{k, v}] += t.coef * s;
  for (int i = 0; i < M.dim; ++i)
    for (const auto& [key, s] : acc[i])
      if (!s.is_zero()) d.coaction[i].push_back({s, key.first, key.second});
  return d;
}

std::optional<Matrix> module_iso(const YDModule& M, const YDModule& N) {
  if (M.dim != N.dim || M.host != N.host) return std::nullopt;
  const int n = M.dim;
  EqRows rows;
  for (const auto& l : M.host->fixture.alphabet.letters()) {
    int idx = M.host->hopf.index_of(l);
    if (idx < 0) continue;
    intertwine_rows(M.action[idx], N.action[idx], n, rows);
  }
  // (id (x) T) delta_M(v) = delta_N(T v), component by component
  for (int v = 0; v < n; ++v) {
    std::map<std::pair<int, int>, std::map<int, Scalar>> comp;
    for (const auto& t : M.coaction[v])
      for (int r = 0; r < n; ++r) add_to(comp[{t.h, r}], r * n + t.m, t.coef);
    for (int u = 0; u < n; ++u)
      for (const auto& t : N.coaction[u]) add_to(comp[{t.h, t.m}], u * n + v, -t.coef);
    for (auto& [key, row] : comp) rows.push_back(std::move(row));
  }
  return invertible_in_span(nullspace(rows_to_matrix(rows, n * n)), n, n);
}

// ---------------------------------------------------------------------------
// Catalogs.

Scalar h_const_x1(const Params& p) {
  return Scalar::theta().inverse() * xp(1 - p.i) * (xp(p.j) * sgn(p.k) - sgn(p.iota));
}

Scalar h_const_x2(const Params& p) { return -Scalar::theta() * xp(p.i - 1) * (xp(p.j) * sgn(p.k) + sgn(p.iota)); }

YDModule yd_simple(Side s, const Params& p) {
  if (!in_parameter_set(s, p)) throw std::invalid_argument("parameter outside the index set: " + p.to_string());
  YDModule M;
  M.dim = 2;
  const int i = p.i, j = p.j, k = p.k, t = p.iota;
  std::map<std::string, Matrix> g;
  if (s == Side::H) {
    M.host = host_algebra("H");
    M.name = "V" + p.to_string();
    g["a"] = diag2(sgn(t + 1) * xp(i), sgn(t + 1) * xp(i - 1));
    g["d"] = diag2(xp(i), -xp(i - 1));
    g["b"] = entry2(0, 1, sgn(t));
    g["c"] = entry2(0, 1, Scalar(1));
    const Scalar ti = Scalar::theta().inverse();
    const Scalar c2 = ti * h_const_x2(p), c1 = ti * h_const_x1(p);
    if (k == 0) {
      M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"a", mod6(j)}}), 0},
                                                    {c2, mono({{"b", 1}, {"a", mod6(j - 1)}}), 1}}));
      M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"d", 1}, {"a", mod6(j - 1)}}), 1},
                                                    {c1, mono({{"c", 1}, {"a", mod6(j - 1)}}), 0}}));
    } else {
      M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"d", 1}, {"a", mod6(j - 1)}}), 0},
                                                    {c2, mono({{"c", 1}, {"a", mod6(j - 1)}}), 1}}));
      M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"a", mod6(j)}}), 1},
                                                    {c1, mono({{"b", 1}, {"a", mod6(j - 1)}}), 0}}));
    }
  } else {
    M.host = host_algebra("K");
    M.name = "W" + p.to_string();
    g["a"] = diag2(xp(i), xp(i + 1));
    g["b"] = entry2(0, 1, Scalar(1));
    g["c"] = diag2(sgn(k), sgn(k));
    const Scalar c12 = xp(4) * (xp(4 * i) - xp(i + j));
    const Scalar c21 = xp(2 * i) + xp(j - i);
    M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"c", t}, {"a", mod6(-j)}}), 0},
                                                  {c12, mono({{"c", t}, {"b", 1}, {"a", mod6(-1 - j)}}), 1}}));
    M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"c", t}, {"a", mod6(3 - j)}}), 1},
                                                  {c21, mono({{"c", t}, {"b", 1}, {"a", mod6(2 - j)}}), 0}}));
  }
  M.action = action_from_generators(*M.host, g);
  return M;
}

YDModule yd_one_dim(Side s, const Params& p) {
  YDModule M;
  M.dim = 1;
  const int i = p.i, j = p.j, k = p.k;
  std::map<std::string, Matrix> g;
  if (s == Side::H) {
    M.host = host_algebra("H");
    M.name = "K_chi(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    g["a"] = scalar1(xp(k));
    g["b"] = scalar1(0);
    g["c"] = scalar1(0);
    g["d"] = scalar1(sgn(i + j) * xp(k));
    M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"d", j}, {"a", mod6(3 * i - j)}}), 0}}));
  } else {
    M.host = host_algebra("K");
    M.name = "K_lambda(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    g["a"] = scalar1(xp(k));
    g["b"] = scalar1(0);
    g["c"] = scalar1(sgn(i));
    M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"c", j}, {"a", mod6(3 * k)}}), 0}}));
  }
  M.action = action_from_generators(*M.host, g);
  return M;
}

std::vector<CatalogEntry> yd_catalog(Side s, int dimension) {
  std::vector<CatalogEntry> out;
  if (dimension == 1) {
    for (const auto& p : one_dim_parameters()) out.push_back({p, yd_one_dim(s, p)});
  } else {
    for (const auto& p : parameter_set(s)) out.push_back({p, yd_simple(s, p)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Modules over the double.

DModule d_module_one(const Params& p) {
  DModule M;
  M.params = p;
  M.dim = 1;
  M.name = "chi(" + std::to_string(p.i) + "," + std::to_string(p.j) + "," + std::to_string(p.k) + ")";
  M.gens["g"] = scalar1(sgn(p.i));
  M.gens["h"] = scalar1(sgn(p.j));
  M.gens["x"] = scalar1(0);
  M.gens["a"] = scalar1(xp(p.k));
  M.gens["b"] = scalar1(0);
  M.gens["c"] = scalar1(0);
  M.gens["d"] = scalar1(sgn(p.i + p.j) * xp(p.k));
  return M;
}

DModule d_module_two(const Params& p) {
  if (!in_parameter_set(Side::H, p)) throw std::invalid_argument("parameter outside the index set: " + p.to_string());
  DModule M;
  M.params = p;
  M.dim = 2;
  M.name = "V" + p.to_string();
  const int i = p.i, j = p.j, k = p.k, t = p.iota;
  M.gens["a"] = diag2(sgn(t + 1) * xp(i), sgn(t + 1) * xp(i - 1));
  M.gens["d"] = diag2(xp(i), -xp(i - 1));
  M.gens["b"] = entry2(0, 1, sgn(t));
  M.gens["c"] = entry2(0, 1, Scalar(1));
  M.gens["g"] = diag2(xp(j), xp(j));
  M.gens["h"] = diag2(sgn(k), sgn(k + 1));
  Matrix x(2, 2);
  x(0, 1) = h_const_x1(p);
  x(1, 0) = h_const_x2(p);
  M.gens["x"] = x;
  return M;
}

std::vector<DModule> d_module_catalog() {
  std::vector<DModule> out;
  for (const auto& p : one_dim_parameters()) out.push_back(d_module_one(p));
  for (const auto& p : parameter_set(Side::H)) out.push_back(d_module_two(p));
  return out;
}

Matrix evaluate_poly(const Alphabet& A, const Poly& p, const std::map<std::string, Matrix>& gens, int dim) {
  Matrix r(dim, dim);
  for (const auto& [m, c] : p) {
    Matrix w = Matrix::identity(dim);
    for (uint8_t l : m.w) w = w * gens.at(A.letters()[l]);
    r = r + w.scaled(c);
  }
  return r;
}

std::string d_module_relation_failure(const DModule& M) {
  static const Fixture D = fixture("D");
  for (const auto& rel : D.relations)
    if (!evaluate_poly(D.alphabet, rel, M.gens, M.dim).is_zero()) return format_poly(D.alphabet, rel);
  return "";
}

bool is_absolutely_simple(const std::map<std::string, Matrix>& gens, int dim) {
  auto flat = [dim](const Matrix& m) {
    SparseVec v;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        if (!m(r, c).is_zero()) v.emplace_back(r * dim + c, m(r, c));
    return v;
  };
  Echelon span;
  std::vector<Matrix> basis{Matrix::identity(dim)};
  span.add(flat(basis[0]));
  for (std::size_t q = 0; q < basis.size() && span.rank() < dim * dim; ++q)
    for (const auto& [name, g] : gens) {
      Matrix m = g * basis[q];
      if (span.add(flat(m))) basis.push_back(m);
    }
  return span.rank() == dim * dim;
}

std::optional<Matrix> representation_iso(const std::map<std::string, Matrix>& A,
                                         const std::map<std::string, Matrix>& B, int dim) {
  EqRows rows;
  for (const auto& [name, m] : A) {
    auto it = B.find(name);
    if (it == B.end() || it->second.rows() != dim || m.rows() != dim) return std::nullopt;
    intertwine_rows(m, it->second, dim, rows);
  }
  return invertible_in_span(nullspace(rows_to_matrix(rows, dim * dim)), dim, dim);
}

// ---------------------------------------------------------------------------

TwistRealization twist_realization(Side s, const Params& p, bool uncorrected) {
  if (!in_parameter_set(s, p)) throw std::invalid_argument("parameter outside the index set: " + p.to_string());
  TwistRealization out;
  YDModule& M = out.module;
  M.dim = 2;
  const int i = p.i, j = p.j, k = p.k, t = p.iota;
  std::map<std::string, Matrix> g;
  if (s == Side::H) {
    M.host = host_algebra("grA");
    M.name = "V" + p.to_string() + " over grA";
    g["g"] = diag2(xp(-j), xp(-j));
    g["h"] = diag2(sgn(k), sgn(k + 1));
    g["x"] = entry2(1, 0, sgn(k + 1) * h_const_x2(p) * xp(-j));
    // The uncorrected cross term of delta(v2) has the opposite sign; with it the
    // compatibility condition fails at x for every parameter.
    const Scalar c = (uncorrected ? Scalar(1) : Scalar(-1)) * xp(1 - i) * Scalar::theta().inverse();
    if (t == 0) {
      M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"g", mod6(-3 - i)}, {"h", 1}}), 0}}));
      M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"g", mod6(-2 - i)}}), 1},
                                                    {c, mono({{"g", mod6(-3 - i)}, {"h", 1}, {"x", 1}}), 0}}));
    } else {
      M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"g", mod6(-i)}}), 0}}));
      M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"g", mod6(1 - i)}, {"h", 1}}), 1},
                                                    {-c, mono({{"g", mod6(-i)}, {"x", 1}}), 0}}));
    }
  } else {
    M.host = host_algebra("grA'");
    M.name = "W" + p.to_string() + " over grA'";
    const Scalar th = xp(1);  // theta^2 = xi^2
    g["g"] = diag2(xp(-j), xp(3 - j));
    g["h"] = diag2(sgn(t), sgn(t));
    g["x"] = entry2(1, 0, th * xp(1 + i - j) * (sgn(i) - xp(j)));
    const Scalar c = th.inverse() * sgn(i + 1) * xp(-i - 1);
    M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"g", mod6(i)}, {"h", k}}), 0}}));
    M.coaction.push_back(coaction_terms(*M.host, {{1, mono({{"g", mod6(i + 1)}, {"h", k}}), 1},
                                                  {c, mono({{"g", mod6(i)}, {"h", k}, {"x", 1}}), 0}}));
  }
  M.action = action_from_generators(*M.host, g);
  out.diagram = side_diagram(s, p);
  return out;
}

std::string matrix_to_json(const Matrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    j.push_back(row);
  }
  return j.dump();
}

std::string yd_to_json(const YDModule& M) {
  nlohmann::json j;
  j["name"] = M.name;
  j["host"] = M.host->fixture.name;
  j["dim"] = M.dim;
  nlohmann::json act;
  for (const auto& l : M.host->fixture.alphabet.letters()) {
    int idx = M.host->hopf.index_of(l);
    if (idx >= 0) act[l] = nlohmann::json::parse(matrix_to_json(M.action[idx]));
  }
  j["action"] = act;
  nlohmann::json co = nlohmann::json::array();
  for (int v = 0; v < M.dim; ++v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : M.coaction[v])
      terms.push_back({{"coef", t.coef.to_string()}, {"host", M.host->hopf.labels()[t.h]}, {"vector", t.m}});
    co.push_back(terms);
  }
  j["coaction"] = co;
  return j.dump(2);
}

}  // namespace hopf
