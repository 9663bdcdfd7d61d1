#include "hopfalg/roots.hpp"

#include <set>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace hopf {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

Scalar sgn(int e) { return Scalar::sign_pow(e); }
Scalar xp(int e) { return Scalar::xi_pow(e); }

Scalar qint(const Scalar& q, int n) {  // (n)_q
  Scalar s(0), p(1);
  for (int t = 0; t < n; ++t) {
    s += p;
    p *= q;
  }
  return s;
}

GDD swap_vertices(const GDD& d) { return {d.q22, d.q11, d.e}; }

bool in_set(int x, std::initializer_list<int> s) {
  for (int y : s)
    if (x == y) return true;
  return false;
}

}  // namespace

std::string side_name(Side s) { return s == Side::H ? "H" : "K"; }

Side parse_side(const std::string& s) {
  if (s == "H" || s == "h") return Side::H;
  if (s == "K" || s == "k") return Side::K;
  throw std::invalid_argument("side must be H or K: " + s);
}

bool Params::operator<(const Params& o) const {
  return std::tie(i, j, k, iota) < std::tie(o.i, o.j, o.k, o.iota);
}

std::string Params::to_string() const {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << "," << iota << ")";
  return os.str();
}

std::optional<int> cartan_entry(const GDD& d, int vertex) {
  const Scalar& q = vertex == 1 ? d.q11 : d.q22;
  Scalar qm(1);
  for (int m = 0; m <= 24; ++m) {
    if (qint(q, m + 1).is_zero() || (qm * d.e).is_one()) return m;
    qm *= q;
  }
  return std::nullopt;
}

GDD reflect(const GDD& d, int vertex) {
  if (vertex == 2) return swap_vertices(reflect(swap_vertices(d), 1));
  auto m = cartan_entry(d, 1);
  if (!m) throw std::domain_error("reflection undefined: Cartan entry does not exist");
  GDD r;
  r.q11 = d.q11;
  r.q22 = d.q22 * d.e.pow(*m) * d.q11.pow(static_cast<long long>(*m) * *m);
  r.e = d.q11.pow(-2LL * *m) * d.e.inverse();
  return r;
}

Scalar root_label(const GDD& d, int a, int b) {
  return d.q11.pow(static_cast<long long>(a) * a) * d.q22.pow(static_cast<long long>(b) * b) *
         d.e.pow(static_cast<long long>(a) * b);
}

WeylVerdict weyl_groupoid_finite(const GDD& d0, int max_steps) {
  WeylVerdict out;
  // w: columns are the images of the current simple roots in the alpha basis of d0
  int w[2][2] = {{1, 0}, {0, 1}};
  GDD d = d0;
  std::vector<GDD> seen{d0};
  int v = 0;
  for (int step = 0; step < max_steps; ++step) {
    int a = w[0][v], b = w[1][v];
    if (a < 0 || b < 0) {
      out.reason = "non-positive root in chain";
      return out;
    }
    out.roots.push_back({a, b});
    if (root_label(d0, a, b).is_one()) {
      out.reason = "root (" + std::to_string(a) + "," + std::to_string(b) + ") has label 1";
      return out;
    }
    if (a == 0 && b == 1) {
      out.finite = true;
      out.positive_roots = static_cast<int>(out.roots.size());
      out.objects = static_cast<int>(seen.size());
      out.reason = "chain closes";
      return out;
    }
    auto m = cartan_entry(d, v + 1);
    if (!m) {
      out.reason = "undefined Cartan entry";
      return out;
    }
    // s_v: alpha_v -> -alpha_v, alpha_u -> alpha_u + m alpha_v
    int u = 1 - v;
    for (int r = 0; r < 2; ++r) {
      int cv = w[r][v], cu = w[r][u];
      w[r][v] = -cv;
      w[r][u] = cu + *m * cv;
    }
    d = reflect(d, v + 1);
    bool fresh = true;
    for (const auto& s : seen)
      if (s == d) fresh = false;
    if (fresh) seen.push_back(d);
    v = u;
  }
  out.reason = "chain exceeds " + std::to_string(max_steps) + " steps";
  return out;
}

GDD side_diagram(Side s, const Params& p) {
  GDD d;
  d.q11 = Scalar(-1);
  if (s == Side::H) {
    d.e = sgn(p.k + p.iota - 1) * xp(-p.j);
    d.q22 = sgn((p.k + p.j) * (p.iota - 1)) * xp(p.i * p.j);
  } else {
    d.e = sgn(p.i) * xp(-p.j);
    d.q22 = sgn(p.k * p.iota) * xp(-p.i * p.j);
  }
  return d;
}

bool in_parameter_set(Side s, const Params& p) {
  if (p.i < 0 || p.i > 5 || p.j < 0 || p.j > 5 || p.k < 0 || p.k > 1 || p.iota < 0 || p.iota > 1) return false;
  if (s == Side::H) return mod(p.j + 3 * p.k - 3 * (p.iota + 1), 6) != 0;
  return mod(3 * p.i - p.j, 6) != 0;
}

std::vector<Params> parameter_set(Side s) {
  std::vector<Params> out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 2; ++k)
        for (int t = 0; t < 2; ++t)
          if (in_parameter_set(s, {i, j, k, t})) out.push_back({i, j, k, t});
  return out;
}

std::vector<Params> one_dim_parameters() {
  std::vector<Params> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 6; ++k) out.push_back({i, j, k, 0});
  return out;
}

std::vector<std::string> classify_param(Side s, const Params& p) {
  if (!in_parameter_set(s, p)) throw std::invalid_argument("parameter outside the index set: " + p.to_string());
  std::vector<std::string> out;
  const int i = p.i, j = p.j, k = p.k, t = p.iota;
  if (s == Side::H) {
    int A = mod(3 * (k + t - 1) - j, 6);
    int B = mod(3 * (k + j) * (t - 1) + i * j, 6);
    int C = mod(3 * (k + t) + 3 * (k + j) * (t - 1) + (i - 1) * j, 6);
    if (B == 0 || C == 0) out.push_back("L0*");
    if (i == 5 && (j == 1 || j == 5) && mod(k + t + 1, 2) == 0) out.push_back("L0**");
    // the paired signs are read together: (+,+) or (-,-)
    if ((A == 1 && B == 4) || (A == 5 && B == 2)) out.push_back("L1");
    if ((A == 2 && B == 2) || (A == 4 && B == 4)) out.push_back("L2");
    if ((A == 4 && B == 1) || (A == 2 && B == 5)) out.push_back("L3");
    bool l4 = j == 3 && ((k == 0 && t == 1) || (k == 1 && t == 0)) && in_set(i, {1, 3, 5});
    if (l4) out.push_back("L4");
    if (!l4 && B == 3) out.push_back("L5");
    if (!l4 && C == 3) out.push_back("L6");
    if (i == 2 && ((k == 0 && t == 0 && in_set(j, {2, 4})) || (k == 1 && t == 0 && in_set(j, {1, 5}))))
      out.push_back("L1*");
  } else {
    int B = mod(3 * k * t - i * j, 6);
    int C = mod(3 * k * t + (3 - j) * (i + 1), 6);
    bool a = (i == 1 && in_set(j, {2, 4})) || (i == 4 && in_set(j, {1, 5}));
    if (B == 0 || C == 0) out.push_back("T0*");
    if (k == 1 && t == 1 && a) out.push_back("T0**");
    if (k * t == 0 && a) out.push_back("T1");
    if ((k * t == 0 && i == 1 && in_set(j, {1, 5})) || (k * t == 1 && i == 4 && in_set(j, {2, 4})))
      out.push_back("T2");
    if ((k * t == 0 && i == 4 && in_set(j, {2, 4})) || (k * t == 1 && i == 1 && in_set(j, {1, 5})))
      out.push_back("T3");
    // both vertices and the edge equal -1; requires k = iota = 1
    bool t4 = in_set(j, {0, 3}) && k == 1 && t == 1;
    if (t4) out.push_back("T4");
    if (!t4 && B == 3) out.push_back("T5");
    if (!t4 && C == 3) out.push_back("T6");
    if (i == 1 && in_set(j, {2, 4}) && k == 0) out.push_back("T1*");
  }
  return out;
}

std::vector<std::string> classify_one_dim(Side s, const Params& p) {
  int v = s == Side::H ? p.i * (p.j + p.k) + p.j : p.i * p.j + p.k;
  if (mod(v, 2) == 1) return {s == Side::H ? "L0" : "T0"};
  return {};
}

bool has_label(const std::vector<std::string>& labels, const std::string& l) {
  for (const auto& x : labels)
    if (x == l) return true;
  return false;
}

std::string normalize_label(const std::string& l) {
  std::string r = l;
  auto rep = [&](const std::string& from, const std::string& to) {
    if (r.rfind(from, 0) == 0) r = to + r.substr(from.size());
  };
  rep("Λ", "L");
  rep("Θ", "T");
  rep("Lambda", "L");
  rep("Theta", "T");
  std::string out;
  for (char c : r)
    if (c != '^' && c != '{' && c != '}' && c != ' ') out += c;
  return out;
}

int class_power_exponent(Side s, const Params& p) {
  Scalar q;
  auto labels = classify_param(s, p);
  std::string pre = s == Side::H ? "L" : "T";
  if (s == Side::H) {
    if (has_label(labels, "L5")) q = sgn(p.k + p.iota - 1) * xp(-p.j);
    else if (has_label(labels, "L6")) q = sgn(p.iota + 1 + p.k) * xp(p.j);
    else return 0;
  } else {
    if (has_label(labels, "T5")) q = sgn(p.i) * xp(-p.j);
    else if (has_label(labels, "T6")) q = sgn(p.i) * xp(p.j);
    else return 0;
  }
  auto n = order_of_root_of_unity(q, 12);
  return n ? *n : 0;
}

int expected_nichols_dim(Side s, const Params& p) {
  auto labels = classify_param(s, p);
  std::string pre = s == Side::H ? "L" : "T";
  if (has_label(labels, pre + "1")) return 18;
  if (has_label(labels, pre + "2") || has_label(labels, pre + "3")) return 36;
  if (has_label(labels, pre + "4")) return 4;
  if (has_label(labels, pre + "5") || has_label(labels, pre + "6")) return 2 * class_power_exponent(s, p);
  return 0;
}

int expected_nichols_dim_one(Side s, const Params& p) { return classify_one_dim(s, p).empty() ? 0 : 2; }

PartitionAudit partition_audit(Side s) {
  PartitionAudit a;
  a.side = s;
  const std::string pre = s == Side::H ? "L" : "T";
  for (const auto& p : parameter_set(s)) {
    ++a.total;
    auto labels = classify_param(s, p);
    std::vector<std::string> cover;
    for (const auto& l : labels) {
      ++a.counts[l];
      if (l != pre + "1*") cover.push_back(l);
    }
    if (cover.empty()) a.unclassified.push_back(p);
    if (cover.size() > 1) a.overlaps.push_back({p, cover});
    if (s == Side::H) {
      GDD d = side_diagram(s, p);
      if (cartan_entry(d, 1)) {
        GDD r = reflect(d, 1);
        Scalar vertex = sgn(p.k + p.iota + (p.k + p.j) * (p.iota - 1)) * xp((p.i - 1) * p.j);
        Scalar edge = sgn(p.k + p.iota) * xp(p.j);
        if (r.q22 != vertex) ++a.reflected_vertex_mismatch;
        if (r.e != edge) ++a.reflected_edge_mismatch;
        if (r.e == -edge) ++a.reflected_edge_sign_flipped;
      }
    }
  }
  for (const auto& p : one_dim_parameters())
    if (!classify_one_dim(s, p).empty()) ++a.one_dim_exterior;
  return a;
}

std::string PartitionAudit::report() const {
  std::ostringstream os;
  os << "side " << side_name(side) << ": " << total << " parameters\n";
  for (const auto& [l, c] : counts) os << "  |" << l << "| = " << c << "\n";
  os << "  unclassified: " << unclassified.size() << "\n";
  os << "  overlaps among classes: " << overlaps.size() << "\n";
  for (const auto& [p, ls] : overlaps) {
    os << "    " << p.to_string() << ":";
    for (const auto& l : ls) os << " " << l;
    os << "\n";
  }
  os << "  one-dimensional exterior cases: " << one_dim_exterior << " of 24\n";
  if (side == Side::H)
    os << "  reflected display: vertex mismatches " << reflected_vertex_mismatch << ", edge mismatches "
       << reflected_edge_mismatch << " (sign flips " << reflected_edge_sign_flipped << ")\n";
  return os.str();
}

}  // namespace hopf
