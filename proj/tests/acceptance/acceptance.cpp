// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "hopfalg/duality.hpp"
#include "hopfalg/lifting.hpp"
#include "hopfalg/nichols.hpp"
#include "hopfalg/yd.hpp"

using namespace hopf;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  failures += !o.pass;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << n << ". " << title << " [" << secs << " s] "
            << o.detail.str() << std::endl;
}

int m6(int a) { return ((a % 6) + 6) % 6; }

BraidedSpace space(Side s, const Params& p) { return braided_space(yd_simple(s, p), side_letters(s, 2)); }

std::string label_prefix(Side s) { return s == Side::H ? "L" : "T"; }

// Dimension each finite class is claimed to have.
int claimed_class_dim(Side s, const Params& p) {
  const auto l = classify_param(s, p);
  const std::string P = label_prefix(s);
  if (has_label(l, P + "1")) return 18;
  if (has_label(l, P + "2") || has_label(l, P + "3")) return 36;
  if (has_label(l, P + "4")) return 4;
  if (has_label(l, P + "5") || has_label(l, P + "6")) {
    const int N = class_power_exponent(s, p);
    return N == 3 || N == 6 ? 2 * N : -1;
  }
  return 0;
}

}  // namespace

int main() {
  criterion(1, "fixtures: dimensions and Hopf axioms", [](Outcome& o) {
    const std::vector<std::pair<std::string, int>> want = {{"H", 24},  {"K", 24},   {"A", 24},   {"A'", 24},
                                                           {"A1", 12}, {"C", 12},   {"grA", 24}, {"grA'", 24}};
    for (const auto& [name, dim] : want) {
      HopfAlgebra A = realize_hopf(fixture(name));
      o.require(A.dim() == dim, name + " has dim " + std::to_string(A.dim()));
      AxiomReport r = verify_axioms(A);
      o.require(r.ok(), name + ": " + r.summary());
    }
    o.detail << "8 fixtures";
  });

  criterion(2, "psi: A -> H* and phi: A1 -> C* are Hopf isomorphisms; |G(H*)| = 12", [](Outcome& o) {
    DualityMap psi = psi_map();
    MorphismReport r = check_morphism(psi.map, psi.source, psi.target);
    o.require(r.hopf() && r.bijective, "psi: " + r.witness);
    GrouplikeResult g = grouplikes(psi.target);
    o.require(g.complete && g.elements.size() == 12, "G(H*) has " + std::to_string(g.elements.size()) + " elements");
    std::map<int, int> orders;
    for (const auto& e : g.elements) {
      SparseVec p = e;
      int n = 1;
      while (!sv_sub(p, psi.target.unit()).empty() && n <= 12) p = psi.target.mul(p, e), ++n;
      ++orders[n];
    }
    o.require(orders == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}, {6, 6}}, "G(H*) is not Z6 x Z2");
    DualityMap phi = phi_map();
    MorphismReport q = check_morphism(phi.map, phi.source, phi.target);
    o.require(q.hopf() && q.bijective, "phi: " + q.witness);
    o.detail << " (psi hopf=" << r.hopf() << " bijective=" << r.bijective << ", |G(H*)|=" << g.elements.size()
             << ", phi hopf=" << q.hopf() << ")";
  });

  criterion(3, "D(H^cop): dim 576, axioms, presentation relations", [](Outcome& o) {
    DoubleCheck d = check_double();
    o.require(d.computed.dim() == 576, "dim " + std::to_string(d.computed.dim()));
    AxiomReport r = verify_axioms(d.computed);
    o.require(r.ok(), r.summary());
    int held = 0;
    for (const auto& [text, ok] : d.relations) {
      held += ok;
      o.require(ok, "relation " + text);
    }
    o.require(d.iso.hopf() && d.iso.bijective, "presented double not isomorphic: " + d.iso.witness);
    o.detail << held << "/" << d.relations.size() << " relations";
  });

  criterion(4, "D(H^cop)-module census: 24 + 120 simple, pairwise non-isomorphic", [](Outcome& o) {
    auto cat = d_module_catalog();
    o.require(parameter_set(Side::H).size() == 120, "|Lambda| != 120");
    int one = 0, two = 0;
    for (const auto& m : cat) {
      std::string f = d_module_relation_failure(m);
      o.require(f.empty(), m.name + ": " + f);
      if (m.dim == 1) ++one;
      if (m.dim == 2) {
        ++two;
        o.require(is_absolutely_simple(m.gens, 2), m.name + " not simple");
      }
    }
    o.require(one == 24 && two == 120, "catalog sizes");
    int isos = 0;
    for (std::size_t a = 0; a < cat.size(); ++a)
      for (std::size_t b = a + 1; b < cat.size(); ++b)
        if (cat[a].dim == cat[b].dim && representation_iso(cat[a].gens, cat[b].gens, cat[a].dim)) {
          ++isos;
          o.require(false, cat[a].name + " ~ " + cat[b].name);
        }
    o.detail << one << " + " << two << " modules, " << isos << " isomorphic pairs";
  });

  criterion(5, "YD catalogs, closed-form braidings, braid equation", [](Outcome& o) {
    int n = 0;
    for (Side s : {Side::H, Side::K})
      for (int d : {1, 2}) {
        auto cat = yd_catalog(s, d);
        o.require(cat.size() == (d == 1 ? 24u : 120u), side_name(s) + " catalog size");
        for (const auto& e : cat) {
          YDCheck y = check_yd(e.module);
          o.require(y.ok(), e.module.name + ": " + y.witness);
          Matrix c = braiding(e.module);
          if (d == 1) o.require(c(0, 0) == closed_forms::one_dim_braiding(s, e.params), e.module.name + " braiding");
          else o.require(c == closed_forms::two_dim_braiding(s, e.params), e.module.name + " braiding");
          o.require(braid_equation(c, d), e.module.name + " braid equation");
          ++n;
        }
      }
    o.detail << n << " objects";
  });

  criterion(6, "duals: V* ~ V(4-i,-j,k+1,iota+1), W* ~ W(-i-1,-j-3,k,iota)", [](Outcome& o) {
    int found = 0;
    for (Side s : {Side::H, Side::K})
      for (const auto& p : parameter_set(s)) {
        Params q = s == Side::H ? Params{m6(4 - p.i), m6(-p.j), (p.k + 1) % 2, (p.iota + 1) % 2}
                                : Params{m6(-p.i - 1), m6(-p.j - 3), p.k, p.iota};
        YDModule D = dual_module(yd_simple(s, p));
        o.require(check_yd(D).ok(), "dual of " + side_name(s) + p.to_string() + " not YD");
        auto T = module_iso(D, yd_simple(s, q));
        o.require(T.has_value(), side_name(s) + p.to_string() + "* !~ " + q.to_string());
        found += T.has_value();
      }
    o.detail << found << "/240 intertwiners";
  });

  criterion(7, "Nichols dimensions by symmetrizer ranks and by rewriting", [](Outcome& o) {
    int rows = 0;
    std::map<std::string, std::set<int>> dims;
    for (Side s : {Side::H, Side::K}) {
      for (const auto& p : one_dim_parameters()) {
        if (classify_one_dim(s, p).empty()) continue;
        BraidedSpace V = braided_space(yd_one_dim(s, p), side_letters(s, 1));
        HilbertResult h = hilbert_function(V, 10);
        auto r = nichols_dim_by_relations(V, class_relations_one_dim(s, p, V));
        o.require(h.finite && h.total == 2 && r && *r == 2, side_name(s) + " one-dim " + p.to_string());
        dims[label_prefix(s) + "0"].insert(h.total);
        ++rows;
      }
      for (const auto& p : parameter_set(s)) {
        const int claim = claimed_class_dim(s, p);
        if (claim == 0) continue;
        BraidedSpace V = space(s, p);
        HilbertResult h = hilbert_function(V, 10);
        auto r = nichols_dim_by_relations(V, class_relations(s, p, V));
        const std::string tag = side_name(s) + p.to_string();
        o.require(h.finite && h.total == claim, tag + " ranks give " + std::to_string(h.total));
        o.require(r && *r == claim, tag + " rewriting gives " + (r ? std::to_string(*r) : "overflow"));
        for (const auto& l : classify_param(s, p))
          if (l.size() == 2) dims[l].insert(h.total);
        ++rows;
      }
    }
    o.detail << rows << " objects;";
    for (const auto& [l, ds] : dims) {
      o.detail << " " << l << ":";
      for (int d : ds) o.detail << d << (d == *ds.rbegin() ? "" : "/");
    }
  });

  criterion(8, "infinite classes: Weyl verdicts and positive ranks to degree 8", [](Outcome& o) {
    int infinite = 0, spot = 0;
    for (Side s : {Side::H, Side::K})
      for (const auto& p : parameter_set(s)) {
        const auto l = classify_param(s, p);
        const std::string P = label_prefix(s);
        if (!has_label(l, P + "0*") && !has_label(l, P + "0**")) continue;
        ++infinite;
        WeylVerdict v = weyl_groupoid_finite(side_diagram(s, p));
        o.require(!v.finite, side_name(s) + p.to_string() + " judged finite");
        if (spot < 10 && (infinite % 7 == 1)) {
          HilbertResult h = hilbert_function(space(s, p), 8);
          bool positive = h.ranks.size() == 9;
          for (int r : h.ranks) positive = positive && r > 0;
          o.require(positive, side_name(s) + p.to_string() + " has a zero rank by degree 8");
          ++spot;
        }
      }
    o.detail << infinite << " infinite parameters, " << spot << " spot checks";
  });

  criterion(9, "partition counts", [](Outcome& o) {
    std::ostringstream counts;
    const std::map<std::string, int> want_h = {{"L1", 12}, {"L2", 8},  {"L3", 8},  {"L4", 6},
                                               {"L5", 12}, {"L6", 12}, {"L1*", 4}};
    const std::map<std::string, int> want_k = {{"T1", 12}, {"T2", 12}, {"T3", 12}, {"T4", 6},
                                               {"T5", 15}, {"T6", 15}, {"T1*", 4}};
    for (Side s : {Side::H, Side::K}) {
      PartitionAudit a = partition_audit(s);
      o.require(a.total == 120 && a.unclassified.empty(), side_name(s) + " partition incomplete");
      o.require(a.overlaps.empty(), side_name(s) + " classes overlap");
      const auto& want = s == Side::H ? want_h : want_k;
      for (const auto& [l, n] : want) {
        const int got = a.counts.count(l) ? a.counts.at(l) : 0;
        counts << " " << l << "=" << got;
        o.require(got == n, "|" + l + "| = " + std::to_string(got) + ", expected " + std::to_string(n));
      }
    }
    o.detail << " (counts:" << counts.str() << ")";
  });

  criterion(10, "skew-derivation tables of class 1", [](Outcome& o) {
    int n = 0;
    for (Side s : {Side::H, Side::K})
      for (const auto& p : parameter_set(s)) {
        if (!has_label(classify_param(s, p), label_prefix(s) + "1")) continue;
        BraidedSpace V = space(s, p);
        auto table = s == Side::H ? closed_forms::h_class1_derivations(p) : closed_forms::k_class1_derivations(p);
        for (const auto& d : table) {
          bool ok = tensor_equal(skew_derive(V, d.index, closed_forms::make_tensor(V, d.word)),
                                 closed_forms::make_tensor(V, 2, d.value));
          o.require(ok, side_name(s) + p.to_string() + " d" + std::to_string(d.index) + "(" + d.word + ")");
          ++n;
        }
      }
    o.detail << n << " identities";
  });

  criterion(11, "lifting presentations: no overlaps, 432 irreducible words", [](Outcome& o) {
    int n = 0, max_e1 = 0, max_e2 = 0;
    for (Family f : {Family::C, Family::B})
      for (const auto& p : lifting_parameters(f))
        for (int mu : {0, 1}) {
          FixtureParams fp{p.i, p.j, p.k, p.iota, Scalar(mu)};
          Fixture fx = fixture(f == Family::C ? "Cfam" : "Bfam", fp);
          const std::string tag = family_name(f) + p.to_string() + " mu=" + std::to_string(mu);
          o.require(fx.system.overlap_check().empty(), tag + " has unresolved overlaps");
          auto words = fx.system.irreducible_monomials();
          o.require(words.size() == 432, tag + " has " + std::to_string(words.size()) + " words");
          if (f == Family::B) {
            const auto& names = fx.alphabet.letters();
            const int e1 = std::find(names.begin(), names.end(), "e1") - names.begin();
            const int e2 = std::find(names.begin(), names.end(), "e2") - names.begin();
            for (const auto& w : words) {
              int c1 = 0, c2 = 0;
              for (auto l : w) c1 += l == e1, c2 += l == e2;
              max_e1 = std::max(max_e1, c1), max_e2 = std::max(max_e2, c2);
            }
          }
          ++n;
        }
    o.detail << n << " instances; B-family basis: exponent ranges {0,1} give 2^5*6 = 384 words, computed 432 with e1, e2"
             << " exponents up to " << max_e1 << ", " << max_e2;
  });

  criterion(12, "liftings: verified, mu = 0 is the bosonization, coproduct identities", [](Outcome& o) {
    int verified = 0, isos = 0, identities = 0;
    for (Family f : {Family::C, Family::B})
      for (const auto& p : lifting_parameters(f)) {
        const Side s = family_side(f);
        for (int mu : {0, 1}) {
          Lifting L = build_lifting(f, p, Scalar(mu));
          LiftingReport r = verify_lifting(L);
          const std::string tag = family_name(f) + p.to_string() + " mu=" + std::to_string(mu);
          o.require(r.ok() && L.algebra.dim() == 432, tag + " " + r.to_json());
          verified += r.ok();
          if (mu == 0) {
            NicholsAlgebra R = nichols_algebra(s, p);
            HopfAlgebra S = smash_product(R);
            MorphismReport m = check_morphism(generator_matching(L, R, S), L.algebra, S);
            o.require(m.hopf() && m.bijective, tag + " not the bosonization: " + m.witness);
            isos += m.hopf() && m.bijective;
          }
        }
        YDModule M = yd_simple(s, p);
        BraidedSpace V = braided_space(M, side_letters(s, 2));
        for (const auto& id : closed_forms::lifting_identities(f, p, M, V)) {
          bool ok = graded_smash_coproduct(M, V, id.element) == id.expected;
          o.require(ok, family_name(f) + p.to_string() + " " + id.name);
          identities += ok;
        }
      }
    o.detail << verified << "/16 verified, " << isos << "/8 isomorphisms, " << identities << "/32 identities";
  });

  criterion(13, "bosonization dimensions 48, 96, 144, 288, 432, 864", [](Outcome& o) {
    std::map<int, std::string> built;
    auto build = [&](const NicholsAlgebra& R, const std::string& tag) {
      const int d = R.dim() * 24;
      if (built.count(d)) return;
      HopfAlgebra S = smash_product(R);
      AxiomReport a = verify_axioms(S);
      o.require(S.dim() == d && a.ok(), tag + ": " + a.summary());
      built[d] = tag;
    };
    for (const auto& p : one_dim_parameters())
      if (!classify_one_dim(Side::H, p).empty()) {
        build(nichols_algebra(Side::H, p, 1), "H one-dim " + p.to_string());
        break;
      }
    for (Side s : {Side::H, Side::K})
      for (const auto& p : parameter_set(s)) {
        const int e = expected_nichols_dim(s, p);
        if (e > 0 && !built.count(e * 24)) build(nichols_algebra(s, p), side_name(s) + p.to_string());
      }
    for (int d : {48, 96, 144, 288, 432, 864}) {
      o.require(built.count(d) > 0, "no bosonization of dim " + std::to_string(d));
      if (built.count(d)) o.detail << d << " (" << built[d] << ") ";
    }
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
