// Batch driver: verification suites, parameter atlases and single-object queries.
// Results go to stdout (or --out) as JSON/CSV, progress to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hopfalg/duality.hpp"
#include "hopfalg/hopf.hpp"
#include "hopfalg/lifting.hpp"
#include "hopfalg/nichols.hpp"
#include "hopfalg/presentations.hpp"
#include "hopfalg/roots.hpp"
#include "hopfalg/yd.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace hopf;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string target;  // fixture name, side or family
  std::vector<int> params;
  std::vector<std::string> mu{"0"};
  int cap = 0;  // 0: command default
  int dimension = 2;
  int jobs = 1;
  std::string out;
  std::string format = "json";
  std::string only;
  std::string rules;
  std::string poly;
  bool perturb = false;
  bool ranks = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2)); }

void progress(const std::string& line) { std::cerr << line << std::endl; }

// Independent items on a small worker pool; results land at their own index.
template <class F>
void parallel_for(int n, int jobs, F f) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(jobs, n); ++t)
    pool.emplace_back([&] {
      for (int i; (i = next++) < n;) f(i);
    });
  for (auto& t : pool) t.join();
}

Side side_of(const std::string& s) {
  try {
    return parse_side(s);
  } catch (const std::exception&) {
    throw UsageError("side must be H or K, got '" + s + "'");
  }
}

Params params_of(const RunConfig& cfg, Side s, int dimension) {
  const auto& v = cfg.params;
  const std::size_t need = dimension == 1 ? 3 : 4;
  if (v.size() != need) throw UsageError("expected " + std::to_string(need) + " parameters");
  Params p;
  p.i = v[0];
  p.j = v[1];
  p.k = v[2];
  p.iota = dimension == 1 ? 0 : v[3];
  if (dimension == 1) {
    if (p.i < 0 || p.i > 1 || p.j < 0 || p.j > 1 || p.k < 0 || p.k > 5)
      throw UsageError("one-dimensional parameters are (i, j, k) in {0,1} x {0,1} x {0..5}");
    return p;
  }
  if (!in_parameter_set(s, p)) throw UsageError(side_name(s) + " has no parameter " + p.to_string());
  return p;
}

Scalar scalar_of(const std::string& s) {
  try {
    return Scalar::parse(s);
  } catch (const std::exception&) {
    throw UsageError("not a scalar: '" + s + "'");
  }
}

json params_json(const Params& p, int dimension) {
  json j = json::array({p.i, p.j, p.k});
  if (dimension == 2) j.push_back(p.iota);
  return j;
}

json labels_json(const std::vector<std::string>& ls) { return json(ls); }

// ---------------------------------------------------------------------------

HopfAlgebra named_algebra(const RunConfig& cfg, int* expected) {
  const std::string& n = cfg.target;
  if (n == "D(Hcop)") {
    *expected = 576;
    return drinfeld_double(twist(realize_hopf(fixture("H")), false, true));
  }
  if (n == "H*" || n == "K*") {
    *expected = 24;
    return dual(realize_hopf(fixture(n.substr(0, 1))));
  }
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), n) == names.end()) throw UsageError("unknown fixture '" + n + "'");
  FixtureParams fp;
  if (n == "Cfam" || n == "Bfam") {
    if (cfg.params.size() != 4) throw UsageError(n + " needs --params i j k iota");
    fp.i = cfg.params[0];
    fp.j = cfg.params[1];
    fp.k = cfg.params[2];
    fp.iota = cfg.params[3];
    fp.mu = scalar_of(cfg.mu.front());
  }
  Fixture f = fixture(n, fp);
  *expected = f.expected_dim;
  return realize_hopf(f);
}

int cmd_verify(const RunConfig& cfg) {
  int expected = 0;
  progress("building " + cfg.target);
  HopfAlgebra A = named_algebra(cfg, &expected);
  if (cfg.perturb && A.dim() > 1) {
    const int i = A.dim() > 2 ? 2 : 1;
    A.perturb_mult(i, i, sv_add(A.mult_basis(i, i), A.basis(1)));
    progress("perturbed the product " + A.labels()[i] + "*" + A.labels()[i]);
  }
  progress("checking axioms (dim " + std::to_string(A.dim()) + ")");
  AxiomReport rep = verify_axioms(A);
  json j;
  j["algebra"] = A.name();
  j["dim"] = A.dim();
  j["expected_dim"] = expected;
  j["reduced_checks"] = rep.reduced;
  json items = json::array();
  for (const auto& it : rep.items) items.push_back({{"axiom", it.axiom}, {"pass", it.pass}, {"witness", it.witness}});
  j["axioms"] = items;
  const bool ok = rep.ok() && A.dim() == expected;
  j["ok"] = ok;
  emit(cfg, j);
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct AtlasRow {
  Params p;
  int dimension = 2;
  std::vector<std::string> labels;
  GDD diagram;
  WeylVerdict verdict;
  int expected = 0;
  std::vector<int> ranks;
  int total = 0;
};

int cmd_atlas(const RunConfig& cfg) {
  const Side s = side_of(cfg.target);
  const std::string only = cfg.only.empty() ? "" : normalize_label(cfg.only);
  std::vector<AtlasRow> rows;
  for (const auto& p : parameter_set(s)) {
    AtlasRow r;
    r.p = p;
    r.labels = classify_param(s, p);
    r.diagram = side_diagram(s, p);
    r.verdict = weyl_groupoid_finite(r.diagram);
    r.expected = expected_nichols_dim(s, p);
    rows.push_back(r);
  }
  for (const auto& p : one_dim_parameters()) {
    AtlasRow r;
    r.p = p;
    r.dimension = 1;
    r.labels = classify_one_dim(s, p);
    r.expected = expected_nichols_dim_one(s, p);
    rows.push_back(r);
  }
  if (!only.empty()) {
    std::vector<AtlasRow> kept;
    for (auto& r : rows)
      if (has_label(r.labels, only)) kept.push_back(std::move(r));
    rows.swap(kept);
  }

  if (cfg.ranks) {
    const int cap = cfg.cap > 0 ? cfg.cap : 10;
    // Host algebras are cached lazily; build them before the workers start.
    std::vector<BraidedSpace> spaces;
    for (const auto& r : rows) {
      YDModule M = r.dimension == 2 ? yd_simple(s, r.p) : yd_one_dim(s, r.p);
      spaces.push_back(braided_space(M, side_letters(s, r.dimension)));
    }
    std::mutex err;
    // Only finite rows: ranks of the infinite ones grow without bound.
    parallel_for(static_cast<int>(rows.size()), cfg.jobs, [&](int i) {
      if (rows[i].expected <= 0) return;
      HilbertResult h = hilbert_function(spaces[i], cap);
      rows[i].ranks = h.ranks;
      rows[i].total = h.finite ? h.total : 0;
      std::lock_guard<std::mutex> lock(err);
      progress("atlas " + side_name(s) + " " + rows[i].p.to_string() + " total " +
               (h.finite ? std::to_string(h.total) : ">=" + std::to_string(h.total)));
    });
  }

  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "dimension,i,j,k,iota,classes,q11,q22,edge,verdict,positive_roots,nichols_dim";
    if (cfg.ranks) os << ",ranks";
    os << "\n";
    for (const auto& r : rows) {
      std::string cls;
      for (const auto& l : r.labels) cls += (cls.empty() ? "" : ";") + l;
      os << r.dimension << "," << r.p.i << "," << r.p.j << "," << r.p.k << ","
         << (r.dimension == 2 ? std::to_string(r.p.iota) : "") << "," << cls << ",";
      if (r.dimension == 2)
        os << "\"" << r.diagram.q11.to_string() << "\",\"" << r.diagram.q22.to_string() << "\",\""
           << r.diagram.e.to_string() << "\"," << (r.verdict.finite ? "finite" : "infinite") << ","
           << r.verdict.positive_roots;
      else
        os << ",,,,";
      os << "," << (r.expected > 0 ? std::to_string(r.expected) : "inf");
      if (cfg.ranks) {
        os << ",";
        for (std::size_t n = 0; n < r.ranks.size(); ++n) os << (n ? " " : "") << r.ranks[n];
      }
      os << "\n";
    }
    emit(cfg, os.str());
    return 0;
  }
  if (cfg.format != "json") throw UsageError("format must be json or csv");
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["dimension"] = r.dimension;
    j["params"] = params_json(r.p, r.dimension);
    j["classes"] = labels_json(r.labels);
    if (r.dimension == 2) {
      j["diagram"] = {{"q11", r.diagram.q11.to_string()},
                      {"q22", r.diagram.q22.to_string()},
                      {"edge", r.diagram.e.to_string()}};
      j["weyl"] = {{"finite", r.verdict.finite}, {"positive_roots", r.verdict.positive_roots}, {"reason", r.verdict.reason}};
    }
    j["nichols_dim"] = r.expected > 0 ? json(r.expected) : json("infinite");
    if (cfg.ranks) j["ranks"] = r.ranks;
    arr.push_back(j);
  }
  emit(cfg, json{{"side", side_name(s)}, {"rows", arr.size()}, {"atlas", arr}});
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_nichols(const RunConfig& cfg) {
  const Side s = side_of(cfg.target);
  const int d = cfg.dimension;
  const Params p = params_of(cfg, s, d);
  YDModule M = d == 2 ? yd_simple(s, p) : yd_one_dim(s, p);
  BraidedSpace V = braided_space(M, side_letters(s, d));
  const auto labels = d == 2 ? classify_param(s, p) : classify_one_dim(s, p);
  const int expected = d == 2 ? expected_nichols_dim(s, p) : expected_nichols_dim_one(s, p);
  json j;
  j["side"] = side_name(s);
  j["params"] = params_json(p, d);
  j["classes"] = labels_json(labels);
  bool ok = true;
  if (d == 2) {
    WeylVerdict w = weyl_groupoid_finite(side_diagram(s, p));
    j["weyl"] = {{"finite", w.finite}, {"positive_roots", w.positive_roots}, {"reason", w.reason}};
    ok = w.finite == (expected > 0);
  }
  const int cap = cfg.cap > 0 ? cfg.cap : (expected > 0 ? 40 : 6);
  HilbertResult h = hilbert_function(V, cap, [&](int n, int r) {
    progress("degree " + std::to_string(n) + " rank " + std::to_string(r));
  });
  j["ranks"] = h.ranks;
  if (expected > 0) {
    const auto rels = d == 2 ? class_relations(s, p, V) : class_relations_one_dim(s, p, V);
    json rj = json::array();
    for (const auto& r : rels) rj.push_back(tensor_format(V, r));
    j["relations"] = rj;
    auto by_rel = nichols_dim_by_relations(V, rels);
    j["dim"] = h.total;
    j["dim_by_relations"] = by_rel ? json(*by_rel) : json(nullptr);
    j["expected_dim"] = expected;
    ok = ok && h.finite && h.total == expected && by_rel && *by_rel == expected;
  } else {
    std::string cls = labels.empty() ? "" : " (" + labels.front() + ")";
    j["dim"] = "infinite" + cls;
    bool positive = !h.finite;
    j["ranks_positive_through_cap"] = positive;
    ok = ok && positive;
  }
  j["ok"] = ok;
  emit(cfg, j);
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_lift(const RunConfig& cfg) {
  Family f;
  try {
    f = parse_family(cfg.target);
  } catch (const std::exception&) {
    throw UsageError("family must be C or B");
  }
  const Params p = params_of(cfg, family_side(f), 2);
  const auto allowed = lifting_parameters(f);
  if (std::find(allowed.begin(), allowed.end(), p) == allowed.end())
    throw UsageError(family_name(f) + " is defined for " + std::to_string(allowed.size()) + " parameters only");
  json arr = json::array();
  bool ok = true;
  for (const auto& m : cfg.mu) {
    const Scalar mu = scalar_of(m);
    progress("building " + family_name(f) + " " + p.to_string() + " mu=" + mu.to_string());
    Lifting L = build_lifting(f, p, mu, cfg.perturb ? Scalar(1) : Scalar(0));
    LiftingReport rep = verify_lifting(L);
    json j = json::parse(rep.to_json());
    arr.push_back({{"family", family_name(f)},
                   {"params", params_json(p, 2)},
                   {"mu", mu.to_string()},
                   {"dim", L.algebra.dim()},
                   {"ok", rep.ok()},
                   {"report", j}});
    ok = ok && rep.ok();
  }
  emit(cfg, arr.size() == 1 ? arr.front() : arr);
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_dual(const RunConfig& cfg) {
  const Side s = side_of(cfg.target);
  const Params p = params_of(cfg, s, 2);
  YDModule D = dual_module(yd_simple(s, p));
  YDCheck yc = check_yd(D);
  json j;
  j["side"] = side_name(s);
  j["params"] = params_json(p, 2);
  j["dual_is_yd"] = yc.ok();
  bool found = false;
  for (const auto& e : yd_catalog(s, 2)) {
    auto T = module_iso(D, e.module);
    if (!T) continue;
    j["isomorphic_to"] = params_json(e.params, 2);
    j["intertwiner"] = json::parse(matrix_to_json(*T));
    found = true;
    break;
  }
  if (!found) j["isomorphic_to"] = nullptr;
  emit(cfg, j);
  return found && yc.ok() ? 0 : 1;
}

int cmd_braiding(const RunConfig& cfg) {
  const Side s = side_of(cfg.target);
  const int d = cfg.dimension;
  const Params p = params_of(cfg, s, d);
  YDModule M = d == 2 ? yd_simple(s, p) : yd_one_dim(s, p);
  Matrix c = braiding(M);
  const bool yd = check_yd(M).ok(), braid = braid_equation(c, M.dim);
  json j;
  j["side"] = side_name(s);
  j["params"] = params_json(p, d);
  j["module"] = json::parse(yd_to_json(M));
  j["braiding"] = json::parse(matrix_to_json(c));
  j["yd"] = yd;
  j["braid_equation"] = braid;
  emit(cfg, j);
  return yd && braid ? 0 : 1;
}

// ---------------------------------------------------------------------------

RewritingSystem system_of(const RunConfig& cfg) {
  if (!cfg.rules.empty()) {
    std::ifstream f(cfg.rules);
    if (!f) throw UsageError("cannot read " + cfg.rules);
    std::stringstream ss;
    ss << f.rdbuf();
    return RewritingSystem::from_text(ss.str());
  }
  if (cfg.target.empty()) throw UsageError("give a fixture name or --rules FILE");
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), cfg.target) == names.end())
    throw UsageError("unknown fixture '" + cfg.target + "'");
  FixtureParams fp;
  if (cfg.params.size() == 4) {
    fp.i = cfg.params[0];
    fp.j = cfg.params[1];
    fp.k = cfg.params[2];
    fp.iota = cfg.params[3];
  } else if (cfg.target == "Cfam" || cfg.target == "Bfam") {
    throw UsageError(cfg.target + " needs --params i j k iota");
  }
  fp.mu = scalar_of(cfg.mu.front());
  return fixture(cfg.target, fp).system;
}

int cmd_reduce(const RunConfig& cfg) {
  RewritingSystem sys = system_of(cfg);
  Poly p;
  try {
    p = parse_poly(sys.alphabet(), cfg.poly);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot parse polynomial: ") + e.what());
  }
  Poly r = sys.reduce(p);
  emit(cfg, json{{"input", format_poly(sys.alphabet(), p)}, {"normal_form", format_poly(sys.alphabet(), r)}});
  return 0;
}

int cmd_overlaps(const RunConfig& cfg) {
  RewritingSystem sys = system_of(cfg);
  const std::string wf = sys.well_formed();
  progress("checking overlaps of " + std::to_string(sys.rules().size()) + " rules");
  auto amb = sys.overlap_check();
  json arr = json::array();
  for (const auto& a : amb)
    arr.push_back({{"word", sys.alphabet().format(a.word)},
                   {"rules", {a.rule1, a.rule2}},
                   {"difference", format_poly(sys.alphabet(), a.difference)}});
  json j;
  j["rules"] = sys.rules().size();
  j["well_formed"] = wf.empty() ? json(true) : json(wf);
  j["unresolved"] = arr;
  try {
    j["irreducible_words"] = sys.irreducible_monomials(cfg.cap > 0 ? cfg.cap : -1).size();
  } catch (const IrreducibleOverflow&) {
    j["irreducible_words"] = "more than 100000";
  }
  emit(cfg, j);
  return amb.empty() && wf.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Hopf algebras, Yetter-Drinfeld modules and Nichols algebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sc, bool with_params) {
    sc->add_option("--out", cfg.out, "write the result to a file");
    sc->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    if (with_params) {
      sc->add_option("--side", cfg.target, "H or K");
      sc->add_option("--params", cfg.params, "i j k iota")->expected(3, 4);
    }
  };

  auto* verify = app.add_subcommand("verify", "check the Hopf axioms of a fixture, H*, K* or D(Hcop)");
  verify->add_option("name", cfg.target)->required();
  verify->add_option("--params", cfg.params, "i j k iota for Cfam/Bfam")->expected(4);
  verify->add_option("--mu", cfg.mu, "deformation parameter")->expected(1);
  verify->add_flag("--perturb", cfg.perturb, "overwrite one product before checking");
  common(verify, false);

  auto* atlas = app.add_subcommand("atlas", "classification, diagram, Weyl verdict and dimension per parameter");
  atlas->add_option("SIDE", cfg.target, "H or K");
  atlas->add_option("--only", cfg.only, "keep rows with this class label");
  atlas->add_flag("--ranks", cfg.ranks, "also compute symmetrizer ranks of the finite rows");
  atlas->add_option("--cap", cfg.cap, "degree cap for --ranks")->check(CLI::PositiveNumber);
  atlas->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  common(atlas, true);

  auto* nichols = app.add_subcommand("nichols", "Hilbert series and relations of B(V)");
  nichols->add_option("SIDE", cfg.target, "H or K");
  nichols->add_option("PARAMS", cfg.params, "i j k [iota]");
  nichols->add_option("--cap", cfg.cap, "degree cap")->check(CLI::PositiveNumber);
  nichols->add_option("--dim", cfg.dimension, "1 or 2")->check(CLI::IsMember({1, 2}));
  common(nichols, true);

  auto* lift = app.add_subcommand("lift", "build and verify a lifting C or B");
  lift->add_option("family", cfg.target)->required();
  lift->add_option("PARAMS", cfg.params, "i j k iota");
  lift->add_option("--mu", cfg.mu, "one or more values of mu");
  lift->add_flag("--perturb", cfg.perturb, "shift one checked relation");
  common(lift, true);

  auto* dualc = app.add_subcommand("dual", "dual of a two-dimensional simple object");
  dualc->add_option("SIDE", cfg.target, "H or K");
  dualc->add_option("PARAMS", cfg.params, "i j k iota");
  common(dualc, true);

  auto* braid = app.add_subcommand("braiding", "braiding matrix of a simple object");
  braid->add_option("SIDE", cfg.target, "H or K");
  braid->add_option("PARAMS", cfg.params, "i j k [iota]");
  braid->add_option("--dim", cfg.dimension, "1 or 2")->check(CLI::IsMember({1, 2}));
  common(braid, true);

  auto* reduce = app.add_subcommand("reduce", "normal form of a polynomial");
  reduce->add_option("fixture", cfg.target);
  reduce->add_option("--poly", cfg.poly, "polynomial, e.g. 'a*b - (x)*b*a'")->required();
  reduce->add_option("--rules", cfg.rules, "rule file instead of a fixture");
  reduce->add_option("--params", cfg.params, "i j k iota")->expected(4);
  reduce->add_option("--mu", cfg.mu)->expected(1);
  common(reduce, false);

  auto* overlaps = app.add_subcommand("overlaps", "unresolved ambiguities of a rewriting system");
  overlaps->add_option("fixture", cfg.target);
  overlaps->add_option("--rules", cfg.rules, "rule file instead of a fixture");
  overlaps->add_option("--params", cfg.params, "i j k iota")->expected(4);
  overlaps->add_option("--mu", cfg.mu)->expected(1);
  overlaps->add_option("--cap", cfg.cap, "weight bound for counting irreducible words");
  common(overlaps, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "atlas") return cmd_atlas(cfg);
    if (cfg.command == "nichols") return cmd_nichols(cfg);
    if (cfg.command == "lift") return cmd_lift(cfg);
    if (cfg.command == "dual") return cmd_dual(cfg);
    if (cfg.command == "braiding") return cmd_braiding(cfg);
    if (cfg.command == "reduce") return cmd_reduce(cfg);
    if (cfg.command == "overlaps") return cmd_overlaps(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
