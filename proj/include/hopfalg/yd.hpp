#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfalg/hopf.hpp"
#include "hopfalg/presentations.hpp"
#include "hopfalg/roots.hpp"

namespace hopf {

// A realized fixture together with the data YD computations need.
struct HostAlgebra {
  Fixture fixture;
  HopfAlgebra hopf;
  std::vector<SparseVec> antipode_inverse;
  SparseVec word(const Word& w) const;
  SparseVec element(const std::string& poly_text) const;
  int letter_index(const std::string& letter) const;  // basis index of a generator
};
using HostPtr = std::shared_ptr<const HostAlgebra>;
// Cached by fixture name ("H", "K", "grA", "grA'", ...).
HostPtr host_algebra(const std::string& name);

struct CoactionTerm {
  Scalar coef;
  int h;  // host basis index
  int m;  // module basis index
};

struct YDModule {
  HostPtr host;
  std::string name;
  int dim = 0;
  std::vector<Matrix> action;                     // per host basis element
  std::vector<std::vector<CoactionTerm>> coaction;  // per module basis vector
  const Matrix& act(const std::string& letter) const { return action[host->letter_index(letter)]; }
};

// Action matrices of every host basis word from the generator matrices.
std::vector<Matrix> action_from_generators(const HostAlgebra& host, const std::map<std::string, Matrix>& gens);
// Coaction of a basis vector from (coefficient, host element text, module index) triples.
std::vector<CoactionTerm> coaction_terms(const HostAlgebra& host,
                                         const std::vector<std::tuple<Scalar, std::string, int>>& parts);

struct YDCheck {
  bool representation = false, comodule = false, compatibility = false;
  std::string witness;
  bool ok() const { return representation && comodule && compatibility; }
};
YDCheck check_yd(const YDModule& M);

// c(v (x) w) = v_(-1) . w (x) v_(0); column v*dim + w, row x*dim + y.
Matrix braiding(const YDModule& M);
bool braid_equation(const Matrix& c, int dim);

YDModule dual_module(const YDModule& M);
// Invertible T : M -> N commuting with actions and coactions, if any.
std::optional<Matrix> module_iso(const YDModule& M, const YDModule& N);

// Catalogs of simple objects. Two-dimensional modules are indexed by the
// parameter sets of the roots module, one-dimensional ones by (i, j, k).
YDModule yd_simple(Side s, const Params& p);   // two-dimensional
YDModule yd_one_dim(Side s, const Params& p);  // one-dimensional
struct CatalogEntry {
  Params params;
  YDModule module;
};
std::vector<CatalogEntry> yd_catalog(Side s, int dimension);  // dimension 1 or 2

// x1, x2 constants of the H-side two-dimensional objects.
Scalar h_const_x1(const Params& p);
Scalar h_const_x2(const Params& p);

// ---------------------------------------------------------------------------
// Modules over the double D(H^cop), given by the generator matrices g,h,x,a,b,c,d.

struct DModule {
  std::string name;
  Params params;
  int dim = 0;
  std::map<std::string, Matrix> gens;
};
std::vector<DModule> d_module_catalog();  // 24 one-dimensional, then 120 two-dimensional
DModule d_module_one(const Params& p);
DModule d_module_two(const Params& p);
// Empty if every defining relation of the double annihilates the representation.
std::string d_module_relation_failure(const DModule& M);
// Absolute irreducibility: the generated matrix algebra is all of M_n.
bool is_absolutely_simple(const std::map<std::string, Matrix>& gens, int dim);
std::optional<Matrix> representation_iso(const std::map<std::string, Matrix>& A,
                                         const std::map<std::string, Matrix>& B, int dim);

// Evaluates a noncommutative polynomial on matrices assigned to the letters.
Matrix evaluate_poly(const Alphabet& A, const Poly& p, const std::map<std::string, Matrix>& gens, int dim);

// ---------------------------------------------------------------------------
// The two-dimensional objects transported to the graded fixtures, with the
// diagram of the associated rank-two diagonal braiding.

struct TwistRealization {
  YDModule module;
  GDD diagram;
};
// On the H side the default negates the naive cross coefficient of the
// coaction of v2 (uncorrected = true keeps it and fails the YD check).
TwistRealization twist_realization(Side s, const Params& p, bool uncorrected = false);

std::string yd_to_json(const YDModule& M);
std::string matrix_to_json(const Matrix& m);

}  // namespace hopf
