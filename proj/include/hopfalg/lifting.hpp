#pragma once

#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "hopfalg/hopf.hpp"
#include "hopfalg/nichols.hpp"
#include "hopfalg/presentations.hpp"
#include "hopfalg/roots.hpp"
#include "hopfalg/yd.hpp"

namespace hopf {

// B(V) realized on the normal words of the rewriting system of its relations.
struct NicholsAlgebra {
  YDModule module;
  BraidedSpace space;
  RewritingSystem system;
  std::vector<Word> basis;
  std::vector<std::vector<int>> spelled;  // basis words as letters of V
  std::unordered_map<Word, int, WordHash> index;

  int dim() const { return static_cast<int>(basis.size()); }
  // Image of a homogeneous tensor of the given degree.
  SparseVec project(int degree, const SparseVec& t) const;
  SparseVec mul(int u, int w) const;
};
NicholsAlgebra nichols_algebra(const YDModule& M, const std::vector<std::string>& letters,
                               const std::vector<Tensor>& relations);
// Catalog object with the relations of its class (two-dimensional) or e^2 = 0 (one-dimensional).
NicholsAlgebra nichols_algebra(Side s, const Params& p, int dimension = 2);

// B(V) # H over the host of the module. Labels are "word*hostword".
HopfAlgebra smash_product(const NicholsAlgebra& R);
// Columns of the inclusion H -> R # H and the projection R # H -> H.
Matrix smash_inclusion(const NicholsAlgebra& R);
Matrix smash_projection(const NicholsAlgebra& R);

// ---------------------------------------------------------------------------
// T(V) # H in low degree.

struct SmashKey {
  int degree = 0;
  int index = 0;  // tensor basis index
  int h = 0;      // host basis index
  auto operator<=>(const SmashKey&) const = default;
};
using SmashElement = std::map<SmashKey, Scalar>;
using SmashTensor = std::map<std::pair<SmashKey, SmashKey>, Scalar>;

SmashElement smash_element(const Tensor& t, const SparseVec& h);
SmashTensor smash_tensor(const Tensor& t1, const SparseVec& h1, const Tensor& t2, const SparseVec& h2,
                         const Scalar& c = Scalar(1));
void smash_add(SmashTensor& x, const SmashTensor& y, const Scalar& c = Scalar(1));
// Coaction on a homogeneous tensor: (host index, tensor index) -> coefficient.
std::map<std::pair<int, int>, Scalar> tensor_coaction(const YDModule& M, int degree, const SparseVec& t);
SmashTensor graded_smash_coproduct(const YDModule& M, const BraidedSpace& V, const SmashElement& x);
std::string format_smash(const YDModule& M, const BraidedSpace& V, const SmashTensor& x);

// ---------------------------------------------------------------------------
// Liftings.

enum class Family { C, B };
std::string family_name(Family f);
Family parse_family(const std::string& name);
Side family_side(Family f);
// The four parameters of each family (classes L1* and T1*).
std::vector<Params> lifting_parameters(Family f);

struct Lifting {
  Family family;
  Params params;
  Scalar mu;
  Fixture fixture;
  HopfAlgebra algebra;
  std::vector<Poly> checked_relations;  // relations examined by verify_lifting
};
// z_shift adds a constant to the right-hand side -2 mu xi^m (...) of the Z
// relation in checked_relations only; the algebra is built from the
// unperturbed presentation (fault injection for verify_lifting).
Lifting build_lifting(Family f, const Params& p, const Scalar& mu, const Scalar& z_shift = Scalar(0));

struct LiftingCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct LiftingReport {
  std::vector<LiftingCheck> checks;
  bool ok() const;
  std::string to_json() const;
};
LiftingReport verify_lifting(const Lifting& L);

// Matrix of the algebra map sending the lifting generators to the
// corresponding generators of B(V) # H (columns indexed by the lifting basis).
Matrix generator_matching(const Lifting& L, const NicholsAlgebra& R, const HopfAlgebra& smash);

// Delta of a relation polynomial computed from the coproducts of its letters.
Tensor2 relation_coproduct(const HopfAlgebra& A, const RewritingSystem& sys, const Poly& r);

}  // namespace hopf
