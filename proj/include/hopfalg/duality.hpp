#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfalg/hopf.hpp"
#include "hopfalg/presentations.hpp"

namespace hopf {

// Value of a polynomial on elements of B assigned to the letters. Composite
// letters of the fixture are expanded through their definitions.
SparseVec evaluate_in(const HopfAlgebra& B, const Fixture& f, const Poly& p,
                      const std::map<std::string, SparseVec>& images);
// Algebra map out of the realization A of f: column i is the image of the
// basis word labelled A.labels()[i].
Matrix map_from_letter_images(const Fixture& f, const HopfAlgebra& A, const HopfAlgebra& B,
                              const std::map<std::string, SparseVec>& images);

// Coordinates in dual(A) of the basis dual to the basis given by the words.
std::vector<SparseVec> dual_basis(const HopfAlgebra& A, const RewritingSystem& sys,
                                  const std::vector<std::string>& words);

struct DualityMap {
  HopfAlgebra source, target;
  std::map<std::string, SparseVec> images;  // letter -> target element
  Matrix map;
};
// psi : A -> H*, g, h, x -> g~, h~, sqrt(1 - xi^2) x~. x_scale multiplies psi(x).
DualityMap psi_map(const Scalar& x_scale = Scalar(1));
// phi : A1 -> C*, with theta = xi in the image of x.
DualityMap phi_map(const Scalar& x_scale = Scalar(1));

struct DoubleCheck {
  HopfAlgebra presented;  // realization of the fixture "D"
  HopfAlgebra computed;   // drinfeld_double(H^cop)
  std::vector<std::pair<std::string, bool>> relations;  // presentation relations evaluated in `computed`
  MorphismReport iso;     // presented -> computed along the generators
  bool relations_hold() const;
};
DoubleCheck check_double();

}  // namespace hopf
