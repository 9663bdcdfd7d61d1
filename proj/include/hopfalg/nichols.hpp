#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfalg/linalg.hpp"
#include "hopfalg/presentations.hpp"
#include "hopfalg/roots.hpp"

namespace hopf {

struct YDModule;

// c(e_x (x) e_y) = sum_{p,q} c(p*dim+q, x*dim+y) e_p (x) e_q.
struct BraidedSpace {
  int dim = 0;
  Matrix c;
  std::vector<std::string> letters;  // names of the basis vectors
};
BraidedSpace braided_space(const YDModule& M, std::vector<std::string> letters = {});
bool braid_equation_holds(const BraidedSpace& V);

// Homogeneous element of T^n(V); basis index sum_s x_s dim^(n-1-s).
struct Tensor {
  int degree = 0;
  SparseVec v;
  bool is_zero() const { return v.empty(); }
};
Tensor tensor_parse(const BraidedSpace& V, const std::string& text);
std::string tensor_format(const BraidedSpace& V, const Tensor& t);
Tensor tensor_word(const BraidedSpace& V, const std::vector<int>& letters, const Scalar& c = Scalar(1));
bool tensor_equal(const Tensor& a, const Tensor& b);

// c acting in slots i, i+1 (1-based) of V^(x)n.
SparseVec apply_c(const BraidedSpace& V, int n, int i, const SparseVec& t);
Matrix elementary_braiding(const BraidedSpace& V, int n, int i);
// T_n = id + c_1 + c_1 c_2 + ... + c_1...c_{n-1}, the (1, n-1) component of the coproduct.
SparseVec apply_T(const BraidedSpace& V, int n, const SparseVec& t);
// T'_n = id + c_1 + c_2 c_1 + ... + c_{n-1}...c_1, so that S_n = T'_n (id (x) S_{n-1}).
SparseVec apply_T_prime(const BraidedSpace& V, int n, const SparseVec& t);
SparseVec apply_symmetrizer(const BraidedSpace& V, int n, const SparseVec& t);
Matrix symmetrizer(const BraidedSpace& V, int n);             // recursive
Matrix symmetrizer_bruteforce(const BraidedSpace& V, int n);  // sum of Matsumoto lifts

struct HilbertResult {
  std::vector<int> ranks;  // ranks[n] = dim of the degree-n component
  bool finite = false;     // a zero rank was reached
  int total = 0;           // partial sum (the dimension when finite)
};
// Ranks of the quantum symmetrizers up to degree cap, stopping at the first zero.
HilbertResult hilbert_function(const BraidedSpace& V, int cap = 12,
                               const std::function<void(int, int)>& progress = {});

// Delta^{k,n-k}(t) as an element of V^(x)n (first k letters on the left).
Tensor coproduct_component(const BraidedSpace& V, int k, const Tensor& t);
// (f_i (x) id) Delta^{1,n-1}, i is 1-based.
Tensor skew_derive(const BraidedSpace& V, int i, const Tensor& t);
bool in_ideal(const BraidedSpace& V, const Tensor& t);
bool in_symmetrizer_kernel(const BraidedSpace& V, const Tensor& t);
bool primitive_in_T(const BraidedSpace& V, const Tensor& t);

// Dimension of T(V)/(relations) counted as irreducible words of the completed
// rewriting system; two-dimensional spaces use the alphabet {v2, v12, v1}
// with v12 = v1 v2. nullopt if the count exceeds max_count.
std::optional<int> nichols_dim_by_relations(const BraidedSpace& V, const std::vector<Tensor>& relations,
                                            std::size_t max_count = 20000);
// Rewriting system used by nichols_dim_by_relations.
RewritingSystem nichols_rewriting(const BraidedSpace& V, const std::vector<Tensor>& relations);
// Letters of that rewriting alphabet spelled in the basis of V, and the
// rewriting letter of each basis vector.
std::vector<std::vector<int>> rewriting_spelling(const BraidedSpace& V);
std::vector<int> rewriting_letters(const BraidedSpace& V);

// Defining relations of the finite classes (letters v1, v2 on the H side and
// e1, e2 on the K side, v / e for one-dimensional objects). Empty for
// infinite classes. Two K-side relations (classes 3 and 6) carry a sign
// correction; uncorrected = true returns the uncorrected forms.
std::vector<Tensor> class_relations(Side s, const Params& p, const BraidedSpace& V, bool uncorrected = false);
std::vector<Tensor> class_relations_one_dim(Side s, const Params& p, const BraidedSpace& V);
std::vector<std::string> side_letters(Side s, int dim);

}  // namespace hopf
