#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfalg/linalg.hpp"

namespace hopf {

// Interned scalars; structure tables store 32-bit ids instead of values.
class ScalarPool {
 public:
  ScalarPool();
  uint32_t intern(const Scalar& s);
  const Scalar& operator[](uint32_t id) const { return vals_[id]; }
  std::size_t size() const { return vals_.size(); }

 private:
  std::vector<Scalar> vals_;
  std::unordered_map<Scalar, uint32_t, ScalarHash> ids_;
};

// Rows of (a, b, scalar-id) entries in compressed storage.
class TermTable {
 public:
  struct Entry {
    int32_t a;
    int32_t b;
    uint32_t s;
  };
  struct Row {
    const Entry* first;
    const Entry* last;
    const Entry* begin() const { return first; }
    const Entry* end() const { return last; }
    std::size_t size() const { return static_cast<std::size_t>(last - first); }
    bool empty() const { return first == last; }
  };

  void reserve_rows(std::size_t n) { offs_.reserve(n + 1); }
  // Rows must be appended in order.
  void push_row(const std::vector<Entry>& entries);
  Row row(std::size_t r) const { return {entries_.data() + offs_[r], entries_.data() + offs_[r + 1]}; }
  std::size_t rows() const { return offs_.size() - 1; }
  std::size_t total_entries() const { return entries_.size(); }
  // Replace a single row (used for fault injection).
  void replace_row(std::size_t r, const std::vector<Entry>& entries);

 private:
  std::vector<std::size_t> offs_{0};
  std::vector<Entry> entries_;
};

// Element of A (x) A, keyed by i*dim + j.
using Tensor2 = std::vector<std::pair<uint64_t, Scalar>>;

struct CoproductTerm {
  Scalar coef;
  int left;
  int right;
};

class HopfAlgebra {
 public:
  using MultFn = std::function<SparseVec(int, int)>;
  using ComultFn = std::function<std::vector<CoproductTerm>(int)>;

  HopfAlgebra() = default;
  // Builds tables from callbacks over basis indices.
  HopfAlgebra(std::string name, std::vector<std::string> labels, const MultFn& mult, SparseVec unit,
              const ComultFn& comult, std::vector<Scalar> counit);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 if absent
  const ScalarPool& pool() const { return *pool_; }

  // Products and coproducts.
  SparseVec mult_basis(int i, int j) const;
  SparseVec mul(const SparseVec& x, const SparseVec& y) const;
  // x * e_j and e_i * y
  SparseVec mul_right_basis(const SparseVec& x, int j) const;
  const SparseVec& unit() const { return unit_; }
  std::vector<CoproductTerm> comult_basis(int i) const;
  Tensor2 comult(const SparseVec& x) const;
  const std::vector<Scalar>& counit_vec() const { return counit_; }
  Scalar counit(const SparseVec& x) const;
  Tensor2 tensor_mul(const Tensor2& x, const Tensor2& y) const;
  TermTable::Row mult_row(int i, int j) const { return mult_.row(static_cast<std::size_t>(i) * dim() + j); }
  TermTable::Row comult_row(int i) const { return comult_.row(i); }
  const Scalar& scalar(uint32_t id) const { return (*pool_)[id]; }

  // Antipode as sparse columns S(e_i).
  bool has_antipode() const { return !antipode_.empty(); }
  const std::vector<SparseVec>& antipode_cols() const { return antipode_; }
  SparseVec antipode(const SparseVec& x) const;
  void set_antipode(std::vector<SparseVec> cols) { antipode_ = std::move(cols); }
  Matrix antipode_matrix() const;

  // Algebra generators (as vectors). Enables the reduced axiom checks.
  const std::vector<SparseVec>& generators() const { return generators_; }
  void set_generators(std::vector<SparseVec> g) { generators_ = std::move(g); }

  // Fault injection for tests: overwrite one product.
  void perturb_mult(int i, int j, const SparseVec& v);

  // Element helpers.
  SparseVec basis(int i) const { return sv_unit(i); }
  SparseVec elem(const std::string& label) const;
  std::string format(const SparseVec& x) const;
  std::string format(const Tensor2& x) const;
  SparseVec power(const SparseVec& x, int n) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::shared_ptr<ScalarPool> pool_;
  TermTable mult_;
  SparseVec unit_;
  TermTable comult_;
  std::vector<Scalar> counit_;
  std::vector<SparseVec> antipode_;
  std::vector<SparseVec> generators_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

struct AxiomReport {
  struct Item {
    std::string axiom;
    bool pass = true;
    std::string witness;
  };
  std::vector<Item> items;
  bool reduced = false;  // generator-based checks were used
  bool ok() const;
  std::string summary() const;
};

struct VerifyOptions {
  // Use the generator-reduced checks when generators are known and dim exceeds this.
  int full_check_max_dim = 48;
};

AxiomReport verify_axioms(const HopfAlgebra& A, const VerifyOptions& opt = {});

// Subalgebra generated by the given vectors (echelon basis, as rows).
std::vector<SparseVec> generated_subalgebra(const HopfAlgebra& A, const std::vector<SparseVec>& gens);
// Greedy search for a small generating set among basis elements.
std::vector<SparseVec> find_generators(const HopfAlgebra& A);

HopfAlgebra dual(const HopfAlgebra& A);
HopfAlgebra twist(const HopfAlgebra& A, bool op, bool cop);
HopfAlgebra tensor_hopf(const HopfAlgebra& A, const HopfAlgebra& B);
// D(A) on dual(A) (x) A.
HopfAlgebra drinfeld_double(const HopfAlgebra& A);
// D(A) on B (x) A where B is identified with A* through pairing(b, a).
HopfAlgebra drinfeld_double_paired(const HopfAlgebra& B, const HopfAlgebra& A, const Matrix& pairing);
HopfAlgebra group_algebra_cyclic(int n, const std::string& gen = "g");

struct GrouplikeResult {
  std::vector<SparseVec> elements;
  int bound = 0;        // number of characters of the dual, an upper bound
  bool complete = false;
};
GrouplikeResult grouplikes(const HopfAlgebra& A);
// Basis of {x : Delta(x) = x (x) g + h (x) x}.
std::vector<SparseVec> skew_primitives(const HopfAlgebra& A, const SparseVec& g, const SparseVec& h);
bool is_grouplike(const HopfAlgebra& A, const SparseVec& x);

struct MorphismReport {
  bool unit = false, mult = false, counit = false, comult = false;
  int rank = 0;
  bool bijective = false;
  std::string witness;
  bool hopf() const { return unit && mult && counit && comult; }
};
// f is a dim(B) x dim(A) matrix, column i = image of e_i.
MorphismReport check_morphism(const Matrix& f, const HopfAlgebra& A, const HopfAlgebra& B);
// Extends generator images multiplicatively along words; see presentations.
Matrix linear_map_from_columns(const std::vector<SparseVec>& cols, int target_dim);

// Convolution inverse of the identity; nullopt if it does not exist.
std::optional<std::vector<SparseVec>> convolution_antipode(const HopfAlgebra& A);
// Antipode determined by the anti-multiplicativity along a factorization
// certificate: each basis element b equals e_l * e_r (single term, coefficient
// one) with l, r earlier in `order`. Values on `seeds` are given.
std::vector<SparseVec> antipode_from_factorization(const HopfAlgebra& A,
                                                   const std::vector<std::tuple<int, int, int>>& factors,
                                                   const std::vector<std::pair<int, SparseVec>>& seeds);
// Checks m(S (x) id) Delta = unit counit = m(id (x) S) Delta on all basis elements.
bool check_antipode(const HopfAlgebra& A, const std::vector<SparseVec>& S, std::string* witness = nullptr);

// JSON (de)serialization.
std::string to_json(const HopfAlgebra& A);
HopfAlgebra from_json(const std::string& text);

}  // namespace hopf
