#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfalg/field.hpp"

namespace hopf {

// Sparse vector: entries sorted by index, no stored zeros.
using Term = std::pair<int, Scalar>;
using SparseVec = std::vector<Term>;

SparseVec sv_unit(int i, const Scalar& s = Scalar(1));
SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_sub(const SparseVec& a, const SparseVec& b);
SparseVec sv_scale(const SparseVec& a, const Scalar& s);
// a + s*b
SparseVec sv_axpy(const SparseVec& a, const Scalar& s, const SparseVec& b);
Scalar sv_get(const SparseVec& a, int i);
bool sv_equal(const SparseVec& a, const SparseVec& b);

// Dense accumulator over indices [0, n).
class DenseAccum {
 public:
  explicit DenseAccum(std::size_t n = 0) : val_(n), used_(n, 0) {}
  void resize(std::size_t n);
  void add(std::size_t i, const Scalar& s);
  void add_scaled(const SparseVec& v, const Scalar& s);
  SparseVec take();  // sorted, zeros dropped; resets
  bool empty() const { return touched_.empty(); }

 private:
  std::vector<Scalar> val_;
  std::vector<char> used_;
  std::vector<std::size_t> touched_;
};

// Hash accumulator for large keyed index spaces.
class KeyAccum {
 public:
  void add(uint64_t key, const Scalar& s);
  std::vector<std::pair<uint64_t, Scalar>> take_sorted();
  std::size_t size() const { return m_.size(); }

 private:
  std::unordered_map<uint64_t, Scalar> m_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& x, const Matrix& y);
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }
  Matrix transpose() const;
  // Kronecker product
  Matrix kron(const Matrix& y) const;
  bool is_zero() const;
  SparseVec column(int j) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m);
int rank(const Matrix& m);
// Basis of {x : m x = 0} as columns of the returned matrix (cols = nullity).
Matrix nullspace(const Matrix& m);
// Some solution of m x = b, if consistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);

// Incremental sparse row echelon basis. Pivot rows are normalized to
// leading coefficient 1 and are kept semi-reduced.
class Echelon {
 public:
  // Returns the reduced remainder of v modulo the current span.
  SparseVec reduce(SparseVec v) const;
  // Adds v to the span; returns true if it increased the rank.
  bool add(SparseVec v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }
  // Fully reduce every row against later pivots.
  void make_reduced();

 private:
  std::map<int, SparseVec> rows_;  // pivot column -> row
};

int sparse_rank(const std::vector<SparseVec>& rows);

}  // namespace hopf
