#include "hopfalg/linalg.hpp"

#include <algorithm>

namespace hopf {

SparseVec sv_unit(int i, const Scalar& s) {
  if (s.is_zero()) return {};
  return {{i, s}};
}

SparseVec sv_axpy(const SparseVec& a, const Scalar& s, const SparseVec& b) {
  if (s.is_zero() || b.empty()) return a;
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Scalar v = a[i].second + s * b[j].second;
      if (!v.is_zero()) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) { return sv_axpy(a, Scalar(1), b); }
SparseVec sv_sub(const SparseVec& a, const SparseVec& b) { return sv_axpy(a, Scalar(-1), b); }

SparseVec sv_scale(const SparseVec& a, const Scalar& s) {
  if (s.is_zero()) return {};
  SparseVec r;
  r.reserve(a.size());
  for (const auto& [i, v] : a) r.emplace_back(i, v * s);
  return r;
}

Scalar sv_get(const SparseVec& a, int i) {
  auto it = std::lower_bound(a.begin(), a.end(), i, [](const Term& t, int k) { return t.first < k; });
  if (it != a.end() && it->first == i) return it->second;
  return Scalar();
}

bool sv_equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
  return true;
}

void DenseAccum::resize(std::size_t n) {
  val_.assign(n, Scalar());
  used_.assign(n, 0);
  touched_.clear();
}

void DenseAccum::add(std::size_t i, const Scalar& s) {
  if (s.is_zero()) return;
  if (!used_[i]) {
    used_[i] = 1;
    touched_.push_back(i);
    val_[i] = s;
  } else {
    val_[i] += s;
  }
}

void DenseAccum::add_scaled(const SparseVec& v, const Scalar& s) {
  if (s.is_one()) {
    for (const auto& [i, x] : v) add(i, x);
  } else {
    for (const auto& [i, x] : v) add(i, x * s);
  }
}

SparseVec DenseAccum::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec r;
  r.reserve(touched_.size());
  for (std::size_t i : touched_) {
    if (!val_[i].is_zero()) r.emplace_back(static_cast<int>(i), std::move(val_[i]));
    val_[i] = Scalar();
    used_[i] = 0;
  }
  touched_.clear();
  return r;
}

void KeyAccum::add(uint64_t key, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = m_.try_emplace(key, s);
  if (!inserted) it->second += s;
}

std::vector<std::pair<uint64_t, Scalar>> KeyAccum::take_sorted() {
  std::vector<std::pair<uint64_t, Scalar>> r;
  r.reserve(m_.size());
  for (auto& [k, v] : m_)
    if (!v.is_zero()) r.emplace_back(k, std::move(v));
  m_.clear();
  std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return r;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      const Scalar& a = x(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j) {
        const Scalar& b = y(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(x.rows_, x.cols_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(x.rows_, x.cols_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(*this);
  for (auto& v : r.a_) v = v * s;
  return r;
}

bool operator==(const Matrix& x, const Matrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::kron(const Matrix& y) const {
  Matrix r(rows_ * y.rows_, cols_ * y.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (int k = 0; k < y.rows_; ++k)
        for (int l = 0; l < y.cols_; ++l)
          if (!y(k, l).is_zero()) r(i * y.rows_ + k, j * y.cols_ + l) = a * y(k, l);
    }
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

SparseVec Matrix::column(int j) const {
  SparseVec v;
  for (int i = 0; i < rows_; ++i)
    if (!(*this)(i, j).is_zero()) v.emplace_back(i, (*this)(i, j));
  return v;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  std::vector<Scalar> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (int j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const Matrix& m) {
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    SparseVec v;
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) v.emplace_back(j, m(i, j));
    rows.push_back(std::move(v));
  }
  return sparse_rank(rows);
}

Matrix nullspace(const Matrix& m) {
  Matrix a(m);
  std::vector<int> piv = rref(a);
  std::vector<char> is_piv(m.cols(), 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<int> free;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free.push_back(c);
  Matrix ns(m.cols(), static_cast<int>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    int f = free[k];
    ns(f, static_cast<int>(k)) = Scalar(1);
    for (std::size_t r = 0; r < piv.size(); ++r) ns(piv[r], static_cast<int>(k)) = -a(static_cast<int>(r), f);
  }
  return ns;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  Matrix a(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    a(i, m.cols()) = b[i];
  }
  std::vector<int> piv = rref(a);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a(static_cast<int>(r), m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Matrix a(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = Scalar(1);
  }
  std::vector<int> piv = rref(a);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = a(i, n + j);
  return r;
}

Scalar determinant(Matrix m) {
  int n = m.rows();
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar();
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    Scalar inv = m(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (int j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

SparseVec Echelon::reduce(SparseVec v) const {
  if (rows_.empty() || v.empty()) return v;
  std::map<int, Scalar> w;
  for (auto& [i, s] : v) w.emplace(i, std::move(s));
  auto it = w.begin();
  while (it != w.end()) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    Scalar f = it->second;
    int col = it->first;
    for (const auto& [j, s] : r->second) {
      auto [wt, ins] = w.try_emplace(j, -(f * s));
      if (!ins) {
        wt->second -= f * s;
        if (wt->second.is_zero() && j != col) w.erase(wt);
      }
    }
    w.erase(col);
    it = w.upper_bound(col);
  }
  SparseVec out;
  out.reserve(w.size());
  for (auto& [i, s] : w)
    if (!s.is_zero()) out.emplace_back(i, std::move(s));
  return out;
}

bool Echelon::add(SparseVec v) {
  SparseVec r = reduce(std::move(v));
  if (r.empty()) return false;
  Scalar inv = r.front().second.inverse();
  if (!inv.is_one())
    for (auto& t : r) t.second = t.second * inv;
  int p = r.front().first;
  rows_.emplace(p, std::move(r));
  return true;
}

void Echelon::make_reduced() {
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec& row = it->second;
    SparseVec head{row.front()};
    SparseVec tail(row.begin() + 1, row.end());
    // reduce tail against other pivots, which are all > pivot
    SparseVec red = reduce(tail);
    row = sv_add(head, red);
  }
}

int sparse_rank(const std::vector<SparseVec>& rows) {
  Echelon e;
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

}  // namespace hopf
