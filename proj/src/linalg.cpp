#include "brauerkit/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace brauerkit {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::scalar(const Rat& x) {
  Mat m(1, 1);
  m.at(0, 0) = x;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    assert(rows[r].size() == rows[0].size());
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols_ == o.rows_);
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::scaled(const Rat& x) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * x;
  return r;
}

Mat Mat::kron(const Mat& o) const {
  Mat r(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Rat& x = at(i, j);
      if (x == 0) continue;
      for (int p = 0; p < o.rows_; ++p)
        for (int q = 0; q < o.cols_; ++q)
          r.at(i * o.rows_ + p, j * o.cols_ + q) = x * o.at(p, q);
    }
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

Vec Mat::apply(const Vec& v) const {
  assert(static_cast<int>(v.size()) == cols_);
  Vec r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

Vec Mat::row(int r) const {
  Vec out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

Vec Mat::flatten_column_major() const {
  Vec out;
  out.reserve(a_.size());
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

namespace {

// Gaussian elimination to reduced form in place. Returns pivot columns.
std::vector<int> rref(std::vector<Vec>& rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    Rat inv = Rat(1) / rows[r][c];
    for (int j = c; j < cols; ++j) rows[r][j] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

}  // namespace

int rank(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return static_cast<int>(rref(rows, m.cols()).size());
}

std::vector<Vec> nullspace(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  std::vector<int> pivots = rref(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  assert(static_cast<int>(b.size()) == m.rows());
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Vec r = m.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  std::vector<int> pivots = rref(rows, m.cols() + 1);
  Vec x(m.cols(), Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;  // row (0 ... 0 | 1)
    x[pivots[i]] = rows[i][m.cols()];
  }
  return x;
}

void EchelonBasis::reduce(Vec& v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v[pivots_[i]];
    if (c == 0) continue;
    Rat f = c;
    for (int j = pivots_[i]; j < ambient_; ++j) v[j] -= f * rows_[i][j];
  }
}

bool EchelonBasis::insert(Vec v) {
  assert(static_cast<int>(v.size()) == ambient_);
  reduce(v);
  int p = -1;
  for (int j = 0; j < ambient_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Rat inv = Rat(1) / v[p];
  for (int j = p; j < ambient_; ++j) v[j] *= inv;
  // Clear the new pivot column in existing rows, keep reduced form.
  for (size_t i = 0; i < rows_.size(); ++i) {
    Rat f = rows_[i][p];
    if (f == 0) continue;
    for (int j = p; j < ambient_; ++j) rows_[i][j] -= f * v[j];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  size_t idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool EchelonBasis::contains(Vec v) const {
  assert(static_cast<int>(v.size()) == ambient_);
  reduce(v);
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

bool span_closure(EchelonBasis& basis, const std::vector<Vec>& new_vectors) {
  bool grew = false;
  for (const Vec& v : new_vectors)
    if (basis.insert(v)) grew = true;
  return grew;
}

}  // namespace brauerkit
