#pragma once

// Exact dense linear algebra over Rat: rank, nullspace, linear solve, and
// incremental reduced-echelon span closure. Row-major storage.

#include <optional>
#include <vector>

#include "brauerkit/scalar.hpp"

namespace brauerkit {

using Vec = std::vector<Rat>;

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  // 1x1 matrix holding a scalar.
  static Mat scalar(const Rat& x);
  static Mat from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rat& x) const;
  // Kronecker product; block (i,j) of the result is at(i,j) * o.
  Mat kron(const Mat& o) const;
  Mat transposed() const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;

  Vec apply(const Vec& v) const;          // matrix * column vector
  Vec row(int r) const;
  Vec flatten_column_major() const;       // column index varies slowest

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

int rank(const Mat& m);

// Basis of {x : Mx = 0}, in reduced canonical form (one vector per free
// column, unit coordinate at that column). rank + returned.size() = cols.
std::vector<Vec> nullspace(const Mat& m);

// One solution of Mx = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Reduced row-echelon basis of a subspace, maintained incrementally.
// Canonical: rows sorted by pivot column, pivots are 1, pivot columns are
// cleared in all other rows. Two equal subspaces produce identical bases.
class EchelonBasis {
 public:
  explicit EchelonBasis(int ambient_dim) : ambient_(ambient_dim) {}

  // Reduces v against the basis; inserts the remainder if nonzero.
  // Returns true when the span strictly grew.
  bool insert(Vec v);
  bool contains(Vec v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }
  bool operator==(const EchelonBasis& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }

 private:
  void reduce(Vec& v) const;
  int ambient_;
  std::vector<Vec> rows_;      // sorted by pivot column
  std::vector<int> pivots_;    // pivot column of each row
};

// Augments `basis` with `new_vectors`; reports whether the span grew.
bool span_closure(EchelonBasis& basis, const std::vector<Vec>& new_vectors);

}  // namespace brauerkit
