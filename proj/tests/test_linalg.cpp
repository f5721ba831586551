// Exact linear algebra: hand-computed ranks and solutions, the
// rank-nullity identity, and canonicality of the echelon span.

#include "brauerkit/linalg.hpp"

#include <random>
#include <vector>

#include "doctest.h"

namespace {

using brauerkit::EchelonBasis;
using brauerkit::Mat;
using brauerkit::Rat;
using brauerkit::Vec;

Mat random_mat(std::mt19937_64& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int num = static_cast<int>(rng() % 7) - 3;
      int den = 1 + static_cast<int>(rng() % 3);
      m.at(r, c) = Rat(num) / Rat(den);
    }
  return m;
}

}  // namespace

TEST_CASE("hand rank computations") {
  CHECK(rank(Mat::identity(4)) == 4);
  CHECK(rank(Mat::zero(3, 5)) == 0);

  Mat m = Mat::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
  CHECK(rank(m) == 1);

  Mat t = Mat::from_rows({{Rat(1), Rat(0), Rat(2)},
                          {Rat(0), Rat(1), Rat(3)},
                          {Rat(1), Rat(1), Rat(5)}});
  CHECK(rank(t) == 2);
}

TEST_CASE("nullspace of a hand matrix") {
  // x + 2y = 0 has a line of solutions.
  Mat m = Mat::from_rows({{Rat(1), Rat(2)}});
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] * Rat(1) + ns[0][1] * Rat(2) == Rat(0));
  // Canonical form puts a unit at the free column.
  CHECK(ns[0][1] == Rat(1));
}

TEST_CASE("solve on consistent and inconsistent systems") {
  Mat m = Mat::from_rows({{Rat(2), Rat(0)}, {Rat(0), Rat(4)}});
  auto x = solve(m, {Rat(6), Rat(8)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(3));
  CHECK((*x)[1] == Rat(2));

  Mat sing = Mat::from_rows({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK(!solve(sing, {Rat(0), Rat(1)}).has_value());
  CHECK(solve(sing, {Rat(1), Rat(1)}).has_value());
}

TEST_CASE("rank plus nullity equals the column count") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    Mat m = random_mat(rng, rows, cols);
    auto ns = nullspace(m);
    CHECK(rank(m) + static_cast<int>(ns.size()) == cols);
    for (const auto& v : ns) {
      Vec image = m.apply(v);
      for (const auto& e : image) CHECK(e == Rat(0));
    }
  }
}

TEST_CASE("row rank equals column rank") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    Mat m = random_mat(rng, 2 + static_cast<int>(rng() % 5),
                       2 + static_cast<int>(rng() % 5));
    CHECK(rank(m) == rank(m.transposed()));
  }
}

TEST_CASE("solve returns an actual solution on random systems") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 5);
    int cols = 1 + static_cast<int>(rng() % 5);
    Mat m = random_mat(rng, rows, cols);
    Vec x0(cols);
    for (auto& e : x0) e = Rat(static_cast<int>(rng() % 5) - 2);
    Vec b = m.apply(x0);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("kronecker product against the block definition") {
  Mat a = Mat::from_rows({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
  Mat b = Mat::from_rows({{Rat(0), Rat(5)}, {Rat(6), Rat(7)}});
  Mat k = a.kron(b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
          CHECK(k.at(2 * i + p, 2 * j + q) == a.at(i, j) * b.at(p, q));
}

TEST_CASE("kron is compatible with matrix product") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = random_mat(rng, 2, 3), b = random_mat(rng, 3, 2);
    Mat c = random_mat(rng, 2, 2), d = random_mat(rng, 2, 3);
    CHECK(a.kron(c) * b.kron(d) == (a * b).kron(c * d));
  }
}

TEST_CASE("flatten_column_major stacks columns") {
  Mat m = Mat::from_rows({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
  Vec f = m.flatten_column_major();
  CHECK(f == Vec{Rat(1), Rat(3), Rat(2), Rat(4)});
}

TEST_CASE("echelon basis is canonical across generating sets") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 4 + static_cast<int>(rng() % 3);
    Mat gens = random_mat(rng, 3, dim);
    EchelonBasis a(dim), b(dim);
    // Same span, different generating vectors and insertion order.
    for (int r = 0; r < 3; ++r) a.insert(gens.row(r));
    for (int r = 2; r >= 0; --r) {
      Vec v = gens.row(r);
      Vec w = gens.row((r + 1) % 3);
      for (int c = 0; c < dim; ++c) v[c] = v[c] * Rat(3) + w[c];
      b.insert(v);
      b.insert(gens.row(r));
    }
    // Equal spans must produce identical reduced bases.
    CHECK(a == b);
    EchelonBasis c(dim);
    for (const auto& row : b.rows()) c.insert(row);
    // Re-inserting an echelon basis reproduces it exactly.
    CHECK(c == b);
  }
}

TEST_CASE("echelon insert reports span growth") {
  EchelonBasis basis(3);
  CHECK(basis.insert({Rat(1), Rat(1), Rat(0)}));
  CHECK(!basis.insert({Rat(2), Rat(2), Rat(0)}));
  CHECK(basis.insert({Rat(0), Rat(0), Rat(1)}));
  CHECK(basis.dim() == 2);
  CHECK(basis.contains({Rat(3), Rat(3), Rat(7)}));
  CHECK(!basis.contains({Rat(1), Rat(0), Rat(0)}));
  // Pivot entries are 1 and cleared elsewhere.
  CHECK(basis.rows()[0][0] == Rat(1));
  CHECK(basis.rows()[1][2] == Rat(1));
}

TEST_CASE("span_closure reports growth exactly when the span grows") {
  EchelonBasis basis(2);
  std::vector<Vec> gens = {{Rat(1), Rat(0)}};
  CHECK(brauerkit::span_closure(basis, gens));
  CHECK(!brauerkit::span_closure(basis, gens));
  CHECK(brauerkit::span_closure(basis, {{Rat(1), Rat(1)}}));
  CHECK(basis.dim() == 2);
}
