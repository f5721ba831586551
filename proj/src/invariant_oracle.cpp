#include "brauerkit/invariant_oracle.hpp"

#include <map>
#include <stdexcept>

namespace brauerkit {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Mat unit(int d, int a, int b) {
  Mat m(d, d);
  m.at(a, b) = 1;
  return m;
}

}  // namespace

std::vector<Mat> lie_basis(GroupKind g, int d) {
  std::vector<Mat> basis;
  switch (g) {
    case GroupKind::orthogonal:
      for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
          basis.push_back(unit(d, a, b) - unit(d, b, a));
      break;
    case GroupKind::symplectic: {
      if (d % 2 != 0) throw std::invalid_argument("symplectic needs even d");
      const int k = d / 2;
      for (int i = 0; i < k; ++i)
        basis.push_back(unit(d, i, i) - unit(d, k + i, k + i));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (i != j) basis.push_back(unit(d, i, j) - unit(d, k + j, k + i));
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
          basis.push_back(unit(d, i, k + j) + unit(d, j, k + i));
          basis.push_back(unit(d, k + i, j) + unit(d, k + j, i));
        }
      break;
    }
    case GroupKind::general_linear:
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) basis.push_back(unit(d, a, b));
      break;
  }
  return basis;
}

Mat orthogonal_reflection(int d) {
  Mat r = Mat::identity(d);
  r.at(0, 0) = -1;
  return r;
}

Mat rep_on_power(const Mat& x, int k) {
  const int d = x.rows();
  Mat acc(static_cast<int>(ipow(d, k)), static_cast<int>(ipow(d, k)));
  for (int pos = 0; pos < k; ++pos) {
    Mat term = Mat::identity(static_cast<int>(ipow(d, pos)));
    term = term.kron(x);
    term = term.kron(Mat::identity(static_cast<int>(ipow(d, k - 1 - pos))));
    acc = acc + term;
  }
  return acc;
}

Mat group_on_power(const Mat& g, int k) {
  Mat acc = Mat::identity(1);
  for (int i = 0; i < k; ++i) acc = acc.kron(g);
  return acc;
}

namespace {

// Off-diagonal Lie elements; the diagonal part is enforced exactly by
// the entry filter below.
std::vector<Mat> acting_elements(GroupKind g, int d) {
  std::vector<Mat> all = lie_basis(g, d), out;
  for (const Mat& x : all) {
    bool diagonal = true;
    for (int a = 0; a < d && diagonal; ++a)
      for (int b = 0; b < d && diagonal; ++b)
        if (a != b && x.at(a, b) != 0) diagonal = false;
    if (!diagonal) out.push_back(x);
  }
  return out;
}

// Keeps exactly the hom entries fixed by the full diagonal subgroup of
// G: every coordinate sign flip (orthogonal), the symplectic torus, or
// the full torus (general linear). Invariant vectors are supported on
// these entries, and the conditions are necessary, so restriction
// loses nothing.
bool entry_kept(GroupKind g, int d, const std::vector<int>& target_idx,
                const std::vector<int>& domain_idx) {
  std::vector<int> tc(d, 0), dc(d, 0);
  for (int v : target_idx) ++tc[v];
  for (int v : domain_idx) ++dc[v];
  switch (g) {
    case GroupKind::orthogonal: {
      for (int v = 0; v < d; ++v)
        if ((tc[v] + dc[v]) % 2 != 0) return false;
      return true;
    }
    case GroupKind::symplectic: {
      const int k = d / 2;
      for (int i = 0; i < k; ++i)
        if (tc[i] - tc[k + i] != dc[i] - dc[k + i]) return false;
      return true;
    }
    case GroupKind::general_linear: {
      for (int v = 0; v < d; ++v)
        if (tc[v] != dc[v]) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

int invariant_dimension(GroupKind g, int d, int m, int n) {
  if (d < 1 || d > 4 || m < 0 || n < 0 || m + n > 8)
    throw std::invalid_argument("invariant oracle: out of budget");
  if (g == GroupKind::symplectic && d % 2 != 0)
    throw std::invalid_argument("symplectic needs even d");

  const long long dm = ipow(d, m), dn = ipow(d, n);
  const long long total = dm * dn;

  // Entry id: target digits (most significant first), then domain digits.
  auto entry_digits = [&](long long e) {
    std::vector<int> tgt(n), dom(m);
    long long x = e;
    for (int i = m - 1; i >= 0; --i) {
      dom[i] = static_cast<int>(x % d);
      x /= d;
    }
    for (int i = n - 1; i >= 0; --i) {
      tgt[i] = static_cast<int>(x % d);
      x /= d;
    }
    return std::make_pair(tgt, dom);
  };
  auto entry_id = [&](const std::vector<int>& tgt, const std::vector<int>& dom) {
    long long x = 0;
    for (int v : tgt) x = x * d + v;
    for (int v : dom) x = x * d + v;
    return x;
  };

  std::vector<long long> kept;
  std::vector<int> col_of(total, -1);
  for (long long e = 0; e < total; ++e) {
    auto [tgt, dom] = entry_digits(e);
    if (entry_kept(g, d, tgt, dom)) {
      col_of[e] = static_cast<int>(kept.size());
      kept.push_back(e);
    }
  }
  const int cols = static_cast<int>(kept.size());
  if (cols == 0) return 0;

  EchelonBasis rows(cols);
  for (const Mat& x : acting_elements(g, d)) {
    // One condition per affected row entry: the coefficient sum over
    // kept columns of (rho_n(x) M - M rho_m(x)) at that entry is zero.
    std::map<long long, std::map<int, Rat>> conditions;
    for (int c = 0; c < cols; ++c) {
      auto [tgt, dom] = entry_digits(kept[c]);
      for (int pos = 0; pos < n; ++pos) {
        int old = tgt[pos];
        for (int a = 0; a < d; ++a) {
          if (x.at(a, old) == 0) continue;
          std::vector<int> t2 = tgt;
          t2[pos] = a;
          conditions[entry_id(t2, dom)][c] += x.at(a, old);
        }
      }
      for (int pos = 0; pos < m; ++pos) {
        int old = dom[pos];
        for (int b = 0; b < d; ++b) {
          if (x.at(old, b) == 0) continue;
          std::vector<int> d2 = dom;
          d2[pos] = b;
          conditions[entry_id(tgt, d2)][c] -= x.at(old, b);
        }
      }
    }
    for (const auto& [row_entry, coeffs] : conditions) {
      (void)row_entry;
      Vec row(cols, Rat(0));
      for (const auto& [c, val] : coeffs) row[c] = val;
      rows.insert(std::move(row));
    }
  }
  return cols - rows.dim();
}

}  // namespace brauerkit
