#include "brauerkit/tensor_eval.hpp"

#include <stdexcept>

namespace brauerkit {

namespace {

void check(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Multi-index digits of flat index x in base d, most significant first.
std::vector<int> digits(long long x, int d, int len) {
  std::vector<int> out(len);
  for (int i = len - 1; i >= 0; --i) {
    out[i] = static_cast<int>(x % d);
    x /= d;
  }
  return out;
}

long long flat(const std::vector<int>& idx, int d) {
  long long x = 0;
  for (int v : idx) x = x * d + v;
  return x;
}

}  // namespace

TensorForm TensorForm::orthogonal(int d) {
  check(d >= 1, "dimension must be positive");
  TensorForm f;
  f.d = d;
  f.kind = FormKind::symmetric;
  f.theta = Mat::identity(d);
  f.delta_claimed = Rat(d);
  return f;
}

TensorForm TensorForm::symplectic(int d) {
  check(d >= 2 && d % 2 == 0, "skew form needs even positive dimension");
  TensorForm f;
  f.d = d;
  f.kind = FormKind::skew;
  f.theta = Mat(d, d);
  const int k = d / 2;
  for (int i = 0; i < k; ++i) {
    f.theta.at(i, k + i) = 1;
    f.theta.at(k + i, i) = -1;
  }
  f.delta_claimed = rat(-d, 2);
  return f;
}

EvalFunctor::EvalFunctor(TensorForm form) : form_(std::move(form)) {
  const int d = form_.d;
  check(form_.theta.rows() == d && form_.theta.cols() == d, "theta must be d x d");
  cap_ = Mat(1, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) cap_.at(0, i * d + j) = form_.theta.at(i, j);

  // Cup entries are the unknowns of the two triangle identities
  // (cap (+) id) o (id (+) cup) = id = (id (+) cap) o (cup (+) id),
  // stacked into one linear system. Row block 1: sum_j theta[a][j] *
  // C[j][k] = delta[a][k]; block 2: sum_k C[j][k] theta[k][a] =
  // delta[j][a].
  Mat sys(2 * d * d, d * d);
  Vec rhs(2 * d * d, Rat(0));
  for (int a = 0; a < d; ++a)
    for (int k = 0; k < d; ++k) {
      int row = a * d + k;
      for (int j = 0; j < d; ++j) sys.at(row, j * d + k) = form_.theta.at(a, j);
      rhs[row] = (a == k) ? 1 : 0;
    }
  for (int j = 0; j < d; ++j)
    for (int a = 0; a < d; ++a) {
      int row = d * d + j * d + a;
      for (int k = 0; k < d; ++k) sys.at(row, j * d + k) = form_.theta.at(k, a);
      rhs[row] = (j == a) ? 1 : 0;
    }
  auto sol = solve(sys, rhs);
  check(sol.has_value(), "triangle identities are unsolvable; theta degenerate");
  cup_ = Mat(d * d, 1);
  for (int i = 0; i < d * d; ++i) cup_.at(i, 0) = (*sol)[i];

  loop_ = (cap_ * cup_).at(0, 0);
}

int EvalFunctor::dim(int strands) const {
  return static_cast<int>(ipow(form_.d, strands));
}

Mat EvalFunctor::permutation_matrix(const Permutation& p) const {
  Mat m = permutation_action(form_.d, p);
  if (form_.kind == FormKind::skew && p.sgn() < 0) m = m.scaled(Rat(-1));
  return m;
}

Mat permutation_action(int d, const Permutation& p) {
  const int n = p.size();
  const int N = static_cast<int>(ipow(d, n));
  Mat m(N, N);
  for (long long col = 0; col < N; ++col) {
    std::vector<int> j = digits(col, d, n);
    std::vector<int> k(n);
    for (int i = 0; i < n; ++i) k[p(i)] = j[i];
    m.at(static_cast<int>(flat(k, d)), static_cast<int>(col)) = 1;
  }
  return m;
}

Mat EvalFunctor::evaluate(const Diagram& f) const {
  const int m = f.sources(), n = f.targets();
  // Split the pairing into through strands, source caps, target cups.
  std::vector<std::pair<int, int>> through, caps, cups;
  for (const auto& [a, b] : f.pairs()) {
    if (a < m && b >= m)
      through.emplace_back(a, b - m);
    else if (b < m)
      caps.emplace_back(a, b);
    else if (a >= m)
      cups.emplace_back(a - m, b - m);
  }
  const int r = static_cast<int>(through.size());
  const int v = static_cast<int>(caps.size());
  const int u = static_cast<int>(cups.size());

  // Canonical slot order: through strands first (sorted by source),
  // then cap pairs, then cup pairs.
  std::vector<int> p_in(m), p_out(n);
  for (int k = 0; k < r; ++k) {
    p_in[through[k].first] = k;
    p_out[k] = through[k].second;
  }
  for (int j = 0; j < v; ++j) {
    p_in[caps[j].first] = r + 2 * j;
    p_in[caps[j].second] = r + 2 * j + 1;
  }
  for (int j = 0; j < u; ++j) {
    p_out[r + 2 * j] = cups[j].first;
    p_out[r + 2 * j + 1] = cups[j].second;
  }
  Permutation in_perm(p_in), out_perm(p_out);

  // The factorization must rebuild the open part exactly.
  Diagram mid = Diagram::identity(r);
  for (int j = 0; j < v; ++j) mid = oplus(mid, Diagram::cap());
  Diagram rebuilt = compose(permutation_diagram(in_perm), mid);
  Diagram ups = Diagram::identity(r);
  for (int j = 0; j < u; ++j) ups = oplus(ups, Diagram::cup());
  rebuilt = compose(rebuilt, ups);
  rebuilt = compose(rebuilt, permutation_diagram(out_perm));
  if (rebuilt != Diagram(m, n, f.pairs(), 0))
    throw std::logic_error("snake factorization failed to rebuild diagram");

  // Middle layer on the canonical slot order: caps out, cups in.
  Mat acc = Mat::identity(dim(r));
  for (int j = 0; j < v; ++j) acc = acc.kron(cap_);
  if (u > 0) {
    Mat cups_mat = Mat::identity(dim(r));
    for (int j = 0; j < u; ++j) cups_mat = cups_mat.kron(cup_);
    acc = cups_mat * acc;
  }

  // The boundary permutations reindex columns and rows; a dense product
  // with their matrices only shuffles entries.
  const int d = form_.d;
  Mat shuffled(dim(n), dim(m));
  for (long long col = 0; col < dim(m); ++col) {
    std::vector<int> j = digits(col, d, m);
    std::vector<int> k(m);
    for (int i = 0; i < m; ++i) k[in_perm(i)] = j[i];
    const int src = static_cast<int>(flat(k, d));
    for (long long row = 0; row < dim(n); ++row)
      shuffled.at(static_cast<int>(row), static_cast<int>(col)) =
          acc.at(static_cast<int>(row), src);
  }
  acc = Mat(dim(n), dim(m));
  for (long long row = 0; row < dim(n); ++row) {
    std::vector<int> j = digits(row, d, n);
    std::vector<int> k(n);
    for (int i = 0; i < n; ++i) k[out_perm(i)] = j[i];
    const int dst = static_cast<int>(flat(k, d));
    for (long long col = 0; col < dim(m); ++col)
      acc.at(dst, static_cast<int>(col)) =
          shuffled.at(static_cast<int>(row), static_cast<int>(col));
  }

  Rat scale(1);
  if (form_.kind == FormKind::skew && in_perm.sgn() * out_perm.sgn() < 0)
    scale = -scale;
  for (int i = 0; i < f.closed(); ++i) scale *= loop_;
  if (scale != Rat(1)) acc = acc.scaled(scale);
  return acc;
}

Mat EvalFunctor::evaluate(const LinComb<Diagram, Rat>& x, int m, int n) const {
  Mat acc(dim(n), dim(m));
  for (const auto& [d, c] : x.terms()) {
    check(d.sources() == m && d.targets() == n, "mixed arities in evaluation");
    acc = acc + evaluate(d).scaled(c);
  }
  return acc;
}

Rat loop_scalar(const EvalFunctor& F) { return F.loop_scalar(); }

OrientedEvalFunctor::OrientedEvalFunctor(int d)
    : d_(d), plain_(TensorForm::orthogonal(d)) {}

Mat OrientedEvalFunctor::evaluate(const ColouredDiagram& f) const {
  // V and its dual share the standard coordinates, the pairing between
  // them is the identity form, and nothing is signed; the colour layer
  // only constrains which diagrams exist.
  return plain_.evaluate(f.base);
}

}  // namespace brauerkit
