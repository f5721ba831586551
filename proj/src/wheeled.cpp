#include "brauerkit/wheeled.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauerkit {

namespace {

std::string word_str(const Palette& pal, const ColourList& w) {
  std::string out = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += pal.name(w[i]);
  }
  return out + "]";
}

// Contracts the listed position pairs one at a time, reindexing the
// pairs still pending as slots disappear. Pairs must be disjoint and
// each legal for the palette.
std::pair<ColourList, Mat> contract_pairs(const CircuitAlgebraOracle& A,
                                          ColourList w,
                                          std::vector<std::pair<int, int>> pairs) {
  Mat total = Mat::identity(A.dim(w));
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    if (i > j) std::swap(i, j);
    total = A.contract(w, i, j) * total;
    w = word_remove2(w, i, j);
    for (auto& pr : pairs) {
      pr.first -= (pr.first > i) + (pr.first > j);
      pr.second -= (pr.second > i) + (pr.second > j);
    }
  }
  return {std::move(w), std::move(total)};
}

// Permutation moving slot a of 0..n-1 to the back, keeping the rest in
// relative order.
std::vector<int> to_back(int n, int a) {
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k < a ? k : (k == a ? n - 1 : k - 1);
  return img;
}

}  // namespace

WheeledPropView ca_to_wheeled_prop(const CircuitAlgebraOracle& A) {
  if (A.palette.size() != 2 || A.palette.omega(0) != 1)
    throw std::invalid_argument(
        "wheeled view needs the two-colour oriented palette");
  if (!A.act)
    throw std::invalid_argument("wheeled view needs the permutation action");
  return WheeledPropView{A, 0, 1, std::make_shared<WpCache>()};
}

ColourList wp_word(const WheeledPropView& P, int m, int n) {
  ColourList w(m, P.up);
  w.insert(w.end(), n, P.dn);
  return w;
}

int wp_dim(const WheeledPropView& P, int m, int n) {
  return P.A.dim(wp_word(P, m, n));
}

Mat wp_identity(const WheeledPropView& P, int n) {
  if (P.cache)
    if (auto it = P.cache->identity.find(n); it != P.cache->identity.end())
      return it->second;
  Mat e = P.A.unit;
  ColourList acc;
  const ColourList pair = {P.up, P.dn};
  for (int k = 0; k < n; ++k) {
    e = P.A.prod(acc, pair) * e.kron(P.A.eps(P.up));
    acc = word_concat(acc, pair);
  }
  if (n > 0) {
    std::vector<int> img(2 * n);
    for (int k = 0; k < n; ++k) {
      img[2 * k] = k;
      img[2 * k + 1] = n + k;
    }
    e = P.A.act(acc, Permutation(img)) * e;
  }
  if (P.cache) P.cache->identity.emplace(n, e);
  return e;
}

Mat wp_symmetry(const WheeledPropView& P) {
  std::vector<int> swap01 = {1, 0, 2, 3};
  return P.A.act(wp_word(P, 2, 2), Permutation(swap01)) * wp_identity(P, 2);
}

Mat wp_compose(const WheeledPropView& P, int m, int n, int p) {
  const auto key = std::make_tuple(m, n, p);
  if (P.cache)
    if (auto it = P.cache->compose.find(key); it != P.cache->compose.end())
      return it->second;
  const ColourList w1 = wp_word(P, m, n);
  const ColourList w2 = wp_word(P, n, p);
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < n; ++k) pairs.emplace_back(m + k, m + n + k);
  auto [w, cmat] = contract_pairs(P.A, word_concat(w1, w2), std::move(pairs));
  Mat out = cmat * P.A.prod(w1, w2);
  if (P.cache) P.cache->compose.emplace(key, out);
  return out;
}

Mat wp_horizontal(const WheeledPropView& P, int m, int n, int p, int q) {
  const auto key = std::make_tuple(m, n, p, q);
  if (P.cache)
    if (auto it = P.cache->horizontal.find(key); it != P.cache->horizontal.end())
      return it->second;
  const ColourList w1 = wp_word(P, m, n);
  const ColourList w2 = wp_word(P, p, q);
  const ColourList u = word_concat(w1, w2);
  auto [sorted, shuffle] = walled_normal_form(u);
  Mat out = P.A.act(u, shuffle) * P.A.prod(w1, w2);
  if (P.cache) P.cache->horizontal.emplace(key, out);
  return out;
}

Mat wp_trace(const WheeledPropView& P, int m, int n, int b) {
  const auto key = std::make_tuple(m, n, b);
  if (P.cache)
    if (auto it = P.cache->trace.find(key); it != P.cache->trace.end())
      return it->second;
  const ColourList w = wp_word(P, m + b, n + b);
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < b; ++k) pairs.emplace_back(m + k, (m + b) + n + k);
  auto [rest, cmat] = contract_pairs(P.A, w, std::move(pairs));
  if (P.cache) P.cache->trace.emplace(key, cmat);
  return cmat;
}

Mat wp_act(const WheeledPropView& P, int m, int n, const Permutation& rows,
           const Permutation& cols) {
  if (rows.size() != m || cols.size() != n)
    throw std::invalid_argument("bimodule action has the wrong shape");
  std::vector<int> img(m + n);
  for (int k = 0; k < m; ++k) img[k] = rows(k);
  for (int t = 0; t < n; ++t) img[m + t] = m + cols(t);
  return P.A.act(wp_word(P, m, n), Permutation(img));
}

CaReport check_wheeled_axioms(const WheeledPropView& P, int max_total) {
  CaReport rep;
  const auto label = [](const std::string& what, int a, int b, int c, int d) {
    return what + " at (" + std::to_string(a) + "," + std::to_string(b) +
           "," + std::to_string(c) + "," + std::to_string(d) + ")";
  };

  // Vanishing: the empty trace is the identity and traces stack.
  for (int m = 0; m <= max_total; ++m)
    for (int n = 0; m + n <= max_total; ++n) {
      if (wp_trace(P, m, n, 0) != Mat::identity(wp_dim(P, m, n))) {
        rep.fail(label("(v) empty trace differs from the identity", m, n, 0, 0));
        return rep;
      }
      ++rep.checked;
      for (int b1 = 0; m + n + 2 * b1 <= max_total - 2; ++b1)
        for (int b2 = b1 == 0 ? 1 : 0; (m + b1 + b2) + (n + b1 + b2) <= max_total;
             ++b2) {
          const Mat joint = wp_trace(P, m, n, b1 + b2);
          const Mat step = wp_trace(P, m, n, b1) * wp_trace(P, m + b1, n + b1, b2);
          if (joint != step) {
            rep.fail(label("(v) iterated trace differs", m, n, b1, b2));
            return rep;
          }
          ++rep.checked;
        }
    }

  // Superposing: tracing the trailing factor commutes with the
  // horizontal product, and tracing the leading factor does after the
  // block shuffle that moves its traced legs to the back.
  for (int m = 0; m <= max_total; ++m)
    for (int n = 0; m + n <= max_total; ++n)
      for (int p = 0; m + n + p <= max_total; ++p)
        for (int q = 0; m + n + p + q <= max_total; ++q)
          for (int b = 1; (m + p + b) + (n + q + b) <= max_total; ++b) {
            const int df = wp_dim(P, m, n);
            const Mat lhs_g = wp_trace(P, m + p, n + q, b) *
                              wp_horizontal(P, m, n, p + b, q + b);
            const Mat rhs_g = wp_horizontal(P, m, n, p, q) *
                              Mat::identity(df).kron(wp_trace(P, p, q, b));
            if (lhs_g != rhs_g) {
              rep.fail(label("(s) trailing-factor trace fails", m, n, p, q));
              return rep;
            }
            ++rep.checked;

            std::vector<int> rr(m + b + p), cc(n + b + q);
            for (int k = 0; k < m; ++k) rr[k] = k;
            for (int t = 0; t < b; ++t) rr[m + t] = m + p + t;
            for (int k = 0; k < p; ++k) rr[m + b + k] = m + k;
            for (int k = 0; k < n; ++k) cc[k] = k;
            for (int t = 0; t < b; ++t) cc[n + t] = n + q + t;
            for (int k = 0; k < q; ++k) cc[n + b + k] = n + k;
            const Mat lhs_f = wp_trace(P, m + p, n + q, b) *
                              wp_act(P, m + b + p, n + b + q, Permutation(rr),
                                     Permutation(cc)) *
                              wp_horizontal(P, m + b, n + b, p, q);
            const Mat rhs_f =
                wp_horizontal(P, m, n, p, q) *
                wp_trace(P, m, n, b).kron(Mat::identity(wp_dim(P, p, q)));
            if (lhs_f != rhs_f) {
              rep.fail(label("(s) leading-factor trace fails", m, n, p, q));
              return rep;
            }
            ++rep.checked;
          }

  // Yanking: the traced symmetry is the identity strand.
  if (max_total >= 4) {
    if (wp_trace(P, 1, 1, 1) * wp_symmetry(P) != wp_identity(P, 1)) {
      rep.fail("(y) traced symmetry differs from the identity");
      return rep;
    }
    ++rep.checked;
  }

  // Category laws of the vertical composition. Each side runs when its
  // junction word stays within twice the budget.
  for (int m = 0; m <= max_total; ++m)
    for (int n = 0; m + n <= max_total; ++n) {
      const Mat id_mn = Mat::identity(wp_dim(P, m, n));
      if (3 * m + n <= 2 * max_total) {
        const Mat left = wp_compose(P, m, m, n) *
                         wp_identity(P, m).kron(id_mn);
        if (left != id_mn) {
          rep.fail(label("(c) left identity law fails", m, n, 0, 0));
          return rep;
        }
        ++rep.checked;
      }
      if (m + 3 * n <= 2 * max_total) {
        const Mat right = wp_compose(P, m, n, n) *
                          id_mn.kron(wp_identity(P, n));
        if (right != id_mn) {
          rep.fail(label("(c) right identity law fails", m, n, 0, 0));
          return rep;
        }
        ++rep.checked;
      }
    }
  for (int m = 0; m <= max_total; ++m)
    for (int n = 0; m + n <= max_total; ++n)
      for (int p = 0; m + n + p <= max_total; ++p)
        for (int q = 0; m + n + p + q <= max_total; ++q) {
          const Mat lhs = wp_compose(P, m, n, q) *
                          Mat::identity(wp_dim(P, m, n))
                              .kron(wp_compose(P, n, p, q));
          const Mat rhs = wp_compose(P, m, p, q) *
                          wp_compose(P, m, n, p)
                              .kron(Mat::identity(wp_dim(P, p, q)));
          if (lhs != rhs) {
            rep.fail(label("(c) associativity fails", m, n, p, q));
            return rep;
          }
          ++rep.checked;
        }

  return rep;
}

CircuitAlgebraOracle wheeled_prop_to_ca(const WheeledPropView& P) {
  const auto counts = [up = P.up](const ColourList& w) {
    int m = 0;
    for (int c : w)
      if (c == up) ++m;
    return std::pair<int, int>(m, static_cast<int>(w.size()) - m);
  };

  CircuitAlgebraOracle B;
  B.palette = P.A.palette;
  B.dim = [P, counts](const ColourList& w) {
    auto [m, n] = counts(w);
    return wp_dim(P, m, n);
  };
  B.prod = [P, counts](const ColourList& w1, const ColourList& w2) {
    auto [m1, n1] = counts(w1);
    auto [m2, n2] = counts(w2);
    return wp_horizontal(P, m1, n1, m2, n2);
  };
  B.unit = wp_identity(P, 0);
  B.contract = [P, counts](const ColourList& w, int i, int j) {
    auto [m, n] = counts(w);
    auto [sorted, shuffle] = walled_normal_form(w);
    int a = shuffle(i), t = shuffle(j);
    if (a > t) std::swap(a, t);
    t -= m;
    return wp_trace(P, m - 1, n - 1, 1) *
           wp_act(P, m, n, Permutation(to_back(m, a)),
                  Permutation(to_back(n, t)));
  };
  B.eps = [P](int) { return wp_identity(P, 1); };
  B.act = [P, counts](const ColourList& w, const Permutation& p) {
    auto [m, n] = counts(w);
    ColourList w2(w.size());
    for (size_t i = 0; i < w.size(); ++i) w2[p(static_cast<int>(i))] = w[i];
    auto [s1w, s1] = walled_normal_form(w);
    auto [s2w, s2] = walled_normal_form(w2);
    std::vector<int> rr(m), cc(n);
    for (size_t i = 0; i < w.size(); ++i) {
      const int from = s1(static_cast<int>(i));
      const int to = s2(p(static_cast<int>(i)));
      if (from < m)
        rr[from] = to;
      else
        cc[from - m] = to - m;
    }
    return wp_act(P, m, n, Permutation(rr), Permutation(cc));
  };
  return B;
}

CaReport check_wheeled_roundtrip(const CircuitAlgebraOracle& A, int max_total) {
  const WheeledPropView P = ca_to_wheeled_prop(A);
  const CircuitAlgebraOracle B = wheeled_prop_to_ca(P);
  const auto S = [&A](const ColourList& w) {
    auto [sorted, shuffle] = walled_normal_form(w);
    return A.act(w, shuffle);
  };
  const auto S_inv = [&A](const ColourList& w) {
    auto [sorted, shuffle] = walled_normal_form(w);
    return A.act(sorted, shuffle.inverse());
  };

  CaReport rep;
  const std::vector<ColourList> words = all_words(A.palette, max_total);

  if (B.unit != A.unit) {
    rep.fail("(rt) unit differs");
    return rep;
  }
  ++rep.checked;
  for (int c = 0; c < A.palette.size(); ++c) {
    const ColourList wc = {c, A.palette.omega(c)};
    if (B.eps(c) != S(wc) * A.eps(c)) {
      rep.fail("(rt) counit differs at colour " + A.palette.name(c));
      return rep;
    }
    ++rep.checked;
  }

  for (const ColourList& w : words) {
    if (B.dim(w) != A.dim(w)) {
      rep.fail("(rt) dimension differs at " + word_str(A.palette, w));
      return rep;
    }
    ++rep.checked;

    const int len = static_cast<int>(w.size());
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) {
        if (w[j] != A.palette.omega(w[i])) continue;
        const ColourList wr = word_remove2(w, i, j);
        if (B.contract(w, i, j) != S(wr) * A.contract(w, i, j) * S_inv(w)) {
          rep.fail("(rt) contraction differs at " + word_str(A.palette, w) +
                   " slots (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + ")");
          return rep;
        }
        ++rep.checked;
      }

    if (len <= 4) {
      std::vector<int> img(len);
      for (int i = 0; i < len; ++i) img[i] = i;
      do {
        const Permutation p(img);
        ColourList w2(len);
        for (int i = 0; i < len; ++i) w2[p(i)] = w[i];
        if (B.act(w, p) != S(w2) * A.act(w, p) * S_inv(w)) {
          rep.fail("(rt) action differs at " + word_str(A.palette, w));
          return rep;
        }
        ++rep.checked;
      } while (std::next_permutation(img.begin(), img.end()));
    }
  }

  for (const ColourList& w1 : words)
    for (const ColourList& w2 : words) {
      if (static_cast<int>(w1.size() + w2.size()) > max_total) continue;
      const ColourList u = word_concat(w1, w2);
      if (B.prod(w1, w2) != S(u) * A.prod(w1, w2) * S_inv(w1).kron(S_inv(w2))) {
        rep.fail("(rt) product differs at " + word_str(A.palette, w1) + " " +
                 word_str(A.palette, w2));
        return rep;
      }
      ++rep.checked;
    }

  return rep;
}

}  // namespace brauerkit
