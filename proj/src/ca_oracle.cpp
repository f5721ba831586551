#include "brauerkit/ca_oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

namespace brauerkit {

ColourList word_concat(const ColourList& a, const ColourList& b) {
  ColourList w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

ColourList word_remove2(const ColourList& w, int i, int j) {
  ColourList out;
  out.reserve(w.size());
  for (int t = 0; t < static_cast<int>(w.size()); ++t)
    if (t != i && t != j) out.push_back(w[t]);
  return out;
}

namespace {

// Position of slot t after slots i and j are removed.
int drop2(int t, int i, int j) { return t - (i < t ? 1 : 0) - (j < t ? 1 : 0); }

// n -> n-2 diagram capping sources i < j, passing the rest in order.
Diagram contraction_diagram(int n, int i, int j) {
  std::vector<std::pair<int, int>> pairs{{i, j}};
  for (int k = 0; k < n; ++k)
    if (k != i && k != j) pairs.emplace_back(k, n + drop2(k, i, j));
  return Diagram(n, n - 2, std::move(pairs));
}

// Cycle sending slot i to the front.
Permutation front_cycle(int n, int i) {
  std::vector<int> images(n);
  for (int t = 0; t < n; ++t) images[t] = t < i ? t + 1 : (t == i ? 0 : t);
  return Permutation(std::move(images));
}

// Cycle sending slot i to the back.
Permutation back_cycle(int n, int i) {
  std::vector<int> images(n);
  for (int t = 0; t < n; ++t)
    images[t] = t < i ? t : (t == i ? n - 1 : t - 1);
  return Permutation(std::move(images));
}

std::string word_str(const Palette& pal, const ColourList& w) {
  if (w.empty()) return "()";
  std::string s;
  for (size_t t = 0; t < w.size(); ++t) {
    if (t) s += ".";
    s += pal.name(w[t]);
  }
  return s;
}

}  // namespace

CircuitAlgebraOracle endomorphism_ca(const EvalFunctor& F) {
  CircuitAlgebraOracle A;
  A.palette = Palette::monochrome();
  A.dim = [&F](const ColourList& w) {
    return F.dim(static_cast<int>(w.size()));
  };
  A.prod = [&F](const ColourList& w1, const ColourList& w2) {
    return Mat::identity(F.dim(static_cast<int>(w1.size() + w2.size())));
  };
  A.unit = Mat::identity(1);
  A.contract = [&F](const ColourList& w, int i, int j) {
    return F.evaluate(contraction_diagram(static_cast<int>(w.size()), i, j));
  };
  A.eps = [&F](int) { return F.cup_image(); };
  A.act = [&F](const ColourList& w, const Permutation& p) {
    (void)w;
    return F.evaluate(permutation_diagram(p));
  };
  return A;
}

CircuitAlgebraOracle oriented_endomorphism_ca(const OrientedEvalFunctor& F) {
  CircuitAlgebraOracle A;
  A.palette = Palette::oriented();
  const Palette pal = A.palette;
  auto power = [&F](int n) {
    int d = 1;
    for (int t = 0; t < n; ++t) d *= F.d();
    return d;
  };
  A.dim = [power](const ColourList& w) {
    return power(static_cast<int>(w.size()));
  };
  A.prod = [power](const ColourList& w1, const ColourList& w2) {
    return Mat::identity(power(static_cast<int>(w1.size() + w2.size())));
  };
  A.unit = Mat::identity(1);
  A.contract = [&F, pal](const ColourList& w, int i, int j) {
    const int n = static_cast<int>(w.size());
    ColourList colours(2 * n - 2);
    for (int t = 0; t < n; ++t) colours[t] = pal.omega(w[t]);
    for (int t = 0; t < n; ++t)
      if (t != i && t != j) colours[n + drop2(t, i, j)] = w[t];
    return F.evaluate(
        make_coloured(pal, contraction_diagram(n, i, j), colours, {}));
  };
  A.eps = [&F, pal](int c) { return F.evaluate(coloured_cup(pal, c)); };
  A.act = [&F, pal](const ColourList& w, const Permutation& p) {
    return F.evaluate(coloured_permutation(pal, p, w));
  };
  return A;
}

CircuitAlgebraOracle trivial_ca(const Palette& pal) {
  CircuitAlgebraOracle A;
  A.palette = pal;
  A.dim = [](const ColourList&) { return 1; };
  A.prod = [](const ColourList&, const ColourList&) {
    return Mat::identity(1);
  };
  A.unit = Mat::identity(1);
  A.contract = [](const ColourList&, int, int) { return Mat::identity(1); };
  A.eps = [](int) { return Mat::identity(1); };
  A.act = [](const ColourList&, const Permutation&) {
    return Mat::identity(1);
  };
  return A;
}

std::vector<ColourList> all_words(const Palette& pal, int max_len) {
  std::vector<ColourList> words{{}};
  size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = words.size();
    for (size_t t = begin; t < end; ++t)
      for (int c = 0; c < pal.size(); ++c) {
        ColourList w = words[t];
        w.push_back(c);
        words.push_back(std::move(w));
      }
    begin = end;
  }
  return words;
}

CaReport check_ca_axioms(const CircuitAlgebraOracle& A, int max_total) {
  CaReport rep;
  const Palette& pal = A.palette;
  const auto words = all_words(pal, max_total);
  auto legal = [&](const ColourList& w, int i, int j) {
    return w[j] == pal.omega(w[i]);
  };

  // (c1) associativity, plus unitality of the empty-word unit.
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      if (static_cast<int>(w1.size() + w2.size()) > max_total) continue;
      const int d1 = A.dim(w1);
      const ColourList w12 = word_concat(w1, w2);
      for (const auto& w3 : words) {
        if (static_cast<int>(w12.size() + w3.size()) > max_total) continue;
        const int d3 = A.dim(w3);
        const ColourList w23 = word_concat(w2, w3);
        Mat lhs = A.prod(w12, w3) * A.prod(w1, w2).kron(Mat::identity(d3));
        Mat rhs = A.prod(w1, w23) * Mat::identity(d1).kron(A.prod(w2, w3));
        ++rep.checked;
        if (!(lhs == rhs))
          rep.fail("(c1) associativity fails at " + word_str(pal, w1) + " | " +
                   word_str(pal, w2) + " | " + word_str(pal, w3));
      }
    }
  for (const auto& w : words) {
    const int dw = A.dim(w);
    Mat left = A.prod({}, w) * A.unit.kron(Mat::identity(dw));
    Mat right = A.prod(w, {}) * Mat::identity(dw).kron(A.unit);
    ++rep.checked;
    if (!(left == Mat::identity(dw)) || !(right == Mat::identity(dw)))
      rep.fail("(c1) unit fails at " + word_str(pal, w));
  }

  // (c2) disjoint contractions commute.
  for (const auto& w : words) {
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!legal(w, i, j)) continue;
        for (int k = 0; k < n; ++k)
          for (int l = k + 1; l < n; ++l) {
            if (!legal(w, k, l)) continue;
            if (k == i || k == j || l == i || l == j) continue;
            const ColourList wij = word_remove2(w, i, j);
            const ColourList wkl = word_remove2(w, k, l);
            Mat lhs = A.contract(wij, drop2(k, i, j), drop2(l, i, j)) *
                      A.contract(w, i, j);
            Mat rhs = A.contract(wkl, drop2(i, k, l), drop2(j, k, l)) *
                      A.contract(w, k, l);
            ++rep.checked;
            if (!(lhs == rhs))
              rep.fail("(c2) fails at " + word_str(pal, w) + " slots (" +
                       std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       ")/(" + std::to_string(k + 1) + "," +
                       std::to_string(l + 1) + ")");
          }
      }
  }

  // (c3) contraction commutes with the product, either factor.
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      if (static_cast<int>(w1.size() + w2.size()) > max_total) continue;
      const int n1 = static_cast<int>(w1.size());
      const int n2 = static_cast<int>(w2.size());
      const ColourList w12 = word_concat(w1, w2);
      for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) {
          if (!legal(w1, i, j)) continue;
          Mat lhs = A.contract(w12, i, j) * A.prod(w1, w2);
          Mat rhs = A.prod(word_remove2(w1, i, j), w2) *
                    A.contract(w1, i, j).kron(Mat::identity(A.dim(w2)));
          ++rep.checked;
          if (!(lhs == rhs))
            rep.fail("(c3) fails in the left factor at " + word_str(pal, w1) +
                     " | " + word_str(pal, w2));
        }
      for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j) {
          if (!legal(w2, i, j)) continue;
          Mat lhs = A.contract(w12, n1 + i, n1 + j) * A.prod(w1, w2);
          Mat rhs = A.prod(w1, word_remove2(w2, i, j)) *
                    Mat::identity(A.dim(w1)).kron(A.contract(w2, i, j));
          ++rep.checked;
          if (!(lhs == rhs))
            rep.fail("(c3) fails in the right factor at " + word_str(pal, w1) +
                     " | " + word_str(pal, w2));
        }
    }

  // (e1) eps units: contracting an eps leg against a matching slot is
  // the relabelling that cycles the slot to the front.
  for (int c = 0; c < pal.size(); ++c) {
    const ColourList wc{c, pal.omega(c)};
    const Mat eps_c = A.eps(c);
    for (const auto& w : words) {
      const int n = static_cast<int>(w.size());
      if (n + 2 > max_total || n == 0) continue;
      const ColourList cw = word_concat(wc, w);
      const Mat embed = A.prod(wc, w) * eps_c.kron(Mat::identity(A.dim(w)));
      for (int i = 0; i < n; ++i) {
        if (w[i] == c) {
          // Second eps leg against slot i.
          Mat lhs = A.contract(cw, 1, 2 + i) * embed;
          if (A.act) {
            Mat rhs = A.act(w, front_cycle(n, i));
            ++rep.checked;
            if (!(lhs == rhs))
              rep.fail("(e1) fails at colour " + pal.name(c) + ", word " +
                       word_str(pal, w) + ", slot " + std::to_string(i + 1));
          } else if (i == 0) {
            ++rep.checked;
            if (!(lhs == Mat::identity(A.dim(w))))
              rep.fail("(e1) fails at colour " + pal.name(c) + ", word " +
                       word_str(pal, w));
          }
        }
        if (w[i] == pal.omega(c)) {
          // First eps leg against slot i.
          Mat lhs = A.contract(cw, 0, 2 + i) * embed;
          if (A.act) {
            Mat rhs = A.act(w, front_cycle(n, i));
            ++rep.checked;
            if (!(lhs == rhs))
              rep.fail("(e1, flipped) fails at colour " + pal.name(c) +
                       ", word " + word_str(pal, w) + ", slot " +
                       std::to_string(i + 1));
          } else if (i == 0) {
            ++rep.checked;
            if (!(lhs == Mat::identity(A.dim(w))))
              rep.fail("(e1, flipped) fails at colour " + pal.name(c) +
                       ", word " + word_str(pal, w));
          }
        }
      }
    }
  }
  return rep;
}

CaReport derive_modular_operad(const CircuitAlgebraOracle& A, int max_total) {
  CaReport rep;
  const Palette& pal = A.palette;
  const auto words = all_words(pal, max_total);

  // x <>^{i|j} y = contract slot i of x against slot j of y.
  auto diamond = [&A](const ColourList& w1, const ColourList& w2, int i,
                      int j) {
    return A.contract(word_concat(w1, w2), i,
                      static_cast<int>(w1.size()) + j) *
           A.prod(w1, w2);
  };

  // (m1) associativity of <> along a chain x-y-z.
  for (const auto& w1 : words)
    for (const auto& w2 : words)
      for (const auto& w3 : words) {
        const int n1 = static_cast<int>(w1.size());
        const int n2 = static_cast<int>(w2.size());
        const int n3 = static_cast<int>(w3.size());
        if (n1 + n2 + n3 > max_total) continue;
        for (int i = 0; i < n1; ++i)
          for (int j = 0; j < n2; ++j) {
            if (w2[j] != pal.omega(w1[i])) continue;
            for (int k = 0; k < n2; ++k) {
              if (k == j) continue;
              for (int l = 0; l < n3; ++l) {
                if (w3[l] != pal.omega(w2[k])) continue;
                ColourList u = word_concat(word_remove2(w1, i, i),
                                           word_remove2(w2, j, j));
                // Slot of w2[k] inside u, then join with w3.
                int ku = (n1 - 1) + (k > j ? k - 1 : k);
                Mat lhs = diamond(u, w3, ku, l) *
                          diamond(w1, w2, i, j).kron(Mat::identity(A.dim(w3)));
                ColourList v = word_concat(word_remove2(w2, k, k),
                                           word_remove2(w3, l, l));
                int jv = j > k ? j - 1 : j;
                Mat rhs = diamond(w1, v, i, jv) *
                          Mat::identity(A.dim(w1)).kron(diamond(w2, w3, k, l));
                ++rep.checked;
                if (!(lhs == rhs))
                  rep.fail("(m1) fails at " + word_str(pal, w1) + " | " +
                           word_str(pal, w2) + " | " + word_str(pal, w3));
              }
            }
          }
      }

  // (m3) <> commutes with a contraction inside one factor.
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      const int n1 = static_cast<int>(w1.size());
      const int n2 = static_cast<int>(w2.size());
      if (n1 + n2 > max_total) continue;
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
          if (w2[j] != pal.omega(w1[i])) continue;
          for (int a = 0; a < n1; ++a)
            for (int b = a + 1; b < n1; ++b) {
              if (a == i || b == i) continue;
              if (w1[b] != pal.omega(w1[a])) continue;
              ColourList w1ab = word_remove2(w1, a, b);
              Mat lhs = diamond(w1ab, w2, drop2(i, a, b), j) *
                        A.contract(w1, a, b).kron(Mat::identity(A.dim(w2)));
              ColourList u =
                  word_concat(word_remove2(w1, i, i), word_remove2(w2, j, j));
              int au = a > i ? a - 1 : a;
              int bu = b > i ? b - 1 : b;
              Mat rhs = A.contract(u, au, bu) * diamond(w1, w2, i, j);
              ++rep.checked;
              if (!(lhs == rhs))
                rep.fail("(m3) fails at " + word_str(pal, w1) + " | " +
                         word_str(pal, w2));
            }
        }
    }

  // (m4) a parallel double join agrees in either order.
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      const int n1 = static_cast<int>(w1.size());
      const int n2 = static_cast<int>(w2.size());
      if (n1 + n2 > max_total) continue;
      for (int i1 = 0; i1 < n1; ++i1)
        for (int j1 = 0; j1 < n2; ++j1) {
          if (w2[j1] != pal.omega(w1[i1])) continue;
          for (int i2 = 0; i2 < n1; ++i2) {
            if (i2 == i1) continue;
            for (int j2 = 0; j2 < n2; ++j2) {
              if (j2 == j1) continue;
              if (w2[j2] != pal.omega(w1[i2])) continue;
              ColourList u =
                  word_concat(word_remove2(w1, i1, i1), word_remove2(w2, j1, j1));
              int i2u = i2 > i1 ? i2 - 1 : i2;
              int j2u = (n1 - 1) + (j2 > j1 ? j2 - 1 : j2);
              Mat lhs = A.contract(u, std::min(i2u, j2u), std::max(i2u, j2u)) *
                        diamond(w1, w2, i1, j1);
              ColourList v =
                  word_concat(word_remove2(w1, i2, i2), word_remove2(w2, j2, j2));
              int i1v = i1 > i2 ? i1 - 1 : i1;
              int j1v = (n1 - 1) + (j1 > j2 ? j1 - 1 : j1);
              Mat rhs = A.contract(v, std::min(i1v, j1v), std::max(i1v, j1v)) *
                        diamond(w1, w2, i2, j2);
              ++rep.checked;
              if (!(lhs == rhs))
                rep.fail("(m4) fails at " + word_str(pal, w1) + " | " +
                         word_str(pal, w2));
            }
          }
        }
    }

  // eps is a unit for <>: joining against eps relabels the slot to the
  // back.
  for (int c = 0; c < pal.size(); ++c) {
    const ColourList wc{c, pal.omega(c)};
    const Mat eps_c = A.eps(c);
    for (const auto& w : words) {
      const int n = static_cast<int>(w.size());
      if (n + 2 > max_total || n == 0) continue;
      for (int i = 0; i < n; ++i) {
        if (w[i] != c) continue;
        // x <>^{i|2} eps_c, the join eating eps's omega(c) leg.
        Mat joined = A.contract(word_concat(w, wc), i, n + 1) *
                     A.prod(w, wc) *
                     Mat::identity(A.dim(w)).kron(eps_c);
        if (A.act) {
          Mat rhs = A.act(w, back_cycle(n, i));
          ++rep.checked;
          if (!(joined == rhs))
            rep.fail("(unit) fails at colour " + pal.name(c) + ", word " +
                     word_str(pal, w) + ", slot " + std::to_string(i + 1));
        } else if (i == n - 1) {
          ++rep.checked;
          if (!(joined == Mat::identity(A.dim(w))))
            rep.fail("(unit) fails at colour " + pal.name(c) + ", word " +
                     word_str(pal, w));
        }
      }
    }
  }
  return rep;
}

CircuitAlgebraOracle ca_memoize(const CircuitAlgebraOracle& A) {
  CircuitAlgebraOracle B = A;

  auto dims = std::make_shared<std::map<ColourList, int>>();
  B.dim = [f = A.dim, dims](const ColourList& w) {
    auto it = dims->find(w);
    if (it == dims->end()) it = dims->emplace(w, f(w)).first;
    return it->second;
  };

  auto prods = std::make_shared<std::map<std::pair<ColourList, ColourList>, Mat>>();
  B.prod = [f = A.prod, prods](const ColourList& a, const ColourList& b) {
    auto key = std::make_pair(a, b);
    auto it = prods->find(key);
    if (it == prods->end()) it = prods->emplace(std::move(key), f(a, b)).first;
    return it->second;
  };

  auto cons = std::make_shared<std::map<std::tuple<ColourList, int, int>, Mat>>();
  B.contract = [f = A.contract, cons](const ColourList& w, int i, int j) {
    auto key = std::make_tuple(w, i, j);
    auto it = cons->find(key);
    if (it == cons->end()) it = cons->emplace(std::move(key), f(w, i, j)).first;
    return it->second;
  };

  auto epss = std::make_shared<std::map<int, Mat>>();
  B.eps = [f = A.eps, epss](int c) {
    auto it = epss->find(c);
    if (it == epss->end()) it = epss->emplace(c, f(c)).first;
    return it->second;
  };

  if (A.act) {
    auto acts =
        std::make_shared<std::map<std::pair<ColourList, std::vector<int>>, Mat>>();
    B.act = [f = A.act, acts](const ColourList& w, const Permutation& p) {
      auto key = std::make_pair(w, p.images());
      auto it = acts->find(key);
      if (it == acts->end()) it = acts->emplace(std::move(key), f(w, p)).first;
      return it->second;
    };
  }

  return B;
}

}  // namespace brauerkit
