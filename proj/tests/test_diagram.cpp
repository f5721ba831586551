// Diagram layer: enumeration counts against an independent matching
// enumerator, composition against a path-tracing oracle, and the
// categorical identities on small boundaries.

#include "brauerkit/diagram.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"

namespace {

using brauerkit::Diagram;
using brauerkit::Permutation;

long long double_fact_odd(int k) {
  // (k-1)!! for even k >= 0; the number of perfect matchings on k points.
  long long r = 1;
  for (int i = k - 1; i > 1; i -= 2) r *= i;
  return r;
}

// Recursive matching enumerator, independent of the library's ordering.
void brute_matchings(std::vector<int>& free_pts,
                     std::vector<std::pair<int, int>>& acc,
                     std::vector<std::vector<std::pair<int, int>>>& out) {
  if (free_pts.empty()) {
    out.push_back(acc);
    return;
  }
  int a = free_pts.front();
  for (std::size_t j = 1; j < free_pts.size(); ++j) {
    int b = free_pts[j];
    std::vector<int> rest;
    for (std::size_t t = 1; t < free_pts.size(); ++t)
      if (t != j) rest.push_back(free_pts[t]);
    acc.emplace_back(a, b);
    brute_matchings(rest, acc, out);
    acc.pop_back();
  }
}

std::vector<Diagram> brute_open_diagrams(int m, int n) {
  std::vector<int> pts(m + n);
  for (int i = 0; i < m + n; ++i) pts[i] = i;
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<std::pair<int, int>> acc;
  brute_matchings(pts, acc, matchings);
  std::vector<Diagram> out;
  for (auto& pairs : matchings) out.emplace_back(m, n, pairs);
  return out;
}

// Composition oracle: trace strands through the glued union graph.
// Nodes are (side, index): side 0 for f points, side 1 for g points.
Diagram oracle_compose(const Diagram& f, const Diagram& g) {
  const int m = f.sources(), k = f.targets(), n = g.targets();
  REQUIRE(g.sources() == k);
  auto step = [&](std::pair<int, int> node) {
    // Move to the pairing partner inside the node's own diagram.
    if (node.first == 0) return std::make_pair(0, f.pair(node.second));
    return std::make_pair(1, g.pair(node.second));
  };
  auto hop = [&](std::pair<int, int> node) -> std::pair<int, int> {
    // Cross the glued middle boundary when possible.
    if (node.first == 0 && node.second >= m) return {1, node.second - m};
    if (node.first == 1 && node.second < k) return {0, m + node.second};
    return node;
  };
  auto boundary_index = [&](std::pair<int, int> node) -> int {
    if (node.first == 0 && node.second < m) return node.second;
    if (node.first == 1 && node.second >= k) return m + (node.second - k);
    return -1;
  };
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> seen(m + n, false);
  for (int p = 0; p < m + n; ++p) {
    if (seen[p]) continue;
    std::pair<int, int> cur =
        p < m ? std::make_pair(0, p) : std::make_pair(1, k + (p - m));
    cur = step(cur);
    while (boundary_index(cur) < 0) cur = step(hop(cur));
    int q = boundary_index(cur);
    seen[p] = seen[q] = true;
    pairs.emplace_back(p, q);
  }
  // Count middle cycles among f-target slots not already visited.
  std::vector<bool> mid_seen(k, false);
  int cycles = 0;
  // First mark middles used by boundary strands.
  std::vector<bool> used(k, false);
  for (int p = 0; p < m + n; ++p) {
    std::pair<int, int> cur =
        p < m ? std::make_pair(0, p) : std::make_pair(1, k + (p - m));
    cur = step(cur);
    while (boundary_index(cur) < 0) {
      if (cur.first == 0 && cur.second >= m) used[cur.second - m] = true;
      if (cur.first == 1 && cur.second < k) used[cur.second] = true;
      cur = step(hop(cur));
    }
  }
  for (int j = 0; j < k; ++j) {
    if (used[j] || mid_seen[j]) continue;
    ++cycles;
    std::pair<int, int> cur{0, m + j};
    do {
      if (cur.first == 0 && cur.second >= m) mid_seen[cur.second - m] = true;
      if (cur.first == 1 && cur.second < k) mid_seen[cur.second] = true;
      cur = step(hop(cur));
    } while (!(cur.first == 0 && cur.second == m + j));
  }
  return Diagram(m, n, pairs, f.closed() + g.closed() + cycles);
}

int sgn_by_inversions(const Permutation& p) {
  int inv = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p(i) > p(j)) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

Diagram random_diagram(std::mt19937_64& rng, int m, int n, int max_closed) {
  std::vector<int> pts(m + n);
  for (int i = 0; i < m + n; ++i) pts[i] = i;
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
    pairs.emplace_back(pts[i], pts[i + 1]);
  int closed = max_closed > 0 ? static_cast<int>(rng() % (max_closed + 1)) : 0;
  return Diagram(m, n, pairs, closed);
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace

TEST_CASE("enumeration counts match the double factorial") {
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; m + n <= 10; ++n) {
      auto open = brauerkit::enumerate_diagrams(m, n, 0);
      long long expect = (m + n) % 2 == 0 ? double_fact_odd(m + n) : 0;
      CHECK(static_cast<long long>(open.size()) == expect);
    }
  }
}

TEST_CASE("enumeration agrees with a brute matching enumerator") {
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; m + n <= 6; ++n) {
      if ((m + n) % 2 != 0) continue;
      auto open = brauerkit::enumerate_diagrams(m, n, 0);
      auto brute = brute_open_diagrams(m, n);
      std::set<Diagram> lhs(open.begin(), open.end());
      std::set<Diagram> rhs(brute.begin(), brute.end());
      CHECK(lhs == rhs);
      CHECK(open.size() == lhs.size());
      CHECK(std::is_sorted(open.begin(), open.end()));
    }
  }
}

TEST_CASE("enumeration with closed loops stratifies by loop count") {
  auto all = brauerkit::enumerate_diagrams(1, 1, 2);
  CHECK(all.size() == 3);
  for (const auto& f : all) {
    CHECK(f.sources() == 1);
    CHECK(f.targets() == 1);
    CHECK(f.closed() <= 2);
  }
}

TEST_CASE("hand compositions") {
  Diagram id1 = Diagram::identity(1);
  Diagram id2 = Diagram::identity(2);
  CHECK(compose(Diagram::cup(), Diagram::cap()) == Diagram::loops(1));
  CHECK(compose(Diagram::sym(), Diagram::sym()) == id2);
  CHECK(compose(id2, Diagram::cap()) == Diagram::cap());
  CHECK(compose(Diagram::cup(), id2) == Diagram::cup());
  CHECK(oplus(id1, id1) == id2);
  CHECK(oplus(Diagram(), Diagram::sym()) == Diagram::sym());
}

TEST_CASE("triangle identities on small boundaries") {
  for (int n = 1; n <= 4; ++n) {
    Diagram idn = Diagram::identity(n);
    Diagram cupn = coev(idn);
    Diagram capn = ev(idn);
    CHECK(compose(oplus(cupn, idn), oplus(idn, capn)) == idn);
    CHECK(compose(oplus(idn, cupn), oplus(capn, idn)) == idn);
  }
}

TEST_CASE("composition matches the path-tracing oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    int m = static_cast<int>(rng() % 5);
    int k = static_cast<int>(rng() % 5);
    int n = static_cast<int>(rng() % 5);
    if ((m + k) % 2 != 0) ++k;
    if ((k + n) % 2 != 0) ++n;
    Diagram f = random_diagram(rng, m, k, 2);
    Diagram g = random_diagram(rng, k, n, 2);
    CHECK(compose(f, g) == oracle_compose(f, g));
  }
}

TEST_CASE("composition is associative on random triples") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    int m = static_cast<int>(rng() % 4);
    int k = static_cast<int>(rng() % 4);
    int l = static_cast<int>(rng() % 4);
    int n = static_cast<int>(rng() % 4);
    if ((m + k) % 2 != 0) ++k;
    if ((k + l) % 2 != 0) ++l;
    if ((l + n) % 2 != 0) ++n;
    Diagram f = random_diagram(rng, m, k, 1);
    Diagram g = random_diagram(rng, k, l, 1);
    Diagram h = random_diagram(rng, l, n, 1);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("interchange of compose and oplus") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 200; ++trial) {
    int m1 = static_cast<int>(rng() % 3), k1 = static_cast<int>(rng() % 3);
    int m2 = static_cast<int>(rng() % 3), k2 = static_cast<int>(rng() % 3);
    int n1 = static_cast<int>(rng() % 3), n2 = static_cast<int>(rng() % 3);
    if ((m1 + k1) % 2 != 0) ++k1;
    if ((m2 + k2) % 2 != 0) ++k2;
    if ((k1 + n1) % 2 != 0) ++n1;
    if ((k2 + n2) % 2 != 0) ++n2;
    Diagram f1 = random_diagram(rng, m1, k1, 1);
    Diagram f2 = random_diagram(rng, m2, k2, 1);
    Diagram g1 = random_diagram(rng, k1, n1, 1);
    Diagram g2 = random_diagram(rng, k2, n2, 1);
    CHECK(compose(oplus(f1, f2), oplus(g1, g2)) ==
          oplus(compose(f1, g1), compose(f2, g2)));
  }
}

TEST_CASE("permutation sign matches the inversion count") {
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 7; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      Permutation p = random_permutation(rng, n);
      CHECK(p.sgn() == sgn_by_inversions(p));
      CHECK(p.after(p.inverse()) == Permutation::identity(n));
      CHECK(p.inverse().sgn() == p.sgn());
    }
  }
}

TEST_CASE("permutation diagrams compose contravariantly with after") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Permutation p = random_permutation(rng, n);
    Permutation q = random_permutation(rng, n);
    // Diagram composition applies the left factor first.
    CHECK(compose(brauerkit::permutation_diagram(p),
                  brauerkit::permutation_diagram(q)) ==
          brauerkit::permutation_diagram(q.after(p)));
  }
}

TEST_CASE("transpose is an anti-homomorphism") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    int m = static_cast<int>(rng() % 4);
    int k = static_cast<int>(rng() % 4);
    int n = static_cast<int>(rng() % 4);
    if ((m + k) % 2 != 0) ++k;
    if ((k + n) % 2 != 0) ++n;
    Diagram f = random_diagram(rng, m, k, 1);
    Diagram g = random_diagram(rng, k, n, 1);
    CHECK(transpose(compose(f, g)) == compose(transpose(g), transpose(f)));
    CHECK(transpose(transpose(f)) == f);
  }
}

TEST_CASE("ev and coev against the rainbow pairings") {
  for (int n = 0; n <= 4; ++n) {
    Diagram idn = Diagram::identity(n);
    CHECK(ev(idn) == Diagram::nested_cap(n));
    CHECK(coev(idn) == Diagram::nested_cup(n));
    CHECK(ev(idn).sources() == 2 * n);
    CHECK(coev(idn).targets() == 2 * n);
  }
}

TEST_CASE("boundary cospan on hand cases") {
  auto c_id2 = brauerkit::boundary_cospan(Diagram::identity(2));
  CHECK(c_id2.boundary_points == 4);
  CHECK(c_id2.component_count == 2);
  CHECK(c_id2.closed_components == 0);
  CHECK(c_id2.attach[0] == c_id2.attach[2]);
  CHECK(c_id2.attach[1] == c_id2.attach[3]);
  CHECK(c_id2.attach[0] != c_id2.attach[1]);

  auto c_loops = brauerkit::boundary_cospan(Diagram::loops(2));
  CHECK(c_loops.boundary_points == 0);
  CHECK(c_loops.component_count == 2);
  CHECK(c_loops.closed_components == 2);

  auto c_cup = brauerkit::boundary_cospan(Diagram::cup());
  CHECK(c_cup.component_count == 1);
  CHECK(c_cup.attach == std::vector<int>{0, 0});
}

TEST_CASE("canonical text forms") {
  CHECK(Diagram::identity(2).str() == "2->2 : (s1 t1) (s2 t2)");
  CHECK(Diagram::cup().str() == "0->2 : (t1 t2)");
  CHECK(Diagram::cap().str() == "2->0 : (s1 s2)");
  CHECK(Diagram::sym().str() == "2->2 : (s1 t2) (s2 t1)");
  CHECK(Diagram::loops(2).str() == "0->0 : + 2");
  CHECK(Diagram().str() == "0->0 :");
}

TEST_CASE("planarity and direction predicates") {
  CHECK(Diagram::identity(3).is_planar());
  CHECK(!Diagram::sym().is_planar());
  CHECK(Diagram::cap().is_downward());
  CHECK(!Diagram::cap().is_upward());
  CHECK(Diagram::cup().is_upward());
  CHECK(Diagram::nested_cap(2).is_planar());
}

TEST_CASE("from_pairing round trips through pair") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    int m = static_cast<int>(rng() % 4);
    int n = static_cast<int>(rng() % 4);
    if ((m + n) % 2 != 0) ++n;
    Diagram f = random_diagram(rng, m, n, 2);
    std::vector<int> pairing(f.points());
    for (int i = 0; i < f.points(); ++i) pairing[i] = f.pair(i);
    CHECK(Diagram::from_pairing(m, n, pairing, f.closed()) == f);
  }
}

TEST_CASE("invalid pairings are rejected") {
  CHECK_THROWS(Diagram(1, 1, {{0, 0}}));
  CHECK_THROWS(Diagram(2, 0, {{0, 1}, {0, 1}}));
  CHECK_THROWS(Diagram(1, 0, {}));
  CHECK_THROWS(Diagram(0, 0, {}, -1));
}
