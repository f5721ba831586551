#include "brauerkit/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace brauerkit {

namespace {

void check(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    check(x >= 0 && x < static_cast<int>(images_.size()) && !seen[x],
          "permutation images must be a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::after(const Permutation& q) const {
  check(size() == q.size(), "permutation size mismatch");
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[i] = images_[q(i)];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

int Permutation::sgn() const {
  std::vector<bool> seen(size(), false);
  int parity = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity ? -1 : 1;
}

Diagram::Diagram(int m, int n, std::vector<std::pair<int, int>> pairs, int closed)
    : m_(m), n_(n), closed_(closed) {
  check(m >= 0 && n >= 0 && closed >= 0, "arities and closed count must be nonnegative");
  check(static_cast<int>(pairs.size()) * 2 == m + n,
        "pairing must cover every boundary point exactly once");
  inv_.assign(m + n, -1);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    check(a >= 0 && b < m + n && a != b, "pair out of range");
    check(inv_[a] == -1 && inv_[b] == -1, "point paired twice");
    inv_[a] = b;
    inv_[b] = a;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs_ = std::move(pairs);
}

Diagram Diagram::from_pairing(int m, int n, const std::vector<int>& pairing,
                              int closed) {
  check(static_cast<int>(pairing.size()) == m + n, "pairing size mismatch");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m + n; ++i) {
    check(pairing[i] >= 0 && pairing[i] < m + n && pairing[i] != i &&
              pairing[pairing[i]] == i,
          "pairing must be a fixed-point-free involution");
    if (i < pairing[i]) pairs.emplace_back(i, pairing[i]);
  }
  return Diagram(m, n, std::move(pairs), closed);
}

Diagram Diagram::identity(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + i);
  return Diagram(n, n, std::move(pairs));
}

Diagram Diagram::cup() { return Diagram(0, 2, {{0, 1}}); }
Diagram Diagram::cap() { return Diagram(2, 0, {{0, 1}}); }
Diagram Diagram::sym() { return Diagram(2, 2, {{0, 3}, {1, 2}}); }
Diagram Diagram::loops(int k) { return Diagram(0, 0, {}, k); }

Diagram Diagram::nested_cup(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, 2 * n - 1 - i);
  return Diagram(0, 2 * n, std::move(pairs));
}

Diagram Diagram::nested_cap(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, 2 * n - 1 - i);
  return Diagram(2 * n, 0, std::move(pairs));
}

bool Diagram::is_downward() const {
  if (!is_open()) return false;
  for (int j = m_; j < m_ + n_; ++j)
    if (inv_[j] >= m_) return false;
  return true;
}

bool Diagram::is_upward() const {
  if (!is_open()) return false;
  for (int i = 0; i < m_; ++i)
    if (inv_[i] < m_) return false;
  return true;
}

bool Diagram::is_planar() const {
  if (!is_open()) return false;
  // Boundary circle order: sources left to right, then targets right to
  // left. Nesting must balance like parentheses.
  auto circ = [&](int i) { return i < m_ ? i : m_ + (n_ - 1 - (i - m_)); };
  std::vector<int> partner(m_ + n_);
  for (int i = 0; i < m_ + n_; ++i) partner[circ(i)] = circ(inv_[i]);
  std::vector<int> stack;
  for (int x = 0; x < m_ + n_; ++x) {
    if (partner[x] > x) {
      stack.push_back(x);
    } else {
      if (stack.empty() || stack.back() != partner[x]) return false;
      stack.pop_back();
    }
  }
  return true;
}

std::string Diagram::str() const {
  std::ostringstream os;
  os << m_ << "->" << n_ << " :";
  auto name = [&](int i) {
    std::ostringstream p;
    if (i < m_)
      p << 's' << (i + 1);
    else
      p << 't' << (i - m_ + 1);
    return p.str();
  };
  for (const auto& [a, b] : pairs_) os << " (" << name(a) << ' ' << name(b) << ')';
  if (closed_ > 0) os << " + " << closed_;
  return os.str();
}

bool Diagram::operator==(const Diagram& o) const {
  return m_ == o.m_ && n_ == o.n_ && closed_ == o.closed_ && pairs_ == o.pairs_;
}

bool Diagram::operator<(const Diagram& o) const {
  if (m_ != o.m_) return m_ < o.m_;
  if (n_ != o.n_) return n_ < o.n_;
  if (pairs_ != o.pairs_) return pairs_ < o.pairs_;
  return closed_ < o.closed_;
}

Diagram compose(const Diagram& f, const Diagram& g) {
  return compose_tracked(f, g).first;
}

std::pair<Diagram, std::vector<int>> compose_tracked(const Diagram& f,
                                                     const Diagram& g) {
  check(f.targets() == g.sources(), "compose: inner arities must match");
  const int m = f.sources(), k = f.targets(), p = g.targets();
  // Alternating walk across the middle layer. Middle point j sits at
  // f point m+j and g point j.
  std::vector<bool> mid_seen(k, false);
  // Walks from a composite source enter through f; walks from a
  // composite target enter through g.
  auto walk_from_f = [&](int fpt) -> int {
    // fpt is a point of f; returns the composite endpoint index.
    while (true) {
      if (fpt < m) return fpt;  // composite source
      int j = fpt - m;
      mid_seen[j] = true;
      int gpt = g.pair(j);
      if (gpt >= k) return m + (gpt - k);  // composite target
      mid_seen[gpt] = true;
      fpt = f.pair(m + gpt);
    }
  };
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> done(m + p, false);
  for (int i = 0; i < m; ++i) {
    if (done[i]) continue;
    int other = walk_from_f(f.pair(i));
    done[i] = done[other] = true;
    pairs.emplace_back(i, other);
  }
  for (int j = 0; j < p; ++j) {
    if (done[m + j]) continue;
    int gpt = g.pair(k + j);
    int other;
    if (gpt >= k) {
      other = m + (gpt - k);
    } else {
      mid_seen[gpt] = true;
      other = walk_from_f(f.pair(m + gpt));
    }
    done[m + j] = done[other] = true;
    pairs.emplace_back(m + j, other);
  }
  // Unvisited middle points lie on closed alternating cycles.
  std::vector<int> cycle_reps;
  for (int j = 0; j < k; ++j) {
    if (mid_seen[j]) continue;
    cycle_reps.push_back(j);
    int cur = j;
    while (!mid_seen[cur]) {
      mid_seen[cur] = true;
      int via_g = g.pair(cur);       // stays in the middle
      mid_seen[via_g] = true;
      cur = f.pair(m + via_g) - m;   // stays in the middle
    }
  }
  int cycles = static_cast<int>(cycle_reps.size());
  return {Diagram(m, p, std::move(pairs), f.closed() + g.closed() + cycles),
          std::move(cycle_reps)};
}

Diagram oplus(const Diagram& f, const Diagram& g) {
  const int fm = f.sources(), fn = f.targets();
  const int gm = g.sources(), gn = g.targets();
  // g's sources land after f's sources, g's targets after f's targets.
  auto shift = [&](int i) {
    return i < gm ? fm + i : fm + fn + i;  // i-gm+gm cancels in target case
  };
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : f.pairs())
    pairs.emplace_back(a < fm ? a : a + gm, b < fm ? b : b + gm);
  for (auto [a, b] : g.pairs()) pairs.emplace_back(shift(a), shift(b));
  return Diagram(fm + gm, fn + gn, std::move(pairs), f.closed() + g.closed());
}

std::vector<Diagram> generators() {
  return {Diagram::identity(1), Diagram::cup(), Diagram::cap(), Diagram::sym()};
}

Diagram permutation_diagram(const Permutation& p) {
  const int n = p.size();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + p(i));
  return Diagram(n, n, std::move(pairs));
}

Diagram transpose(const Diagram& f) {
  const int m = f.sources(), n = f.targets();
  // f source j becomes target j, f target i becomes source i.
  auto flip = [&](int i) { return i < m ? n + i : i - m; };
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : f.pairs()) pairs.emplace_back(flip(a), flip(b));
  return Diagram(n, m, std::move(pairs), f.closed());
}

Diagram ev(const Diagram& f) {
  const int n = f.targets();
  return compose(oplus(Diagram::identity(n), f), Diagram::nested_cap(n));
}

Diagram coev(const Diagram& f) {
  const int m = f.sources();
  return compose(Diagram::nested_cup(m), oplus(f, Diagram::identity(m)));
}

BoundaryCospan boundary_cospan(const Diagram& f) {
  BoundaryCospan c;
  c.boundary_points = f.points();
  c.closed_components = f.closed();
  c.component_count = f.points() / 2 + f.closed();
  c.attach.assign(f.points(), -1);
  int id = 0;
  for (const auto& [a, b] : f.pairs()) {
    c.attach[a] = c.attach[b] = id;
    ++id;
  }
  return c;
}

namespace {

void gen_matchings(std::vector<int>& partner, int total,
                   std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  int a = -1;
  for (int i = 0; i < total; ++i)
    if (partner[i] < 0) {
      a = i;
      break;
    }
  if (a < 0) {
    out.push_back(acc);
    return;
  }
  for (int b = a + 1; b < total; ++b) {
    if (partner[b] >= 0) continue;
    partner[a] = b;
    partner[b] = a;
    acc.emplace_back(a, b);
    gen_matchings(partner, total, acc, out);
    acc.pop_back();
    partner[a] = -1;
    partner[b] = -1;
  }
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(int m, int n, int max_closed) {
  std::vector<Diagram> result;
  if ((m + n) % 2 != 0 || m < 0 || n < 0 || max_closed < 0) return result;
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<int> partner(m + n, -1);
  std::vector<std::pair<int, int>> acc;
  gen_matchings(partner, m + n, acc, matchings);
  for (const auto& pairs : matchings)
    for (int k = 0; k <= max_closed; ++k) result.emplace_back(m, n, pairs, k);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace brauerkit
