#pragma once

// Monochrome Brauer diagrams: perfect pairings on m source points and
// n target points plus a count of closed loops. Composition stacks
// diagrams and absorbs middle cycles into the loop count.

#include <string>
#include <utility>
#include <vector>

namespace brauerkit {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  // (p.after(q))(i) = p(q(i)): q acts first.
  Permutation after(const Permutation& q) const;
  Permutation inverse() const;
  int sgn() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }

 private:
  std::vector<int> images_;
};

class Diagram {
 public:
  // Empty diagram 0->0 with no loops.
  Diagram() : m_(0), n_(0), closed_(0) {}
  // Points 0..m-1 are sources, m..m+n-1 are targets. Each point must
  // appear in exactly one pair.
  Diagram(int m, int n, std::vector<std::pair<int, int>> pairs, int closed = 0);
  static Diagram from_pairing(int m, int n, const std::vector<int>& pairing,
                              int closed = 0);

  static Diagram identity(int n);
  static Diagram cup();   // 0->2
  static Diagram cap();   // 2->0
  static Diagram sym();   // 2->2 crossing
  static Diagram loops(int k);  // 0->0 with k closed loops
  // Rainbow pairings: target i with target 2n-1-i (resp. sources).
  static Diagram nested_cup(int n);   // 0->2n
  static Diagram nested_cap(int n);   // 2n->0

  int sources() const { return m_; }
  int targets() const { return n_; }
  int closed() const { return closed_; }
  int points() const { return m_ + n_; }
  int pair(int i) const { return inv_[i]; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  bool is_open() const { return closed_ == 0; }
  bool is_downward() const;
  bool is_upward() const;
  bool is_planar() const;

  // Canonical text: "m->n : (s1 t2)(s2 t1) + k", "+ k" omitted when k=0.
  std::string str() const;

  bool operator==(const Diagram& o) const;
  bool operator!=(const Diagram& o) const { return !(*this == o); }
  // Total order on (m, n, pairs, closed); used for map keys and
  // canonical enumeration order.
  bool operator<(const Diagram& o) const;

 private:
  int m_, n_;
  int closed_;
  std::vector<std::pair<int, int>> pairs_;  // (lo,hi) sorted by lo
  std::vector<int> inv_;                    // involution, inv_[inv_[i]] = i
};

// Stacks f then g; requires f.targets() == g.sources(). Middle cycles
// are added to the closed count of the result.
Diagram compose(const Diagram& f, const Diagram& g);

// Same composite, plus one representative middle index (an f-target
// slot) for each newly closed cycle.
std::pair<Diagram, std::vector<int>> compose_tracked(const Diagram& f,
                                                     const Diagram& g);

// Juxtaposition: f's points keep their slots, g's are shifted after them
// in each of the source and target blocks.
Diagram oplus(const Diagram& f, const Diagram& g);

// The four open diagrams generating every diagram under compose/oplus:
// id_1, cup, cap, sym (in this order).
std::vector<Diagram> generators();

// Open diagram n->n pairing source i with target p(i).
Diagram permutation_diagram(const Permutation& p);

// Flips source and target roles: source j of the result plays the role
// of target j of f.  transpose(compose(f,g)) = compose(transpose(g),
// transpose(f)).
Diagram transpose(const Diagram& f);
// ev(f) : (n+m)->0, closes f against the identity with a nested cap.
Diagram ev(const Diagram& f);
// coev(f) : 0->(n+m), the dual expansion through a nested cup; the
// first n targets carry f's targets.
Diagram coev(const Diagram& f);

struct BoundaryCospan {
  int boundary_points;          // m+n
  int component_count;          // (m+n)/2 + closed
  std::vector<int> attach;      // component id of each boundary point
  int closed_components;        // components meeting no boundary point
};

BoundaryCospan boundary_cospan(const Diagram& f);

// All diagrams m->n with closed count 0..max_closed, sorted in the
// canonical diagram order, duplicate-free. Empty when m+n is odd.
std::vector<Diagram> enumerate_diagrams(int m, int n, int max_closed);

}  // namespace brauerkit
