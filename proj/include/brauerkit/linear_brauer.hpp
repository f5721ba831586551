#pragma once

// Linearized Brauer categories. Hom-spaces are spanned by the open
// diagrams of a fixed arity; composing two open diagrams may close
// middle cycles, and each closed loop is traded for one factor of the
// bubble scalar (the indeterminate t generically, a rational after
// specialization).

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "brauerkit/diagram.hpp"
#include "brauerkit/linalg.hpp"
#include "brauerkit/lincomb.hpp"

namespace brauerkit {

// Strips the closed loops off a diagram, leaving the open part.
inline Diagram open_part(const Diagram& d) {
  return Diagram(d.sources(), d.targets(), d.pairs(), 0);
}

// Bilinear extension of diagram composition; every middle cycle
// multiplies the coefficient by `bubble`.
template <typename S>
LinComb<Diagram, S> lin_compose(const LinComb<Diagram, S>& x,
                                const LinComb<Diagram, S>& y, const S& bubble) {
  LinComb<Diagram, S> out;
  for (const auto& [f, cf] : x.terms())
    for (const auto& [g, cg] : y.terms()) {
      Diagram h = compose(f, g);
      S c = cf * cg;
      for (int i = 0; i < h.closed(); ++i) c = c * bubble;
      out.add(open_part(h), c);
    }
  return out;
}

template <typename S>
LinComb<Diagram, S> lin_oplus(const LinComb<Diagram, S>& x,
                              const LinComb<Diagram, S>& y) {
  LinComb<Diagram, S> out;
  for (const auto& [f, cf] : x.terms())
    for (const auto& [g, cg] : y.terms()) out.add(oplus(f, g), cf * cg);
  return out;
}

// e(k) = sum over all permutations of k strands, signed. e(k)*e(k) =
// k! e(k); composing with a permutation on either side rescales by its
// sign.
template <typename S>
LinComb<Diagram, S> antisymmetrizer(int k) {
  LinComb<Diagram, S> out;
  std::vector<int> im(k);
  for (int i = 0; i < k; ++i) im[i] = i;
  do {
    Permutation p(im);
    out.add(permutation_diagram(p), S(p.sgn()));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// Coevaluation applied to e(k) termwise: an element of the (0, 2k)
// hom-space. Bending the first k strands back down recovers e(k).
template <typename S>
LinComb<Diagram, S> coev_antisymmetrizer(int k) {
  LinComb<Diagram, S> out;
  std::vector<int> im(k);
  for (int i = 0; i < k; ++i) im[i] = i;
  do {
    Permutation p(im);
    out.add(coev(permutation_diagram(p)), S(p.sgn()));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// Canonical ordered basis of the open hom-space (m, n).
std::vector<Diagram> open_basis(int m, int n);

Vec to_coords(const LinComb<Diagram, Rat>& x, const std::vector<Diagram>& basis);
LinComb<Diagram, Rat> from_coords(const Vec& v, const std::vector<Diagram>& basis);

// The least family of subspaces of the hom-spaces with m+n <= bound
// that contains every identity padding id_j (+) g (+) id_l of the
// generators and is closed under two-sided composition with open
// diagrams, results staying within the bound.
//
// Slices are materialized on demand. Each one equals the span of
// u o (id_j (+) g (+) id_l) o v over all open u, v of fitting arity:
// iterated bounded compositions reduce to this form because for any
// u, w, v with the seed and result slices within the bound, at least
// one association order keeps every intermediate slice within the
// bound as well ((a+n') + (m'+b) = (a+b) + (m'+n') <= 2*bound).
class IdealSlice {
 public:
  IdealSlice() : bound_(0) {}
  IdealSlice(std::vector<LinComb<Diagram, Rat>> generators, Rat delta,
             int bound);

  int bound() const { return bound_; }
  const std::vector<Diagram>& basis(int m, int n) const;
  const EchelonBasis& slice(int m, int n) const;
  int dim(int m, int n) const { return slice(m, n).dim(); }
  bool contains(int m, int n, const LinComb<Diagram, Rat>& x) const;

 private:
  int bound_;
  Rat delta_;
  // Identity paddings of the generators, keyed by arity.
  std::vector<std::pair<std::pair<int, int>, LinComb<Diagram, Rat>>> seeds_;
  mutable std::map<std::pair<int, int>, EchelonBasis> sub_;
  mutable std::map<std::pair<int, int>, std::vector<Diagram>> bases_;
};

// Two-sided ideal closure of the generators at loop value delta,
// truncated to hom-spaces with m+n <= bound.
IdealSlice ideal_saturate(const std::vector<LinComb<Diagram, Rat>>& generators,
                          const Rat& delta, int bound);

// True exactly when the evaluation assigns the scalar delta to the
// single closed loop.
bool factors_through_specialization(const std::function<Mat(const Diagram&)>& A,
                                    const Rat& delta);

}  // namespace brauerkit
