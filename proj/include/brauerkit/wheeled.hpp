#pragma once

// Wheeled-prop view of an oriented circuit algebra: hom spaces are the
// carriers at walled words (all up strands before all down strands),
// with vertical and horizontal composition, bimodule actions, and a
// partial trace built from the contraction. Elements are columns, the
// operations are matrices on Kronecker-flattened inputs.

#include <map>
#include <memory>
#include <tuple>

#include "brauerkit/ca_oracle.hpp"

namespace brauerkit {

// Memo for the operation matrices, keyed by hom shapes. Shared between
// copies of a view, so the derived circuit algebra reuses it.
struct WpCache {
  std::map<int, Mat> identity;
  std::map<std::tuple<int, int, int>, Mat> compose;
  std::map<std::tuple<int, int, int, int>, Mat> horizontal;
  std::map<std::tuple<int, int, int>, Mat> trace;
};

struct WheeledPropView {
  CircuitAlgebraOracle A;  // must live over an oriented palette
  int up = 0;
  int dn = 1;
  std::shared_ptr<WpCache> cache;
};

// Validates the palette; throws std::invalid_argument otherwise.
WheeledPropView ca_to_wheeled_prop(const CircuitAlgebraOracle& A);

// The word of P(m,n): m ups then n downs.
ColourList wp_word(const WheeledPropView& P, int m, int n);
int wp_dim(const WheeledPropView& P, int m, int n);

// Identity element of P(n,n): strand k joins input k to output k.
Mat wp_identity(const WheeledPropView& P, int n);
// The symmetry element of P(2,2).
Mat wp_symmetry(const WheeledPropView& P);

// Composition map P(m,n) (x) P(n,p) -> P(m,p); the composite of f then
// g is wp_compose(..) * f.kron(g). Junction legs pair in parallel.
Mat wp_compose(const WheeledPropView& P, int m, int n, int p);
// Horizontal product P(m,n) (x) P(p,q) -> P(m+p, n+q); up and down
// blocks concatenate in argument order.
Mat wp_horizontal(const WheeledPropView& P, int m, int n, int p, int q);
// Partial trace P(m+b, n+b) -> P(m,n) joining the trailing b inputs to
// the trailing b outputs, k-th to k-th.
Mat wp_trace(const WheeledPropView& P, int m, int n, int b);
// Bimodule action: rows permutes the up block, cols the down block.
Mat wp_act(const WheeledPropView& P, int m, int n, const Permutation& rows,
           const Permutation& cols);

// Traced-category axioms: Vanishing (iterated traces agree with joint
// ones), Superposing (trace slides past a horizontal factor on either
// side), Yanking (the traced symmetry is the identity). Exhaustive for
// hom words of length <= max_total.
CaReport check_wheeled_axioms(const WheeledPropView& P, int max_total);

// Rebuilds a circuit algebra from the prop operations alone; carriers
// at arbitrary words are the hom spaces of their walled normal forms.
CircuitAlgebraOracle wheeled_prop_to_ca(const WheeledPropView& P);

// Round trip A -> prop -> A': compares every structure map of A' with
// the walled-shuffle conjugate of A's, for words of total length
// <= max_total.
CaReport check_wheeled_roundtrip(const CircuitAlgebraOracle& A, int max_total);

}  // namespace brauerkit
