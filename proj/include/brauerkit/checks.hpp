#pragma once

// Verification suites comparing diagram evaluation against independent
// computations: rank versus the Lie-algebra invariant oracle, kernels
// versus saturated ideal slices, the symmetric group action on tensor
// powers, and the evaluation kernel of the free linear circuit algebra.

#include <string>
#include <vector>

#include "brauerkit/invariant_oracle.hpp"
#include "brauerkit/linear_brauer.hpp"
#include "brauerkit/tensor_eval.hpp"

namespace brauerkit {

// Columns are the open-basis diagrams of (m, n), flattened column-major
// over the domain index.
Mat evaluation_matrix(const EvalFunctor& F, int m, int n);

struct FftReport {
  int m = 0, n = 0;
  int basis_dim = 0;   // number of open diagrams
  int rank = 0;        // rank of evaluation on the open basis
  int oracle_dim = 0;  // invariant dimension, computed without diagrams
  int kernel_dim = 0;
  bool expect_injective = false;  // m+n within twice the claimed delta
  bool ok = false;
  std::string note;  // first failed assertion, empty when ok
};

// Fullness: rank equals the oracle dimension; injectivity on small
// arities; odd arities vanish on both sides.
FftReport fft_check(const EvalFunctor& F, int m, int n, int oracle_dim);

struct SftReport {
  int m = 0, n = 0;
  Rat delta;      // bubble value defining the ideal
  int k = 0;      // antisymmetrizer size |delta| + 1
  int bound = 0;  // saturation bound
  Rat loop;       // the functor's own loop scalar
  bool gen_vanishes = false;  // evaluation kills e(k)
  int kernel_dim = 0;
  int ideal_dim = 0;
  bool equal = false;  // kernel and ideal slice agree as subspaces
  std::string note;
};

// Kernel of evaluation on Br(m, n) versus the saturated two-sided ideal
// slice of the antisymmetrizer. The kernel side is authoritative; the
// comparison verdict is recorded either way.
SftReport sft_check(const EvalFunctor& F, int m, int n, const Rat& delta,
                    int bound);

struct GlReport {
  int d = 0, n = 0;
  long factorial = 0;  // order of the symmetric group
  int rank = 0;        // rank of the action matrices on the tensor power
  int kernel_dim = 0;
  bool kernel_matches = false;   // kernel equals the group-algebra ideal
  bool oriented_agrees = false;  // oriented functor matches after walling
  bool ok = false;
  std::string note;
};

// The symmetric group action on the n-th tensor power: injective with
// rank n! when n <= d, and for n > d the kernel is the two-sided
// group-algebra ideal of the antisymmetrizer e(d+1). Also cross-checks
// the oriented evaluation against the plain action through walled
// normal forms.
GlReport gl_check(int d, int n);

struct CaKernelReport {
  int n = 0;            // boundary grade
  int max_bubbles = 0;  // truncation of closed components per element
  Rat delta;
  int k = 0;  // antisymmetrizer size |delta| + 1
  int ambient_dim = 0;
  int kernel_dim = 0;
  int ideal_dim = 0;
  bool equal = false;
  std::string note;
};

// Grade-n slice of the free linear circuit algebra on no generators:
// basis elements are the (0, n) matchings with up to max_bubbles closed
// loops. Compares the kernel of the evaluation morphism against the
// wiring closure of {loop - delta, coev(e(k))}. Every insertion of a
// generator reduces to contracting some of its legs, embedding the rest
// among the n boundary points, and filling the remaining points with a
// spectator matching: a wired-in neighbour strand that touches a
// generator leg either extends it to the boundary or closes it onto
// another leg, both of which are already counted.
CaKernelReport ca_ideal_kernel_check(const EvalFunctor& F, int n,
                                     int max_bubbles);

}  // namespace brauerkit
