#pragma once

// Circuit algebras presented by exact matrices: one carrier per colour
// word, a monoid product over word concatenation, contractions gluing
// dual slots, and distinguished unit elements. The checkers verify the
// defining identities exhaustively within a grade budget.

#include <functional>
#include <string>
#include <vector>

#include "brauerkit/linalg.hpp"
#include "brauerkit/palette.hpp"
#include "brauerkit/tensor_eval.hpp"

namespace brauerkit {

struct CircuitAlgebraOracle {
  Palette palette;
  // Carrier dimension of A(w).
  std::function<int(const ColourList&)> dim;
  // A(w1) (x) A(w2) -> A(w1 w2) against the first-factor-major
  // flattening of the domain; dim(w1 w2) x dim(w1)*dim(w2).
  std::function<Mat(const ColourList&, const ColourList&)> prod;
  // Ground field into A(empty); dim(empty) x 1.
  Mat unit;
  // Contraction of dual slots i < j (0-based, w[j] = omega(w[i])):
  // A(w) -> A(w with both slots removed).
  std::function<Mat(const ColourList&, int, int)> contract;
  // Unit element of A(c, omega c) as a column.
  std::function<Mat(int)> eps;
  // Carrier relabelling A(w) -> A(w') with w'[p(i)] = w[i]. May be
  // empty; the unit axiom is then checked at front slots only.
  std::function<Mat(const ColourList&, const Permutation&)> act;
};

ColourList word_concat(const ColourList& a, const ColourList& b);
// w without slots i and j; i == j drops a single slot.
ColourList word_remove2(const ColourList& w, int i, int j);

// Endomorphism circuit algebra of a form: carriers are tensor powers of
// the strand space, the product is the Kronecker identification (an
// identity matrix), contraction evaluates a two-slot cap diagram, eps
// is the coevaluation. The functor is captured by reference and must
// outlive the oracle.
CircuitAlgebraOracle endomorphism_ca(const EvalFunctor& F);
// The oriented variant over the up/dn palette.
CircuitAlgebraOracle oriented_endomorphism_ca(const OrientedEvalFunctor& F);
// Every carrier the ground field, every map the identity scalar.
CircuitAlgebraOracle trivial_ca(const Palette& pal);

// Wraps every structure map in a shared cache keyed by its arguments.
// The wrapper holds copies of the original closures, so it outlives the
// argument, but not whatever those closures capture by reference.
CircuitAlgebraOracle ca_memoize(const CircuitAlgebraOracle& A);

struct CaReport {
  bool ok = true;
  long checked = 0;
  std::string failure;  // first failing identity, empty when ok

  void fail(const std::string& what) {
    if (ok) failure = what;
    ok = false;
  }
};

// All colour words of length <= max_len, shortest first.
std::vector<ColourList> all_words(const Palette& pal, int max_len);

// (c1) product associativity and two-sided unitality of the empty-word
// unit; (c2) disjoint contractions commute; (c3) contraction commutes
// with the product on either factor; (e1) eps elements are units for
// contraction. Exhaustive over index patterns of total grade
// <= max_total.
CaReport check_ca_axioms(const CircuitAlgebraOracle& A, int max_total);

// Derived modular-operad structure: x <> y = contract(x prod y) joined
// along one dual pair. Checks (m1) associativity of <>, (m3) <> versus
// a contraction inside one factor, (m4) the two orders of a parallel
// double join, and the eps unit law for <>.
CaReport derive_modular_operad(const CircuitAlgebraOracle& A, int max_total);

}  // namespace brauerkit
