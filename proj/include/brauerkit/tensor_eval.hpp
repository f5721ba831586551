#pragma once

// Evaluation of Brauer diagrams on tensor powers of a form-equipped
// vector space. Strands carry V = Q^d, caps apply a fixed bilinear form
// theta, cups apply the coevaluation solved from the triangle
// identities, and crossings swap factors (with a sign when theta is
// skew). Closed loops multiply by the categorical dimension.

#include "brauerkit/diagram.hpp"
#include "brauerkit/linalg.hpp"
#include "brauerkit/lincomb.hpp"
#include "brauerkit/palette.hpp"

namespace brauerkit {

enum class FormKind { symmetric, skew };

struct TensorForm {
  int d = 1;
  FormKind kind = FormKind::symmetric;
  Mat theta;          // d x d, nondegenerate
  Rat delta_claimed;  // d for symmetric, -d/2 for skew

  // Identity Gram matrix on Q^d.
  static TensorForm orthogonal(int d);
  // Standard block form [[0, I],[-I, 0]] on Q^d, d even.
  static TensorForm symplectic(int d);
};

class EvalFunctor {
 public:
  explicit EvalFunctor(TensorForm form);

  const TensorForm& form() const { return form_; }
  int dim(int strands) const;    // d^strands
  // 1 x d^2 row applying theta to a pair of factors.
  const Mat& cap_image() const { return cap_; }
  // d^2 x 1 column; the unique solution of both triangle identities.
  const Mat& cup_image() const { return cup_; }
  // evaluate(single closed loop); equals d for symmetric forms.
  Rat loop_scalar() const { return loop_; }

  // d^n x d^m matrix of a diagram m -> n, via the canonical snake
  // factorization permutation / caps / cups / permutation. Permutation
  // layers pick up their sign for skew forms.
  Mat evaluate(const Diagram& f) const;
  // Linear extension on a fixed arity (needed to size the zero sum).
  Mat evaluate(const LinComb<Diagram, Rat>& x, int m, int n) const;

  // Signed (for skew) permutation action on d^n.
  Mat permutation_matrix(const Permutation& p) const;

 private:
  TensorForm form_;
  Mat cap_, cup_;
  Rat loop_;
};

Rat loop_scalar(const EvalFunctor& F);

// Oriented evaluation for the general linear setting: up-strands carry
// V, down-strands carry the dual, both coordinatized on Q^d, and the
// pairing between them is the standard one. Input diagrams are coloured
// over an oriented palette; the underlying matrices are those of the
// identity-form evaluation without signs.
class OrientedEvalFunctor {
 public:
  OrientedEvalFunctor(int d);

  int d() const { return d_; }
  Mat evaluate(const ColouredDiagram& f) const;

 private:
  int d_;
  EvalFunctor plain_;
};

// Unsigned permutation action on d^n (images of the symmetric group
// inside End(V^{(x)n})).
Mat permutation_action(int d, const Permutation& p);

}  // namespace brauerkit
