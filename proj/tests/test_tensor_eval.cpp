// Tensor evaluation: hand matrices for d = 2, functoriality against the
// matrix product, and equivariance against the Lie-algebra oracle that
// shares no code with the diagram path.

#include "brauerkit/tensor_eval.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "brauerkit/checks.hpp"
#include "brauerkit/invariant_oracle.hpp"
#include "brauerkit/linear_brauer.hpp"

namespace {

using brauerkit::Diagram;
using brauerkit::EvalFunctor;
using brauerkit::GroupKind;
using brauerkit::LinComb;
using brauerkit::Mat;
using brauerkit::Permutation;
using brauerkit::Rat;
using brauerkit::TensorForm;

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

long long ipow(int b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("cap and cup images for the identity form on Q^2") {
  EvalFunctor F(TensorForm::orthogonal(2));
  Mat cap = F.evaluate(Diagram::cap());
  REQUIRE(cap.rows() == 1);
  REQUIRE(cap.cols() == 4);
  CHECK(cap.at(0, 0) == Rat(1));
  CHECK(cap.at(0, 1) == Rat(0));
  CHECK(cap.at(0, 2) == Rat(0));
  CHECK(cap.at(0, 3) == Rat(1));

  Mat cup = F.evaluate(Diagram::cup());
  REQUIRE(cup.rows() == 4);
  REQUIRE(cup.cols() == 1);
  CHECK(cup.at(0, 0) == Rat(1));
  CHECK(cup.at(1, 0) == Rat(0));
  CHECK(cup.at(2, 0) == Rat(0));
  CHECK(cup.at(3, 0) == Rat(1));
}

TEST_CASE("cap image for the standard skew form on Q^2") {
  EvalFunctor F(TensorForm::symplectic(2));
  Mat cap = F.evaluate(Diagram::cap());
  REQUIRE(cap.rows() == 1);
  REQUIRE(cap.cols() == 4);
  // theta(e1, e2) = 1, theta(e2, e1) = -1, diagonal zero.
  CHECK(cap.at(0, 0) == Rat(0));
  CHECK(cap.at(0, 1) == Rat(1));
  CHECK(cap.at(0, 2) == Rat(-1));
  CHECK(cap.at(0, 3) == Rat(0));
}

TEST_CASE("identity diagrams evaluate to identity matrices") {
  for (int d = 1; d <= 3; ++d) {
    EvalFunctor F(TensorForm::orthogonal(d));
    for (int n = 0; n <= 3; ++n)
      CHECK(F.evaluate(Diagram::identity(n)) ==
            Mat::identity(static_cast<int>(ipow(d, n))));
  }
  EvalFunctor S(TensorForm::symplectic(2));
  CHECK(S.evaluate(Diagram::identity(2)) == Mat::identity(4));
}

TEST_CASE("triangle identities hold as matrix equations") {
  for (auto form : {TensorForm::orthogonal(2), TensorForm::orthogonal(3),
                    TensorForm::symplectic(2), TensorForm::symplectic(4)}) {
    EvalFunctor F(form);
    for (int n = 1; n <= 2; ++n) {
      Diagram idn = Diagram::identity(n);
      Diagram left = compose(oplus(coev(idn), idn), oplus(idn, ev(idn)));
      Diagram right = compose(oplus(idn, coev(idn)), oplus(ev(idn), idn));
      Mat expect = Mat::identity(static_cast<int>(ipow(form.d, n)));
      CHECK(F.evaluate(left) == expect);
      CHECK(F.evaluate(right) == expect);
    }
  }
}

TEST_CASE("loop scalars") {
  for (int d = 1; d <= 4; ++d) {
    EvalFunctor F(TensorForm::orthogonal(d));
    CHECK(F.loop_scalar() == Rat(d));
    CHECK(F.evaluate(Diagram::loops(2)) ==
          Mat::scalar(Rat(d) * Rat(d)));
  }
  CHECK(EvalFunctor(TensorForm::symplectic(2)).loop_scalar() == Rat(-1));
  CHECK(EvalFunctor(TensorForm::symplectic(4)).loop_scalar() == Rat(-2));
}

TEST_CASE("claimed delta matches the computed loop scalar") {
  for (auto form : {TensorForm::orthogonal(1), TensorForm::orthogonal(3),
                    TensorForm::symplectic(2), TensorForm::symplectic(4)}) {
    EvalFunctor F(form);
    CHECK(F.loop_scalar() == form.delta_claimed);
  }
}

TEST_CASE("evaluation is functorial") {
  std::mt19937_64 rng(101);
  for (auto form : {TensorForm::orthogonal(2), TensorForm::symplectic(2)}) {
    EvalFunctor F(form);
    for (int trial = 0; trial < 60; ++trial) {
      int m = static_cast<int>(rng() % 4);
      int k = static_cast<int>(rng() % 4);
      int n = static_cast<int>(rng() % 4);
      if ((m + k) % 2 != 0) ++k;
      if ((k + n) % 2 != 0) ++n;
      Diagram f = random_diagram(rng, m, k, 1);
      Diagram g = random_diagram(rng, k, n, 1);
      CHECK(F.evaluate(compose(f, g)) == F.evaluate(g) * F.evaluate(f));
    }
  }
}

TEST_CASE("evaluation sends oplus to the Kronecker product") {
  std::mt19937_64 rng(102);
  for (auto form : {TensorForm::orthogonal(2), TensorForm::symplectic(2)}) {
    EvalFunctor F(form);
    for (int trial = 0; trial < 40; ++trial) {
      int m1 = static_cast<int>(rng() % 3), n1 = static_cast<int>(rng() % 3);
      int m2 = static_cast<int>(rng() % 3), n2 = static_cast<int>(rng() % 3);
      if ((m1 + n1) % 2 != 0) ++n1;
      if ((m2 + n2) % 2 != 0) ++n2;
      Diagram f = random_diagram(rng, m1, n1, 0);
      Diagram g = random_diagram(rng, m2, n2, 0);
      CHECK(F.evaluate(oplus(f, g)) ==
            F.evaluate(f).kron(F.evaluate(g)));
    }
  }
}

TEST_CASE("crossings act by signed factor swaps") {
  Permutation swap({1, 0});
  EvalFunctor sym2(TensorForm::orthogonal(2));
  CHECK(sym2.evaluate(Diagram::sym()) == sym2.permutation_matrix(swap));
  CHECK(sym2.permutation_matrix(swap) == brauerkit::permutation_action(2, swap));

  EvalFunctor skew2(TensorForm::symplectic(2));
  CHECK(skew2.evaluate(Diagram::sym()) == skew2.permutation_matrix(swap));
  CHECK(skew2.permutation_matrix(swap) ==
        brauerkit::permutation_action(2, swap).scaled(Rat(-1)));
}

TEST_CASE("permutation matrices respect composition order") {
  std::mt19937_64 rng(103);
  EvalFunctor F(TensorForm::orthogonal(2));
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    std::shuffle(im.begin(), im.end(), rng);
    Permutation p(im);
    std::shuffle(im.begin(), im.end(), rng);
    Permutation q(im);
    CHECK(F.permutation_matrix(p.after(q)) ==
          F.permutation_matrix(p) * F.permutation_matrix(q));
    CHECK(F.evaluate(brauerkit::permutation_diagram(p)) ==
          F.permutation_matrix(p));
  }
}

TEST_CASE("lie bases satisfy their defining relations") {
  for (int d = 1; d <= 3; ++d) {
    auto basis = brauerkit::lie_basis(GroupKind::orthogonal, d);
    CHECK(static_cast<int>(basis.size()) == d * (d - 1) / 2);
    for (const auto& x : basis) CHECK((x + x.transposed()).is_zero());
  }
  for (int d : {2, 4}) {
    Mat j = TensorForm::symplectic(d).theta;
    auto basis = brauerkit::lie_basis(GroupKind::symplectic, d);
    CHECK(static_cast<int>(basis.size()) == d * (d + 1) / 2);
    for (const auto& x : basis)
      CHECK((x.transposed() * j + j * x).is_zero());
  }
  auto gl = brauerkit::lie_basis(GroupKind::general_linear, 2);
  CHECK(gl.size() == 4);
}

TEST_CASE("evaluation lands in the invariant space of the oracle") {
  std::mt19937_64 rng(104);
  for (auto spec :
       {std::pair{GroupKind::orthogonal, TensorForm::orthogonal(2)},
        std::pair{GroupKind::orthogonal, TensorForm::orthogonal(3)},
        std::pair{GroupKind::symplectic, TensorForm::symplectic(2)}}) {
    EvalFunctor F(spec.second);
    auto basis = brauerkit::lie_basis(spec.first, spec.second.d);
    for (int trial = 0; trial < 25; ++trial) {
      int m = static_cast<int>(rng() % 3);
      int n = static_cast<int>(rng() % 3);
      if ((m + n) % 2 != 0) ++n;
      Diagram f = random_diagram(rng, m, n, 1);
      Mat a = F.evaluate(f);
      // X acts on Hom(V^m, V^n) by post minus pre composition.
      for (const auto& x : basis) {
        Mat post = brauerkit::rep_on_power(x, n) * a;
        Mat pre = a * brauerkit::rep_on_power(x, m);
        CHECK((post - pre).is_zero());
      }
    }
  }
}

TEST_CASE("orthogonal evaluation is reflection invariant") {
  std::mt19937_64 rng(105);
  for (int d = 2; d <= 3; ++d) {
    EvalFunctor F(TensorForm::orthogonal(d));
    Mat r = brauerkit::orthogonal_reflection(d);
    for (int trial = 0; trial < 20; ++trial) {
      int m = static_cast<int>(rng() % 3);
      int n = static_cast<int>(rng() % 3);
      if ((m + n) % 2 != 0) ++n;
      Diagram f = random_diagram(rng, m, n, 0);
      Mat a = F.evaluate(f);
      // The reflection is an involution, so invariance reads RaR = a
      // after moving powers to one side.
      CHECK(brauerkit::group_on_power(r, n) * a ==
            a * brauerkit::group_on_power(r, m));
    }
  }
}

TEST_CASE("invariant dimension oracle on closed forms") {
  // Invariants of O_d in V^{(x)2} are spanned by the form itself.
  for (int d = 1; d <= 3; ++d)
    CHECK(brauerkit::invariant_dimension(GroupKind::orthogonal, d, 0, 2) == 1);
  // End(V) invariants are scalars for every listed group.
  CHECK(brauerkit::invariant_dimension(GroupKind::orthogonal, 3, 1, 1) == 1);
  CHECK(brauerkit::invariant_dimension(GroupKind::symplectic, 2, 1, 1) == 1);
  CHECK(brauerkit::invariant_dimension(GroupKind::general_linear, 2, 1, 1) == 1);
  // GL invariants of V^{(x)2} alone vanish.
  CHECK(brauerkit::invariant_dimension(GroupKind::general_linear, 2, 0, 2) == 0);
  // Brauer count 3 in End(V^{(x)2}) for d >= 2, one relation at d = 1.
  CHECK(brauerkit::invariant_dimension(GroupKind::orthogonal, 2, 2, 2) == 3);
  CHECK(brauerkit::invariant_dimension(GroupKind::orthogonal, 1, 2, 2) == 1);
  CHECK_THROWS(brauerkit::invariant_dimension(GroupKind::orthogonal, 5, 1, 1));
  CHECK_THROWS(brauerkit::invariant_dimension(GroupKind::orthogonal, 2, 5, 4));
}

TEST_CASE("fft_check on a hand case") {
  EvalFunctor F(TensorForm::orthogonal(2));
  auto r = brauerkit::fft_check(
      F, 2, 2, brauerkit::invariant_dimension(GroupKind::orthogonal, 2, 2, 2));
  CHECK(r.ok);
  CHECK(r.basis_dim == 3);
  CHECK(r.rank == 3);
  CHECK(r.kernel_dim == 0);
  CHECK(r.expect_injective);
  CHECK(r.note.empty());
}

TEST_CASE("sft_check finds the e(2) ideal at d equal 1") {
  EvalFunctor F(TensorForm::orthogonal(1));
  auto r = brauerkit::sft_check(F, 2, 2, Rat(1), 8);
  CHECK(r.k == 2);
  CHECK(r.loop == Rat(1));
  CHECK(r.gen_vanishes);
  CHECK(r.kernel_dim == 2);
  CHECK(r.ideal_dim == 2);
  CHECK(r.equal);
  CHECK(r.note.empty());
}

TEST_CASE("gl_check on the smallest nontrivial cases") {
  auto r2 = brauerkit::gl_check(2, 2);
  CHECK(r2.ok);
  CHECK(r2.rank == 2);
  CHECK(r2.kernel_dim == 0);
  CHECK(r2.oriented_agrees);

  auto r3 = brauerkit::gl_check(2, 3);
  CHECK(r3.ok);
  CHECK(r3.factorial == 6);
  CHECK(r3.rank == 5);
  CHECK(r3.kernel_dim == 1);
  CHECK(r3.kernel_matches);
  CHECK(r3.oriented_agrees);
}

TEST_CASE("factors_through_specialization at the true loop value only") {
  for (auto form : {TensorForm::orthogonal(2), TensorForm::symplectic(2)}) {
    EvalFunctor F(form);
    auto eval = [&F](const Diagram& f) { return F.evaluate(f); };
    Rat loop = F.loop_scalar();
    CHECK(brauerkit::factors_through_specialization(eval, loop));
    CHECK(!brauerkit::factors_through_specialization(eval, loop + Rat(1)));
    CHECK(!brauerkit::factors_through_specialization(eval, loop - Rat(1)));
  }
}

TEST_CASE("linear extension evaluates termwise") {
  EvalFunctor F(TensorForm::orthogonal(2));
  LinComb<Diagram, Rat> e2 = brauerkit::antisymmetrizer<Rat>(2);
  Mat direct = F.evaluate(Diagram::identity(2)) - F.evaluate(Diagram::sym());
  CHECK(F.evaluate(e2, 2, 2) == direct);
  LinComb<Diagram, Rat> zero;
  Mat z = F.evaluate(zero, 1, 1);
  CHECK(z.rows() == 2);
  CHECK(z.is_zero());
}

TEST_CASE("oriented evaluation on coloured snakes") {
  using brauerkit::ColourList;
  brauerkit::Palette pal = brauerkit::Palette::oriented();
  brauerkit::OrientedEvalFunctor G(2);
  ColourList w = {0, 1};
  CHECK(G.evaluate(brauerkit::coloured_identity(pal, w)) == Mat::identity(4));
  Mat cup = G.evaluate(brauerkit::coloured_cup(pal, 0));
  REQUIRE(cup.rows() == 4);
  REQUIRE(cup.cols() == 1);
  CHECK(cup.at(0, 0) == Rat(1));
  CHECK(cup.at(3, 0) == Rat(1));
  CHECK(cup.at(1, 0) == Rat(0));
  // Oriented loops count the ambient dimension once per loop.
  Mat loops = G.evaluate(brauerkit::coloured_loops(pal, {0, 0}));
  CHECK(loops == Mat::scalar(Rat(4)));
}
