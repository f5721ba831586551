#include "brauerkit/checks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace brauerkit {

namespace {

// |delta| as an int; the ideal comparisons need an integral bubble value.
int abs_int(const Rat& delta) {
  Rat a = abs(delta);
  if (a.get_den() != 1)
    throw std::invalid_argument("bubble value must be an integer");
  return static_cast<int>(a.get_num().get_si());
}

EchelonBasis columns_kernel(const Mat& e) {
  EchelonBasis ker(e.cols());
  for (Vec& v : nullspace(e)) ker.insert(std::move(v));
  return ker;
}

}  // namespace

Mat evaluation_matrix(const EvalFunctor& F, int m, int n) {
  const std::vector<Diagram> basis = open_basis(m, n);
  Mat e(F.dim(m) * F.dim(n), static_cast<int>(basis.size()));
  for (int c = 0; c < static_cast<int>(basis.size()); ++c) {
    const Vec col = F.evaluate(basis[c]).flatten_column_major();
    for (int r = 0; r < e.rows(); ++r) e.at(r, c) = col[r];
  }
  return e;
}

FftReport fft_check(const EvalFunctor& F, int m, int n, int oracle_dim) {
  FftReport rep;
  rep.m = m;
  rep.n = n;
  rep.oracle_dim = oracle_dim;

  const Mat e = evaluation_matrix(F, m, n);
  rep.basis_dim = e.cols();
  rep.rank = rank(e);
  rep.kernel_dim = rep.basis_dim - rep.rank;
  const Rat twice_delta = Rat(2) * abs(F.form().delta_claimed);
  rep.expect_injective = Rat(m + n) <= twice_delta;

  if ((m + n) % 2 != 0 && (rep.basis_dim != 0 || oracle_dim != 0))
    rep.note = "odd arity fails to vanish";
  else if (rep.rank != oracle_dim)
    rep.note = "rank differs from the invariant oracle";
  else if (rep.expect_injective && rep.kernel_dim != 0)
    rep.note = "kernel nontrivial on a small arity";
  rep.ok = rep.note.empty();
  return rep;
}

SftReport sft_check(const EvalFunctor& F, int m, int n, const Rat& delta,
                    int bound) {
  SftReport rep;
  rep.m = m;
  rep.n = n;
  rep.delta = delta;
  rep.k = abs_int(delta) + 1;
  rep.bound = bound;
  rep.loop = F.loop_scalar();

  const LinComb<Diagram, Rat> gen = antisymmetrizer<Rat>(rep.k);
  rep.gen_vanishes = F.evaluate(gen, rep.k, rep.k).is_zero();

  const EchelonBasis kernel = columns_kernel(evaluation_matrix(F, m, n));
  rep.kernel_dim = kernel.dim();

  const IdealSlice ideal = ideal_saturate({gen}, delta, bound);
  const EchelonBasis& slice = ideal.slice(m, n);
  rep.ideal_dim = slice.dim();
  rep.equal = kernel == slice;

  if (!rep.gen_vanishes)
    rep.note = "evaluation does not kill the antisymmetrizer";
  else if (!rep.equal)
    rep.note = "kernel differs from the ideal slice";
  return rep;
}

GlReport gl_check(int d, int n) {
  GlReport rep;
  rep.d = d;
  rep.n = n;

  // Lexicographic list of the group elements; the index map keys the
  // group-algebra coordinates.
  std::vector<Permutation> perms;
  std::map<std::vector<int>, int> index;
  {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    do {
      index.emplace(img, static_cast<int>(perms.size()));
      perms.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  rep.factorial = static_cast<long>(perms.size());

  int rows = 1;
  for (int i = 0; i < 2 * n; ++i) rows *= d;
  Mat e(rows, static_cast<int>(perms.size()));
  for (int c = 0; c < static_cast<int>(perms.size()); ++c) {
    const Vec col = permutation_action(d, perms[c]).flatten_column_major();
    for (int r = 0; r < rows; ++r) e.at(r, c) = col[r];
  }
  rep.rank = rank(e);
  rep.kernel_dim = static_cast<int>(perms.size()) - rep.rank;

  // Two-sided group-algebra ideal of the antisymmetrizer on d+1 points,
  // padded by fixed points up to n.
  EchelonBasis ideal(static_cast<int>(perms.size()));
  if (n > d) {
    std::vector<std::pair<std::vector<int>, int>> seed;  // (images, sign)
    std::vector<int> img(d + 1);
    for (int i = 0; i <= d; ++i) img[i] = i;
    do {
      std::vector<int> ext(n);
      for (int i = 0; i < n; ++i) ext[i] = i <= d ? img[i] : i;
      seed.emplace_back(ext, Permutation(img).sgn());
    } while (std::next_permutation(img.begin(), img.end()));

    for (const Permutation& p : perms)
      for (const Permutation& q : perms) {
        Vec v(perms.size(), Rat(0));
        for (const auto& [ext, sgn] : seed) {
          const Permutation r = p.after(Permutation(ext)).after(q);
          v[index.at(r.images())] += Rat(sgn);
        }
        ideal.insert(std::move(v));
      }
  }
  const EchelonBasis kernel = columns_kernel(e);
  rep.kernel_matches = kernel == ideal;

  // Oriented cross-check: the oriented functor reproduces the action on
  // the all-up word, and conjugating a mixed-word permutation diagram
  // into walled normal form matches the matrix conjugation.
  const OrientedEvalFunctor Fo(d);
  const Palette pal = Palette::oriented();
  ColourList mixed(n);
  for (int i = 0; i < n; ++i) mixed[i] = i % 2;
  const ColourList all_up(n, 0);
  rep.oriented_agrees = true;
  for (const Permutation& p : perms) {
    if (Fo.evaluate(coloured_permutation(pal, p, all_up)) !=
        permutation_action(d, p)) {
      rep.oriented_agrees = false;
      break;
    }
    const ColouredDiagram g = coloured_permutation(pal, p, mixed);
    const auto [w1, s1] = walled_normal_form(mixed);
    const auto [w2, s2] = walled_normal_form(output_type(g));
    const ColouredDiagram unshuffle =
        coloured_permutation(pal, s1.inverse(), w1);
    const ColouredDiagram walled = coloured_compose(
        coloured_compose(unshuffle, g),
        coloured_permutation(pal, s2, output_type(g)));
    const Mat lhs = Fo.evaluate(walled);
    const Mat rhs = permutation_action(d, s2) * Fo.evaluate(g) *
                    permutation_action(d, s1.inverse());
    if (lhs != rhs) {
      rep.oriented_agrees = false;
      break;
    }
  }

  if (n <= d && rep.rank != static_cast<int>(perms.size()))
    rep.note = "action is not injective on a small grade";
  else if (!rep.kernel_matches)
    rep.note = "kernel differs from the group-algebra ideal";
  else if (!rep.oriented_agrees)
    rep.note = "oriented formulation disagrees";
  rep.ok = rep.note.empty();
  return rep;
}

CaKernelReport ca_ideal_kernel_check(const EvalFunctor& F, int n,
                                     int max_bubbles) {
  CaKernelReport rep;
  rep.n = n;
  rep.max_bubbles = max_bubbles;
  rep.delta = F.loop_scalar();
  rep.k = abs_int(rep.delta) + 1;

  const std::vector<Diagram> matchings = open_basis(0, n);
  const int levels = max_bubbles + 1;
  const int m_count = static_cast<int>(matchings.size());
  rep.ambient_dim = m_count * levels;
  if (rep.ambient_dim == 0) {
    rep.equal = true;
    rep.note = "odd grade has no elements";
    return rep;
  }

  std::map<Diagram, int> m_index;
  for (int i = 0; i < m_count; ++i) m_index.emplace(matchings[i], i);
  const auto slot = [&](const Diagram& open, int bubbles) {
    return bubbles * m_count + m_index.at(open);
  };

  // Evaluation morphism columns; closed loops scale by the loop value.
  Mat u(F.dim(n), rep.ambient_dim);
  for (int j = 0; j < levels; ++j)
    for (int i = 0; i < m_count; ++i) {
      const Diagram with(0, n, matchings[i].pairs(), j);
      const Vec col = F.evaluate(with).flatten_column_major();
      for (int r = 0; r < u.rows(); ++r)
        u.at(r, slot(matchings[i], j)) = col[r];
    }
  const EchelonBasis kernel = columns_kernel(u);
  rep.kernel_dim = kernel.dim();

  EchelonBasis ideal(rep.ambient_dim);

  // Insertions of the bubble generator: every element gains or loses a
  // loop against its delta multiple.
  for (int j = 0; j + 1 < levels; ++j)
    for (int i = 0; i < m_count; ++i) {
      Vec v(rep.ambient_dim, Rat(0));
      v[slot(matchings[i], j + 1)] = 1;
      v[slot(matchings[i], j)] = -rep.delta;
      ideal.insert(std::move(v));
    }

  // Insertions of coev(e(k)): contract a self-pairing c of the 2k legs,
  // embed the survivors among the n boundary points in every order, and
  // fill the leftover points with a spectator matching.
  const LinComb<Diagram, Rat> gen = coev_antisymmetrizer<Rat>(rep.k);
  const int legs = 2 * rep.k;

  // Partial self-pairings as diagrams legs -> survivors.
  std::vector<Diagram> contractions;
  {
    // Iterate over all matchings of every even-sized subset.
    for (int mask = 0; mask < (1 << legs); ++mask) {
      std::vector<int> chosen;
      for (int i = 0; i < legs; ++i)
        if (mask & (1 << i)) chosen.push_back(i);
      if (chosen.size() % 2 != 0) continue;
      const int survivors = legs - static_cast<int>(chosen.size());
      if (survivors > n) continue;
      // All matchings on the chosen legs.
      std::vector<Diagram> subs = open_basis(0, static_cast<int>(chosen.size()));
      std::vector<int> rest;
      for (int i = 0; i < legs; ++i)
        if (!(mask & (1 << i))) rest.push_back(i);
      for (const Diagram& sub : subs) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& [a, b] : sub.pairs())
          pairs.emplace_back(chosen[a], chosen[b]);
        for (int t = 0; t < survivors; ++t)
          pairs.emplace_back(rest[t], legs + t);
        contractions.emplace_back(legs, survivors, pairs, 0);
      }
    }
  }

  for (const Diagram& c : contractions) {
    const int survivors = c.targets();
    const std::vector<Diagram> spectators = open_basis(0, n - survivors);
    // Ordered injections: a survivor subset of the boundary in every
    // arrangement.
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != survivors) continue;
      std::vector<int> pos, comp;
      for (int i = 0; i < n; ++i)
        (mask & (1 << i) ? pos : comp).push_back(i);
      std::vector<int> order(survivors);
      for (int i = 0; i < survivors; ++i) order[i] = i;
      do {
        for (const Diagram& spec : spectators) {
          Vec v(rep.ambient_dim, Rat(0));
          bool within = true;
          for (const auto& [term, coeff] : gen.terms()) {
            const Diagram reduced = compose(term, c);
            if (reduced.closed() > max_bubbles) {
              within = false;
              break;
            }
            std::vector<std::pair<int, int>> pairs;
            for (const auto& [a, b] : reduced.pairs())
              pairs.emplace_back(pos[order[a]], pos[order[b]]);
            for (const auto& [a, b] : spec.pairs())
              pairs.emplace_back(comp[a], comp[b]);
            const Diagram open(0, n, pairs, 0);
            v[slot(open, reduced.closed())] += coeff;
          }
          if (within) ideal.insert(std::move(v));
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }

  rep.ideal_dim = ideal.dim();
  rep.equal = kernel == ideal;
  if (!rep.equal) rep.note = "kernel differs from the wiring closure";
  return rep;
}

}  // namespace brauerkit
