// brauerkit: exact calculator for Brauer diagrams and driver for the
// verification suites. Subcommands: compose, eval, dims, enumerate,
// ideal, check <suite>. Reports are JSON (CSV for plain tables with
// --csv); identical inputs and seeds produce byte-identical output.
// BRAUERKIT_BUDGET caps the entry count of any dense matrix assembled
// here.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "brauerkit/ca_oracle.hpp"
#include "brauerkit/checks.hpp"
#include "brauerkit/diagram.hpp"
#include "brauerkit/expr.hpp"
#include "brauerkit/invariant_oracle.hpp"
#include "brauerkit/io.hpp"
#include "brauerkit/linear_brauer.hpp"
#include "brauerkit/tensor_eval.hpp"
#include "brauerkit/wheeled.hpp"
#include "brauerkit/wiring.hpp"

namespace bk = brauerkit;
using bk::json;
using bk::Rat;

namespace {

// ---------------------------------------------------------------- plumbing

long long budget_cells() {
  const char* env = std::getenv("BRAUERKIT_BUDGET");
  if (!env || !*env) return 8'000'000;
  return std::atoll(env);
}

void require_budget(long long cells, const std::string& what) {
  long long cap = budget_cells();
  if (cells > cap)
    throw std::runtime_error("budget exceeded: " + what + " needs " +
                             std::to_string(cells) + " entries, cap is " +
                             std::to_string(cap) +
                             " (raise BRAUERKIT_BUDGET to override)");
}

// d^k, saturating far above any budget instead of overflowing.
long long dpow(int d, int k) {
  long long v = 1;
  for (int i = 0; i < k; ++i) {
    if (v > (1LL << 60) / (d > 1 ? d : 2)) return 1LL << 61;
    v *= d;
  }
  return v;
}

long long double_factorial(int k) {
  long long v = 1;
  for (int i = k; i > 1; i -= 2) v *= i;
  return v;
}

void deliver(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    bk::write_text_file(out_path, text);
}

bk::TensorForm form_of(const std::string& kind, int d) {
  if (kind == "symmetric") return bk::TensorForm::orthogonal(d);
  if (kind == "skew") return bk::TensorForm::symplectic(d);
  throw std::runtime_error("kind '" + kind + "' has no bilinear form here");
}

// Uniform open pairing with the requested arity, plus a loop count.
bk::Diagram random_diagram_mn(std::mt19937_64& rng, int m, int n,
                              int max_closed) {
  std::vector<int> points(m + n);
  for (int i = 0; i < m + n; ++i) points[i] = i;
  std::vector<std::pair<int, int>> pairs;
  while (!points.empty()) {
    int a = points.front();
    points.erase(points.begin());
    size_t j = rng() % points.size();
    pairs.emplace_back(a, points[j]);
    points.erase(points.begin() + j);
  }
  int closed = max_closed > 0 ? static_cast<int>(rng() % (max_closed + 1)) : 0;
  return bk::Diagram(m, n, std::move(pairs), closed);
}

// Accumulates one suite's units and its overall verdict.
struct Suite {
  std::string name;
  json params = json::object();
  std::vector<json> units;
  bool ok = true;

  void add(json unit, bool unit_ok) {
    unit["ok"] = unit_ok;
    units.push_back(std::move(unit));
    ok = ok && unit_ok;
  }
  json envelope() const {
    return json{
        {"suite", name}, {"params", params}, {"units", units}, {"ok", ok}};
  }
};

// ------------------------------------------------------------- subcommands

int run_compose(const std::vector<std::string>& exprs,
                const std::string& palette_path, const std::string& out_path) {
  std::string text;
  if (palette_path.empty()) {
    for (const std::string& s : exprs) {
      bk::Elaborated el = bk::elaborate(bk::parse_expression(s));
      text += bk::print_lincomb(el.value) + "\n";
    }
  } else {
    bk::Palette pal = bk::load_palette(palette_path);
    for (const std::string& s : exprs)
      text += bk::print_coloured(
                  bk::elaborate_coloured(bk::parse_expression(s, pal), pal)) +
              "\n";
  }
  deliver(out_path, text);
  return 0;
}

int run_eval(const std::string& expr, const std::string& kind, int d, bool csv,
             const std::string& out_path) {
  json report;
  bk::Mat a;
  if (kind == "gl") {
    bk::Palette pal = bk::Palette::oriented();
    bk::ExprPtr e = bk::parse_expression(expr, pal);
    bk::ColouredDiagram f = bk::elaborate_coloured(e, pal);
    require_budget(dpow(d, f.base.points()), "oriented evaluation");
    bk::OrientedEvalFunctor F(d);
    a = F.evaluate(f);
    report = json{{"expr", bk::print_expression(e)},
                  {"kind", kind},
                  {"d", d},
                  {"m", f.base.sources()},
                  {"n", f.base.targets()}};
  } else {
    bk::ExprPtr e = bk::parse_expression(expr);
    bk::Elaborated el = bk::elaborate(e);
    require_budget(dpow(d, el.m + el.n), "evaluation");
    bk::EvalFunctor F{form_of(kind, d)};
    a = F.evaluate(el.value, el.m, el.n);
    report = json{{"expr", bk::print_expression(e)},
                  {"kind", kind},
                  {"d", d},
                  {"m", el.m},
                  {"n", el.n},
                  {"loop", bk::rat_to_json(F.loop_scalar())}};
  }
  if (csv) {
    std::string text;
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c)
        text += bk::to_string(a.at(r, c)) + (c + 1 == a.cols() ? "\n" : ",");
    deliver(out_path, text);
    return 0;
  }
  report["matrix"] = bk::mat_to_json(a);
  deliver(out_path, bk::dump_json(report));
  return 0;
}

int run_dims(int m_max, int n_max, bool csv, const std::string& out_path) {
  require_budget(double_factorial(m_max + n_max - 1), "diagram enumeration");
  std::string text;
  json entries = json::array();
  if (csv) text = "m,n,dim\n";
  for (int m = 0; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n) {
      long long dim = static_cast<long long>(bk::open_basis(m, n).size());
      if (csv)
        text += std::to_string(m) + "," + std::to_string(n) + "," +
                std::to_string(dim) + "\n";
      else
        entries.push_back(json{{"m", m}, {"n", n}, {"dim", dim}});
    }
  if (!csv)
    text = bk::dump_json(
        json{{"m_max", m_max}, {"n_max", n_max}, {"entries", entries}});
  deliver(out_path, text);
  return 0;
}

int run_enumerate(const std::vector<int>& mn, bool csv,
                  const std::string& out_path) {
  int m = mn[0], n = mn[1];
  require_budget(double_factorial(m + n - 1), "diagram enumeration");
  std::vector<bk::Diagram> basis = bk::open_basis(m, n);
  std::string text;
  if (csv) {
    text = "diagram\n";
    for (const bk::Diagram& f : basis) text += f.str() + "\n";
  } else {
    json list = json::array();
    for (const bk::Diagram& f : basis) list.push_back(f.str());
    text = bk::dump_json(json{{"m", m},
                              {"n", n},
                              {"count", static_cast<long long>(basis.size())},
                              {"diagrams", list}});
  }
  deliver(out_path, text);
  return 0;
}

int run_ideal(const std::vector<std::string>& gen_texts,
              const std::string& delta_text, int bound,
              const std::vector<int>& mn, const std::string& out_path) {
  Rat delta = bk::rat_from_string(delta_text);
  std::vector<bk::LinComb<bk::Diagram, Rat>> gens;
  json gen_names = json::array();
  for (const std::string& s : gen_texts) {
    bk::Elaborated el = bk::elaborate(bk::parse_expression(s));
    gen_names.push_back(bk::print_lincomb(el.value));
    gens.push_back(std::move(el.value));
  }
  require_budget(double_factorial(bound - 1) * double_factorial(bound - 1),
                 "ideal saturation");
  bk::IdealSlice ideal = bk::ideal_saturate(gens, delta, bound);
  std::vector<std::pair<int, int>> slices;
  if (!mn.empty())
    slices.emplace_back(mn[0], mn[1]);
  else
    for (int m = 0; m <= bound; ++m)
      for (int n = 0; m + n <= bound; ++n)
        if ((m + n) % 2 == 0) slices.emplace_back(m, n);
  json out_slices = json::array();
  for (auto [m, n] : slices) {
    const std::vector<bk::Diagram>& basis = ideal.basis(m, n);
    json vectors = json::array();
    for (const bk::Vec& row : ideal.slice(m, n).rows())
      vectors.push_back(bk::print_lincomb(bk::from_coords(row, basis)));
    out_slices.push_back(json{{"m", m},
                              {"n", n},
                              {"ambient_dim", static_cast<int>(basis.size())},
                              {"dim", ideal.dim(m, n)},
                              {"basis", vectors}});
  }
  deliver(out_path, bk::dump_json(json{{"delta", bk::rat_to_json(delta)},
                                       {"bound", bound},
                                       {"generators", gen_names},
                                       {"slices", out_slices}}));
  return 0;
}

// ------------------------------------------------------------ check suites

void suite_counts(Suite& s, int max_total) {
  require_budget(double_factorial(max_total - 1), "diagram enumeration");
  for (int m = 0; m <= max_total; ++m)
    for (int n = 0; m + n <= max_total; ++n) {
      long long count = static_cast<long long>(bk::open_basis(m, n).size());
      long long expected =
          (m + n) % 2 == 0 ? double_factorial(m + n - 1) : 0;
      s.add(json{{"m", m}, {"n", n}, {"count", count}, {"expected", expected}},
            count == expected);
    }
}

// One law's pass count, verdict and first failing instance.
struct LawTally {
  long checked = 0;
  bool ok = true;
  std::string witness;

  void note(bool pass, const std::string& instance) {
    ++checked;
    if (!pass && ok) {
      ok = false;
      witness = instance;
    }
  }
  void report(Suite& s, const std::string& law) const {
    json unit{{"law", law}, {"checked", checked}};
    if (!ok) unit["witness"] = witness;
    s.add(std::move(unit), ok);
  }
};

// Composition, identity, interchange, braid naturality and the snake
// identities, exhaustively at small size and on seeded random triples.
void suite_category_laws(Suite& s, int max_points, int random_points,
                         long count, unsigned long seed) {
  using bk::Diagram;
  auto block_swap = [](int a, int b) {
    std::vector<int> images(a + b);
    for (int i = 0; i < a; ++i) images[i] = b + i;
    for (int i = 0; i < b; ++i) images[a + i] = i;
    return bk::permutation_diagram(bk::Permutation(images));
  };

  LawTally assoc, unit, inter, braid, snake;
  auto check_triple = [&](const Diagram& f, const Diagram& g,
                          const Diagram& h) {
    // f: a->b, g: b->c, h: c->e, composed left to right.
    assoc.note(compose(compose(f, g), h) == compose(f, compose(g, h)),
               f.str() + " ; " + g.str() + " ; " + h.str());
  };
  auto check_one = [&](const Diagram& f) {
    unit.note(compose(Diagram::identity(f.sources()), f) == f &&
                  compose(f, Diagram::identity(f.targets())) == f,
              f.str());
  };
  auto check_pair = [&](const Diagram& f, const Diagram& g) {
    Diagram lhs = compose(oplus(f, g), block_swap(f.targets(), g.targets()));
    Diagram rhs = compose(block_swap(f.sources(), g.sources()), oplus(g, f));
    braid.note(lhs == rhs, f.str() + " ; " + g.str());
  };
  auto check_square = [&](const Diagram& f, const Diagram& f2,
                          const Diagram& g, const Diagram& g2) {
    // f: a->b, f2: b->c alongside g: a2->b2, g2: b2->c2.
    inter.note(compose(oplus(f, g), oplus(f2, g2)) ==
                   oplus(compose(f, f2), compose(g, g2)),
               f.str() + " ; " + g.str());
  };

  // Exhaustive sweep; every diagram involved has m+n <= max_points.
  for (int a = 0; a <= max_points; ++a)
    for (int b = 0; a + b <= max_points; ++b) {
      for (const Diagram& f : bk::enumerate_diagrams(a, b, 1)) {
        check_one(f);
        for (int c = 0; b + c <= max_points; ++c)
          for (const Diagram& g : bk::enumerate_diagrams(b, c, 1)) {
            check_square(f, g, f, g);
            for (int e = 0; c + e <= max_points; ++e)
              for (const Diagram& h : bk::enumerate_diagrams(c, e, 1))
                check_triple(f, g, h);
          }
        for (int a2 = 0; a2 + a <= max_points; ++a2)
          for (int b2 = 0; a2 + b2 <= max_points && b + b2 <= max_points; ++b2)
            for (const Diagram& g : bk::enumerate_diagrams(a2, b2, 1))
              check_pair(f, g);
      }
    }

  // Seeded random triples at larger size.
  std::mt19937_64 rng(seed);
  int half = random_points / 2;
  for (long i = 0; i < count; ++i) {
    int a = static_cast<int>(rng() % (half + 1));
    int b = static_cast<int>(rng() % (half + 1));
    int c = static_cast<int>(rng() % (half + 1));
    int e = static_cast<int>(rng() % (half + 1));
    if ((a + b) % 2) b = b > 0 ? b - 1 : b + 1;
    if ((b + c) % 2) c = c > 0 ? c - 1 : c + 1;
    if ((c + e) % 2) e = e > 0 ? e - 1 : e + 1;
    Diagram f = random_diagram_mn(rng, a, b, 2);
    Diagram g = random_diagram_mn(rng, b, c, 2);
    Diagram h = random_diagram_mn(rng, c, e, 2);
    check_triple(f, g, h);
    check_one(f);
    check_pair(f, g);
    check_square(f, g, random_diagram_mn(rng, b, c, 1),
                 random_diagram_mn(rng, c, e, 1));
  }

  // Snake identities on nested cups and caps.
  for (int n = 1; n <= 4; ++n) {
    Diagram idn = Diagram::identity(n);
    Diagram cupn = bk::coev(idn), capn = bk::ev(idn);
    snake.note(compose(oplus(cupn, idn), oplus(idn, capn)) == idn &&
                   compose(oplus(idn, cupn), oplus(capn, idn)) == idn,
               "n = " + std::to_string(n));
  }

  assoc.report(s, "associativity");
  unit.report(s, "identity");
  inter.report(s, "interchange");
  braid.report(s, "braid_naturality");
  snake.report(s, "triangle");
}

void suite_fft(Suite& s, const std::string& kind, int d, int max_total) {
  bk::EvalFunctor F{form_of(kind, d)};
  bk::GroupKind g = kind == "symmetric" ? bk::GroupKind::orthogonal
                                        : bk::GroupKind::symplectic;
  for (int m = 0; m <= max_total; ++m)
    for (int n = 0; m + n <= max_total; ++n) {
      require_budget(dpow(d, m + n), "evaluation matrix");
      bk::FftReport r = bk::fft_check(F, m, n, bk::invariant_dimension(g, d, m, n));
      s.add(bk::report_json(r), r.ok);
    }
}

void suite_sft(Suite& s, const std::string& kind, int d,
               const std::vector<int>& mn, const std::string& delta_text,
               int bound_opt) {
  bk::EvalFunctor F{form_of(kind, d)};
  Rat delta = delta_text.empty() ? F.form().delta_claimed
                                 : bk::rat_from_string(delta_text);
  std::vector<std::pair<int, int>> slices;
  if (!mn.empty()) {
    slices.emplace_back(mn[0], mn[1]);
  } else {
    // Smallest total where the kernel turns on: one pair past 2|delta|.
    Rat a = delta < 0 ? Rat(-delta) : delta;
    if (a.get_den() != 1)
      throw std::runtime_error("sft: pass --mn for a non-integer delta");
    int total = 2 * static_cast<int>(a.get_num().get_si()) + 2;
    for (int m = 0; m <= total; ++m) slices.emplace_back(m, total - m);
  }
  for (auto [m, n] : slices) {
    int bound = bound_opt > 0 ? bound_opt : 2 * (m + n);
    require_budget(dpow(d, m + n), "evaluation matrix");
    bk::SftReport r = bk::sft_check(F, m, n, delta, bound);
    // Skew forms are verified-or-reported: the unit passes when the
    // verdict fields are faithful, and the report carries the outcome.
    bool unit_ok = kind == "skew"
                       ? r.note.empty() == (r.gen_vanishes && r.equal)
                       : r.note.empty();
    s.add(bk::report_json(r), unit_ok);
  }
}

void suite_gl(Suite& s, int d, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    require_budget(dpow(d, 2 * n), "tensor power action");
    bk::GlReport r = bk::gl_check(d, n);
    s.add(bk::report_json(r), r.ok);
  }
}

void suite_ca(Suite& s, const std::string& oracle_path,
              const std::string& kind, int d, int max_total) {
  bk::CircuitAlgebraOracle A;
  bk::EvalFunctor F{bk::TensorForm::orthogonal(1)};
  bk::OrientedEvalFunctor G{1};
  if (!oracle_path.empty()) {
    json j = json::parse(bk::read_text_file(oracle_path));
    A = bk::oracle_from_json(j);
    if (j.contains("bound")) max_total = std::min(max_total, j["bound"].get<int>());
  } else if (kind == "gl") {
    G = bk::OrientedEvalFunctor(d);
    A = bk::oriented_endomorphism_ca(G);
  } else {
    F = bk::EvalFunctor(form_of(kind, d));
    A = bk::endomorphism_ca(F);
  }
  require_budget(dpow(d, 2 * max_total), "structure maps");
  bk::CaReport axioms = bk::check_ca_axioms(A, max_total);
  json ja = bk::report_json(axioms);
  ja["unit"] = "axioms";
  s.add(std::move(ja), axioms.ok);
  bk::CaReport modular = bk::derive_modular_operad(A, max_total);
  json jm = bk::report_json(modular);
  jm["unit"] = "modular_operad";
  s.add(std::move(jm), modular.ok);
}

void suite_wheeled(Suite& s, int d, int max_total) {
  require_budget(dpow(d, 2 * max_total), "structure maps");
  bk::OrientedEvalFunctor F(d);
  bk::CircuitAlgebraOracle A = bk::oriented_endomorphism_ca(F);
  bk::WheeledPropView P = bk::ca_to_wheeled_prop(A);
  bk::CaReport axioms = bk::check_wheeled_axioms(P, max_total);
  json ja = bk::report_json(axioms);
  ja["unit"] = "axioms";
  s.add(std::move(ja), axioms.ok);
  bk::CaReport round = bk::check_wheeled_roundtrip(A, max_total);
  json jr = bk::report_json(round);
  jr["unit"] = "roundtrip";
  s.add(std::move(jr), round.ok);
}

// Seeded wiring diagram with the given output type. Targets store the
// output word directly; a target pairs with another target only when
// their stored colours are omega-dual, everything else runs to a fresh
// source point, so every draw satisfies the pairing rule.
bk::WiringDiagram random_wiring(std::mt19937_64& rng, const bk::Palette& pal,
                                const bk::ColourList& out_type,
                                int max_extra) {
  int n = static_cast<int>(out_type.size());
  std::vector<std::pair<int, int>> target_pairs;
  std::vector<int> to_source;
  std::vector<char> used(n, 0);
  for (int t = 0; t < n; ++t) {
    if (used[t]) continue;
    used[t] = 1;
    std::vector<int> partners;
    for (int b = t + 1; b < n; ++b)
      if (!used[b] && out_type[b] == pal.omega(out_type[t]))
        partners.push_back(b);
    if (!partners.empty() && rng() % 2 == 0) {
      int b = partners[rng() % partners.size()];
      used[b] = 1;
      target_pairs.emplace_back(t, b);
    } else {
      to_source.push_back(t);
    }
  }
  int extra = static_cast<int>(rng() % (max_extra + 1));
  int m = static_cast<int>(to_source.size()) + 2 * extra;
  std::vector<int> srcs(m);
  for (int i = 0; i < m; ++i) srcs[i] = i;
  for (int i = m; i > 1; --i) std::swap(srcs[i - 1], srcs[rng() % i]);

  std::vector<std::pair<int, int>> pairs;
  std::vector<int> colours(m + n);
  int next = 0;
  for (int t : to_source) {
    int src = srcs[next++];
    pairs.emplace_back(src, m + t);
    colours[m + t] = out_type[t];
    colours[src] = pal.omega(out_type[t]);
  }
  for (int e = 0; e < extra; ++e) {
    int a = srcs[next++], b = srcs[next++];
    pairs.emplace_back(a, b);
    int c = static_cast<int>(rng() % pal.size());
    colours[a] = c;
    colours[b] = pal.omega(c);
  }
  for (auto [t, b] : target_pairs) {
    pairs.emplace_back(m + t, m + b);
    colours[m + t] = out_type[t];
    colours[m + b] = out_type[b];
  }
  int closed = static_cast<int>(rng() % 2);
  std::vector<int> orbits;
  for (int k = 0; k < closed; ++k)
    orbits.push_back(pal.orbit(static_cast<int>(rng() % pal.size())));
  bk::ColouredDiagram body = bk::make_coloured(
      pal, bk::Diagram(m, n, std::move(pairs), closed), std::move(colours),
      std::move(orbits));

  std::vector<int> sizes;
  int left = m;
  while (left > 0) {
    int sz = 1 + static_cast<int>(rng() % std::min(left, 3));
    sizes.push_back(sz);
    left -= sz;
  }
  if (sizes.empty() || rng() % 4 == 0) sizes.push_back(0);
  return bk::make_wiring(std::move(body), std::move(sizes));
}

void suite_operad(Suite& s, int max_blocks, long count, unsigned long seed);

void suite_kernel(Suite& s, int d, int n_max, int max_bubbles) {
  bk::EvalFunctor F{bk::TensorForm::orthogonal(d)};
  for (int n = 0; n <= n_max; ++n) {
    require_budget(double_factorial(n - 1) * double_factorial(n - 1),
                   "free circuit algebra slice");
    bk::CaKernelReport r = bk::ca_ideal_kernel_check(F, n, max_bubbles);
    s.add(bk::report_json(r), r.equal);
  }
}

void suite_parser(Suite& s, long count, unsigned long seed,
                  const std::string& palette_path) {
  std::mt19937_64 rng(seed);
  bool diagrams_ok = true, coloured_ok = true, exprs_ok = true;
  for (long i = 0; i < count; ++i) {
    bk::Diagram f = bk::random_diagram(rng, 8, 2);
    bk::ExprPtr e = bk::parse_expression(f.str());
    bk::Elaborated el = bk::elaborate(e);
    diagrams_ok = diagrams_ok && bk::print_expression(e) == f.str() &&
                  el.value.size() == 1 && el.value.coeff(f) == Rat(1);
  }
  bk::Palette pal = palette_path.empty() ? bk::Palette::oriented()
                                         : bk::load_palette(palette_path);
  for (long i = 0; i < count; ++i) {
    bk::ColouredDiagram f = bk::random_coloured_diagram(rng, pal, 6, 2);
    std::string text = bk::print_coloured(f);
    bk::ExprPtr e = bk::parse_expression(text, pal);
    coloured_ok = coloured_ok && bk::print_expression(e) == text &&
                  bk::elaborate_coloured(e, pal) == f;
  }
  for (long i = 0; i < count; ++i) {
    bk::ExprPtr e = bk::random_expression(rng, 4);
    std::string text = bk::print_expression(e);
    bk::ExprPtr back = bk::parse_expression(text);
    exprs_ok = exprs_ok && *back == *e && bk::print_expression(back) == text &&
               bk::elaborate(back).value == bk::elaborate(e).value;
  }
  s.add(json{{"what", "diagram_round_trip"}, {"count", count}}, diagrams_ok);
  s.add(json{{"what", "coloured_round_trip"}, {"count", count}}, coloured_ok);
  s.add(json{{"what", "expression_round_trip"}, {"count", count}}, exprs_ok);
}

int run_check(const std::string& suite_name, const std::string& kind, int d,
              int max_total, const std::vector<int>& mn,
              const std::string& delta_text, int bound,
              const std::string& palette_path, const std::string& oracle_path,
              unsigned long seed, long count, const std::string& out_path) {
  Suite s;
  s.name = suite_name;
  s.params["seed"] = seed;
  if (suite_name == "counts") {
    int t = max_total > 0 ? max_total : 10;
    s.params["max_total"] = t;
    suite_counts(s, t);
  } else if (suite_name == "category-laws") {
    int t = max_total > 0 ? max_total : 4;
    long c = count > 0 ? count : 1000;
    s.params["max_points"] = t;
    s.params["count"] = c;
    suite_category_laws(s, t, 2 * t, c, seed);
  } else if (suite_name == "fft") {
    int t = max_total > 0 ? max_total : 6;
    s.params["kind"] = kind;
    s.params["d"] = d;
    s.params["max_total"] = t;
    suite_fft(s, kind, d, t);
  } else if (suite_name == "sft") {
    s.params["kind"] = kind;
    s.params["d"] = d;
    suite_sft(s, kind, d, mn, delta_text, bound);
  } else if (suite_name == "gl") {
    int t = max_total > 0 ? max_total : d + 1;
    s.params["d"] = d;
    s.params["n_max"] = t;
    suite_gl(s, d, t);
  } else if (suite_name == "ca") {
    int t = max_total > 0 ? max_total : 4;
    s.params["kind"] = oracle_path.empty() ? kind : "file";
    s.params["d"] = d;
    s.params["max_total"] = t;
    suite_ca(s, oracle_path, kind, d, t);
  } else if (suite_name == "wheeled") {
    int t = max_total > 0 ? max_total : 4;
    s.params["d"] = d;
    s.params["max_total"] = t;
    suite_wheeled(s, d, t);
  } else if (suite_name == "operad") {
    int t = max_total > 0 ? max_total : 3;
    long c = count > 0 ? count : 200;
    s.params["max_blocks"] = t;
    s.params["count"] = c;
    suite_operad(s, t, c, seed);
  } else if (suite_name == "kernel") {
    int t = max_total > 0 ? max_total : 6;
    int b = bound > 0 ? bound : 2;
    s.params["d"] = d;
    s.params["n_max"] = t;
    s.params["max_bubbles"] = b;
    suite_kernel(s, d, t, b);
  } else if (suite_name == "parser") {
    long c = count > 0 ? count : 1000;
    s.params["count"] = c;
    suite_parser(s, c, seed, palette_path);
  } else {
    throw std::runtime_error("unknown suite '" + suite_name + "'");
  }
  deliver(out_path, bk::dump_json(s.envelope()));
  return s.ok ? 0 : 1;
}

// gamma unit and associativity laws, equivariance of the block action,
// and closure of connectedness and downwardness under composition.
void suite_operad(Suite& s, int max_blocks, long count, unsigned long seed) {
  std::mt19937_64 rng(seed);
  long units = 0, assoc = 0, equiv = 0, closure = 0;
  bool units_ok = true, assoc_ok = true, equiv_ok = true, closure_ok = true;
  std::vector<bk::Palette> pals{bk::Palette::monochrome(),
                                bk::Palette::oriented()};
  auto random_out = [&](const bk::Palette& pal) {
    bk::ColourList w(rng() % 3);
    for (int& c : w) c = static_cast<int>(rng() % pal.size());
    return w;
  };
  auto fillers_for = [&](const bk::WiringDiagram& g, int blocks_cap) {
    std::vector<bk::WiringDiagram> fs;
    for (int i = 0; i < g.blocks(); ++i)
      fs.push_back(random_wiring(rng, g.body.palette,
                                 bk::block_type(g, i), blocks_cap));
    return fs;
  };
  for (long it = 0; it < count; ++it) {
    const bk::Palette& pal = pals[it % pals.size()];
    bk::WiringDiagram g = random_wiring(rng, pal, random_out(pal), max_blocks);

    // Unit laws.
    bk::WiringDiagram outer = bk::identity_wiring(pal, bk::wiring_output(g));
    units_ok = units_ok && bk::gamma(outer, {g}) == g;
    std::vector<bk::WiringDiagram> ids;
    for (int i = 0; i < g.blocks(); ++i)
      ids.push_back(bk::identity_wiring(pal, bk::block_type(g, i)));
    units_ok = units_ok && bk::gamma(g, ids) == g;
    ++units;

    // Associativity of nested filling.
    std::vector<bk::WiringDiagram> fs = fillers_for(g, max_blocks);
    bk::WiringDiagram mid = bk::gamma(g, fs);
    std::vector<bk::WiringDiagram> hs = fillers_for(mid, 1);
    bk::WiringDiagram lhs = bk::gamma(mid, hs);
    std::vector<bk::WiringDiagram> inner;
    size_t pos = 0;
    for (const bk::WiringDiagram& f : fs) {
      std::vector<bk::WiringDiagram> part(hs.begin() + pos,
                                          hs.begin() + pos + f.blocks());
      pos += f.blocks();
      inner.push_back(bk::gamma(f, part));
    }
    assoc_ok = assoc_ok && lhs == bk::gamma(g, inner);
    ++assoc;

    // Equivariance of the block action.
    if (g.blocks() > 1) {
      std::vector<int> images(g.blocks());
      for (size_t i = 0; i < images.size(); ++i) images[i] = static_cast<int>(i);
      for (size_t i = images.size(); i > 1; --i)
        std::swap(images[i - 1], images[rng() % i]);
      bk::Permutation p{images};
      std::vector<bk::WiringDiagram> perm_fs(fs.size());
      for (int i = 0; i < g.blocks(); ++i) perm_fs[p(i)] = fs[i];
      // Composite blocks travel with their filler group.
      std::vector<int> offsets(g.blocks() + 1, 0), new_offsets(g.blocks() + 1, 0);
      for (int i = 0; i < g.blocks(); ++i)
        offsets[i + 1] = offsets[i] + fs[i].blocks();
      for (int j = 0; j < g.blocks(); ++j) {
        int i = p.inverse()(j);
        new_offsets[j + 1] = new_offsets[j] + fs[i].blocks();
      }
      std::vector<int> q_images(offsets[g.blocks()]);
      for (int i = 0; i < g.blocks(); ++i)
        for (int b = 0; b < fs[i].blocks(); ++b)
          q_images[offsets[i] + b] = new_offsets[p(i)] + b;
      equiv_ok = equiv_ok &&
                 bk::gamma(bk::block_permute(g, p), perm_fs) ==
                     bk::block_permute(bk::gamma(g, fs), bk::Permutation(q_images));
      ++equiv;
    }

    // Connectedness and downwardness survive gamma.
    bool parts_connected = bk::is_connected(g);
    bool parts_downward = bk::is_nonunital_admissible(g);
    for (const bk::WiringDiagram& f : fs) {
      parts_connected = parts_connected && bk::is_connected(f);
      parts_downward = parts_downward && bk::is_nonunital_admissible(f);
    }
    if (parts_connected) closure_ok = closure_ok && bk::is_connected(mid);
    if (parts_downward)
      closure_ok = closure_ok && bk::is_nonunital_admissible(mid);
    ++closure;
  }
  s.add(json{{"law", "gamma_units"}, {"checked", units}}, units_ok);
  s.add(json{{"law", "gamma_associativity"}, {"checked", assoc}}, assoc_ok);
  s.add(json{{"law", "gamma_equivariance"}, {"checked", equiv}}, equiv_ok);
  s.add(json{{"law", "closure"}, {"checked", closure}}, closure_ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Brauer diagram calculator and verification driver"};
  app.require_subcommand(1);

  std::vector<std::string> exprs;
  std::string expr, kind = "symmetric", delta_text, palette_path, oracle_path;
  std::string out_path, suite_name;
  std::vector<int> mn;
  int d = 2, max_total = 0, bound = 0, m_max = 0, n_max = 0;
  unsigned long seed = 0;
  long count = 0;
  bool csv = false;

  CLI::App* c_compose =
      app.add_subcommand("compose", "Elaborate expressions to canonical form");
  c_compose->add_option("expr", exprs, "expressions")->required();
  c_compose->add_option("--palette", palette_path, "palette JSON file");
  c_compose->add_option("--out", out_path, "output file");

  CLI::App* c_eval =
      app.add_subcommand("eval", "Evaluate an expression to a matrix");
  c_eval->add_option("expr", expr, "expression")->required();
  c_eval->add_option("--kind", kind, "symmetric, skew or gl")
      ->check(CLI::IsMember({"symmetric", "skew", "gl"}));
  c_eval->add_option("--d", d, "strand dimension");
  c_eval->add_flag("--csv", csv, "emit bare CSV rows");
  c_eval->add_option("--out", out_path, "output file");

  CLI::App* c_dims = app.add_subcommand("dims", "Table of hom-space dimensions");
  c_dims->add_option("m_max", m_max, "largest source arity")->required();
  c_dims->add_option("n_max", n_max, "largest target arity")->required();
  c_dims->add_flag("--csv", csv, "emit CSV");
  c_dims->add_option("--out", out_path, "output file");

  CLI::App* c_enum =
      app.add_subcommand("enumerate", "List the open diagrams of one arity");
  c_enum->add_option("--mn", mn, "arity pair m,n")
      ->required()
      ->delimiter(',')
      ->expected(2);
  c_enum->add_flag("--csv", csv, "emit CSV");
  c_enum->add_option("--out", out_path, "output file");

  CLI::App* c_ideal =
      app.add_subcommand("ideal", "Saturate a two-sided diagram ideal");
  c_ideal->add_option("gens", exprs, "generator expressions")->required();
  c_ideal->add_option("--delta", delta_text, "loop value")->required();
  c_ideal->add_option("--bound", bound, "largest m+n kept")->required();
  c_ideal->add_option("--mn", mn, "restrict to one slice m,n")
      ->delimiter(',')
      ->expected(2);
  c_ideal->add_option("--out", out_path, "output file");

  CLI::App* c_check = app.add_subcommand("check", "Run a verification suite");
  c_check->add_option("suite", suite_name,
                      "counts, category-laws, fft, sft, gl, ca, wheeled, "
                      "operad, kernel or parser")
      ->required();
  c_check->add_option("--kind", kind, "symmetric, skew or gl")
      ->check(CLI::IsMember({"symmetric", "skew", "gl"}));
  c_check->add_option("--d", d, "strand dimension");
  c_check->add_option("--max-total", max_total, "size bound");
  c_check->add_option("--max-points", max_total,
                      "size bound (category-laws alias)");
  c_check->add_option("--mn", mn, "single arity pair m,n")
      ->delimiter(',')
      ->expected(2);
  c_check->add_option("--delta", delta_text, "loop value override");
  c_check->add_option("--bound", bound, "saturation or bubble bound");
  c_check->add_option("--palette", palette_path, "palette JSON file");
  c_check->add_option("--oracle", oracle_path, "circuit algebra JSON file");
  c_check->add_option("--seed", seed, "random seed");
  c_check->add_option("--count", count, "random sample count");
  c_check->add_option("--out", out_path, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_compose->parsed()) return run_compose(exprs, palette_path, out_path);
    if (c_eval->parsed()) return run_eval(expr, kind, d, csv, out_path);
    if (c_dims->parsed()) return run_dims(m_max, n_max, csv, out_path);
    if (c_enum->parsed()) return run_enumerate(mn, csv, out_path);
    if (c_ideal->parsed())
      return run_ideal(exprs, delta_text, bound, mn, out_path);
    if (c_check->parsed())
      return run_check(suite_name, kind, d, max_total, mn, delta_text, bound,
                       palette_path, oracle_path, seed, count, out_path);
  } catch (const bk::ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
