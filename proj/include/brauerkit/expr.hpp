#pragma once

// Textual language for diagrams and their linear combinations.
//
// Precedence, loosest to tightest: '+'/'-' (sum), '++' (juxtaposition),
// '*' (composition, left operand applied first). A term may carry a
// scalar coefficient "3/2·x", "(-1)·x", "t^2·x"; powers of t are bubble
// multipliers. Atoms: id(n), cup, cap, sym, perm(1 2)(3 4), e(k),
// parenthesized expressions, and diagram literals "m->n : (s1 t2) + k"
// ("+ k" omitted when k = 0). With a palette, literal points carry
// colour annotations "s1:c" and loops are labelled "+ [c] [d]".
//
// The printer emits one canonical text per canonical tree: single
// spaces around binary operators, none around '·', minimal parentheses,
// literals in the order of Diagram::str(). print(parse(s)) = s for
// every printed s, and parse(print(e)) = e for every canonical tree.

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauerkit/diagram.hpp"
#include "brauerkit/lincomb.hpp"
#include "brauerkit/palette.hpp"
#include "brauerkit/scalar.hpp"

namespace brauerkit {

// Syntax error with a byte offset into the input.
struct ParseError : std::runtime_error {
  int position;
  ParseError(const std::string& msg, int pos)
      : std::runtime_error(msg), position(pos) {}
};

struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

struct Expression {
  enum class Kind {
    literal,   // a diagram, optionally with colour data
    identity,  // id(arg)
    cup,
    cap,
    sym,
    perm,      // cycles, 1-indexed, normalized
    antisym,   // e(arg)
    compose,   // kids chained left to right, left applied first
    oplus,     // kids juxtaposed left to right
    scaled,    // coef * t^tpow times kids[0]
    sum        // kids added
  };

  Kind kind;
  Diagram lit;                                // literal
  std::vector<std::string> lit_colour_names;  // literal, one per point
  std::vector<std::string> lit_orbit_names;   // literal, one per loop
  int arg = 0;                                // identity, antisym
  std::vector<std::vector<int>> cycles;       // perm
  Rat coef = Rat(1);                          // scaled
  int tpow = 0;                               // scaled
  std::vector<ExprPtr> kids;

  // Structural equality of trees.
  bool operator==(const Expression& o) const;
  bool operator!=(const Expression& o) const { return !(*this == o); }
};

// Monochrome grammar; colour annotations are rejected.
ExprPtr parse_expression(const std::string& text);
// Coloured literals allowed; every literal point must be annotated
// unless the palette has a single colour.
ExprPtr parse_expression(const std::string& text, const Palette& pal);

std::string print_expression(const ExprPtr& e);

// Value of a monochrome expression: a combination of diagrams (bubbles
// included in the basis elements) with a common arity.
struct Elaborated {
  int m = 0;
  int n = 0;
  LinComb<Diagram, Rat> value;
};

// Throws std::invalid_argument on arity mismatches or coloured parts.
Elaborated elaborate(const ExprPtr& e);

// Coloured value; only literals, '*' and '++' are admissible. Throws
// std::invalid_argument on type mismatches or monochrome-only parts.
ColouredDiagram elaborate_coloured(const ExprPtr& e, const Palette& pal);

// Canonical text of a combination: terms in diagram order, joined by
// " + ", coefficients omitted when 1 and parenthesized when negative.
// The zero combination prints as "0".
std::string print_lincomb(const LinComb<Diagram, Rat>& x);

// Canonical text of a coloured diagram.
std::string print_coloured(const ColouredDiagram& f);

// Uniform raw draws from the engine; used by the round-trip suites.
Diagram random_diagram(std::mt19937_64& rng, int max_points, int max_closed);
ColouredDiagram random_coloured_diagram(std::mt19937_64& rng,
                                        const Palette& pal, int max_points,
                                        int max_closed);
// Well-typed canonical tree with at most `depth` levels of operators.
ExprPtr random_expression(std::mt19937_64& rng, int depth);

}  // namespace brauerkit
