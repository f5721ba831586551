#include "brauerkit/expr.hpp"

#include "brauerkit/linear_brauer.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

namespace brauerkit {

bool Expression::operator==(const Expression& o) const {
  if (kind != o.kind || lit != o.lit ||
      lit_colour_names != o.lit_colour_names ||
      lit_orbit_names != o.lit_orbit_names || arg != o.arg ||
      cycles != o.cycles || coef != o.coef || tpow != o.tpow ||
      kids.size() != o.kids.size())
    return false;
  for (size_t i = 0; i < kids.size(); ++i)
    if (*kids[i] != *o.kids[i]) return false;
  return true;
}

namespace {

using Kind = Expression::Kind;

ExprPtr node(Expression e) {
  return std::make_shared<const Expression>(std::move(e));
}

// ---------------------------------------------------------------------
// Lexer.

enum class Tok {
  nat,     // digit run, value kept as text
  ident,   // [A-Za-z_][A-Za-z0-9_.]*
  lparen,
  rparen,
  lbrack,
  rbrack,
  colon,
  plus,
  minus,
  star,
  dplus,   // ++
  cdot,    // U+00B7
  slash,
  caret,
  arrow,   // ->
  end
};

struct Token {
  Tok kind;
  std::string text;
  int pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  auto push = [&](Tok k, size_t b, size_t e) {
    out.push_back({k, s.substr(b, e - b), static_cast<int>(b)});
  };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      size_t b = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      push(Tok::nat, b, i);
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      size_t b = i;
      while (i < s.size()) {
        unsigned char d = static_cast<unsigned char>(s[i]);
        if (std::isalnum(d) || d == '_' || d == '.')
          ++i;
        else
          break;
      }
      push(Tok::ident, b, i);
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      push(Tok::arrow, i, i + 2);
      i += 2;
      continue;
    }
    if (c == '+' && i + 1 < s.size() && s[i + 1] == '+') {
      push(Tok::dplus, i, i + 2);
      i += 2;
      continue;
    }
    if (c == 0xC2 && i + 1 < s.size() &&
        static_cast<unsigned char>(s[i + 1]) == 0xB7) {
      push(Tok::cdot, i, i + 2);
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case '[': k = Tok::lbrack; break;
      case ']': k = Tok::rbrack; break;
      case ':': k = Tok::colon; break;
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      default:
        throw ParseError("unexpected character", static_cast<int>(i));
    }
    push(k, i, i + 1);
    ++i;
  }
  push(Tok::end, s.size(), s.size());
  return out;
}

// ---------------------------------------------------------------------
// Parser.
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := coef '·' hsum | coef | hsum
//   coef    := rat ['·' tpow] | tpow
//   rat     := nat ['/' nat] | '(' '-' nat ['/' nat] ')'
//   tpow    := 't' ['^' nat]
//   hsum    := comp ('++' comp)*
//   comp    := primary ('*' primary)*
//   primary := atom | '(' expr ')'
//
// A '+' directly after a literal is consumed as its closed-loop count
// unless the lookahead shows a new term (number then "->", "·" or "/").

ColouredDiagram coloured_literal_value(const Expression& e,
                                       const Palette& pal);

struct Parser {
  std::vector<Token> toks;
  size_t cur = 0;
  const Palette* pal;

  Parser(const std::string& text, const Palette* p) : toks(lex(text)), pal(p) {}

  const Token& tk(int off = 0) const {
    size_t j = cur + off;
    return j < toks.size() ? toks[j] : toks.back();
  }
  bool at(Tok k, int off = 0) const { return tk(off).kind == k; }
  [[noreturn]] void fail(const std::string& msg, int pos) const {
    throw ParseError(msg, pos);
  }
  Token eat(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what, tk().pos);
    return toks[cur++];
  }

  int small_nat(const char* what) {
    Token t = eat(Tok::nat, what);
    if (t.text.size() > 9) fail("number too large", t.pos);
    return std::stoi(t.text);
  }

  // Negates a term by folding into its coefficient.
  ExprPtr negate(const ExprPtr& e) {
    if (e->kind == Kind::scaled) {
      Expression r = *e;
      r.coef = -r.coef;
      if (r.coef == Rat(1) && r.tpow == 0) return r.kids[0];
      return node(std::move(r));
    }
    Expression r;
    r.kind = Kind::scaled;
    r.coef = Rat(-1);
    r.kids = {e};
    return node(std::move(r));
  }

  ExprPtr expr() {
    bool neg = false;
    if (at(Tok::minus)) {
      ++cur;
      neg = true;
    }
    ExprPtr first = term();
    if (neg) first = negate(first);
    if (!at(Tok::plus) && !at(Tok::minus)) return first;
    Expression s;
    s.kind = Kind::sum;
    s.kids.push_back(first);
    while (at(Tok::plus) || at(Tok::minus)) {
      bool sub = at(Tok::minus);
      ++cur;
      ExprPtr t = term();
      s.kids.push_back(sub ? negate(t) : t);
    }
    return node(std::move(s));
  }

  // Rational part of a coefficient, if one starts here.
  std::optional<Rat> try_rat() {
    if (at(Tok::nat) && !at(Tok::arrow, 1)) {
      std::string s = eat(Tok::nat, "number").text;
      if (at(Tok::slash) && at(Tok::nat, 1)) {
        ++cur;
        s += "/" + eat(Tok::nat, "denominator").text;
      }
      return rat_from_string(s);
    }
    if (at(Tok::lparen) && at(Tok::minus, 1) && at(Tok::nat, 2)) {
      size_t save = cur;
      cur += 2;
      std::string s = "-" + eat(Tok::nat, "number").text;
      if (at(Tok::slash) && at(Tok::nat, 1)) {
        ++cur;
        s += "/" + eat(Tok::nat, "denominator").text;
      }
      if (!at(Tok::rparen)) {
        cur = save;
        return std::nullopt;
      }
      ++cur;
      return rat_from_string(s);
    }
    return std::nullopt;
  }

  bool at_tpow() const { return at(Tok::ident) && tk().text == "t"; }

  int eat_tpow() {
    eat(Tok::ident, "t");
    if (!at(Tok::caret)) return 1;
    ++cur;
    int k = small_nat("exponent");
    if (k == 0) fail("exponent must be positive", tk(-1).pos);
    return k;
  }

  ExprPtr scalar_only(const Rat& c, int tp) {
    Expression r;
    r.kind = Kind::scaled;
    r.coef = c;
    r.tpow = tp;
    Expression empty;
    empty.kind = Kind::literal;
    r.kids = {node(std::move(empty))};
    return node(std::move(r));
  }

  ExprPtr term() {
    std::optional<Rat> c = try_rat();
    int tp = 0;
    if (c) {
      if (!at(Tok::cdot)) return scalar_only(*c, 0);
      if (tk(1).kind == Tok::ident && tk(1).text == "t") {
        ++cur;
        tp = eat_tpow();
        if (!at(Tok::cdot)) return scalar_only(*c, tp);
      }
      eat(Tok::cdot, "'·'");
    } else if (at_tpow()) {
      tp = eat_tpow();
      if (!at(Tok::cdot)) return scalar_only(Rat(1), tp);
      ++cur;
      c = Rat(1);
    } else {
      return hsum();
    }
    ExprPtr kid = hsum();
    if (*c == Rat(1) && tp == 0) return kid;
    Expression r;
    r.kind = Kind::scaled;
    r.coef = *c;
    r.tpow = tp;
    r.kids = {kid};
    return node(std::move(r));
  }

  ExprPtr hsum() {
    ExprPtr first = comp();
    if (!at(Tok::dplus)) return first;
    Expression s;
    s.kind = Kind::oplus;
    s.kids.push_back(first);
    while (at(Tok::dplus)) {
      ++cur;
      s.kids.push_back(comp());
    }
    return node(std::move(s));
  }

  ExprPtr comp() {
    ExprPtr first = primary();
    if (!at(Tok::star)) return first;
    Expression s;
    s.kind = Kind::compose;
    s.kids.push_back(first);
    while (at(Tok::star)) {
      ++cur;
      s.kids.push_back(primary());
    }
    return node(std::move(s));
  }

  ExprPtr primary() {
    const Token& t = tk();
    if (t.kind == Tok::nat && at(Tok::arrow, 1)) return literal();
    if (t.kind == Tok::lparen) {
      ++cur;
      ExprPtr e = expr();
      eat(Tok::rparen, "')'");
      return e;
    }
    if (t.kind == Tok::ident) {
      const std::string& w = t.text;
      if (w == "cup" || w == "cap" || w == "sym") {
        ++cur;
        Expression r;
        r.kind = w == "cup" ? Kind::cup : w == "cap" ? Kind::cap : Kind::sym;
        return node(std::move(r));
      }
      if (w == "id" || w == "e") {
        ++cur;
        eat(Tok::lparen, "'('");
        int k = small_nat("arity");
        eat(Tok::rparen, "')'");
        if (w == "e" && k < 1) fail("e(k) needs k >= 1", t.pos);
        if (w == "id" && k < 0) fail("id(n) needs n >= 0", t.pos);
        Expression r;
        r.kind = w == "id" ? Kind::identity : Kind::antisym;
        r.arg = k;
        return node(std::move(r));
      }
      if (w == "perm") {
        ++cur;
        return perm_atom(t.pos);
      }
      fail("unknown name '" + w + "'", t.pos);
    }
    fail("expected an expression", t.pos);
  }

  ExprPtr perm_atom(int pos) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen;
    if (!at(Tok::lparen)) fail("perm needs at least one cycle", pos);
    while (at(Tok::lparen)) {
      ++cur;
      std::vector<int> cyc;
      while (at(Tok::nat)) {
        int v = small_nat("strand number");
        if (v < 1) fail("strand numbers start at 1", tk(-1).pos);
        if (static_cast<size_t>(v) > seen.size()) seen.resize(v, false);
        if (seen[v - 1]) fail("strand repeated in perm", tk(-1).pos);
        seen[v - 1] = true;
        cyc.push_back(v);
      }
      eat(Tok::rparen, "')'");
      if (cyc.size() < 2) fail("cycle needs at least two strands", pos);
      // Rotate to start at the least entry.
      auto it = std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), it, cyc.end());
      cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    Expression r;
    r.kind = Kind::perm;
    r.cycles = std::move(cycles);
    return node(std::move(r));
  }

  // Point name s<i> or t<j>; returns the point index and records its
  // colour annotation.
  int point(int m, int n, std::vector<std::string>& colour_names) {
    Token t = eat(Tok::ident, "point name like s1 or t2");
    const std::string& w = t.text;
    bool ok = w.size() >= 2 && (w[0] == 's' || w[0] == 't');
    for (size_t i = 1; ok && i < w.size(); ++i)
      ok = std::isdigit(static_cast<unsigned char>(w[i])) != 0;
    if (!ok || w.size() > 9) fail("expected point name like s1 or t2", t.pos);
    int idx = std::stoi(w.substr(1));
    int pt;
    if (w[0] == 's') {
      if (idx < 1 || idx > m) fail("source index out of range", t.pos);
      pt = idx - 1;
    } else {
      if (idx < 1 || idx > n) fail("target index out of range", t.pos);
      pt = m + idx - 1;
    }
    if (at(Tok::colon)) {
      if (!pal) fail("colour annotations require a palette", tk().pos);
      ++cur;
      Token ct = eat(Tok::ident, "colour name");
      if (pal->index(ct.text) < 0) fail("unknown colour '" + ct.text + "'", ct.pos);
      colour_names[pt] = pal->name(pal->index(ct.text));
    }
    return pt;
  }

  ExprPtr literal() {
    int pos = tk().pos;
    int m = small_nat("source arity");
    eat(Tok::arrow, "'->'");
    int n = small_nat("target arity");
    eat(Tok::colon, "':'");
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::string> colour_names(m + n);
    while (at(Tok::lparen)) {
      ++cur;
      int a = point(m, n, colour_names);
      int b = point(m, n, colour_names);
      eat(Tok::rparen, "')'");
      pairs.emplace_back(a, b);
    }
    int closed = 0;
    std::vector<std::string> orbit_names;
    if (at(Tok::plus)) {
      if (at(Tok::nat, 1) && !at(Tok::arrow, 2) && !at(Tok::cdot, 2) &&
          !at(Tok::slash, 2)) {
        ++cur;
        closed = small_nat("closed count");
      } else if (at(Tok::lbrack, 1)) {
        if (!pal) fail("orbit labels require a palette", tk(1).pos);
        ++cur;
        while (at(Tok::lbrack)) {
          ++cur;
          Token ct = eat(Tok::ident, "colour name");
          int c = pal->index(ct.text);
          if (c < 0) fail("unknown colour '" + ct.text + "'", ct.pos);
          orbit_names.push_back(pal->name(pal->orbit(c)));
          eat(Tok::rbrack, "']'");
        }
        std::sort(orbit_names.begin(), orbit_names.end(),
                  [&](const std::string& a, const std::string& b) {
                    return pal->index(a) < pal->index(b);
                  });
        closed = static_cast<int>(orbit_names.size());
      }
    }
    Expression r;
    r.kind = Kind::literal;
    try {
      r.lit = Diagram(m, n, std::move(pairs), closed);
    } catch (const std::invalid_argument& e) {
      fail(e.what(), pos);
    }
    if (pal) {
      bool any = false, all = true;
      for (const auto& s : colour_names) {
        if (s.empty())
          all = false;
        else
          any = true;
      }
      if (pal->size() == 1) {
        // Single colour: annotations and orbit labels are optional and
        // only stored when written, so plain literals print plainly.
        if (any && !all) fail("every point needs a colour annotation", pos);
      } else {
        if (any && !all)
          fail("every point needs a colour annotation", pos);
        if (!any && m + n > 0)
          fail("literal lacks colour annotations", pos);
        if (closed > 0 && orbit_names.empty())
          fail("closed loops need orbit labels with a palette", pos);
      }
      if (any) r.lit_colour_names = std::move(colour_names);
      r.lit_orbit_names = std::move(orbit_names);
      // Validates the omega pairing early, at the literal's position.
      try {
        coloured_literal_value(r, *pal);
      } catch (const std::invalid_argument& e) {
        fail(e.what(), pos);
      }
    }
    return node(std::move(r));
  }
};

// Resolves a literal's colour data against a palette. Missing
// annotations default to colour 0 on a single-colour palette and are
// rejected otherwise.
ColouredDiagram coloured_literal_value(const Expression& e,
                                       const Palette& pal) {
  std::vector<int> colours;
  if (e.lit_colour_names.empty()) {
    if (e.lit.points() > 0 && pal.size() != 1)
      throw std::invalid_argument("literal lacks colour annotations");
    colours.assign(e.lit.points(), 0);
  } else {
    colours.reserve(e.lit_colour_names.size());
    for (const auto& s : e.lit_colour_names) {
      int c = pal.index(s);
      if (c < 0) throw std::invalid_argument("unknown colour '" + s + "'");
      colours.push_back(c);
    }
  }
  std::vector<int> orbits;
  if (e.lit_orbit_names.empty()) {
    if (e.lit.closed() > 0 && pal.size() != 1)
      throw std::invalid_argument(
          "closed loops need orbit labels with a palette");
    orbits.assign(e.lit.closed(), 0);
  } else {
    orbits.reserve(e.lit_orbit_names.size());
    for (const auto& s : e.lit_orbit_names) {
      int c = pal.index(s);
      if (c < 0) throw std::invalid_argument("unknown colour '" + s + "'");
      orbits.push_back(pal.orbit(c));
    }
    std::sort(orbits.begin(), orbits.end());
  }
  return make_coloured(pal, e.lit, std::move(colours), std::move(orbits));
}

// ---------------------------------------------------------------------
// Printer.

// Precedence levels: sum 0, scaled 1, oplus 2, compose 3, atoms 4.
int prec(const Expression& e) {
  switch (e.kind) {
    case Kind::sum: return 0;
    case Kind::scaled: return 1;
    case Kind::oplus: return 2;
    case Kind::compose: return 3;
    default: return 4;
  }
}

std::string literal_text(const Diagram& d,
                         const std::vector<std::string>& colour_names,
                         const std::vector<std::string>& orbit_names) {
  if (colour_names.empty() && orbit_names.empty()) return d.str();
  std::ostringstream os;
  os << d.sources() << "->" << d.targets() << " :";
  auto name = [&](int i) {
    std::ostringstream p;
    if (i < d.sources())
      p << 's' << (i + 1);
    else
      p << 't' << (i - d.sources() + 1);
    if (!colour_names.empty()) p << ':' << colour_names[i];
    return p.str();
  };
  for (const auto& [a, b] : d.pairs())
    os << " (" << name(a) << ' ' << name(b) << ')';
  if (!orbit_names.empty()) {
    os << " +";
    for (const auto& s : orbit_names) os << " [" << s << ']';
  } else if (d.closed() > 0) {
    os << " + " << d.closed();
  }
  return os.str();
}

std::string coef_text(const Rat& c, int tpow) {
  std::ostringstream os;
  bool need_dot = false;
  if (!(c == Rat(1) && tpow > 0)) {
    std::string r = to_string(c);
    if (c < Rat(0))
      os << '(' << r << ')';
    else
      os << r;
    need_dot = true;
  }
  if (tpow > 0) {
    if (need_dot) os << "·";
    os << 't';
    if (tpow > 1) os << '^' << tpow;
  }
  return os.str();
}

void print_node(const Expression& e, std::ostringstream& os) {
  auto kid = [&](const ExprPtr& k, int min_prec) {
    if (prec(*k) < min_prec) {
      os << '(';
      print_node(*k, os);
      os << ')';
    } else {
      print_node(*k, os);
    }
  };
  switch (e.kind) {
    case Kind::literal:
      os << literal_text(e.lit, e.lit_colour_names, e.lit_orbit_names);
      break;
    case Kind::identity:
      os << "id(" << e.arg << ')';
      break;
    case Kind::cup: os << "cup"; break;
    case Kind::cap: os << "cap"; break;
    case Kind::sym: os << "sym"; break;
    case Kind::antisym:
      os << "e(" << e.arg << ')';
      break;
    case Kind::perm:
      os << "perm";
      for (const auto& cyc : e.cycles) {
        os << '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
          if (i) os << ' ';
          os << cyc[i];
        }
        os << ')';
      }
      break;
    case Kind::compose:
      for (size_t i = 0; i < e.kids.size(); ++i) {
        if (i) os << " * ";
        kid(e.kids[i], 4);
      }
      break;
    case Kind::oplus:
      for (size_t i = 0; i < e.kids.size(); ++i) {
        if (i) os << " ++ ";
        kid(e.kids[i], 3);
      }
      break;
    case Kind::scaled:
      os << coef_text(e.coef, e.tpow) << "·";
      kid(e.kids[0], 2);
      break;
    case Kind::sum:
      for (size_t i = 0; i < e.kids.size(); ++i) {
        if (i) os << " + ";
        kid(e.kids[i], 1);
      }
      break;
  }
}

// ---------------------------------------------------------------------
// Elaboration.

[[noreturn]] void elab_fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

Permutation cycles_to_permutation(const std::vector<std::vector<int>>& cycles) {
  int n = 0;
  for (const auto& cyc : cycles)
    for (int v : cyc) n = std::max(n, v);
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i)
      im[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
  return Permutation(im);
}

LinComb<Diagram, Rat> formal_compose(const LinComb<Diagram, Rat>& a,
                                     const LinComb<Diagram, Rat>& b) {
  LinComb<Diagram, Rat> out;
  for (const auto& [f, cf] : a.terms())
    for (const auto& [g, cg] : b.terms()) out.add(compose(f, g), cf * cg);
  return out;
}

LinComb<Diagram, Rat> formal_oplus(const LinComb<Diagram, Rat>& a,
                                   const LinComb<Diagram, Rat>& b) {
  LinComb<Diagram, Rat> out;
  for (const auto& [f, cf] : a.terms())
    for (const auto& [g, cg] : b.terms()) out.add(oplus(f, g), cf * cg);
  return out;
}

Elaborated elaborate_node(const Expression& e) {
  switch (e.kind) {
    case Kind::literal: {
      if (!e.lit_colour_names.empty() || !e.lit_orbit_names.empty())
        elab_fail("coloured literal in a monochrome context");
      return {e.lit.sources(), e.lit.targets(),
              LinComb<Diagram, Rat>(e.lit, Rat(1))};
    }
    case Kind::identity:
      return {e.arg, e.arg,
              LinComb<Diagram, Rat>(Diagram::identity(e.arg), Rat(1))};
    case Kind::cup:
      return {0, 2, LinComb<Diagram, Rat>(Diagram::cup(), Rat(1))};
    case Kind::cap:
      return {2, 0, LinComb<Diagram, Rat>(Diagram::cap(), Rat(1))};
    case Kind::sym:
      return {2, 2, LinComb<Diagram, Rat>(Diagram::sym(), Rat(1))};
    case Kind::perm: {
      Permutation p = cycles_to_permutation(e.cycles);
      return {p.size(), p.size(),
              LinComb<Diagram, Rat>(permutation_diagram(p), Rat(1))};
    }
    case Kind::antisym:
      return {e.arg, e.arg, antisymmetrizer<Rat>(e.arg)};
    case Kind::compose: {
      Elaborated acc = elaborate_node(*e.kids[0]);
      for (size_t i = 1; i < e.kids.size(); ++i) {
        Elaborated next = elaborate_node(*e.kids[i]);
        if (acc.n != next.m)
          elab_fail("'*' arity mismatch: left side ends with " +
                    std::to_string(acc.n) + " targets, right side expects " +
                    std::to_string(next.m) + " sources");
        acc.value = formal_compose(acc.value, next.value);
        acc.n = next.n;
      }
      return acc;
    }
    case Kind::oplus: {
      Elaborated acc = elaborate_node(*e.kids[0]);
      for (size_t i = 1; i < e.kids.size(); ++i) {
        Elaborated next = elaborate_node(*e.kids[i]);
        acc.value = formal_oplus(acc.value, next.value);
        acc.m += next.m;
        acc.n += next.n;
      }
      return acc;
    }
    case Kind::scaled: {
      Elaborated kid = elaborate_node(*e.kids[0]);
      LinComb<Diagram, Rat> out;
      for (const auto& [d, c] : kid.value.terms())
        out.add(Diagram(d.sources(), d.targets(), d.pairs(),
                        d.closed() + e.tpow),
                c * e.coef);
      kid.value = std::move(out);
      return kid;
    }
    case Kind::sum: {
      Elaborated acc = elaborate_node(*e.kids[0]);
      for (size_t i = 1; i < e.kids.size(); ++i) {
        Elaborated next = elaborate_node(*e.kids[i]);
        if (acc.m != next.m || acc.n != next.n)
          elab_fail("'+' needs equal arities on both sides, got " +
                    std::to_string(acc.m) + "->" + std::to_string(acc.n) +
                    " and " + std::to_string(next.m) + "->" +
                    std::to_string(next.n));
        acc.value = acc.value + next.value;
      }
      return acc;
    }
  }
  elab_fail("unreachable expression kind");
}

ColouredDiagram elaborate_coloured_node(const Expression& e,
                                        const Palette& pal) {
  switch (e.kind) {
    case Kind::literal:
      return coloured_literal_value(e, pal);
    case Kind::compose: {
      ColouredDiagram acc = elaborate_coloured_node(*e.kids[0], pal);
      for (size_t i = 1; i < e.kids.size(); ++i)
        acc = coloured_compose(acc, elaborate_coloured_node(*e.kids[i], pal));
      return acc;
    }
    case Kind::oplus: {
      ColouredDiagram acc = elaborate_coloured_node(*e.kids[0], pal);
      for (size_t i = 1; i < e.kids.size(); ++i)
        acc = coloured_oplus(acc, elaborate_coloured_node(*e.kids[i], pal));
      return acc;
    }
    default:
      elab_fail("only diagram literals, '*' and '++' are coloured constructs");
  }
}

}  // namespace

ExprPtr parse_expression(const std::string& text) {
  Parser p(text, nullptr);
  ExprPtr e = p.expr();
  p.eat(Tok::end, "end of input");
  return e;
}

ExprPtr parse_expression(const std::string& text, const Palette& pal) {
  Parser p(text, &pal);
  ExprPtr e = p.expr();
  p.eat(Tok::end, "end of input");
  return e;
}

std::string print_expression(const ExprPtr& e) {
  std::ostringstream os;
  print_node(*e, os);
  return os.str();
}

Elaborated elaborate(const ExprPtr& e) { return elaborate_node(*e); }

ColouredDiagram elaborate_coloured(const ExprPtr& e, const Palette& pal) {
  return elaborate_coloured_node(*e, pal);
}

std::string print_lincomb(const LinComb<Diagram, Rat>& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c != Rat(1)) os << coef_text(c, 0) << "·";
    os << d.str();
  }
  return os.str();
}

std::string print_coloured(const ColouredDiagram& f) {
  std::vector<std::string> colour_names;
  colour_names.reserve(f.colours.size());
  for (int c : f.colours) colour_names.push_back(f.palette.name(c));
  std::vector<std::string> orbit_names;
  orbit_names.reserve(f.closed_orbits.size());
  for (int c : f.closed_orbits) orbit_names.push_back(f.palette.name(c));
  return literal_text(f.base, colour_names, orbit_names);
}

Diagram random_diagram(std::mt19937_64& rng, int max_points, int max_closed) {
  int m = static_cast<int>(rng() % (max_points + 1));
  int n = static_cast<int>(rng() % (max_points + 1));
  if ((m + n) % 2 != 0) {
    if (n > 0)
      --n;
    else
      ++n;
  }
  std::vector<int> free;
  for (int i = 0; i < m + n; ++i) free.push_back(i);
  std::vector<std::pair<int, int>> pairs;
  while (!free.empty()) {
    int a = free.front();
    free.erase(free.begin());
    size_t j = rng() % free.size();
    int b = free[j];
    free.erase(free.begin() + j);
    pairs.emplace_back(a, b);
  }
  int closed = static_cast<int>(rng() % (max_closed + 1));
  return Diagram(m, n, std::move(pairs), closed);
}

ColouredDiagram random_coloured_diagram(std::mt19937_64& rng,
                                        const Palette& pal, int max_points,
                                        int max_closed) {
  Diagram base = random_diagram(rng, max_points, max_closed);
  std::vector<int> colours(base.points(), -1);
  for (const auto& [a, b] : base.pairs()) {
    int c = static_cast<int>(rng() % pal.size());
    colours[a] = c;
    colours[b] = pal.omega(c);
  }
  std::vector<int> orbits;
  for (int i = 0; i < base.closed(); ++i)
    orbits.push_back(pal.orbit(static_cast<int>(rng() % pal.size())));
  std::sort(orbits.begin(), orbits.end());
  return make_coloured(pal, base, std::move(colours), std::move(orbits));
}

namespace {

struct GenOut {
  ExprPtr e;
  int m;
  int n;
};

Diagram forced_diagram(std::mt19937_64& rng, int m, int n, int max_closed) {
  std::vector<int> free;
  for (int i = 0; i < m + n; ++i) free.push_back(i);
  std::vector<std::pair<int, int>> pairs;
  while (!free.empty()) {
    int a = free.front();
    free.erase(free.begin());
    size_t j = rng() % free.size();
    int b = free[j];
    free.erase(free.begin() + j);
    pairs.emplace_back(a, b);
  }
  int closed = static_cast<int>(rng() % (max_closed + 1));
  return Diagram(m, n, std::move(pairs), closed);
}

// fm, fn force the arity when >= 0; fm + fn is even whenever both are
// forced (every well-typed tree has an even point count).
GenOut gen(std::mt19937_64& rng, int depth, int fm, int fn) {
  auto literal_leaf = [&](int m, int n) {
    Expression r;
    r.kind = Kind::literal;
    r.lit = forced_diagram(rng, m, n, 2);
    return GenOut{node(std::move(r)), m, n};
  };
  auto pick_arity = [&](int forced, int other) {
    if (forced >= 0) return forced;
    int v = static_cast<int>(rng() % 4);
    if (other >= 0 && (v + other) % 2 != 0) v = v > 0 ? v - 1 : v + 1;
    return v;
  };
  if (depth == 0 || rng() % 3 == 0) {
    // Leaf. Named atoms only fit specific arities; fall back to a
    // literal whenever a forced arity rules them out.
    if (fm < 0 && fn < 0) {
      switch (rng() % 6) {
        case 0: {
          Expression r;
          r.kind = Kind::cup;
          return GenOut{node(std::move(r)), 0, 2};
        }
        case 1: {
          Expression r;
          r.kind = Kind::cap;
          return GenOut{node(std::move(r)), 2, 0};
        }
        case 2: {
          Expression r;
          r.kind = Kind::sym;
          return GenOut{node(std::move(r)), 2, 2};
        }
        case 3: {
          int k = 1 + static_cast<int>(rng() % 3);
          Expression r;
          r.kind = Kind::identity;
          r.arg = k;
          return GenOut{node(std::move(r)), k, k};
        }
        case 4: {
          int k = 2 + static_cast<int>(rng() % 2);
          Expression r;
          r.kind = Kind::antisym;
          r.arg = k;
          return GenOut{node(std::move(r)), k, k};
        }
        default: {
          // Random non-identity permutation whose last strand moves.
          int k = 2 + static_cast<int>(rng() % 3);
          std::vector<int> im(k);
          for (int i = 0; i < k; ++i) im[i] = i;
          for (int i = k - 1; i > 0; --i)
            std::swap(im[i], im[rng() % (i + 1)]);
          Permutation p(im);
          std::vector<std::vector<int>> cycles;
          std::vector<bool> seen(k, false);
          int maxmoved = 0;
          for (int i = 0; i < k; ++i) {
            if (seen[i] || p(i) == i) continue;
            std::vector<int> cyc;
            for (int j = i; !seen[j]; j = p(j)) {
              seen[j] = true;
              cyc.push_back(j + 1);
              maxmoved = std::max(maxmoved, j + 1);
            }
            cycles.push_back(std::move(cyc));
          }
          if (cycles.empty()) return literal_leaf(pick_arity(-1, 0), 0);
          Expression r;
          r.kind = Kind::perm;
          r.cycles = std::move(cycles);
          return GenOut{node(std::move(r)), maxmoved, maxmoved};
        }
      }
    }
    int m = pick_arity(fm, fn);
    int n = pick_arity(fn, m);
    return literal_leaf(m, n);
  }
  switch (rng() % 4) {
    case 0: {  // compose
      GenOut a = gen(rng, depth - 1, fm, -1);
      GenOut b = gen(rng, depth - 1, a.n, fn);
      Expression r;
      r.kind = Kind::compose;
      r.kids = {a.e, b.e};
      if (fn < 0 && rng() % 2 == 0) {
        GenOut c = gen(rng, depth - 1, b.n, -1);
        r.kids.push_back(c.e);
        b.n = c.n;
      }
      return GenOut{node(std::move(r)), a.m, b.n};
    }
    case 1: {  // oplus; forced arities split awkwardly, use free kids
      if (fm >= 0 || fn >= 0) return gen(rng, depth - 1, fm, fn);
      GenOut a = gen(rng, depth - 1, -1, -1);
      GenOut b = gen(rng, depth - 1, -1, -1);
      Expression r;
      r.kind = Kind::oplus;
      r.kids = {a.e, b.e};
      return GenOut{node(std::move(r)), a.m + b.m, a.n + b.n};
    }
    case 2: {  // sum
      GenOut a = gen(rng, depth - 1, fm, fn);
      GenOut b = gen(rng, depth - 1, a.m, a.n);
      Expression r;
      r.kind = Kind::sum;
      r.kids = {a.e, b.e};
      if (rng() % 2 == 0) {
        GenOut c = gen(rng, depth - 1, a.m, a.n);
        r.kids.push_back(c.e);
      }
      return GenOut{node(std::move(r)), a.m, a.n};
    }
    default: {  // scaled; fold if the kid is itself scaled
      GenOut a = gen(rng, depth - 1, fm, fn);
      static const char* coefs[] = {"2", "3/2", "-1", "-2/3", "5"};
      Rat c = rat_from_string(coefs[rng() % 5]);
      int tp = static_cast<int>(rng() % 3);
      if (a.e->kind == Kind::scaled) {
        Expression r = *a.e;
        r.coef = r.coef * c;
        r.tpow += tp;
        if (r.coef == Rat(1) && r.tpow == 0) return GenOut{r.kids[0], a.m, a.n};
        return GenOut{node(std::move(r)), a.m, a.n};
      }
      if (c == Rat(1) && tp == 0) return a;
      Expression r;
      r.kind = Kind::scaled;
      r.coef = c;
      r.tpow = tp;
      r.kids = {a.e};
      return GenOut{node(std::move(r)), a.m, a.n};
    }
  }
}

}  // namespace

ExprPtr random_expression(std::mt19937_64& rng, int depth) {
  return gen(rng, depth, -1, -1).e;
}

}  // namespace brauerkit
