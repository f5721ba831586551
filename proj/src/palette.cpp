#include "brauerkit/palette.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace brauerkit {

namespace {

void check(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Palette::Palette(std::vector<std::string> colours, std::vector<int> omega)
    : names_(std::move(colours)), omega_(std::move(omega)) {
  check(names_.size() == omega_.size(), "palette: omega must cover all colours");
  for (int c = 0; c < size(); ++c) {
    check(omega_[c] >= 0 && omega_[c] < size() && omega_[omega_[c]] == c,
          "palette: omega must be an involution");
  }
  for (int c = 0; c < size(); ++c)
    for (int d = c + 1; d < size(); ++d)
      check(names_[c] != names_[d], "palette: colour names must be distinct");
}

Palette Palette::monochrome() { return Palette({"*"}, {0}); }

Palette Palette::oriented() { return Palette({"up", "dn"}, {1, 0}); }

Palette Palette::oriented(const std::vector<std::string>& base) {
  std::vector<std::string> names;
  std::vector<int> omega;
  for (size_t i = 0; i < base.size(); ++i) {
    names.push_back(base[i] + ".up");
    names.push_back(base[i] + ".dn");
    omega.push_back(static_cast<int>(2 * i + 1));
    omega.push_back(static_cast<int>(2 * i));
  }
  return Palette(std::move(names), std::move(omega));
}

int Palette::index(const std::string& name) const {
  for (int c = 0; c < size(); ++c)
    if (names_[c] == name) return c;
  return -1;
}

ColourList dual_object(const Palette& pal, const ColourList& w) {
  ColourList out(w.rbegin(), w.rend());
  for (int& c : out) c = pal.omega(c);
  return out;
}

bool ColouredDiagram::operator==(const ColouredDiagram& o) const {
  return palette == o.palette && base == o.base && colours == o.colours &&
         closed_orbits == o.closed_orbits;
}

bool ColouredDiagram::operator<(const ColouredDiagram& o) const {
  if (!(base == o.base)) return base < o.base;
  if (colours != o.colours) return colours < o.colours;
  return closed_orbits < o.closed_orbits;
}

ColouredDiagram make_coloured(const Palette& pal, const Diagram& base,
                              std::vector<int> colours,
                              std::vector<int> closed_orbits) {
  ColouredDiagram f{pal, base, std::move(colours), std::move(closed_orbits)};
  std::sort(f.closed_orbits.begin(), f.closed_orbits.end());
  check(is_valid_colouring(f), "colouring violates the omega pairing rule");
  return f;
}

bool is_valid_colouring(const ColouredDiagram& f) {
  if (static_cast<int>(f.colours.size()) != f.base.points()) return false;
  if (static_cast<int>(f.closed_orbits.size()) != f.base.closed()) return false;
  for (int i = 0; i < f.base.points(); ++i) {
    int c = f.colours[i];
    if (c < 0 || c >= f.palette.size()) return false;
    if (f.colours[f.base.pair(i)] != f.palette.omega(c)) return false;
  }
  for (int r : f.closed_orbits)
    if (r < 0 || r >= f.palette.size() || f.palette.orbit(r) != r) return false;
  return std::is_sorted(f.closed_orbits.begin(), f.closed_orbits.end());
}

ColourList input_type(const ColouredDiagram& f) {
  ColourList w(f.base.sources());
  for (int i = 0; i < f.base.sources(); ++i) w[i] = f.palette.omega(f.colours[i]);
  return w;
}

ColourList output_type(const ColouredDiagram& f) {
  ColourList w(f.base.targets());
  for (int j = 0; j < f.base.targets(); ++j)
    w[j] = f.colours[f.base.sources() + j];
  return w;
}

ColouredDiagram coloured_identity(const Palette& pal, const ColourList& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> colours(2 * n);
  for (int i = 0; i < n; ++i) {
    colours[i] = pal.omega(w[i]);
    colours[n + i] = w[i];
  }
  return make_coloured(pal, Diagram::identity(n), std::move(colours), {});
}

ColouredDiagram coloured_cup(const Palette& pal, int c) {
  return make_coloured(pal, Diagram::cup(), {c, pal.omega(c)}, {});
}

ColouredDiagram coloured_cap(const Palette& pal, int c) {
  return make_coloured(pal, Diagram::cap(), {pal.omega(c), c}, {});
}

ColouredDiagram coloured_permutation(const Palette& pal, const Permutation& p,
                                     const ColourList& w) {
  const int n = p.size();
  check(static_cast<int>(w.size()) == n, "permutation and word sizes differ");
  std::vector<int> colours(2 * n);
  for (int i = 0; i < n; ++i) {
    colours[i] = pal.omega(w[i]);
    colours[n + p(i)] = w[i];
  }
  return make_coloured(pal, permutation_diagram(p), std::move(colours), {});
}

ColouredDiagram coloured_loops(const Palette& pal, const std::vector<int>& orbits) {
  std::vector<int> reps;
  for (int c : orbits) reps.push_back(pal.orbit(c));
  const int count = static_cast<int>(reps.size());
  return make_coloured(pal, Diagram::loops(count), {}, std::move(reps));
}

ColouredDiagram coloured_compose(const ColouredDiagram& f,
                                 const ColouredDiagram& g) {
  check(f.palette == g.palette, "coloured compose: palettes differ");
  ColourList out = output_type(f), in = input_type(g);
  check(out.size() == in.size(), "coloured compose: inner arities differ");
  for (size_t j = 0; j < out.size(); ++j) {
    if (out[j] != in[j]) {
      std::ostringstream os;
      os << "coloured compose: colour mismatch at inner position " << (j + 1)
         << " (" << f.palette.name(out[j]) << " vs " << f.palette.name(in[j])
         << ")";
      throw std::invalid_argument(os.str());
    }
  }
  auto [base, cycle_reps] = compose_tracked(f.base, g.base);
  const int m = f.base.sources(), p = g.base.targets();
  std::vector<int> colours(m + p);
  for (int i = 0; i < m; ++i) colours[i] = f.colours[i];
  for (int j = 0; j < p; ++j) colours[m + j] = g.colours[g.base.sources() + j];
  std::vector<int> orbits = f.closed_orbits;
  orbits.insert(orbits.end(), g.closed_orbits.begin(), g.closed_orbits.end());
  // Middle slot j carries f's colour at target j.
  for (int j : cycle_reps) orbits.push_back(f.palette.orbit(f.colours[m + j]));
  return make_coloured(f.palette, base, std::move(colours), std::move(orbits));
}

ColouredDiagram coloured_oplus(const ColouredDiagram& f,
                               const ColouredDiagram& g) {
  check(f.palette == g.palette, "coloured oplus: palettes differ");
  const int fm = f.base.sources(), fn = f.base.targets();
  const int gm = g.base.sources(), gn = g.base.targets();
  std::vector<int> colours(fm + gm + fn + gn);
  for (int i = 0; i < fm; ++i) colours[i] = f.colours[i];
  for (int i = 0; i < gm; ++i) colours[fm + i] = g.colours[i];
  for (int j = 0; j < fn; ++j) colours[fm + gm + j] = f.colours[fm + j];
  for (int j = 0; j < gn; ++j) colours[fm + gm + fn + j] = g.colours[gm + j];
  std::vector<int> orbits = f.closed_orbits;
  orbits.insert(orbits.end(), g.closed_orbits.begin(), g.closed_orbits.end());
  return make_coloured(f.palette, oplus(f.base, g.base), std::move(colours),
                       std::move(orbits));
}

ColouredDiagram palette_pushforward(const Palette& target,
                                    const std::vector<int>& phi,
                                    const ColouredDiagram& f) {
  check(static_cast<int>(phi.size()) == f.palette.size(),
        "pushforward: map must cover the source palette");
  for (int c = 0; c < f.palette.size(); ++c) {
    check(phi[c] >= 0 && phi[c] < target.size(), "pushforward: image out of range");
    check(phi[f.palette.omega(c)] == target.omega(phi[c]),
          "pushforward: map must intertwine the involutions");
  }
  std::vector<int> colours(f.colours.size());
  for (size_t i = 0; i < f.colours.size(); ++i) colours[i] = phi[f.colours[i]];
  std::vector<int> orbits;
  for (int r : f.closed_orbits) orbits.push_back(target.orbit(phi[r]));
  return make_coloured(target, f.base, std::move(colours), std::move(orbits));
}

bool colour_is_up(int c) { return c % 2 == 0; }

std::pair<ColourList, Permutation> walled_normal_form(const ColourList& w) {
  const int n = static_cast<int>(w.size());
  ColourList sorted;
  std::vector<int> images(n);
  int pos = 0;
  for (int i = 0; i < n; ++i)
    if (colour_is_up(w[i])) {
      sorted.push_back(w[i]);
      images[i] = pos++;
    }
  for (int i = 0; i < n; ++i)
    if (!colour_is_up(w[i])) {
      sorted.push_back(w[i]);
      images[i] = pos++;
    }
  return {std::move(sorted), Permutation(std::move(images))};
}

}  // namespace brauerkit
