#pragma once

// Involutive palettes and colour-decorated Brauer diagrams. A colouring
// assigns a palette colour to every boundary point so that paired points
// carry omega-swapped colours; closed loops carry colour orbits.

#include <string>
#include <vector>

#include "brauerkit/diagram.hpp"

namespace brauerkit {

class Palette {
 public:
  Palette() = default;
  // omega[omega[c]] = c required.
  Palette(std::vector<std::string> colours, std::vector<int> omega);

  // Single colour fixed by omega.
  static Palette monochrome();
  // Colours "up","dn" with omega swapping them. With base colours the
  // palette holds "<d>.up","<d>.dn" per base colour d, in that order:
  // up-colours sit at even indices and omega flips the low bit.
  static Palette oriented();
  static Palette oriented(const std::vector<std::string>& base);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int c) const { return names_[c]; }
  const std::vector<std::string>& names() const { return names_; }
  int omega(int c) const { return omega_[c]; }
  // Orbit representative: the smaller index of {c, omega(c)}.
  int orbit(int c) const { return c < omega_[c] ? c : omega_[c]; }
  // Index of a named colour, -1 when absent.
  int index(const std::string& name) const;

  bool operator==(const Palette& o) const {
    return names_ == o.names_ && omega_ == o.omega_;
  }
  bool operator!=(const Palette& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  std::vector<int> omega_;
};

using ColourList = std::vector<int>;

// Reverse the list and apply omega entrywise; involutive.
ColourList dual_object(const Palette& pal, const ColourList& w);

struct ColouredDiagram {
  Palette palette;
  Diagram base;
  // Colour of each boundary point; colours[base.pair(i)] =
  // omega(colours[i]) always holds.
  std::vector<int> colours;
  // Sorted orbit representatives, one per closed loop.
  std::vector<int> closed_orbits;

  bool operator==(const ColouredDiagram& o) const;
  bool operator!=(const ColouredDiagram& o) const { return !(*this == o); }
  bool operator<(const ColouredDiagram& o) const;
};

// Validates the omega-compatibility invariant and sizes; throws on
// violation. All constructors below return validated values.
ColouredDiagram make_coloured(const Palette& pal, const Diagram& base,
                              std::vector<int> colours,
                              std::vector<int> closed_orbits);

bool is_valid_colouring(const ColouredDiagram& f);

// Input type: omega of the source colours. Output type: target colours.
ColourList input_type(const ColouredDiagram& f);
ColourList output_type(const ColouredDiagram& f);

// Identity on the word w: input and output types both equal w.
ColouredDiagram coloured_identity(const Palette& pal, const ColourList& w);
// 0->2 with output type (c, omega c).
ColouredDiagram coloured_cup(const Palette& pal, int c);
// 2->0 with input type (c, omega c).
ColouredDiagram coloured_cap(const Palette& pal, int c);
// Permutation diagram with input type w; output type is w pushed along
// p (entry i lands at position p(i)).
ColouredDiagram coloured_permutation(const Palette& pal, const Permutation& p,
                                     const ColourList& w);
// Closed diagram: no boundary, one loop per listed orbit entry.
ColouredDiagram coloured_loops(const Palette& pal, const std::vector<int>& orbits);

// Stacks f then g. Requires output_type(f) == input_type(g); a mismatch
// reports the first offending target position. New middle cycles
// contribute their colour orbit.
ColouredDiagram coloured_compose(const ColouredDiagram& f,
                                 const ColouredDiagram& g);

ColouredDiagram coloured_oplus(const ColouredDiagram& f,
                               const ColouredDiagram& g);

// Transport along an equivariant map of palettes phi (phi[omega(c)] =
// omega'(phi[c]) required): recolours boundary and loop labels.
ColouredDiagram palette_pushforward(const Palette& target,
                                    const std::vector<int>& phi,
                                    const ColouredDiagram& f);

// Oriented words over an oriented palette: entry parity encodes the
// direction (even = up).
bool colour_is_up(int c);

// Stable partition of the word into ups-then-downs. Returns the sorted
// word and the shuffle p with p(i) = new position of entry i; any
// diagram on w is conjugated to one on the walled word by the shuffle's
// action diagrams.
std::pair<ColourList, Permutation> walled_normal_form(const ColourList& w);

}  // namespace brauerkit
