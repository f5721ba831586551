#pragma once

// Wiring diagrams: coloured diagrams whose source boundary is split into
// typed input blocks. They compose as an operad by filling blocks with
// other wiring diagrams.

#include <vector>

#include "brauerkit/palette.hpp"

namespace brauerkit {

struct WiringDiagram {
  ColouredDiagram body;
  // Sizes of the input blocks; they sum to body.base.sources().
  std::vector<int> block_sizes;

  int blocks() const { return static_cast<int>(block_sizes.size()); }

  bool operator==(const WiringDiagram& o) const {
    return body == o.body && block_sizes == o.block_sizes;
  }
  bool operator!=(const WiringDiagram& o) const { return !(*this == o); }
  bool operator<(const WiringDiagram& o) const {
    if (body != o.body) return body < o.body;
    return block_sizes < o.block_sizes;
  }
};

// Validates the block partition; throws std::invalid_argument.
WiringDiagram make_wiring(ColouredDiagram body, std::vector<int> block_sizes);

// First source position of block i.
int block_offset(const WiringDiagram& w, int i);
// Type of block i: the word a filler's output must match.
ColourList block_type(const WiringDiagram& w, int i);
// Output type of the whole wiring diagram.
ColourList wiring_output(const WiringDiagram& w);

// Operad unit on the word c: identity body with a single block (one
// empty block when c is empty).
WiringDiagram identity_wiring(const Palette& pal, const ColourList& c);

// Fills block i of g with fs[i]; the composite's blocks are the fillers'
// blocks in order. Requires output_type(fs[i].body) == block_type(g, i).
WiringDiagram gamma(const WiringDiagram& g,
                    const std::vector<WiringDiagram>& fs);

// Reorders blocks by p (block i moves to position p(i)), conjugating the
// body by the induced source shuffle. gamma respects the action: filling
// the permuted diagram with the reordered fillers gives the composite of
// the unpermuted fill with its sub-blocks reordered accordingly.
WiringDiagram block_permute(const WiringDiagram& w, const Permutation& p);

// Connected: not a disjoint sum of two nonempty wiring diagrams. Nodes
// are the blocks plus the strand and loop components of the body; a
// strand component is glued to every block it enters. The empty diagram
// counts as connected. Touching the output boundary alone glues nothing.
bool is_connected(const WiringDiagram& w);

// The body is downward: every target point pairs with a source point and
// nothing is closed. Downward diagrams are stable under gamma.
bool is_nonunital_admissible(const WiringDiagram& w);

}  // namespace brauerkit
