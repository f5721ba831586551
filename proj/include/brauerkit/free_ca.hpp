#pragma once

// The free circuit algebra on a graded set of generator labels: its
// elements are wiring diagrams with labelled blocks, up to reordering
// the blocks. A canonical block order makes equality plain comparison.

#include <map>
#include <string>
#include <vector>

#include "brauerkit/wiring.hpp"

namespace brauerkit {

struct GeneratorSet {
  Palette palette;
  // label -> grade, the output word a block carrying the label must have.
  std::map<std::string, ColourList> grades;
};

struct DecoratedElement {
  WiringDiagram wiring;
  // One label per block, aligned with the block order.
  std::vector<std::string> labels;

  bool operator==(const DecoratedElement& o) const {
    return wiring == o.wiring && labels == o.labels;
  }
  bool operator!=(const DecoratedElement& o) const { return !(*this == o); }
  bool operator<(const DecoratedElement& o) const {
    if (wiring != o.wiring) return wiring < o.wiring;
    return labels < o.labels;
  }
};

// Reorders blocks into the canonical order: ascending (grade, label),
// ties resolved by the block order whose conjugated body compares least.
DecoratedElement canonicalize(const DecoratedElement& e);

// Validates one label per block with grades matching the block types,
// then canonicalizes.
DecoratedElement make_decorated(const GeneratorSet& gens, WiringDiagram w,
                                std::vector<std::string> labels);

// Action of a wiring diagram on elements of the matching grades: the
// wirings compose by gamma and the labels concatenate.
DecoratedElement free_ca_apply(const WiringDiagram& w,
                               const std::vector<DecoratedElement>& elems);

}  // namespace brauerkit
