#include "brauerkit/wiring.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace brauerkit {

WiringDiagram make_wiring(ColouredDiagram body, std::vector<int> block_sizes) {
  int total = 0;
  for (int s : block_sizes) {
    if (s < 0) throw std::invalid_argument("negative block size");
    total += s;
  }
  if (total != body.base.sources())
    throw std::invalid_argument("block sizes do not partition the source");
  return {std::move(body), std::move(block_sizes)};
}

int block_offset(const WiringDiagram& w, int i) {
  if (i < 0 || i >= w.blocks()) throw std::out_of_range("no such block");
  return std::accumulate(w.block_sizes.begin(), w.block_sizes.begin() + i, 0);
}

ColourList block_type(const WiringDiagram& w, int i) {
  const ColourList in = input_type(w.body);
  const int off = block_offset(w, i);
  return ColourList(in.begin() + off, in.begin() + off + w.block_sizes[i]);
}

ColourList wiring_output(const WiringDiagram& w) { return output_type(w.body); }

WiringDiagram identity_wiring(const Palette& pal, const ColourList& c) {
  return make_wiring(coloured_identity(pal, c),
                     {static_cast<int>(c.size())});
}

WiringDiagram gamma(const WiringDiagram& g,
                    const std::vector<WiringDiagram>& fs) {
  if (static_cast<int>(fs.size()) != g.blocks())
    throw std::invalid_argument("gamma: expected " +
                                std::to_string(g.blocks()) + " fillers, got " +
                                std::to_string(fs.size()));
  std::vector<int> blocks;
  ColouredDiagram stacked = coloured_identity(g.body.palette, {});
  for (int i = 0; i < g.blocks(); ++i) {
    if (output_type(fs[i].body) != block_type(g, i))
      throw std::invalid_argument("gamma: filler " + std::to_string(i + 1) +
                                  " does not match its block type");
    stacked = coloured_oplus(stacked, fs[i].body);
    blocks.insert(blocks.end(), fs[i].block_sizes.begin(),
                  fs[i].block_sizes.end());
  }
  return make_wiring(coloured_compose(stacked, g.body), std::move(blocks));
}

WiringDiagram block_permute(const WiringDiagram& w, const Permutation& p) {
  const int k = w.blocks();
  if (p.size() != k) throw std::invalid_argument("block permutation size");
  std::vector<int> new_sizes(k);
  for (int i = 0; i < k; ++i) new_sizes[p(i)] = w.block_sizes[i];
  std::vector<int> new_offset(k, 0);
  for (int j = 1; j < k; ++j) new_offset[j] = new_offset[j - 1] + new_sizes[j - 1];

  // q maps each source position of the reordered word to its original
  // position; the shuffle diagram then feeds the body.
  const int m = w.body.base.sources();
  std::vector<int> q(m);
  const ColourList in = input_type(w.body);
  ColourList new_word(m);
  for (int i = 0; i < k; ++i) {
    const int off = block_offset(w, i);
    for (int t = 0; t < w.block_sizes[i]; ++t) {
      q[new_offset[p(i)] + t] = off + t;
      new_word[new_offset[p(i)] + t] = in[off + t];
    }
  }
  ColouredDiagram shuffle =
      coloured_permutation(w.body.palette, Permutation(q), new_word);
  return make_wiring(coloured_compose(shuffle, w.body), std::move(new_sizes));
}

bool is_connected(const WiringDiagram& w) {
  const Diagram& d = w.body.base;
  const int k = w.blocks();
  const int strands = static_cast<int>(d.pairs().size());
  // Nodes: blocks, then strands, then closed loops.
  const int nodes = k + strands + d.closed();
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::vector<int> block_of(d.sources());
  for (int i = 0, pos = 0; i < k; ++i)
    for (int t = 0; t < w.block_sizes[i]; ++t) block_of[pos++] = i;
  for (int s = 0; s < strands; ++s) {
    const auto& [a, b] = d.pairs()[s];
    if (a < d.sources()) unite(k + s, block_of[a]);
    if (b < d.sources()) unite(k + s, block_of[b]);
  }

  int pieces = 0;
  for (int x = 0; x < nodes; ++x)
    if (find(x) == x) ++pieces;
  return pieces <= 1;
}

bool is_nonunital_admissible(const WiringDiagram& w) {
  return w.body.base.is_downward();
}

}  // namespace brauerkit
