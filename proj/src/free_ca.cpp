#include "brauerkit/free_ca.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace brauerkit {

DecoratedElement canonicalize(const DecoratedElement& e) {
  const int k = e.wiring.blocks();
  if (static_cast<int>(e.labels.size()) != k)
    throw std::invalid_argument("one label per block required");
  if (k > 8) throw std::invalid_argument("too many blocks to canonicalize");

  std::vector<std::pair<ColourList, std::string>> key(k);
  for (int i = 0; i < k; ++i) key[i] = {block_type(e.wiring, i), e.labels[i]};
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key[a] < key[b]; });

  // Among the block orders realizing the sorted keys, keep the one whose
  // conjugated body is least. Orders with equal keys form small groups,
  // so scanning the permutations of `order` that fix the key sequence is
  // cheap at desk scale.
  bool found = false;
  DecoratedElement best;
  std::vector<int> perm = order;
  std::sort(perm.begin(), perm.end());
  do {
    bool same_keys = true;
    for (int j = 0; j < k && same_keys; ++j)
      same_keys = key[perm[j]] == key[order[j]];
    if (!same_keys) continue;
    std::vector<int> p(k);
    for (int j = 0; j < k; ++j) p[perm[j]] = j;
    DecoratedElement cand{block_permute(e.wiring, Permutation(p)), {}};
    cand.labels.resize(k);
    for (int j = 0; j < k; ++j) cand.labels[j] = e.labels[perm[j]];
    if (!found || cand.wiring.body < best.wiring.body) {
      best = std::move(cand);
      found = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

DecoratedElement make_decorated(const GeneratorSet& gens, WiringDiagram w,
                                std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != w.blocks())
    throw std::invalid_argument("one label per block required");
  for (int i = 0; i < w.blocks(); ++i) {
    auto it = gens.grades.find(labels[i]);
    if (it == gens.grades.end())
      throw std::invalid_argument("unknown generator label " + labels[i]);
    if (it->second != block_type(w, i))
      throw std::invalid_argument("label " + labels[i] +
                                  " has the wrong grade for its block");
  }
  return canonicalize({std::move(w), std::move(labels)});
}

DecoratedElement free_ca_apply(const WiringDiagram& w,
                               const std::vector<DecoratedElement>& elems) {
  std::vector<WiringDiagram> bodies;
  std::vector<std::string> labels;
  bodies.reserve(elems.size());
  for (const auto& e : elems) {
    bodies.push_back(e.wiring);
    labels.insert(labels.end(), e.labels.begin(), e.labels.end());
  }
  return canonicalize({gamma(w, bodies), std::move(labels)});
}

}  // namespace brauerkit
