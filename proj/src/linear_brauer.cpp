#include "brauerkit/linear_brauer.hpp"

#include <stdexcept>
#include <utility>

namespace brauerkit {

std::vector<Diagram> open_basis(int m, int n) {
  return enumerate_diagrams(m, n, 0);
}

Vec to_coords(const LinComb<Diagram, Rat>& x, const std::vector<Diagram>& basis) {
  Vec v(basis.size(), Rat(0));
  std::map<Diagram, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  for (const auto& [d, c] : x.terms()) {
    auto it = index.find(d);
    if (it == index.end())
      throw std::invalid_argument("combination leaves the open basis");
    v[it->second] = c;
  }
  return v;
}

LinComb<Diagram, Rat> from_coords(const Vec& v, const std::vector<Diagram>& basis) {
  LinComb<Diagram, Rat> x;
  for (size_t i = 0; i < basis.size(); ++i) x.add(basis[i], v[i]);
  return x;
}

namespace {

LinComb<Diagram, Rat> one(const Diagram& d) { return {d, Rat(1)}; }

// id^a (+) g (+) id^b
Diagram padded(int a, const Diagram& g, int b) {
  return oplus(oplus(Diagram::identity(a), g), Diagram::identity(b));
}

}  // namespace

IdealSlice::IdealSlice(std::vector<LinComb<Diagram, Rat>> generators,
                       Rat delta, int bound)
    : bound_(bound), delta_(std::move(delta)) {
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const Diagram& d0 = g.terms().begin()->first;
    const int gm = d0.sources(), gn = d0.targets();
    for (int a = 0; gm + gn + 2 * a <= bound; ++a)
      for (int b = 0; gm + gn + 2 * (a + b) <= bound; ++b) {
        LinComb<Diagram, Rat> padded_gen;
        for (const auto& [d, c] : g.terms()) padded_gen.add(padded(a, d, b), c);
        seeds_.push_back({{gm + a + b, gn + a + b}, std::move(padded_gen)});
      }
  }
}

const std::vector<Diagram>& IdealSlice::basis(int m, int n) const {
  if (m < 0 || n < 0 || m + n > bound_)
    throw std::out_of_range("arity outside the bound");
  auto it = bases_.find({m, n});
  if (it == bases_.end())
    it = bases_.emplace(std::make_pair(m, n), open_basis(m, n)).first;
  return it->second;
}

const EchelonBasis& IdealSlice::slice(int m, int n) const {
  if (m < 0 || n < 0 || m + n > bound_)
    throw std::out_of_range("arity outside the bound");
  auto it = sub_.find({m, n});
  if (it != sub_.end()) return it->second;

  const auto& target = basis(m, n);
  const int ambient = static_cast<int>(target.size());
  std::map<Diagram, int> index;
  for (int i = 0; i < ambient; ++i) index.emplace(target[i], i);

  EchelonBasis eb(ambient);
  for (const auto& [arity, seed] : seeds_) {
    if (eb.dim() == ambient) break;
    const auto& [a, b] = arity;
    for (const Diagram& u : open_basis(m, a)) {
      LinComb<Diagram, Rat> left = lin_compose(one(u), seed, delta_);
      for (const Diagram& v : open_basis(b, n)) {
        LinComb<Diagram, Rat> x = lin_compose(left, one(v), delta_);
        if (x.is_zero()) continue;
        Vec coords(ambient, Rat(0));
        for (const auto& [d, c] : x.terms()) coords[index.at(d)] = c;
        eb.insert(std::move(coords));
      }
    }
  }
  return sub_.emplace(std::make_pair(m, n), std::move(eb)).first->second;
}

bool IdealSlice::contains(int m, int n, const LinComb<Diagram, Rat>& x) const {
  return slice(m, n).contains(to_coords(x, basis(m, n)));
}

IdealSlice ideal_saturate(const std::vector<LinComb<Diagram, Rat>>& generators,
                          const Rat& delta, int bound) {
  return IdealSlice(generators, delta, bound);
}

bool factors_through_specialization(const std::function<Mat(const Diagram&)>& A,
                                    const Rat& delta) {
  return A(Diagram::loops(1)) == Mat::scalar(delta);
}

}  // namespace brauerkit
