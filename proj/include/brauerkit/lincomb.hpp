#pragma once

// Formal linear combinations over an ordered basis type B with scalar
// ring S. Zero coefficients are never stored.

#include <map>
#include <sstream>
#include <string>

#include "brauerkit/scalar.hpp"

namespace brauerkit {

template <typename B, typename S>
class LinComb {
 public:
  LinComb() = default;
  LinComb(const B& b, const S& c) { add(b, c); }

  void add(const B& b, const S& c) {
    if (scalar_is_zero(c)) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
    } else {
      it->second = it->second + c;
      if (scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  S coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? S(0) : it->second;
  }

  const std::map<B, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int size() const { return static_cast<int>(terms_.size()); }

  LinComb operator+(const LinComb& o) const {
    LinComb r = *this;
    for (const auto& [b, c] : o.terms_) r.add(b, c);
    return r;
  }

  LinComb operator-(const LinComb& o) const {
    LinComb r = *this;
    for (const auto& [b, c] : o.terms_) r.add(b, S(0) - c);
    return r;
  }

  LinComb operator-() const { return LinComb() - *this; }

  LinComb scaled(const S& x) const {
    LinComb r;
    for (const auto& [b, c] : terms_) r.add(b, c * x);
    return r;
  }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinComb& o) const { return !(*this == o); }

 private:
  std::map<B, S> terms_;
};

// Coefficientwise evaluation at t = delta; a ring homomorphism on
// scalars, so it commutes with module operations.
template <typename B>
LinComb<B, Rat> specialize(const LinComb<B, Poly>& x, const Rat& delta) {
  LinComb<B, Rat> out;
  for (const auto& [b, c] : x.terms()) out.add(b, c.eval(delta));
  return out;
}

// Applies f termwise and collects; f maps a basis element to a
// combination (so bilinear extensions factor through this).
template <typename B2, typename B, typename S, typename F>
LinComb<B2, S> lin_map(const LinComb<B, S>& x, F&& f) {
  LinComb<B2, S> out;
  for (const auto& [b, c] : x.terms()) {
    LinComb<B2, S> y = f(b);
    for (const auto& [b2, c2] : y.terms()) out.add(b2, c * c2);
  }
  return out;
}

}  // namespace brauerkit
