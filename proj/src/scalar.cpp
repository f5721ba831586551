#include "brauerkit/scalar.hpp"

#include <stdexcept>

namespace brauerkit {

std::string to_string(const Rat& q) {
  return q.get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

Poly::Poly(const Rat& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly Poly::t(int power) {
  std::vector<Rat> c(power + 1, Rat(0));
  c[power] = 1;
  return Poly(std::move(c));
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[k];
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  std::vector<Rat> c(coeffs_);
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(std::move(c));
}

bool Poly::operator<(const Poly& o) const {
  if (coeffs_.size() != o.coeffs_.size())
    return coeffs_.size() < o.coeffs_.size();
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  }
  return false;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat a = c > 0 ? Rat(c) : Rat(-c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono = i == 0 ? ""
                     : i == 1 ? "t"
                              : "t^" + std::to_string(i);
    if (mono.empty()) {
      out += to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += to_string(a) + "*" + mono;
    }
  }
  return out;
}

}  // namespace brauerkit
