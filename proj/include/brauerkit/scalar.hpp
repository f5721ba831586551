#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) and univariate
// polynomials over them. No floating point anywhere in this library.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace brauerkit {

// Canonical reduced rational. mpq_class keeps gcd-reduced numerator /
// denominator with positive denominator, so equality is plain equality.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q);

// Parses "a/b" or "a" with optional sign. Throws std::invalid_argument on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Dense univariate polynomial over Rat in one indeterminate t.
// Invariant: coeffs_ has no trailing zeros; the zero polynomial is {}.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c);           // constant
  explicit Poly(std::vector<Rat> coeffs);
  static Poly t(int power = 1); // monomial t^power

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int k) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator<(const Poly& o) const;

  Rat eval(const Rat& x) const;
  std::string str() const;      // e.g. "t^2 - 3/2"

 private:
  void strip();
  std::vector<Rat> coeffs_;     // coeffs_[k] multiplies t^k
};

// Uniform hooks so linear combinations can be templated over Rat or Poly.
inline bool scalar_is_zero(const Rat& x) { return x == 0; }
inline bool scalar_is_zero(const Poly& x) { return x.is_zero(); }
inline std::string scalar_str(const Rat& x) { return to_string(x); }
inline std::string scalar_str(const Poly& x) { return x.str(); }

}  // namespace brauerkit
