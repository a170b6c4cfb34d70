#pragma once

#include <map>

#include "svt/rational.hpp"

namespace svt {

/// Polynomial in the formal parameter alpha with Rational coefficients, kept
/// sparse: no zero coefficient is ever stored, so map equality is canonical.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) {  // NOLINT: implicit by design, constants are pervasive
    if (n != 0) c_[0] = Rational(n);
  }
  Scalar(const Rational& c) {  // NOLINT: implicit by design
    if (c != 0) c_[0] = c;
  }

  static Scalar alpha(int pow = 1) { return term(Rational(1), pow); }
  static Scalar term(const Rational& c, int pow);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  /// Degree in alpha; -1 for the zero polynomial.
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  const std::map<int, Rational>& coefficients() const { return c_; }
  Rational coefficient(int pow) const;

  /// Substitutes alpha := value.
  Rational eval(const Rational& value) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) {
    a += b;
    return a;
  }
  friend Scalar operator-(Scalar a, const Scalar& b) {
    a -= b;
    return a;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) = default;

 private:
  std::map<int, Rational> c_;

  void add_term(int pow, const Rational& c);
};

}  // namespace svt
