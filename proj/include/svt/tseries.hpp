#pragma once

#include <string>
#include <vector>

#include "svt/errors.hpp"
#include "svt/scalar.hpp"
#include "svt/tensor.hpp"

namespace svt {

/// Power series in the central even parameter t, truncated at a fixed order
/// N: exactly N+1 coefficients, trailing zeros stored explicitly. Arithmetic
/// requires equal orders. The coefficient algebra C is UeaElement or
/// TensorElement.
template <class C>
class TSeries {
 public:
  TSeries(int order, const C& zero)
      : c_(static_cast<std::size_t>(order) + 1, zero) {}

  static TSeries constant(int order, const C& c0) {
    TSeries s(order, c0.zero_like());
    s.c_[0] = c0;
    return s;
  }
  static TSeries unit(int order, const C& proto) {
    return constant(order, proto.unit_like());
  }
  /// v t^degree; silently truncated away if degree > order.
  static TSeries single(int order, int degree, const C& v) {
    TSeries s(order, v.zero_like());
    if (degree <= order) s.c_[static_cast<std::size_t>(degree)] = v;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& at(int d) const { return c_[static_cast<std::size_t>(d)]; }
  C& at(int d) { return c_[static_cast<std::size_t>(d)]; }
  const std::vector<C>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const C& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

  TSeries& operator+=(const TSeries& o) {
    check(o);
    for (std::size_t d = 0; d < c_.size(); ++d) c_[d] += o.c_[d];
    return *this;
  }
  TSeries& operator-=(const TSeries& o) {
    check(o);
    for (std::size_t d = 0; d < c_.size(); ++d) c_[d] -= o.c_[d];
    return *this;
  }
  TSeries operator-() const {
    TSeries out = *this;
    for (C& c : out.c_) c = -c;
    return out;
  }
  friend TSeries operator+(TSeries a, const TSeries& b) {
    a += b;
    return a;
  }
  friend TSeries operator-(TSeries a, const TSeries& b) {
    a -= b;
    return a;
  }
  friend TSeries operator*(const TSeries& x, const TSeries& y) {
    x.check(y);
    TSeries out(x.order(), x.c_[0].zero_like());
    for (int r = 0; r <= x.order(); ++r)
      for (int p = 0; p <= r; ++p) {
        const C& a = x.at(p);
        const C& b = y.at(r - p);
        if (a.is_zero() || b.is_zero()) continue;
        out.at(r) += a * b;
      }
    return out;
  }
  friend TSeries operator*(const TSeries& x, const Scalar& c) {
    TSeries out = x;
    for (C& v : out.c_) v = v * c;
    return out;
  }
  friend TSeries operator*(const Scalar& c, const TSeries& x) { return x * c; }

  /// Multiplication by t^s, truncating at the window.
  TSeries shifted(int s) const {
    TSeries out(order(), c_[0].zero_like());
    for (int d = 0; d + s <= order(); ++d) out.at(d + s) = at(d);
    return out;
  }

  /// Unique truncated two-sided inverse; needs a unit leading coefficient.
  TSeries inverted() const {
    if (!c_[0].is_unit())
      throw NonUnitLeadingTerm("series inverse needs unit leading coefficient");
    TSeries q(order(), c_[0].zero_like());
    q.c_[0] = c_[0];
    for (int n = 1; n <= order(); ++n) {
      C acc = c_[0].zero_like();
      for (int r = 1; r <= n; ++r) {
        if (at(r).is_zero() || q.at(n - r).is_zero()) continue;
        acc += at(r) * q.at(n - r);
      }
      q.at(n) = -acc;
    }
    return q;
  }

  friend bool operator==(const TSeries& a, const TSeries& b) = default;

 private:
  std::vector<C> c_;

  void check(const TSeries& o) const {
    if (c_.size() != o.c_.size())
      throw OrderMismatch("series orders " + std::to_string(order()) + " vs " +
                          std::to_string(o.order()));
  }
};

/// Formal binomial series (1 - y t)^beta = sum_p binom(beta,p) (-y)^p t^p,
/// for any rational exponent beta.
template <class C>
TSeries<C> binomial_power(const C& y, const Rational& beta, int order) {
  TSeries<C> out(order, y.zero_like());
  C pw = y.unit_like();
  for (int d = 0; d <= order; ++d) {
    Rational c = rat_binomial(beta, d);
    if ((d & 1) != 0) c = -c;
    if (c != 0) out.at(d) = pw * Scalar(c);
    if (d < order) pw = pw * y;
  }
  return out;
}

/// Degree-wise leg application on tensor-valued series (the maps are t-linear).
TSeries<TensorElement> series_apply_coproduct0(const TSeries<TensorElement>& s,
                                               std::size_t leg);
TSeries<TensorElement> series_apply_antipode0(const TSeries<TensorElement>& s,
                                              std::size_t leg);
TSeries<UeaElement> series_apply_counit0_rank2(const TSeries<TensorElement>& s,
                                               std::size_t leg);
TSeries<TensorElement> series_apply_counit0_rank3(const TSeries<TensorElement>& s,
                                                  std::size_t leg);
std::variant<TSeries<UeaElement>, TSeries<TensorElement>> series_apply_leg(
    const TSeries<TensorElement>& s, std::size_t leg, LegMap f);

TSeries<TensorElement> series_pad_unit_left(const TSeries<TensorElement>& s);
TSeries<TensorElement> series_pad_unit_right(const TSeries<TensorElement>& s);
TSeries<UeaElement> series_mul_legs(const TSeries<TensorElement>& s);
TSeries<TensorElement> series_graded_flip(const TSeries<TensorElement>& s);

}  // namespace svt
