#include "svt/scalar.hpp"

namespace svt {

Scalar Scalar::term(const Rational& c, int pow) {
  Scalar s;
  if (c != 0) s.c_[pow] = c;
  return s;
}

bool Scalar::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

Rational Scalar::coefficient(int pow) const {
  auto it = c_.find(pow);
  return it == c_.end() ? Rational(0) : it->second;
}

Rational Scalar::eval(const Rational& value) const {
  // Horner over the sparse exponent list.
  Rational acc(0);
  int prev = -1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (prev >= 0)
      for (int j = it->first; j < prev; ++j) acc *= value;
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0)
    for (int j = 0; j < prev; ++j) acc *= value;
  return acc;
}

void Scalar::add_term(int pow, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(pow, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [p, c] : o.c_) add_term(p, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [p, c] : o.c_) add_term(p, Rational(-c));
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out;
  for (const auto& [p, c] : c_) out.c_[p] = -c;
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [pa, ca] : a.c_)
    for (const auto& [pb, cb] : b.c_) out.add_term(pa + pb, Rational(ca * cb));
  return out;
}

}  // namespace svt
