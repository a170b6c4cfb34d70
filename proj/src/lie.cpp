#include "svt/lie.hpp"

#include <string>

#include "svt/errors.hpp"

namespace svt {

Generator gen_L(long i) { return Generator{GenKind::L, 2 * i}; }

Generator gen_G2(long k2) { return Generator{GenKind::G, k2}; }

Generator gen_from_index2(GenKind kind, long index2) {
  return Generator{kind, index2};
}

LieElement LieElement::of(Generator g, const Scalar& c) {
  LieElement e;
  e.add_term(g, c);
  return e;
}

std::optional<int> LieElement::homogeneous_parity() const {
  int p = 0;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (first) {
      p = g.parity();
      first = false;
    } else if (g.parity() != p) {
      return std::nullopt;
    }
  }
  return p;
}

void LieElement::add_term(Generator g, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement out;
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
  return out;
}

LieElement operator*(const LieElement& x, const Scalar& c) {
  LieElement out;
  for (const auto& [g, xc] : x.terms_) out.add_term(g, xc * c);
  return out;
}

LieElement guarded_L(const Rational& index) {
  if (!is_integer(index)) return {};
  return LieElement::of(gen_L(index.get_num().get_si()));
}

LieElement bracket(Generator x, Generator y) {
  const bool xl = x.kind == GenKind::L, yl = y.kind == GenKind::L;
  if (xl && yl) {
    // [L_i, L_j] = (j - i) L_{i+j}
    Rational c = make_rational(y.index2 - x.index2, 2);
    return LieElement::of(Generator{GenKind::L, x.index2 + y.index2}, Scalar(c));
  }
  if (xl && !yl) {
    // [L_i, G_k] = (k - i/2) G_{i+k}
    Rational c = make_rational(2 * y.index2 - x.index2, 4);
    return LieElement::of(Generator{GenKind::G, x.index2 + y.index2}, Scalar(c));
  }
  if (!xl && yl) {
    // [G_k, L_i] = -[L_i, G_k] = (i/2 - k) G_{i+k}
    Rational c = make_rational(y.index2 - 2 * x.index2, 4);
    return LieElement::of(Generator{GenKind::G, x.index2 + y.index2}, Scalar(c));
  }
  // [G_k, G_l] = 2 L_{k+l}. Mixed-sector pairs land on half-integer L
  // indices; those generators are kept (dropping them breaks the Jacobi
  // identity and PBW confluence on mixed words).
  return LieElement::of(Generator{GenKind::L, x.index2 + y.index2}, Scalar(2));
}

LieElement bracket(const LieElement& x, const LieElement& y, MixedInputs policy) {
  if (policy == MixedInputs::Reject) {
    if (!x.homogeneous_parity() || !y.homogeneous_parity())
      throw MixedParity("bracket requires Z2-homogeneous inputs");
  }
  LieElement out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) out += bracket(gx, gy) * (cx * cy);
  return out;
}

LieElement ad_power(const LieElement& y, const LieElement& x, long r) {
  LieElement acc = x;
  for (long p = 0; p < r; ++p) acc = bracket(y, acc);
  return acc;
}

LieElement exp_ad(const LieElement& z, const LieElement& x, int nilpotency_bound) {
  LieElement acc = x;
  LieElement term = x;
  for (int p = 1; p <= nilpotency_bound; ++p) {
    term = bracket(z, term) * Scalar(make_rational(1, p));
    if (term.is_zero()) return acc;
    acc += term;
  }
  throw NotNilpotent("exp_ad did not terminate within " +
                     std::to_string(nilpotency_bound) + " steps");
}

XYPair build_xy(long m) {
  if (m == 0) throw InvalidM("m must be nonzero");
  LieElement x = LieElement::of(gen_L(0), Scalar(make_rational(1, m)));
  x += LieElement::of(gen_L(-m), Scalar::alpha());
  LieElement z = LieElement::of(gen_L(-m), Scalar::alpha());
  LieElement y = exp_ad(z, LieElement::of(gen_L(m)), 8);
  if (!(bracket(x, y) == y))
    throw InvariantViolated("[X, Y] != Y for m = " + std::to_string(m));
  return XYPair{std::move(x), std::move(y), m};
}

}  // namespace svt
