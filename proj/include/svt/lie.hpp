#pragma once

#include <map>
#include <optional>

#include "svt/generator.hpp"
#include "svt/scalar.hpp"

namespace svt {

/// Finite Scalar-linear combination of generators. No zero coefficient is
/// stored, so map equality is canonical.
class LieElement {
 public:
  LieElement() = default;
  static LieElement of(Generator g, const Scalar& c = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Generator, Scalar>& terms() const { return terms_; }

  /// Parity if Z2-homogeneous (zero reports even); nullopt for mixed parity.
  std::optional<int> homogeneous_parity() const;

  void add_term(Generator g, const Scalar& c);
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement operator-() const;
  friend LieElement operator+(LieElement a, const LieElement& b) {
    a += b;
    return a;
  }
  friend LieElement operator-(LieElement a, const LieElement& b) {
    a -= b;
    return a;
  }
  friend LieElement operator*(const LieElement& x, const Scalar& c);
  friend LieElement operator*(const Scalar& c, const LieElement& x) { return x * c; }
  friend bool operator==(const LieElement& a, const LieElement& b) = default;

 private:
  std::map<Generator, Scalar> terms_;
};

/// L_index when the index is an integer, the zero element otherwise
/// (undefined terms vanish).
LieElement guarded_L(const Rational& index);

/// Super bracket on basis generators: [L_i,L_j] = (j-i)L_{i+j},
/// [L_i,G_k] = (k-i/2)G_{i+k}, [G_k,G_l] = 2L_{k+l} (zero when k+l is not an
/// integer).
LieElement bracket(Generator x, Generator y);

enum class MixedInputs { Split, Reject };

/// Bilinear super bracket. With MixedInputs::Reject, a non-Z2-homogeneous
/// input throws MixedParity; the default splits by bilinearity.
LieElement bracket(const LieElement& x, const LieElement& y,
                   MixedInputs policy = MixedInputs::Split);

/// (ad y)^r (x) by iterated bracket.
LieElement ad_power(const LieElement& y, const LieElement& x, long r);

/// sum_p (1/p!) (ad z)^p (x); throws NotNilpotent if the sum has not
/// terminated within nilpotency_bound applications.
LieElement exp_ad(const LieElement& z, const LieElement& x, int nilpotency_bound);

/// X = (1/m)L_0 + alpha L_{-m} and Y = exp(alpha ad L_{-m})(L_m); satisfies
/// [X, Y] = Y, checked at construction.
struct XYPair {
  LieElement X;
  LieElement Y;
  long m = 1;
};

XYPair build_xy(long m);

}  // namespace svt
