#pragma once

#include <map>
#include <optional>
#include <vector>

#include "svt/lie.hpp"

namespace svt {

/// Ascending product of generators. Canonical monomials are sorted by the
/// generator key, repeated factors are allowed only for even generators, and
/// the empty monomial is the unit.
using PbwMonomial = std::vector<Generator>;

int parity(const PbwMonomial& m);
bool is_pbw_canonical(const PbwMonomial& m);

/// Which adjacent defect the rewriter resolves first. Canonical forms do not
/// depend on the choice (checked by the confluence tests); LeftmostFirst is
/// the default strategy.
enum class RewriteOrder { LeftmostFirst, RightmostFirst };

/// Element of the universal enveloping superalgebra in PBW canonical form.
class UeaElement {
 public:
  UeaElement() = default;  // zero
  static UeaElement unit() { return from_scalar(Scalar(1)); }
  static UeaElement from_scalar(const Scalar& c);
  static UeaElement of_generator(Generator g, const Scalar& c = Scalar(1));
  static UeaElement from_lie(const LieElement& x);
  /// Unchecked-in-release direct construction; the monomial must be canonical.
  static UeaElement from_canonical(PbwMonomial m, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;
  UeaElement zero_like() const { return {}; }
  UeaElement unit_like() const { return unit(); }

  const std::map<PbwMonomial, Scalar>& terms() const { return terms_; }
  /// Parity if Z2-homogeneous (zero reports even); nullopt for mixed parity.
  std::optional<int> homogeneous_parity() const;

  void add_term(const PbwMonomial& m, const Scalar& c);
  UeaElement& operator+=(const UeaElement& o);
  UeaElement& operator-=(const UeaElement& o);
  UeaElement operator-() const;
  friend UeaElement operator+(UeaElement a, const UeaElement& b) {
    a += b;
    return a;
  }
  friend UeaElement operator-(UeaElement a, const UeaElement& b) {
    a -= b;
    return a;
  }
  friend UeaElement operator*(const UeaElement& x, const Scalar& c);
  friend UeaElement operator*(const Scalar& c, const UeaElement& x) { return x * c; }
  friend bool operator==(const UeaElement& a, const UeaElement& b) = default;

 private:
  std::map<PbwMonomial, Scalar> terms_;
};

/// Rewrites an arbitrary word of generators into PBW canonical form. An
/// out-of-order adjacent pair (u, v) rewrites as u v = (-1)^{[u][v]} v u +
/// [u, v]; an equal adjacent odd pair G_k G_k rewrites to L_{2k}.
UeaElement normal_order(const std::vector<Generator>& word, const Scalar& coeff,
                        RewriteOrder order = RewriteOrder::LeftmostFirst);

/// Associative product, bilinear over Scalar.
UeaElement operator*(const UeaElement& x, const UeaElement& y);

UeaElement uea_pow(const UeaElement& x, long r);

enum class Shift { Rising, Falling };

/// Rising e_a^{<r>} = (e+a)(e+a+1)...(e+a+r-1) or falling
/// e_a^{[r]} = (e+a)(e+a-1)...(e+a-r+1); 1 at r = 0. Factors multiply
/// left-to-right.
UeaElement shifted_factorial(const UeaElement& e, const Rational& a, long r,
                             Shift dir);

/// The super-antihomomorphism with S0(g) = -g on generators and S0(1) = 1;
/// S0(xy) = (-1)^{[x][y]} S0(y) S0(x).
UeaElement antipode0(const UeaElement& x);

/// Coefficient of the empty monomial: eps0(1) = 1, eps0(g) = 0.
Scalar counit0(const UeaElement& x);

}  // namespace svt
