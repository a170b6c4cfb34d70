#pragma once

#include <map>
#include <variant>
#include <vector>

#include "svt/pbw.hpp"

namespace svt {

using Legs = std::vector<PbwMonomial>;

/// Graded tensor square or cube of the enveloping algebra, with Koszul-sign
/// multiplication. Every leg monomial is PBW-canonical; no zero coefficient
/// is stored.
class TensorElement {
 public:
  explicit TensorElement(int rank);  // zero of the given rank
  static TensorElement unit(int rank);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;
  TensorElement zero_like() const { return TensorElement(rank_); }
  TensorElement unit_like() const { return unit(rank_); }

  const std::map<Legs, Scalar>& terms() const { return terms_; }

  void add_term(const Legs& legs, const Scalar& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement operator-() const;
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    a += b;
    return a;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    a -= b;
    return a;
  }
  friend TensorElement operator*(const TensorElement& x, const Scalar& c);
  friend TensorElement operator*(const Scalar& c, const TensorElement& x) {
    return x * c;
  }
  /// Koszul-signed product: (a x b)(c x d) = (-1)^{[b][c]} ac x bd, and the
  /// analogous crossing count for rank 3.
  friend TensorElement operator*(const TensorElement& x, const TensorElement& y);
  friend bool operator==(const TensorElement& a, const TensorElement& b) = default;

 private:
  int rank_;
  std::map<Legs, Scalar> terms_;
};

/// a x b as a rank-2 tensor (plain pairing, no sign).
TensorElement outer(const UeaElement& a, const UeaElement& b);

/// Algebra homomorphism with Delta0(g) = g x 1 + 1 x g, Delta0(1) = 1 x 1.
TensorElement coproduct0(const UeaElement& x);

/// mu(a x b) = ab; rank-2 only.
UeaElement mul_legs(const TensorElement& x);

/// x -> 1 x x and x -> x x 1 (rank 2 -> rank 3).
TensorElement pad_unit_left(const TensorElement& x);
TensorElement pad_unit_right(const TensorElement& x);

/// Graded flip on rank 2: a x b -> (-1)^{[a][b]} b x a.
TensorElement graded_flip(const TensorElement& x);

enum class LegMap { Coproduct0, Antipode0, Counit0, Identity };

/// The named map applied on one leg, identity elsewhere. Coproduct0 raises
/// rank 2 -> 3, Counit0 lowers rank (to a UeaElement from rank 2); the
/// applied maps are even, so no Koszul sign arises.
std::variant<UeaElement, TensorElement> apply_leg(const TensorElement& x,
                                                  std::size_t leg, LegMap f);

TensorElement apply_coproduct0_leg(const TensorElement& x, std::size_t leg);
TensorElement apply_antipode0_leg(const TensorElement& x, std::size_t leg);
UeaElement apply_counit0_rank2(const TensorElement& x, std::size_t leg);
TensorElement apply_counit0_rank3(const TensorElement& x, std::size_t leg);

}  // namespace svt
