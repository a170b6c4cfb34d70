#pragma once

#include <compare>

#include "svt/rational.hpp"

namespace svt {

enum class GenKind : unsigned char { L = 0, G = 1 };

/// Basis generator of the Lie superalgebra: L_i (even) or G_k (odd), indices
/// stored doubled so half-integers stay exact. The named generators of the
/// algebra have i integral and k in (1/2)Z; mixed-sector G products close
/// onto L at half-integer indices, so those are representable too.
struct Generator {
  GenKind kind;
  long index2;

  int parity() const { return kind == GenKind::G ? 1 : 0; }
  Rational index() const { return make_rational(index2, 2); }

  friend bool operator==(const Generator&, const Generator&) = default;
  /// Total order used both as the PBW key and for canonical term sorting:
  /// index ascending, even before odd on ties.
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    if (auto c = a.index2 <=> b.index2; c != 0) return c;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  }
};

/// L_i from the true (integer) index.
Generator gen_L(long i);
/// G_k from the doubled index 2k.
Generator gen_G2(long k2);
/// Builds from kind + doubled index.
Generator gen_from_index2(GenKind kind, long index2);

}  // namespace svt
