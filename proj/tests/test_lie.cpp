#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "svt/errors.hpp"
#include "svt/lie.hpp"

using namespace svt;

namespace {

Scalar alpha_term(long num, long den, int pow) {
  return Scalar::term(make_rational(num, den), pow);
}

}  // namespace

TEST_CASE("defining relations on generators") {
  CHECK(bracket(gen_L(1), gen_L(2)) == LieElement::of(gen_L(3)));
  CHECK(bracket(gen_G2(1), gen_G2(1)) == LieElement::of(gen_L(1), Scalar(2)));
  CHECK(bracket(gen_L(4), gen_L(4)).is_zero());
  // [L_2, G_{1/2}] = (1/2 - 1) G_{5/2}
  CHECK(bracket(gen_L(2), gen_G2(1)) ==
        LieElement::of(gen_G2(5), Scalar(make_rational(-1, 2))));
  // mixed-sector G pair closes onto a half-integer L index
  CHECK(bracket(gen_G2(2), gen_G2(1)) ==
        LieElement::of(Generator{GenKind::L, 3}, Scalar(2)));
}

TEST_CASE("guarded L constructor") {
  CHECK(guarded_L(make_rational(1, 2)).is_zero());
  CHECK(guarded_L(Rational(2)) == LieElement::of(gen_L(2)));
}

TEST_CASE("mixed-parity policy") {
  const LieElement mixed =
      LieElement::of(gen_L(1)) + LieElement::of(gen_G2(1));
  const LieElement even = LieElement::of(gen_L(0));
  CHECK_THROWS_AS(bracket(mixed, even, MixedInputs::Reject), MixedParity);
  // the default splits bilinearly
  CHECK(bracket(mixed, even) ==
        bracket(LieElement::of(gen_L(1)), even) +
            bracket(LieElement::of(gen_G2(1)), even));
  CHECK(!mixed.homogeneous_parity().has_value());
  CHECK(even.homogeneous_parity() == 0);
}

TEST_CASE("ad_power small cases") {
  for (long m : {1L, 2L}) {
    const XYPair xy = build_xy(m);
    SUBCASE("r = 0 is the identity") {
      const LieElement x = LieElement::of(gen_L(3));
      CHECK(ad_power(xy.Y, x, 0) == x);
    }
    // (ad Y)(L_i) = (i-m) L_{i+m} + 2ami L_i + a^2 m^2 (i+m) L_{i-m}
    for (long i = -3; i <= 3; ++i) {
      LieElement expect = LieElement::of(gen_L(i + m), Scalar(Rational(i - m)));
      expect += LieElement::of(gen_L(i), alpha_term(2 * m * i, 1, 1));
      expect += LieElement::of(gen_L(i - m), alpha_term(m * m * (i + m), 1, 2));
      CHECK(ad_power(xy.Y, LieElement::of(gen_L(i)), 1) == expect);
    }
    // (ad Y)(G_k) = (k-m/2) G_{k+m} + 2amk G_k + a^2 m^2 (k+m/2) G_{k-m}
    for (long k2 = -3; k2 <= 3; ++k2) {
      LieElement expect =
          LieElement::of(gen_G2(k2 + 2 * m), Scalar(make_rational(k2 - m, 2)));
      expect += LieElement::of(gen_G2(k2), alpha_term(m * k2, 1, 1));
      expect += LieElement::of(gen_G2(k2 - 2 * m),
                               alpha_term(m * m * (k2 + m), 2, 2));
      CHECK(ad_power(xy.Y, LieElement::of(gen_G2(k2)), 1) == expect);
    }
  }
}

TEST_CASE("exp_ad") {
  SUBCASE("terminating series") {
    for (long m : {1L, 2L}) {
      const LieElement z = LieElement::of(gen_L(-m), Scalar::alpha());
      LieElement expect = LieElement::of(gen_L(m));
      expect += LieElement::of(gen_L(0), alpha_term(2 * m, 1, 1));
      expect += LieElement::of(gen_L(-m), alpha_term(m * m, 1, 2));
      CHECK(exp_ad(z, LieElement::of(gen_L(m)), 10) == expect);
    }
  }
  SUBCASE("zero input") {
    CHECK(exp_ad(LieElement::of(gen_L(5)), LieElement(), 1).is_zero());
  }
  SUBCASE("single step") {
    const LieElement z = LieElement::of(gen_L(-1), Scalar::alpha());
    const LieElement expect =
        LieElement::of(gen_L(0)) + LieElement::of(gen_L(-1), Scalar::alpha());
    CHECK(exp_ad(z, LieElement::of(gen_L(0)), 10) == expect);
  }
  SUBCASE("non-terminating input is rejected") {
    CHECK_THROWS_AS(
        exp_ad(LieElement::of(gen_L(1)), LieElement::of(gen_L(2)), 6),
        NotNilpotent);
  }
}

TEST_CASE("build_xy") {
  SUBCASE("m = 1") {
    const XYPair xy = build_xy(1);
    LieElement x = LieElement::of(gen_L(0));
    x += LieElement::of(gen_L(-1), Scalar::alpha());
    CHECK(xy.X == x);
    LieElement y = LieElement::of(gen_L(1));
    y += LieElement::of(gen_L(0), alpha_term(2, 1, 1));
    y += LieElement::of(gen_L(-1), alpha_term(1, 1, 2));
    CHECK(xy.Y == y);
  }
  SUBCASE("m = 2") {
    const XYPair xy = build_xy(2);
    LieElement x = LieElement::of(gen_L(0), Scalar(make_rational(1, 2)));
    x += LieElement::of(gen_L(-2), Scalar::alpha());
    CHECK(xy.X == x);
    LieElement y = LieElement::of(gen_L(2));
    y += LieElement::of(gen_L(0), alpha_term(4, 1, 1));
    y += LieElement::of(gen_L(-2), alpha_term(4, 1, 2));
    CHECK(xy.Y == y);
  }
  SUBCASE("m = 0 rejected") { CHECK_THROWS_AS(build_xy(0), InvalidM); }
  SUBCASE("[X, Y] = Y") {
    for (long m : {1L, -1L, 2L, -2L, 3L})
      CHECK(bracket(build_xy(m).X, build_xy(m).Y) == build_xy(m).Y);
  }
}

TEST_CASE("super skew-symmetry and Jacobi on a small pool") {
  std::vector<Generator> pool;
  for (long i2 = -6; i2 <= 6; ++i2) {
    if (i2 % 2 == 0) pool.push_back(gen_L(i2 / 2));
    pool.push_back(gen_G2(i2));
  }
  for (const Generator& x : pool)
    for (const Generator& y : pool) {
      const bool both_odd = x.parity() && y.parity();
      CHECK(bracket(x, y) == bracket(y, x) * Scalar(both_odd ? 1 : -1));
    }
  for (const Generator& x : pool)
    for (const Generator& y : pool)
      for (const Generator& z : pool) {
        LieElement sum;
        sum += bracket(LieElement::of(x), bracket(y, z)) *
               Scalar((x.parity() && z.parity()) ? -1 : 1);
        sum += bracket(LieElement::of(y), bracket(z, x)) *
               Scalar((y.parity() && x.parity()) ? -1 : 1);
        sum += bracket(LieElement::of(z), bracket(x, y)) *
               Scalar((z.parity() && y.parity()) ? -1 : 1);
        CHECK(sum.is_zero());
      }
}
