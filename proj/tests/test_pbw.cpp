#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "svt/pbw.hpp"
#include "svt/tensor.hpp"

using namespace svt;

TEST_CASE("normal_order resolves single defects") {
  // L_2 L_1 = L_1 L_2 - L_3
  UeaElement expect = UeaElement::from_canonical({gen_L(1), gen_L(2)}, Scalar(1));
  expect -= UeaElement::of_generator(gen_L(3));
  CHECK(normal_order({gen_L(2), gen_L(1)}, Scalar(1)) == expect);

  // G_{1/2} G_{1/2} = L_1
  CHECK(normal_order({gen_G2(1), gen_G2(1)}, Scalar(1)) ==
        UeaElement::of_generator(gen_L(1)));

  // an already sorted word is returned as-is with its coefficient
  const PbwMonomial sorted{gen_L(-1), gen_L(0), gen_G2(3)};
  CHECK(is_pbw_canonical(sorted));
  CHECK(normal_order(sorted, Scalar::alpha()) ==
        UeaElement::from_canonical(sorted, Scalar::alpha()));
}

TEST_CASE("uea product examples") {
  CHECK(UeaElement::unit() * UeaElement::of_generator(gen_G2(5)) ==
        UeaElement::of_generator(gen_G2(5)));

  // G_1 G_{1/2} = -G_{1/2} G_1 + 2 L_{3/2}
  UeaElement expect =
      -UeaElement::from_canonical({gen_G2(1), gen_G2(2)}, Scalar(1));
  expect += UeaElement::from_canonical({Generator{GenKind::L, 3}}, Scalar(2));
  CHECK(UeaElement::of_generator(gen_G2(2)) *
            UeaElement::of_generator(gen_G2(1)) ==
        expect);

  CHECK(UeaElement::of_generator(gen_L(1)) *
            UeaElement::of_generator(gen_L(1)) ==
        UeaElement::from_canonical({gen_L(1), gen_L(1)}, Scalar(1)));
}

TEST_CASE("product associativity on random words") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const UeaElement x =
        normal_order(testing::random_word(rng, 3, 6), Scalar(1));
    const UeaElement y =
        normal_order(testing::random_word(rng, 3, 6), Scalar(1));
    const UeaElement z =
        normal_order(testing::random_word(rng, 3, 6), Scalar(1));
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("rewrite order independence") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto word = testing::random_word(rng, 6, 6);
    CHECK(normal_order(word, Scalar(1), RewriteOrder::LeftmostFirst) ==
          normal_order(word, Scalar(1), RewriteOrder::RightmostFirst));
  }
}

TEST_CASE("canonical form invariants hold after products") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const UeaElement x = testing::random_uea(rng, 2, 4, 6);
    for (const auto& [m, c] : x.terms()) {
      CHECK(is_pbw_canonical(m));
      CHECK(!c.is_zero());
    }
  }
}

TEST_CASE("shifted factorials") {
  for (long m : {1L, 2L}) {
    const UeaElement x = UeaElement::from_lie(build_xy(m).X);
    SUBCASE("empty product") {
      CHECK(shifted_factorial(x, make_rational(7, 3), 0, Shift::Rising) ==
            UeaElement::unit());
      CHECK(shifted_factorial(x, make_rational(-2, 5), 0, Shift::Falling) ==
            UeaElement::unit());
    }
    SUBCASE("X(X+1) in canonical form") {
      CHECK(shifted_factorial(x, Rational(0), 2, Shift::Rising) ==
            x * x + x);
    }
    SUBCASE("falling equals shifted rising") {
      for (long r = 0; r <= 4; ++r)
        for (long a2 = -3; a2 <= 3; ++a2) {
          const Rational a = make_rational(a2, 2);
          CHECK(shifted_factorial(x, a, r, Shift::Falling) ==
                shifted_factorial(x, a - r + 1, r, Shift::Rising));
        }
    }
  }
}

TEST_CASE("antipode") {
  CHECK(antipode0(UeaElement::of_generator(gen_L(4))) ==
        -UeaElement::of_generator(gen_L(4)));
  CHECK(antipode0(UeaElement::unit()) == UeaElement::unit());

  // S0(G_k G_l) = -G_l G_k = G_k G_l - 2 L_{k+l} for k < l
  const UeaElement gkgl =
      UeaElement::from_canonical({gen_G2(1), gen_G2(3)}, Scalar(1));
  const UeaElement renorm =
      gkgl - UeaElement::from_canonical({gen_L(2)}, Scalar(2));
  CHECK(antipode0(gkgl) == renorm);
  CHECK(antipode0(gkgl) ==
        -(UeaElement::of_generator(gen_G2(3)) *
          UeaElement::of_generator(gen_G2(1))));
}

TEST_CASE("antipode is a super-antihomomorphism") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    // homogeneous inputs: single monomials
    const UeaElement x =
        normal_order(testing::random_word(rng, 3, 6), Scalar(1));
    const UeaElement y =
        normal_order(testing::random_word(rng, 3, 6), Scalar(1));
    const auto px = x.homogeneous_parity();
    const auto py = y.homogeneous_parity();
    if (!px || !py) continue;
    const Scalar sign((*px && *py) ? -1 : 1);
    CHECK(antipode0(x * y) == antipode0(y) * antipode0(x) * sign);
  }
}

TEST_CASE("counit") {
  CHECK(counit0(UeaElement::of_generator(gen_L(-3))).is_zero());
  CHECK(counit0(UeaElement::unit()).is_one());
  UeaElement x = UeaElement::from_scalar(Scalar(3));
  x += UeaElement::from_canonical({gen_G2(1), gen_L(2)}, Scalar(1));
  CHECK(counit0(x) == Scalar(3));
}

TEST_CASE("undeformed Hopf axioms") {
  std::vector<UeaElement> samples;
  for (long i : {-2L, 0L, 3L}) samples.push_back(UeaElement::of_generator(gen_L(i)));
  for (long k2 : {-3L, 1L}) samples.push_back(UeaElement::of_generator(gen_G2(k2)));
  samples.push_back(UeaElement::of_generator(gen_L(1)) *
                    UeaElement::of_generator(gen_G2(1)));
  samples.push_back(UeaElement::of_generator(gen_G2(-1)) *
                    UeaElement::of_generator(gen_G2(1)));
  samples.push_back(UeaElement::of_generator(gen_L(2)) *
                    UeaElement::of_generator(gen_L(-1)));

  for (const UeaElement& x : samples) {
    const TensorElement d = coproduct0(x);
    CHECK(apply_coproduct0_leg(d, 0) == apply_coproduct0_leg(d, 1));
    CHECK(apply_counit0_rank2(d, 0) == x);
    CHECK(apply_counit0_rank2(d, 1) == x);
    // mu (S0 x Id) Delta0 = eps0 . 1
    CHECK(mul_legs(apply_antipode0_leg(d, 0)) ==
          UeaElement::from_scalar(counit0(x)));
  }
}
