#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "svt/errors.hpp"
#include "svt/tensor.hpp"

using namespace svt;

namespace {

UeaElement gen(Generator g) { return UeaElement::of_generator(g); }
const UeaElement kOne = UeaElement::unit();

}  // namespace

TEST_CASE("Koszul sign on the basic crossings") {
  // (1 x G_k)(G_l x 1) = -G_l x G_k
  CHECK(outer(kOne, gen(gen_G2(1))) * outer(gen(gen_G2(3)), kOne) ==
        -outer(gen(gen_G2(3)), gen(gen_G2(1))));
  // even legs cross without a sign
  CHECK(outer(gen(gen_L(2)), kOne) * outer(kOne, gen(gen_L(-1))) ==
        outer(gen(gen_L(2)), gen(gen_L(-1))));
  // (G_k x 1)^2 = L_{2k} x 1
  CHECK(outer(gen(gen_G2(1)), kOne) * outer(gen(gen_G2(1)), kOne) ==
        outer(gen(gen_L(1)), kOne));
}

TEST_CASE("Koszul coherence on random homogeneous monomials") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const UeaElement a = normal_order(testing::random_word(rng, 3, 6), Scalar(1));
    const UeaElement b = normal_order(testing::random_word(rng, 3, 6), Scalar(1));
    const auto pa = a.homogeneous_parity();
    const auto pb = b.homogeneous_parity();
    if (!pa || !pb) continue;
    CHECK(outer(a, kOne) * outer(kOne, b) == outer(a, b));
    CHECK(outer(kOne, b) * outer(a, kOne) ==
          outer(a, b) * Scalar((*pa && *pb) ? -1 : 1));
  }
}

TEST_CASE("tensor product associativity") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rnd = [&] {
      return outer(normal_order(testing::random_word(rng, 2, 4), Scalar(1)),
                   normal_order(testing::random_word(rng, 2, 4), Scalar(1)));
    };
    const TensorElement x = rnd(), y = rnd(), z = rnd();
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("rank-3 padding is multiplicative") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rnd = [&] {
      return outer(normal_order(testing::random_word(rng, 2, 4), Scalar(1)),
                   normal_order(testing::random_word(rng, 2, 4), Scalar(1)));
    };
    const TensorElement x = rnd(), y = rnd();
    CHECK(pad_unit_right(x) * pad_unit_right(y) == pad_unit_right(x * y));
    CHECK(pad_unit_left(x) * pad_unit_left(y) == pad_unit_left(x * y));
  }
}

TEST_CASE("coproduct0") {
  const UeaElement li = gen(gen_L(5));
  CHECK(coproduct0(li) == outer(li, kOne) + outer(kOne, li));
  CHECK(coproduct0(kOne) == TensorElement::unit(2));
  // Delta0(L_1^2) = L_1^2 x 1 + 2 L_1 x L_1 + 1 x L_1^2
  const UeaElement l1 = gen(gen_L(1));
  const UeaElement l1sq = l1 * l1;
  CHECK(coproduct0(l1sq) ==
        outer(l1sq, kOne) + outer(l1, l1) * Scalar(2) + outer(kOne, l1sq));
}

TEST_CASE("apply_leg") {
  CHECK(apply_counit0_rank2(TensorElement::unit(2), 0) == kOne);

  TensorElement expect(3);
  expect.add_term(Legs{{gen_L(2)}, {}, {}}, Scalar(1));
  expect.add_term(Legs{{}, {gen_L(2)}, {}}, Scalar(1));
  CHECK(apply_coproduct0_leg(outer(gen(gen_L(2)), kOne), 0) == expect);

  const UeaElement x = UeaElement::from_lie(build_xy(1).X);
  const UeaElement y = UeaElement::from_lie(build_xy(1).Y);
  CHECK(apply_antipode0_leg(outer(x, y), 0) == outer(-x, y));

  SUBCASE("variant dispatch") {
    const auto v = apply_leg(outer(x, y), 0, LegMap::Counit0);
    CHECK(std::holds_alternative<UeaElement>(v));
    CHECK(std::get<UeaElement>(v).is_zero());
    const auto id = apply_leg(outer(x, y), 1, LegMap::Identity);
    CHECK(std::get<TensorElement>(id) == outer(x, y));
  }
}

TEST_CASE("mul_legs") {
  const UeaElement x = UeaElement::from_lie(build_xy(2).X);
  const UeaElement y = UeaElement::from_lie(build_xy(2).Y);
  CHECK(mul_legs(outer(x, kOne)) == x);
  CHECK(mul_legs(outer(x, y)) == x * y);
  CHECK(mul_legs(outer(gen(gen_G2(3)), gen(gen_G2(3)))) == gen(gen_L(3)));
}

TEST_CASE("graded flip") {
  const TensorElement gg = outer(gen(gen_G2(1)), gen(gen_G2(3)));
  CHECK(graded_flip(gg) == -outer(gen(gen_G2(3)), gen(gen_G2(1))));
  std::mt19937 rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    const TensorElement x =
        outer(normal_order(testing::random_word(rng, 2, 4), Scalar(1)),
              normal_order(testing::random_word(rng, 2, 4), Scalar(1)));
    CHECK(graded_flip(graded_flip(x)) == x);
  }
}

TEST_CASE("rank and leg errors") {
  const TensorElement r2 = TensorElement::unit(2);
  const TensorElement r3 = TensorElement::unit(3);
  CHECK_THROWS_AS(r2 * r3, RankMismatch);
  CHECK_THROWS_AS(r2 + r3, RankMismatch);
  CHECK_THROWS_AS(apply_coproduct0_leg(r3, 0), RankMismatch);
  CHECK_THROWS_AS(apply_antipode0_leg(r2, 2), LegOutOfRange);
  CHECK_THROWS_AS(mul_legs(r3), RankMismatch);
  CHECK_THROWS_AS(graded_flip(r3), RankMismatch);
  CHECK(apply_counit0_rank3(r3, 1) == TensorElement::unit(2));
}
