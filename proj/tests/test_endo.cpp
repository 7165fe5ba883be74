#include <gtest/gtest.h>

#include "skoszul/endo.hpp"
#include "skoszul/error.hpp"
#include "skoszul/random.hpp"
#include "skoszul/text.hpp"

using namespace skoszul;

namespace {

Poly P(const PolyRing& r, const char* s) { return parse_poly(s, r); }

template <class F>
void expect_code(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(MakeEndo, FrobeniusMultipliers) {
  const PolyRing r{Field::prime(2), 2};
  const Endo f = Endo::frobenius(r, 2, 1);
  EXPECT_EQ(f.multipliers(), (std::vector{P(r, "x1"), P(r, "x2")}));
  EXPECT_TRUE(f.flatness_asserted());
  const Endo f3 = Endo::frobenius(PolyRing{Field::prime(3), 2}, 3, 2);
  EXPECT_EQ(f3.multipliers()[1], P(f3.ring(), "x2^8"));
}

TEST(MakeEndo, PowerMultiplier) {
  const PolyRing r{Field::rationals(), 1};
  EXPECT_EQ(Endo::power(r, 3).multipliers(), std::vector{P(r, "x1^2")});
  expect_code(ErrorCode::NotStructural, [&] { Endo::power(r, 0); });
}

TEST(MakeEndo, Errors) {
  const PolyRing r{Field::rationals(), 2};
  expect_code(ErrorCode::NotStructural, [&] { Endo::from_images(r, {P(r, "x2"), P(r, "x2")}, true); });
  expect_code(ErrorCode::NotStructural, [&] { Endo::custom(r, {P(r, "x1"), Poly(r)}, true); });
  expect_code(ErrorCode::CharacteristicMismatch, [&] { Endo::frobenius(r, 2, 1); });
  expect_code(ErrorCode::CharacteristicMismatch, [&] { Endo::frobenius(PolyRing{Field::prime(3), 2}, 2, 1); });
  expect_code(ErrorCode::ArityMismatch, [&] { Endo::custom(r, {P(r, "x1")}, true); });
}

TEST(MakeEndo, FromImages) {
  const PolyRing r{Field::rationals(), 2};
  const Endo phi = Endo::from_images(r, {P(r, "x1^2*x2 + 3*x1"), P(r, "x2")}, false);
  EXPECT_EQ(phi.family(), EndoFamily::Custom);
  EXPECT_EQ(phi.multipliers()[0], P(r, "x1*x2 + 3"));
  EXPECT_FALSE(phi.flatness_asserted());
}

TEST(ApplyEndo, Examples) {
  const PolyRing f2{Field::prime(2), 1};
  EXPECT_EQ(apply_endo(Endo::frobenius(f2, 2, 1), P(f2, "x1 + 1")), P(f2, "x1^2 + 1"));
  const PolyRing r{Field::prime(2), 2};
  const Endo phi = Endo::frobenius(r, 2, 1);
  EXPECT_EQ(apply_endo(phi, P(r, "-x2")), P(r, "-x2^2"));
  const PolyRing q{Field::rationals(), 2};
  const Endo sq = Endo::power(q, 2);
  EXPECT_EQ(apply_endo(sq, P(q, "-x2")), P(q, "-x2^2"));
  EXPECT_EQ(apply_endo(sq, P(q, "x1")), P(q, "x1^2"));
  const Endo id = Endo::custom(q, {P(q, "1"), P(q, "1")}, true);
  const Poly f = P(q, "3/2*x1^2*x2 - 7");
  EXPECT_EQ(apply_endo(id, f), f);
  expect_code(ErrorCode::ArityMismatch, [&] { apply_endo(sq, P(PolyRing{Field::rationals(), 3}, "x1")); });
}

TEST(EndoPower, Examples) {
  const PolyRing r{Field::prime(2), 2};
  const Endo f = Endo::frobenius(r, 2, 1);
  const Endo f2 = endo_power(f, 2);
  EXPECT_EQ(f2.images(), (std::vector{P(r, "x1^4"), P(r, "x2^4")}));
  EXPECT_EQ(f2, Endo::frobenius(r, 2, 2));
  EXPECT_EQ(endo_power(f, 0), Endo::identity(r));
  const PolyRing q{Field::rationals(), 1};
  EXPECT_EQ(endo_power(Endo::power(q, 3), 2).images(), std::vector{P(q, "x1^9")});
  const Endo c = Endo::custom(q, {P(q, "x1 + 2")}, true);
  EXPECT_EQ(endo_power(c, 2).images()[0], c.apply(c.apply(P(q, "x1"))));
}

TEST(ApplyEndo, HomomorphismOnRandomSamples) {
  Rng rng(5);
  const PolyRing r{Field::prime(3), 3};
  const std::vector<Endo> endos{Endo::frobenius(r, 3, 1), Endo::power(r, 2),
                                Endo::custom(r, {P(r, "x1 + 1"), P(r, "x2*x3"), P(r, "2")}, true)};
  for (std::size_t s = 0; s < 1000; ++s) {
    const Endo& phi = endos[s % endos.size()];
    const RandomShape shape{3, 3, 0};
    const Poly f = random_poly(r, rng, shape), g = random_poly(r, rng, shape);
    ASSERT_EQ(apply_endo(phi, f * g), apply_endo(phi, f) * apply_endo(phi, g));
    ASSERT_EQ(apply_endo(phi, f + g), apply_endo(phi, f) + apply_endo(phi, g));
  }
}

TEST(EndoPower, AdditiveInExponent) {
  Rng rng(6);
  const PolyRing r{Field::prime(5), 2};
  const Endo phi = Endo::custom(r, {P(r, "x2 + 1"), P(r, "x1")}, true);
  for (std::size_t s = 0; s < 100; ++s) {
    const std::uint64_t a = rng.below(3), b = rng.below(3);
    const Poly f = random_poly(r, rng, RandomShape{3, 3, 0});
    ASSERT_EQ(apply_endo(endo_power(phi, a + b), f), apply_endo(endo_power(phi, a), apply_endo(endo_power(phi, b), f)));
    ASSERT_EQ(phi.apply(f, a + b), apply_endo(endo_power(phi, a + b), f));
  }
}

TEST(ApplyEndo, FrobeniusIsPthPower) {
  Rng rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PolyRing r{Field::prime(p), 3};
    for (std::uint32_t e = 1; e <= 2; ++e) {
      const Endo phi = Endo::frobenius(r, p, e);
      const std::uint64_t q = checked_pow(p, e);
      for (std::size_t s = 0; s < 50; ++s) {
        const Poly f = random_poly(r, rng, RandomShape{3, 4, 0});
        ASSERT_EQ(apply_endo(phi, f), f.pow(q));
        std::vector<Poly> powers;
        for (std::size_t i = 0; i < 3; ++i) powers.push_back(Poly::variable(r, i, static_cast<Exponent>(q)));
        ASSERT_EQ(apply_endo(phi, f), substitute(f, powers));
      }
    }
  }
}
