#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skoszul/error.hpp"
#include "skoszul/monomial_ideal.hpp"
#include "skoszul/random.hpp"
#include "skoszul/text.hpp"

using namespace skoszul;

namespace {

const PolyRing Q2{Field::rationals(), 2};
const PolyRing F2_2{Field::prime(2), 2};

Poly P(const PolyRing& r, const char* s) { return parse_poly(s, r); }

MonomialIdeal ideal(const char* s, std::size_t n = 2) { return parse_monomial_ideal(s, n); }

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

TEST(Field, RejectsNonPrimes) {
  expect_code(ErrorCode::InvalidField, [] { Field::prime(4); });
  expect_code(ErrorCode::InvalidField, [] { Field::prime(1); });
  expect_code(ErrorCode::InvalidField, [] { Field::prime(2147483659ULL); });
  EXPECT_EQ(Field::prime(2147483647ULL).characteristic(), 2147483647u);
}

TEST(Field, ResidueArithmetic) {
  const Field f = Field::prime(7);
  EXPECT_EQ(f.from_int(3) * f.from_int(5), f.from_int(1));
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
  EXPECT_EQ(f.parse("3/2"), f.from_int(5));
  EXPECT_EQ(f.from_int(3).inverse(), f.from_int(5));
  expect_code(ErrorCode::DivisionByZero, [&] { f.zero().inverse(); });
  expect_code(ErrorCode::ArityMismatch, [&] { (void)(f.one() + Field::rationals().one()); });
}

TEST(Field, RationalFormatting) {
  const Field q = Field::rationals();
  EXPECT_EQ(q.format(q.parse("-6/4")), "-3/2");
  EXPECT_EQ(q.format(q.from_int(5)), "5/1");
  EXPECT_EQ(Field::from_descriptor("gf:5").characteristic(), 5u);
  expect_code(ErrorCode::InvalidField, [] { Field::from_descriptor("gf:6"); });
}

TEST(PolyMul, DifferenceOfSquares) {
  EXPECT_EQ(P(Q2, "(x1+x2)*(x1-x2)"), P(Q2, "x1^2 - x2^2"));
}

TEST(PolyMul, CharacteristicTwoSquare) {
  EXPECT_EQ(P(F2_2, "x1+x2") * P(F2_2, "x1+x2"), P(F2_2, "x1^2 + x2^2"));
}

TEST(PolyMul, ScalarCase) {
  EXPECT_EQ(P(Q2, "2*x1") * P(Q2, "3*x1"), P(Q2, "6*x1^2"));
}

TEST(PolyMul, MismatchedRings) {
  expect_code(ErrorCode::ArityMismatch, [] { (void)(P(Q2, "x1") * P(F2_2, "x1")); });
  const PolyRing q3{Field::rationals(), 3};
  expect_code(ErrorCode::ArityMismatch, [&] { (void)(P(Q2, "x1") * P(q3, "x1")); });
}

TEST(Poly, GrlexTermOrder) {
  const Poly f = P(Q2, "x2^3 + x1 + x1*x2^2 + x1^3 + 1");
  ASSERT_EQ(f.size(), 5u);
  EXPECT_EQ(format_poly(f), "x1^3 + x1*x2^2 + x2^3 + x1 + 1");
  EXPECT_EQ(Poly(Q2).degree(), -1);
  EXPECT_TRUE(P(Q2, "x1 - x1").is_zero());
}

TEST(Poly, ExponentOverflow) {
  const PolyRing r{Field::rationals(), 1};
  expect_code(ErrorCode::ExponentOverflow, [&] { P(r, "x1^4000000000") * P(r, "x1^4000000000"); });
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(P(Q2, "x1*x2"), std::vector{P(Q2, "x1^2"), P(Q2, "x2^2")}), P(Q2, "x1^2*x2^2"));
  const Poly f = P(Q2, "3*x1^2*x2 - x2 + 7");
  EXPECT_EQ(substitute(f, std::vector{P(Q2, "x1"), P(Q2, "x2")}), f);
  const PolyRing f2{Field::prime(2), 1};
  EXPECT_EQ(substitute(P(f2, "x1+1"), std::vector{P(f2, "x1^2")}), P(f2, "x1^2+1"));
  expect_code(ErrorCode::ArityMismatch, [&] { substitute(f, std::vector{P(Q2, "x1")}); });
}

TEST(RingAxioms, RandomTriples) {
  Rng rng(11);
  for (std::size_t s = 0; s < 1000; ++s) {
    const std::size_t n = 1 + rng.below(4);
    const PolyRing ring{s % 2 ? Field::prime(5) : Field::rationals(), n};
    const RandomShape shape{6, 4, 0};
    const Poly a = random_poly(ring, rng, shape), b = random_poly(ring, rng, shape), c = random_poly(ring, rng, shape);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
  }
}

TEST(Substitute, RingHomomorphism) {
  Rng rng(12);
  for (std::size_t s = 0; s < 200; ++s) {
    const PolyRing ring{Field::prime(3), 3};
    const RandomShape shape{3, 3, 0};
    std::vector<Poly> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(random_poly(ring, rng, shape));
    const Poly f = random_poly(ring, rng, shape), g = random_poly(ring, rng, shape);
    ASSERT_EQ(substitute(f * g, images), substitute(f, images) * substitute(g, images));
    ASSERT_EQ(substitute(f + g, images), substitute(f, images) + substitute(g, images));
  }
}

TEST(MonoColon, Examples) {
  EXPECT_EQ(mono_colon(ideal("x^2*y^2"), ideal("x*y")), ideal("x*y"));
  EXPECT_EQ(mono_colon(ideal("x"), MonomialIdeal::unit(2)), ideal("x"));
  EXPECT_EQ(mono_colon(ideal("x^2, y^2"), ideal("x, y")), ideal("x^2, x*y, y^2"));
  expect_code(ErrorCode::UndefinedColon, [] { mono_colon(ideal("x"), MonomialIdeal(2)); });
}

TEST(MonoColon, OracleAgreesDegreeFour) {
  // m in (J : I) by m * g in J for all generators g, over all m of degree <= 4.
  const auto check = [](const MonomialIdeal& j, const MonomialIdeal& i) {
    const auto colon = mono_colon(j, i);
    for (const auto& e : oracle::all_exponents(2, 4))
      ASSERT_EQ(colon.contains(Monomial(e)), oracle::in_colon(oracle::gens_of(j), oracle::gens_of(i), e));
  };
  check(ideal("x^2*y^2"), ideal("x*y"));
  check(ideal("x^2, y^2"), ideal("x, y"));
}

TEST(MonoIntersect, Examples) {
  EXPECT_EQ(mono_intersect(ideal("x"), ideal("y")), ideal("x*y"));
  EXPECT_EQ(mono_intersect(ideal("x^2, x*y"), ideal("y")), ideal("x*y"));
  const auto i = ideal("x^3, x*y^2, y^4");
  EXPECT_EQ(mono_intersect(i, i), i);
  for (const auto& e : oracle::all_exponents(2, 3)) {
    const bool both = oracle::in_ideal({{2, 0}, {1, 1}}, e) && oracle::in_ideal({{0, 1}}, e);
    EXPECT_EQ(mono_intersect(ideal("x^2, x*y"), ideal("y")).contains(Monomial(e)), both);
  }
}

TEST(BracketPower, Examples) {
  EXPECT_EQ(bracket_power(ideal("x*y"), 2), ideal("x^2*y^2"));
  EXPECT_EQ(bracket_power(ideal("x, y"), 3), ideal("x^3, y^3"));
  const auto i = ideal("x^2*y, y^3");
  EXPECT_EQ(bracket_power(i, 1), i);
  expect_code(ErrorCode::InvalidExponent, [&] { bracket_power(i, 0); });
}

TEST(ReduceMod, Examples) {
  EXPECT_EQ(reduce_mod(P(Q2, "x1^2*x2 + x1"), ideal("x^2")), P(Q2, "x1"));
  EXPECT_TRUE(reduce_mod(P(Q2, "x1*x2"), ideal("x, y")).is_zero());
  EXPECT_EQ(reduce_mod(P(Q2, "1"), ideal("x")), P(Q2, "1"));
}

TEST(MonomialIdeal, MinimalGenerators) {
  const auto i = ideal("x^2*y, x*y, x^3, y^5, x*y");
  EXPECT_EQ(i, ideal("x*y, x^3, y^5"));
  EXPECT_TRUE(MonomialIdeal(2).is_zero());
  EXPECT_TRUE(MonomialIdeal::unit(2).is_unit());
  EXPECT_EQ(ideal("x, 1"), MonomialIdeal::unit(2));
}

namespace {

MonomialIdeal random_ideal(Rng& rng, std::size_t n, std::size_t max_gens, std::uint32_t max_exp) {
  std::vector<Monomial> gens;
  const std::size_t count = 1 + rng.below(max_gens);
  for (std::size_t g = 0; g < count; ++g) {
    std::vector<Exponent> e(n);
    for (auto& x : e) x = static_cast<Exponent>(rng.below(max_exp + 1));
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace

TEST(MonoColon, EnumerationPropertyDegreeEight) {
  Rng rng(21);
  for (std::size_t s = 0; s < 60; ++s) {
    const std::size_t n = 1 + rng.below(3);
    const auto j = random_ideal(rng, n, 4, 4), i = random_ideal(rng, n, 3, 3);
    const auto colon = mono_colon(j, i);
    for (const auto& e : oracle::all_exponents(n, 8))
      ASSERT_EQ(colon.contains(Monomial(e)), oracle::in_colon(oracle::gens_of(j), oracle::gens_of(i), e));
  }
}

TEST(BracketPower, Composes) {
  Rng rng(22);
  for (std::size_t s = 0; s < 100; ++s) {
    const auto i = random_ideal(rng, 3, 4, 3);
    const std::uint64_t q = 1 + rng.below(4), r = 1 + rng.below(4);
    ASSERT_EQ(bracket_power(bracket_power(i, q), r), bracket_power(i, q * r));
  }
}

TEST(ReduceMod, CompatibleWithProducts) {
  Rng rng(23);
  const PolyRing ring{Field::prime(3), 3};
  for (std::size_t s = 0; s < 200; ++s) {
    const auto i = random_ideal(rng, 3, 3, 3);
    const RandomShape shape{4, 4, 0};
    const Poly f = random_poly(ring, rng, shape), g = random_poly(ring, rng, shape);
    ASSERT_EQ(reduce_mod(f * g, i), reduce_mod(reduce_mod(f, i) * g, i));
  }
}

TEST(MonomialIdeal, OfSequence) {
  const PolyRing r{Field::rationals(), 2};
  EXPECT_EQ(monomial_ideal_of(std::vector{P(r, "2*x1^2"), P(r, "x2")}), ideal("x^2, y"));
  expect_code(ErrorCode::NonMonomialSequence, [&] { monomial_ideal_of(std::vector{P(r, "x1 + x2")}); });
  expect_code(ErrorCode::EmptySequence, [&] { monomial_ideal_of(std::vector<Poly>{}); });
}
