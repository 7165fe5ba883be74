#include <gtest/gtest.h>

#include "skoszul/error.hpp"
#include "skoszul/random.hpp"
#include "skoszul/serialize.hpp"
#include "skoszul/text.hpp"

using namespace skoszul;

namespace {

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

TEST(ParsePoly, SyntaxAndAliases) {
  const PolyRing r{Field::rationals(), 3};
  EXPECT_EQ(parse_poly("x*y - 3/2*z^2 + 1", r), parse_poly("x1*x2 - 3/2*x3^2 + 1", r));
  EXPECT_EQ(parse_poly("(x1 + x2)^2", r), parse_poly("x1^2 + 2*x1*x2 + x2^2", r));
  EXPECT_EQ(parse_poly("-(x1 - 1)", r), parse_poly("1 - x1", r));
  expect_code(ErrorCode::ParseError, [&] { parse_poly("x4", r); });
  expect_code(ErrorCode::ParseError, [&] { parse_poly("w", r); });
  expect_code(ErrorCode::ParseError, [&] { parse_poly("x1 +", r); });
  expect_code(ErrorCode::ParseError, [&] { parse_poly("x1 $ x2", r); });
  const PolyRing big{Field::rationals(), 5};
  expect_code(ErrorCode::ParseError, [&] { parse_poly("x", big); });
  EXPECT_EQ(parse_poly("x5", big), Poly::variable(big, 4));
}

TEST(ParsePoly, FiniteFieldCoefficients) {
  const PolyRing r{Field::prime(5), 1};
  EXPECT_EQ(parse_poly("7*x1 + 1/2", r), parse_poly("2*x1 + 3", r));
  EXPECT_EQ(format_poly(parse_poly("-x1", r)), "4*x1");
}

TEST(FormatPoly, RoundTrip) {
  Rng rng(71);
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    const PolyRing r{f, 3};
    for (std::size_t s = 0; s < 200; ++s) {
      const Poly p = random_poly(r, rng, RandomShape{4, 5, 0});
      ASSERT_EQ(parse_poly(format_poly(p), r), p) << format_poly(p);
    }
  }
}

TEST(ParseIdeal, InferredVariables) {
  EXPECT_EQ(infer_nvars("x*y, y*z, z*x"), 3u);
  EXPECT_EQ(infer_nvars("x1*x5"), 5u);
  const auto i = parse_monomial_ideal("x*y, y*z, z*x", 3);
  EXPECT_EQ(format_ideal(i), "(x1*x2, x1*x3, x2*x3)");
  expect_code(ErrorCode::ParseError, [] { parse_monomial_ideal("x + y", 2); });
}

TEST(ParseEndo, Descriptors) {
  const PolyRing r{Field::prime(3), 2};
  EXPECT_EQ(parse_endo("frobenius:p=3,e=2", r), Endo::frobenius(r, 3, 2));
  EXPECT_EQ(parse_endo("power:t=4", r), Endo::power(r, 4));
  const Endo c = parse_endo("custom:x1+1;2*x2", r, true);
  EXPECT_EQ(c.multipliers()[1], parse_poly("2*x2", r));
  EXPECT_TRUE(c.flatness_asserted());
  EXPECT_EQ(format_endo(Endo::frobenius(r, 3, 1)), "frobenius:p=3,e=1");
  EXPECT_EQ(parse_endo(format_endo(c), r, true), c);
  expect_code(ErrorCode::ParseError, [&] { parse_endo("frob:p=3", r); });
  expect_code(ErrorCode::ParseError, [&] { parse_endo("power:s=2", r); });
  expect_code(ErrorCode::CharacteristicMismatch, [&] { parse_endo("frobenius:p=2,e=1", r); });
  expect_code(ErrorCode::ArityMismatch, [&] { parse_endo("custom:x1", r); });
}

TEST(Serialize, PolyFormat) {
  const PolyRing q{Field::rationals(), 2};
  EXPECT_EQ(to_json(parse_poly("-3/2*x1^2*x2 + 4", q)).dump(), R"([["-3/2",[2,1]],["4/1",[0,0]]])");
  const PolyRing f{Field::prime(5), 2};
  EXPECT_EQ(to_json(parse_poly("-x2", f)).dump(), R"([[4,[0,1]]])");
  EXPECT_EQ(to_json(Poly(q)).dump(), "[]");
}

TEST(Serialize, SkewFormat) {
  const PolyRing f{Field::prime(2), 1};
  const Endo phi = Endo::frobenius(f, 2, 1);
  const SkewPoly a = SkewPoly::theta(phi, 2) + SkewPoly(phi, Poly::variable(f, 0));
  EXPECT_EQ(to_json(a).dump(), R"([[0,[[1,[1]]]],[2,[[1,[0]]]]])");
  EXPECT_EQ(skew_from_json(to_json(a), phi), a);
}

TEST(Serialize, ComplexRoundTrip) {
  for (const char* endo : {"frobenius:p=3,e=1", "power:t=2"}) {
    const PolyRing r{std::string(endo).starts_with("frob") ? Field::prime(3) : Field::rationals(), 3};
    const auto c = build_phi_koszul(3, parse_endo(endo, r));
    const Json j = to_json(c);
    EXPECT_EQ(j["differentials"][0]["level"], 4);
    EXPECT_EQ(j["differentials"][3]["level"], 1);
    EXPECT_EQ(j["ranks"].dump(), "[1,4,6,4,1]");
    const auto back = complex_from_json(Json::parse(j.dump()));
    for (std::size_t l = 1; l <= 4; ++l) ASSERT_EQ(back.differential(l), c.differential(l));
  }
}

TEST(Serialize, CustomSequenceRoundTrip) {
  const PolyRing r{Field::prime(2), 2};
  const auto c = build_phi_koszul(2, Endo::frobenius(r, 2, 1), std::vector{parse_poly("x1^2", r), parse_poly("x2", r)});
  const auto back = complex_from_json(to_json(c));
  EXPECT_EQ(back.sequence(), c.sequence());
  EXPECT_FALSE(back.default_sequence());
}

TEST(Serialize, RejectsMalformedComplex) {
  expect_code(ErrorCode::ParseError, [] { complex_from_json(Json::parse(R"({"field":"q"})")); });
  const PolyRing r{Field::prime(2), 1};
  Json j = to_json(build_phi_koszul(1, Endo::frobenius(r, 2, 1)));
  j["differentials"][0]["matrix"][0].erase(1);
  expect_code(ErrorCode::ParseError, [&] { complex_from_json(j); });
}
