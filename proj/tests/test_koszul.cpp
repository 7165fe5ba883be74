#include <gtest/gtest.h>

#include "skoszul/error.hpp"
#include "skoszul/koszul.hpp"
#include "skoszul/random.hpp"
#include "skoszul/text.hpp"

using namespace skoszul;

namespace {

Poly P(const PolyRing& r, const char* s) { return parse_poly(s, r); }

std::vector<Poly> variables(const PolyRing& r) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < r.nvars; ++i) out.push_back(Poly::variable(r, i));
  return out;
}

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

TEST(Subsets, LexOrder) {
  const auto s = subsets(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s[0], (Subset{0, 1}));
  EXPECT_EQ(s[2], (Subset{0, 3}));
  EXPECT_EQ(s[5], (Subset{2, 3}));
  EXPECT_EQ(subsets(3, 0), std::vector<Subset>{Subset{}});
  EXPECT_TRUE(subsets(2, 3).empty());
  EXPECT_EQ(subset_label(Subset{0, 2}), "{1,3}");
}

TEST(KoszulMatrix, TwoVariables) {
  const PolyRing r{Field::rationals(), 2};
  const auto m2 = koszul_matrix(variables(r), 2);
  ASSERT_EQ(m2.rows(), 1u);
  ASSERT_EQ(m2.cols(), 2u);
  EXPECT_EQ(m2.at(0, 0), P(r, "-x2"));
  EXPECT_EQ(m2.at(0, 1), P(r, "x1"));
  const auto m1 = koszul_matrix(variables(r), 1);
  EXPECT_EQ(m1.at(0, 0), P(r, "x1"));
  EXPECT_EQ(m1.at(1, 0), P(r, "x2"));
}

TEST(KoszulMatrix, ThreeVariablesLevelTwo) {
  const PolyRing r{Field::rationals(), 3};
  const auto m = koszul_matrix(variables(r), 2);
  const char* expected[3][3] = {{"-x2", "x1", "0"}, {"-x3", "0", "x1"}, {"0", "-x3", "x2"}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m.at(i, j), P(r, expected[i][j])) << i << "," << j;
  EXPECT_TRUE((m * koszul_matrix(variables(r), 1)).is_zero());
}

TEST(KoszulMatrix, LevelOutOfRange) {
  const PolyRing r{Field::rationals(), 2};
  expect_code(ErrorCode::LevelOutOfRange, [&] { koszul_matrix(variables(r), 0); });
  expect_code(ErrorCode::LevelOutOfRange, [&] { koszul_matrix(variables(r), 3); });
  expect_code(ErrorCode::EmptySequence, [&] { koszul_matrix(std::vector<Poly>{}, 1); });
}

TEST(KoszulMatrix, SquaresToZero) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const PolyRing r{Field::prime(3), n};
    std::vector<std::vector<Poly>> seqs{variables(r)};
    std::vector<Poly> powers, mixed;
    for (std::size_t i = 0; i < n; ++i) {
      powers.push_back(Poly::variable(r, i, static_cast<Exponent>(i + 2)));
      mixed.push_back(Poly::variable(r, i) * Poly::variable(r, (i + 1) % n, 2));
    }
    seqs.push_back(powers);
    seqs.push_back(mixed);
    const std::vector<Endo> endos{Endo::frobenius(r, 3, 1), Endo::power(r, 2)};
    for (const auto& seq : seqs)
      for (std::size_t l = 2; l <= n; ++l) {
        const auto prod = koszul_matrix(seq, l) * koszul_matrix(seq, l - 1);
        ASSERT_TRUE(prod.is_zero());
        for (const auto& phi : endos) {
          ASSERT_EQ(twist(prod, phi), twist(koszul_matrix(seq, l), phi) * twist(koszul_matrix(seq, l - 1), phi));
          ASSERT_TRUE((twist(koszul_matrix(seq, l), phi) * twist(koszul_matrix(seq, l - 1), phi)).is_zero());
        }
      }
  }
}

TEST(TwistDiagonal, Entries) {
  const PolyRing r{Field::prime(2), 3};
  const Endo phi = Endo::frobenius(r, 2, 1);
  const auto d2 = twist_diagonal(phi, phi.multipliers(), 2);
  ASSERT_EQ(d2.rows(), 3u);
  EXPECT_EQ(d2.at(1, 1), SkewPoly::theta(phi) - SkewPoly(phi, P(r, "x1*x3")));
  EXPECT_TRUE(d2.at(0, 1).is_zero());
  const auto d0 = twist_diagonal(phi, phi.multipliers(), 0);
  EXPECT_EQ(d0.at(0, 0), SkewPoly::theta(phi) - SkewPoly::constant(phi, 1));
}

TEST(SolveRight, Examples) {
  const PolyRing r{Field::rationals(), 2};
  PolyMatrix m(r, 2, 1);
  m.at(0, 0) = P(r, "x1");
  m.at(1, 0) = P(r, "x2");
  EXPECT_EQ(solve_right(m, std::vector{P(r, "x1")}), (std::vector{P(r, "1"), P(r, "0")}));
  expect_code(ErrorCode::NoSolution, [&] { solve_right(m, std::vector{P(r, "1")}); });
  const auto x = solve_right(m, std::vector{P(r, "x1*x2")});
  EXPECT_EQ(x[0] * P(r, "x1") + x[1] * P(r, "x2"), P(r, "x1*x2"));
}

TEST(SolveRight, NonHomogeneous) {
  const PolyRing r{Field::rationals(), 1};
  PolyMatrix m(r, 1, 1);
  m.at(0, 0) = P(r, "x1 + 1");
  expect_code(ErrorCode::NonHomogeneous, [&] { solve_right(m, std::vector{P(r, "x1 + 1")}); });
}

TEST(SolveRight, ZGradedEntries) {
  const PolyRing r{Field::rationals(), 2};
  PolyMatrix m(r, 2, 1);
  m.at(0, 0) = P(r, "x1 + x2");
  m.at(1, 0) = P(r, "x1 - x2");
  const auto x = solve_right(m, std::vector{P(r, "x1^3")});
  EXPECT_EQ(x[0] * m.at(0, 0) + x[1] * m.at(1, 0), P(r, "x1^3"));
}

TEST(SolveRight, RandomConsistentSystems) {
  Rng rng(41);
  for (std::size_t s = 0; s < 200; ++s) {
    const std::size_t n = 2 + rng.below(3);
    const PolyRing r{s % 2 ? Field::prime(2) : Field::rationals(), n};
    std::vector<Poly> seq;
    for (std::size_t i = 0; i < n; ++i) seq.push_back(Poly::variable(r, i, static_cast<Exponent>(1 + rng.below(3))));
    const std::size_t l = 1 + rng.below(n);
    const auto m = koszul_matrix(seq, l);
    std::vector<Poly> x0;
    for (std::size_t i = 0; i < m.rows(); ++i) x0.push_back(random_poly(r, rng, RandomShape{3, 3, 0}));
    const auto b = row_times(x0, m);
    const auto x = solve_right(m, b);
    ASSERT_EQ(row_times(x, m), b);
  }
}
