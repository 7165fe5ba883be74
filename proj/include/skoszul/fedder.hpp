#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skoszul/monomial_ideal.hpp"
#include "skoszul/report.hpp"

namespace skoszul {

// Degree-e piece (I^{[p^e]} : I) / I^{[p^e]} of the Frobenius algebra of E_R
// for R = A / I with I monomial.
struct FrobeniusPiece {
  std::uint64_t e;
  MonomialIdeal bracket;       // I^{[p^e]}
  MonomialIdeal colon_ideal;   // (I^{[p^e]} : I)
  std::vector<Monomial> socle_generators;  // minimal colon generators outside I^{[p^e]}
};

// e = 0 gives the unit ideal. Throws DegenerateIdeal for the zero or unit
// ideal and InvalidField unless p is prime.
FrobeniusPiece fedder_piece(const MonomialIdeal& i, std::uint32_t p, std::uint64_t e);

struct GenerationLevel {
  std::uint64_t e;
  MonomialIdeal generated;  // J_e
  FrobeniusPiece piece;
  bool equal;               // J_e == (I^{[p^e]} : I)
};

struct GenerationReport {
  std::uint32_t p;
  std::uint64_t e_max;
  std::vector<GenerationLevel> levels;  // e = 1, ..., e_max
  // Every level agrees with the subalgebra generated in degree one.
  bool degree_one_generated;
  // The degree-one piece has a single generator u modulo I^{[p]}.
  bool j1_principal;
  std::optional<Monomial> u;
  // Both of the above: the skew ring A[u Theta; F].
  bool skew_form;
  Report checks;
};

// J_1 = (I^{[p]} : I) and J_e = J_1 * (J_{e-1})^{[p]} + I^{[p^e]}, compared with
// the true colon ideals for e <= e_max. Finite-horizon evidence only.
// Throws InvalidExponent for e_max < 2.
GenerationReport generation_check(const MonomialIdeal& i, std::uint32_t p, std::uint64_t e_max);

}  // namespace skoszul
