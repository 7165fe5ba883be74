#include "skoszul/fedder.hpp"

#include "skoszul/error.hpp"
#include "skoszul/field.hpp"

namespace skoszul {

namespace {

void require_proper(const MonomialIdeal& i, std::uint32_t p) {
  if (i.is_zero() || i.is_unit())
    throw Error(ErrorCode::DegenerateIdeal, "the ideal must be proper and nonzero");
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
}

}  // namespace

FrobeniusPiece fedder_piece(const MonomialIdeal& i, std::uint32_t p, std::uint64_t e) {
  require_proper(i, p);
  const std::uint64_t q = checked_pow(p, e);
  FrobeniusPiece piece{e, bracket_power(i, q), MonomialIdeal(i.nvars()), {}};
  piece.colon_ideal = mono_colon(piece.bracket, i);
  for (const auto& g : piece.colon_ideal.generators())
    if (!piece.bracket.contains(g)) piece.socle_generators.push_back(g);
  return piece;
}

GenerationReport generation_check(const MonomialIdeal& i, std::uint32_t p, std::uint64_t e_max) {
  require_proper(i, p);
  if (e_max < 2) throw Error(ErrorCode::InvalidExponent, "the horizon e_max must be at least 2");
  GenerationReport out{p, e_max, {}, true, false, std::nullopt, false, Report{"fedder", {}}};

  const FrobeniusPiece first = fedder_piece(i, p, 1);
  MonomialIdeal previous = first.colon_ideal;
  bool contained = true, socle_outside = true, generated_inside = true;
  for (std::uint64_t e = 1; e <= e_max; ++e) {
    FrobeniusPiece piece = e == 1 ? first : fedder_piece(i, p, e);
    MonomialIdeal generated =
        e == 1 ? first.colon_ideal
               : mono_sum(mono_product(first.colon_ideal, bracket_power(previous, p)), piece.bracket);
    const bool equal = generated == piece.colon_ideal;
    out.degree_one_generated = out.degree_one_generated && equal;
    contained = contained && mono_product(i, piece.colon_ideal).is_subset_of(piece.bracket);
    generated_inside = generated_inside && generated.is_subset_of(piece.colon_ideal);
    for (const auto& g : piece.socle_generators) socle_outside = socle_outside && !piece.bracket.contains(g);
    previous = generated;
    out.levels.push_back(GenerationLevel{e, std::move(generated), std::move(piece), equal});
  }

  // u_e Theta^e * u_1 Theta = u_e u_1^{p^e} Theta^{e+1} stays in the algebra.
  bool closed = true;
  for (std::size_t k = 0; k + 1 < out.levels.size(); ++k) {
    const auto& level = out.levels[k];
    const auto& next = out.levels[k + 1].piece.colon_ideal;
    const std::uint64_t q = checked_pow(p, level.e);
    for (const auto& ue : level.piece.colon_ideal.generators())
      for (const auto& u1 : first.colon_ideal.generators()) closed = closed && next.contains(ue * u1.pow(q));
  }

  out.j1_principal = first.socle_generators.size() == 1;
  if (out.j1_principal) out.u = first.socle_generators.front();
  out.skew_form = out.j1_principal && out.degree_one_generated;

  out.checks.add("annihilation", contained, "I * (I^[q] : I) inside I^[q] at every level");
  out.checks.add("socle", socle_outside, "listed generators lie outside I^[q]");
  out.checks.add("subalgebra", generated_inside, "J_e inside (I^[q] : I)");
  out.checks.add("composition", closed, "u_e * u_1^(p^e) lies in the next colon ideal");
  return out;
}

}  // namespace skoszul
