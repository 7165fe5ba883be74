#pragma once

#include <vector>

#include "skoszul/monomial.hpp"
#include "skoszul/poly.hpp"

namespace skoszul {

// Monomial ideal held by its minimal generating set, sorted in descending grlex
// order. The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial(nvars)}); }
  static MonomialIdeal variables(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_principal() const { return gens_.size() == 1; }

  bool contains(const Monomial& m) const;
  // this ⊆ other
  bool is_subset_of(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

// Drops non-minimal and duplicate generators; sorts descending grlex.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// (J : m) for a single monomial m.
MonomialIdeal mono_colon(const MonomialIdeal& j, const Monomial& m);
// (J : I); throws UndefinedColon when I is the zero ideal.
MonomialIdeal mono_colon(const MonomialIdeal& j, const MonomialIdeal& i);
// Generator-wise q-th power I^{[q]}; throws InvalidExponent for q = 0.
MonomialIdeal bracket_power(const MonomialIdeal& i, std::uint64_t q);

// Deletes every term of f lying in I: the normal form of f + I.
Poly reduce_mod(const Poly& f, const MonomialIdeal& i);

// True when every entry is a single term, so the generated ideal is monomial.
bool generates_monomial_ideal(std::span<const Poly> seq);
// Throws NonMonomialSequence unless generates_monomial_ideal(seq).
MonomialIdeal monomial_ideal_of(std::span<const Poly> seq);

}  // namespace skoszul
