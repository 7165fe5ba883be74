#include "skoszul/monomial_ideal.hpp"

#include <algorithm>

#include "skoszul/error.hpp"

namespace skoszul {

namespace {

void require_arity(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::ArityMismatch, "ideals in different rings");
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  // Ascending degree: a divisor always precedes its multiples.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return grlex_compare(a, b) < 0;
  });
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  for (const auto& g : generators)
    if (g.nvars() != nvars) throw Error(ErrorCode::ArityMismatch, "generator arity differs from ideal");
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::variables(std::size_t nvars) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < nvars; ++i) gens.push_back(Monomial::variable(nvars, i));
  return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_subset_of(const MonomialIdeal& other) const {
  require_arity(*this, other);
  return std::all_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return other.contains(g); });
}

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_arity(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_arity(a, b);
  std::vector<Monomial> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g * h);
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_arity(a, b);
  std::vector<Monomial> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal mono_colon(const MonomialIdeal& j, const Monomial& m) {
  if (m.nvars() != j.nvars()) throw Error(ErrorCode::ArityMismatch, "monomial arity differs from ideal");
  std::vector<Monomial> gens;
  for (const auto& g : j.generators()) gens.push_back(colon(g, m));
  return MonomialIdeal(j.nvars(), std::move(gens));
}

MonomialIdeal mono_colon(const MonomialIdeal& j, const MonomialIdeal& i) {
  require_arity(j, i);
  if (i.is_zero()) throw Error(ErrorCode::UndefinedColon, "colon by the zero ideal");
  MonomialIdeal result = mono_colon(j, i.generators().front());
  for (std::size_t k = 1; k < i.generators().size(); ++k)
    result = mono_intersect(result, mono_colon(j, i.generators()[k]));
  return result;
}

MonomialIdeal bracket_power(const MonomialIdeal& i, std::uint64_t q) {
  if (q == 0) throw Error(ErrorCode::InvalidExponent, "bracket power needs q >= 1");
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) gens.push_back(g.pow(q));
  return MonomialIdeal(i.nvars(), std::move(gens));
}

Poly reduce_mod(const Poly& f, const MonomialIdeal& i) {
  if (f.ring().nvars != i.nvars()) throw Error(ErrorCode::ArityMismatch, "ideal and polynomial rings differ");
  std::vector<Term> kept;
  for (const auto& t : f.terms())
    if (!i.contains(t.monomial)) kept.push_back(t);
  return Poly::from_terms(f.ring(), std::move(kept));
}

bool generates_monomial_ideal(std::span<const Poly> seq) {
  return std::all_of(seq.begin(), seq.end(), [](const Poly& p) { return p.is_term(); });
}

MonomialIdeal monomial_ideal_of(std::span<const Poly> seq) {
  if (seq.empty()) throw Error(ErrorCode::EmptySequence, "no generators");
  if (!generates_monomial_ideal(seq))
    throw Error(ErrorCode::NonMonomialSequence, "sequence entries must be single terms");
  std::vector<Monomial> gens;
  for (const auto& p : seq) gens.push_back(p.leading_term().monomial);
  return MonomialIdeal(seq.front().ring().nvars, std::move(gens));
}

}  // namespace skoszul
