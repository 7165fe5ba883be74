#pragma once

// Brute-force reference computations used to cross-check the library. They
// share nothing with the code under test beyond the basic value types.

#include <map>
#include <vector>

#include "skoszul/endo.hpp"
#include "skoszul/monomial_ideal.hpp"
#include "skoszul/poly.hpp"
#include "skoszul/skew.hpp"

namespace oracle {

using Exps = std::vector<std::uint32_t>;

// Every exponent vector in nvars variables with total degree <= bound.
inline std::vector<Exps> all_exponents(std::size_t nvars, std::uint32_t bound) {
  std::vector<Exps> out;
  Exps cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == nvars) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exps exps_of(const skoszul::Monomial& m) { return Exps(m.exponents().begin(), m.exponents().end()); }

inline Exps add(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Membership by scanning the generator list.
inline bool in_ideal(const std::vector<Exps>& gens, const Exps& m) {
  for (const auto& g : gens)
    if (divides(g, m)) return true;
  return false;
}

inline std::vector<Exps> gens_of(const skoszul::MonomialIdeal& i) {
  std::vector<Exps> out;
  for (const auto& g : i.generators()) out.push_back(exps_of(g));
  return out;
}

// m in (J : I) iff m * g in J for every generator g of I.
inline bool in_colon(const std::vector<Exps>& j, const std::vector<Exps>& i, const Exps& m) {
  for (const auto& g : i)
    if (!in_ideal(j, add(m, g))) return false;
  return true;
}

// Polynomials as plain maps, multiplied term by term.
using Dense = std::map<Exps, long long>;

inline Dense dense_of(const skoszul::Poly& f, std::uint32_t p) {
  Dense d;
  for (const auto& t : f.terms()) d[exps_of(t.monomial)] = t.coeff.residue() % p;
  return d;
}

inline Dense dense_mul(const Dense& a, const Dense& b, std::uint32_t p) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto& slot = out[add(ea, eb)];
      slot = (slot + ca * cb) % p;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// x_i -> x_i^t applied k times to a monomial: exponents scale by t^k.
inline Exps power_map(const Exps& e, std::uint64_t t, std::uint64_t k) {
  std::uint64_t scale = 1;
  for (std::uint64_t i = 0; i < k; ++i) scale *= t;
  Exps r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r[i] = static_cast<std::uint32_t>(e[i] * scale);
  return r;
}

// Skew polynomials over F_p for an endomorphism x_i -> x_i^t, stored as
// (Theta-degree, exponents) -> coefficient and multiplied by the rule
// (a x^u Theta^e)(b x^v Theta^d) = ab x^{u + t^e v} Theta^{e+d}.
using DenseSkew = std::map<std::pair<std::uint64_t, Exps>, long long>;

inline DenseSkew dense_skew_of(const skoszul::SkewPoly& a, std::uint32_t p) {
  DenseSkew d;
  for (std::size_t e = 0; e < a.coefficients().size(); ++e)
    for (const auto& t : a.coefficients()[e].terms()) d[{e, exps_of(t.monomial)}] = t.coeff.residue() % p;
  return d;
}

inline DenseSkew dense_skew_mul(const DenseSkew& a, const DenseSkew& b, std::uint64_t t, std::uint32_t p) {
  DenseSkew out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto& slot = out[{ka.first + kb.first, add(ka.second, power_map(kb.second, t, ka.first))}];
      slot = (slot + ca * cb) % p;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace oracle
