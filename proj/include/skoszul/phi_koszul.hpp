#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skoszul/endo.hpp"
#include "skoszul/koszul.hpp"
#include "skoszul/poly.hpp"
#include "skoszul/report.hpp"
#include "skoszul/skew.hpp"

namespace skoszul {

// The complex 0 -> FK_{n+1} -> FK_n -> ... -> FK_1 -> FK_0 of free left
// S[Theta; phi]-modules built on a sequence y_1, ..., y_n. FK_l has the
// l-subsets e_J first and the (l-1)-subsets e_J ^ u after them, both in lex
// order, and rank C(n, l) + C(n, l-1).
class PhiKoszulComplex {
 public:
  std::size_t n() const { return sequence_.size(); }
  const Endo& endo() const { return endo_; }
  const PolyRing& ring() const { return endo_.ring(); }
  const std::vector<Poly>& sequence() const { return sequence_; }
  // t_i with phi(y_i) = t_i y_i. For the variables these are the multipliers s_i.
  const std::vector<Poly>& twist_multipliers() const { return twist_; }
  bool default_sequence() const { return default_sequence_; }

  // rank(FK_l) for 0 <= l <= n + 1.
  std::size_t rank(std::size_t l) const;
  // C(n, l), the size of the summand spanned by the e_J.
  std::size_t wedge_rank(std::size_t l) const { return binomial(n(), l); }
  // The differential FK_l -> FK_{l-1}, 1 <= l <= n + 1.
  const SkewMatrix& differential(std::size_t l) const;
  // "e{1,3}", ..., "e{2}^u"
  std::vector<std::string> basis_labels(std::size_t l) const;

  // Koszul matrices of y and of phi(y), 1 <= l <= n.
  const PolyMatrix& koszul(std::size_t l) const;
  const PolyMatrix& twisted_koszul(std::size_t l) const;

  // Swaps in a different matrix for the differential at level l, keeping the
  // shape. Used to check that verification detects corrupted complexes.
  void replace_differential(std::size_t l, SkewMatrix d);

 private:
  friend PhiKoszulComplex build_phi_koszul(std::size_t, const Endo&, std::optional<std::vector<Poly>>);
  PhiKoszulComplex(Endo endo) : endo_(std::move(endo)) {}

  Endo endo_;
  std::vector<Poly> sequence_;
  std::vector<Poly> twist_;
  bool default_sequence_ = true;
  std::vector<PolyMatrix> koszul_;          // index l - 1
  std::vector<PolyMatrix> twisted_koszul_;  // index l - 1
  std::vector<SkewMatrix> differentials_;   // index l - 1
};

// Without a sequence the variables x_1, ..., x_n are used and n must equal the
// number of variables. A custom sequence needs phi(y_i) divisible by y_i
// (NotStructural otherwise); its Koszul-regularity is taken on trust.
PhiKoszulComplex build_phi_koszul(std::size_t n, const Endo& endo,
                                  std::optional<std::vector<Poly>> sequence = std::nullopt);

struct TruncationBounds {
  std::uint64_t theta_degree;
  std::uint64_t poly_degree;
};

// Checks d_l d_{l+1} = 0, the twisted commuting square M_l^phi D_{l-1} = D_l M_l,
// ranks and shapes, and (over F_p) that d_{n+1} has no nonzero kernel within
// the bounds. The matrices are read from the stored differentials.
Report verify_phi_koszul(const PhiKoszulComplex& c, TruncationBounds bounds);

// Augmentation checks for H_0: the entries of d_1 land in I_n, random elements
// of im d_1 augment into I_n, Theta - 1 is killed, and degree-0 elements are fixed.
Report h0_check(const PhiKoszulComplex& c, std::size_t samples = 200, std::uint64_t seed = 0);

// The splitting 0 -> K'_. -> FK_. -> K_.(phi(y))[1] -> 0 into the e_J and e_J ^ u parts.
Report ses_verify(const PhiKoszulComplex& c);
// Differential K_{l-1}(phi(y)) -> K_{l-2}(phi(y)) of the shifted twisted complex at
// homological degree l, 1 <= l <= n + 1 (zero columns for l = 1).
SkewMatrix shifted_twisted_differential(const PhiKoszulComplex& c, std::size_t l);
// Inclusion K'_l -> FK_l and projection FK_l -> K_{l-1}(phi(y)).
SkewMatrix ses_inclusion(const PhiKoszulComplex& c, std::size_t l);
SkewMatrix ses_projection(const PhiKoszulComplex& c, std::size_t l);

struct CycleWitness {
  std::size_t level;
  SkewMatrix cycle;     // 1 x rank(l)
  SkewMatrix preimage;  // 1 x rank(l + 1)
  bool verified;
};

// Finds Q with Q d_{l+1} = P for a cycle P at level l, 1 <= l <= n.
CycleWitness lift_cycle(const PhiKoszulComplex& c, std::size_t l, const SkewMatrix& p);
// Batch versions; the parallel one distributes cycles over threads.
std::vector<CycleWitness> lift_cycles(const PhiKoszulComplex& c, std::size_t l, std::span<const SkewMatrix> ps);
std::vector<CycleWitness> lift_cycles_serial(const PhiKoszulComplex& c, std::size_t l,
                                             std::span<const SkewMatrix> ps);

// Basis of { v : v d = 0, Theta-degree <= E, poly degree <= d } for a matrix
// over S[Theta; phi] with an F_p coefficient field.
std::vector<SkewMatrix> truncated_kernel(const SkewMatrix& d, TruncationBounds bounds);

// Random combinations of a truncated kernel basis of d_l; F_p only.
std::vector<SkewMatrix> sample_cycles(const PhiKoszulComplex& c, std::size_t l, TruncationBounds bounds,
                                      std::size_t count, std::uint64_t seed = 0);

}  // namespace skoszul
