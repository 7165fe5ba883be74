#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "skoszul/poly.hpp"

namespace skoszul {

enum class EndoFamily { Frobenius, Power, Custom };

// K-algebra endomorphism of S with x_i -> s_i * x_i for nonzero multipliers s_i.
//
// Values are cheap to copy and share one immutable description plus a
// memo of the iterated images phi^k(x_i); the memo is filled under a lock and
// its entries are never modified afterwards, so concurrent readers are safe.
class Endo {
 public:
  // x_i -> x_i^{p^e}; the ring's characteristic must be p.
  static Endo frobenius(const PolyRing& ring, std::uint32_t p, std::uint32_t e);
  // x_i -> x_i^t with t >= 1.
  static Endo power(const PolyRing& ring, std::uint64_t t);
  static Endo identity(const PolyRing& ring) { return power(ring, 1); }
  // x_i -> s_i * x_i. Flatness cannot be decided, so the caller asserts it.
  static Endo custom(const PolyRing& ring, std::vector<Poly> multipliers, bool flatness_asserted);
  // x_i -> images[i]; each image must be a nonzero element of <x_i>.
  static Endo from_images(const PolyRing& ring, const std::vector<Poly>& images, bool flatness_asserted);

  const PolyRing& ring() const;
  std::size_t nvars() const { return ring().nvars; }
  EndoFamily family() const;
  // Frobenius (p, e) or power t; meaningless for custom endomorphisms.
  std::uint32_t frobenius_prime() const;
  std::uint32_t frobenius_exponent() const;
  std::uint64_t power_exponent() const;
  bool flatness_asserted() const;

  const std::vector<Poly>& multipliers() const;
  // phi^k(x_1), ..., phi^k(x_n).
  const std::vector<Poly>& images(std::uint64_t k = 1) const;
  // phi^k(f)
  Poly apply(const Poly& f, std::uint64_t k = 1) const;

  // Same ring and same multipliers.
  friend bool operator==(const Endo& a, const Endo& b);

 private:
  struct Impl;
  explicit Endo(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

Poly apply_endo(const Endo& phi, const Poly& f);
// e-fold composition; phi^0 is the identity.
Endo endo_power(const Endo& phi, std::uint64_t e);

}  // namespace skoszul
