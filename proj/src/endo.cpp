#include "skoszul/endo.hpp"

#include <deque>
#include <mutex>

#include "skoszul/error.hpp"

namespace skoszul {

struct Endo::Impl {
  PolyRing ring;
  EndoFamily family;
  std::uint32_t prime = 0;
  std::uint32_t frob_exp = 0;
  std::uint64_t t = 1;  // x_i -> x_i^t for the built-in families
  bool flat;
  std::vector<Poly> multipliers;

  mutable std::mutex mutex;
  mutable std::deque<std::vector<Poly>> images;  // images[k] = phi^k(x_i)

  Impl(PolyRing r, EndoFamily f, bool flat_, std::vector<Poly> mults)
      : ring(std::move(r)), family(f), flat(flat_), multipliers(std::move(mults)) {}
};

namespace {

std::vector<Poly> pure_power_images(const PolyRing& ring, std::uint64_t t) {
  std::vector<Poly> out;
  if (t > UINT32_MAX) throw Error(ErrorCode::ExponentOverflow, "image exponent exceeds 32 bits");
  for (std::size_t i = 0; i < ring.nvars; ++i)
    out.push_back(Poly::variable(ring, i, static_cast<Exponent>(t)));
  return out;
}

std::vector<Poly> pure_power_multipliers(const PolyRing& ring, std::uint64_t t) {
  std::vector<Poly> out;
  if (t - 1 > UINT32_MAX) throw Error(ErrorCode::ExponentOverflow, "multiplier exponent exceeds 32 bits");
  for (std::size_t i = 0; i < ring.nvars; ++i)
    out.push_back(Poly::variable(ring, i, static_cast<Exponent>(t - 1)));
  return out;
}

}  // namespace

Endo Endo::frobenius(const PolyRing& ring, std::uint32_t p, std::uint32_t e) {
  if (ring.field.characteristic() != p)
    throw Error(ErrorCode::CharacteristicMismatch,
                "Frobenius for p=" + std::to_string(p) + " over " + ring.field.descriptor());
  const std::uint64_t q = checked_pow(p, e);
  auto impl = std::make_shared<Impl>(ring, EndoFamily::Frobenius, true, pure_power_multipliers(ring, q));
  impl->prime = p;
  impl->frob_exp = e;
  impl->t = q;
  return Endo(std::move(impl));
}

Endo Endo::power(const PolyRing& ring, std::uint64_t t) {
  if (t == 0) throw Error(ErrorCode::NotStructural, "power map needs t >= 1");
  auto impl = std::make_shared<Impl>(ring, EndoFamily::Power, true, pure_power_multipliers(ring, t));
  impl->t = t;
  return Endo(std::move(impl));
}

Endo Endo::custom(const PolyRing& ring, std::vector<Poly> multipliers, bool flatness_asserted) {
  if (multipliers.size() != ring.nvars)
    throw Error(ErrorCode::ArityMismatch, "need one multiplier per variable");
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    require_same_ring(ring, multipliers[i].ring());
    if (multipliers[i].is_zero())
      throw Error(ErrorCode::NotStructural, "multiplier s_" + std::to_string(i + 1) + " is zero");
  }
  return Endo(std::make_shared<Impl>(ring, EndoFamily::Custom, flatness_asserted, std::move(multipliers)));
}

Endo Endo::from_images(const PolyRing& ring, const std::vector<Poly>& images, bool flatness_asserted) {
  if (images.size() != ring.nvars) throw Error(ErrorCode::ArityMismatch, "need one image per variable");
  std::vector<Poly> multipliers;
  for (std::size_t i = 0; i < images.size(); ++i) {
    require_same_ring(ring, images[i].ring());
    const Monomial xi = Monomial::variable(ring.nvars, i);
    std::vector<Term> quotient;
    for (const auto& t : images[i].terms()) {
      if (!xi.divides(t.monomial))
        throw Error(ErrorCode::NotStructural,
                    "image of x" + std::to_string(i + 1) + " is not in the ideal <x" + std::to_string(i + 1) + ">");
      quotient.push_back(Term{t.monomial.divided_by(xi), t.coeff});
    }
    multipliers.push_back(Poly::from_terms(ring, std::move(quotient)));
  }
  return custom(ring, std::move(multipliers), flatness_asserted);
}

const PolyRing& Endo::ring() const { return impl_->ring; }
EndoFamily Endo::family() const { return impl_->family; }
std::uint32_t Endo::frobenius_prime() const { return impl_->prime; }
std::uint32_t Endo::frobenius_exponent() const { return impl_->frob_exp; }
std::uint64_t Endo::power_exponent() const { return impl_->t; }
bool Endo::flatness_asserted() const { return impl_->flat; }
const std::vector<Poly>& Endo::multipliers() const { return impl_->multipliers; }

const std::vector<Poly>& Endo::images(std::uint64_t k) const {
  const Impl& impl = *impl_;
  std::lock_guard<std::mutex> lock(impl.mutex);
  if (impl.images.empty()) {
    std::vector<Poly> vars;
    for (std::size_t i = 0; i < impl.ring.nvars; ++i) vars.push_back(Poly::variable(impl.ring, i));
    impl.images.push_back(std::move(vars));
  }
  while (impl.images.size() <= k) {
    const std::uint64_t next = impl.images.size();
    if (impl.family != EndoFamily::Custom) {
      impl.images.push_back(pure_power_images(impl.ring, checked_pow(impl.t, next)));
      continue;
    }
    if (impl.images.size() == 1) {
      std::vector<Poly> first;
      for (std::size_t i = 0; i < impl.ring.nvars; ++i)
        first.push_back(impl.multipliers[i] * Poly::variable(impl.ring, i));
      impl.images.push_back(std::move(first));
      continue;
    }
    std::vector<Poly> step;
    const auto& prev = impl.images.back();
    for (const auto& p : prev) step.push_back(substitute(p, impl.images[1]));
    impl.images.push_back(std::move(step));
  }
  return impl.images[k];
}

Poly Endo::apply(const Poly& f, std::uint64_t k) const {
  require_same_ring(impl_->ring, f.ring());
  if (k == 0) return f;
  return substitute(f, images(k));
}

bool operator==(const Endo& a, const Endo& b) {
  if (a.impl_ == b.impl_) return true;
  return a.ring() == b.ring() && a.multipliers() == b.multipliers();
}

Poly apply_endo(const Endo& phi, const Poly& f) { return phi.apply(f, 1); }

Endo endo_power(const Endo& phi, std::uint64_t e) {
  switch (phi.family()) {
    case EndoFamily::Frobenius: {
      const std::uint64_t exp = checked_mul(phi.frobenius_exponent(), e);
      if (exp > UINT32_MAX) throw Error(ErrorCode::ExponentOverflow, "Frobenius exponent overflow");
      return Endo::frobenius(phi.ring(), phi.frobenius_prime(), static_cast<std::uint32_t>(exp));
    }
    case EndoFamily::Power:
      return Endo::power(phi.ring(), checked_pow(phi.power_exponent(), e));
    case EndoFamily::Custom:
      break;
  }
  return Endo::from_images(phi.ring(), phi.images(e), phi.flatness_asserted());
}

}  // namespace skoszul
