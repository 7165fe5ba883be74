#include "skoszul/random.hpp"

namespace skoszul {

Scalar random_scalar(const Field& field, Rng& rng) {
  if (field.is_finite()) return field.from_int(static_cast<long long>(rng.below(field.characteristic())));
  const long num = static_cast<long>(rng.below(11)) - 5;
  const long den = static_cast<long>(rng.below(3)) + 1;
  return field.from_fraction(mpz_class(num), mpz_class(den));
}

Poly random_poly(const PolyRing& ring, Rng& rng, const RandomShape& shape) {
  const std::size_t terms = static_cast<std::size_t>(rng.below(shape.max_terms + 1));
  std::vector<Term> out;
  for (std::size_t t = 0; t < terms; ++t) {
    const std::uint64_t degree = rng.below(shape.max_degree + 1);
    std::vector<Exponent> exps(ring.nvars, 0);
    for (std::uint64_t k = 0; k < degree && ring.nvars > 0; ++k) ++exps[rng.below(ring.nvars)];
    out.push_back(Term{Monomial(std::move(exps)), random_scalar(ring.field, rng)});
  }
  return Poly::from_terms(ring, std::move(out));
}

SkewPoly random_skew(const Endo& endo, Rng& rng, const RandomShape& shape) {
  SkewPoly out(endo);
  for (std::uint64_t e = 0; e <= shape.max_theta; ++e) out += SkewPoly(endo, random_poly(endo.ring(), rng, shape), e);
  return out;
}

SkewMatrix random_matrix(const Endo& endo, Rng& rng, std::size_t rows, std::size_t cols, const RandomShape& shape) {
  SkewMatrix m(endo, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_skew(endo, rng, shape);
  return m;
}

}  // namespace skoszul
