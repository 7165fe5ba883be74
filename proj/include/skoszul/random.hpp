#pragma once

#include <cstdint>
#include <random>

#include "skoszul/poly.hpp"
#include "skoszul/skew.hpp"

namespace skoszul {

// Seeded generator with platform-independent draws (raw engine output only,
// no standard distributions), so sampled data is reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform-ish value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

struct RandomShape {
  std::uint64_t max_degree = 3;
  std::size_t max_terms = 4;
  std::uint64_t max_theta = 2;
};

// F_p: uniform residue; Q: small fractions a/b with |a| <= 5, 1 <= b <= 3.
Scalar random_scalar(const Field& field, Rng& rng);
Poly random_poly(const PolyRing& ring, Rng& rng, const RandomShape& shape);
SkewPoly random_skew(const Endo& endo, Rng& rng, const RandomShape& shape);
SkewMatrix random_matrix(const Endo& endo, Rng& rng, std::size_t rows, std::size_t cols, const RandomShape& shape);

}  // namespace skoszul
