#pragma once

#include <json.hpp>

#include "skoszul/fedder.hpp"
#include "skoszul/phi_koszul.hpp"
#include "skoszul/report.hpp"

namespace skoszul {

using Json = nlohmann::ordered_json;

// A polynomial is its list of [coeff, [e1, ..., en]] terms in grlex order;
// F_p coefficients are integers in [0, p), rationals are "p/q" strings.
Json to_json(const Poly& f);
Poly poly_from_json(const Json& j, const PolyRing& ring);

// [[e, poly], ...] by ascending Theta-degree.
Json to_json(const SkewPoly& a);
SkewPoly skew_from_json(const Json& j, const Endo& endo);

// Row-major nested lists of skew polynomials.
Json to_json(const SkewMatrix& m);
SkewMatrix matrix_from_json(const Json& j, const Endo& endo, std::size_t rows, std::size_t cols);

Json to_json(const Monomial& m);
Json to_json(const MonomialIdeal& i);

// Differentials listed from d_{n+1} down to d_1 with shapes and basis labels.
Json to_json(const PhiKoszulComplex& c);
// Rebuilds the complex from its field, endomorphism and sequence, then
// substitutes the stored differential matrices.
PhiKoszulComplex complex_from_json(const Json& j);

Json to_json(const Report& r);
Json to_json(const CycleWitness& w);
Json to_json(const GenerationReport& r);

}  // namespace skoszul
