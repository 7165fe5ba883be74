#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skoszul/endo.hpp"
#include "skoszul/monomial_ideal.hpp"
#include "skoszul/poly.hpp"
#include "skoszul/skew.hpp"

namespace skoszul {

// Polynomial text syntax: + - * ^ and parentheses, variables x1..xn (and
// x, y, z, w for n <= 4), integer or a/b coefficients. Throws ParseError.
Poly parse_poly(std::string_view text, const PolyRing& ring);
std::vector<Poly> parse_poly_list(std::string_view text, const PolyRing& ring, char separator);

std::string format_monomial(const Monomial& m);
std::string format_poly(const Poly& f);
// "x1*Theta^2 + (x2 + 1)*Theta - 1"
std::string format_skew(const SkewPoly& a);

// Comma-separated monomials such as "x*y, y*z, z*x".
MonomialIdeal parse_monomial_ideal(std::string_view text, std::size_t nvars);
std::string format_ideal(const MonomialIdeal& i);
// Largest variable index mentioned in the text (aliases count as x1..x4).
std::size_t infer_nvars(std::string_view text);

// "frobenius:p=<p>,e=<e>", "power:t=<t>" or "custom:<s1>;<s2>;...".
Endo parse_endo(std::string_view descriptor, const PolyRing& ring, bool assert_flat = false);
std::string format_endo(const Endo& phi);

}  // namespace skoszul
