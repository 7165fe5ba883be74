#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace skoszul {

using Exponent = std::uint32_t;

// Exponent vector x_1^{e_1} ... x_n^{e_n}. Arithmetic is overflow-checked and
// throws ExponentOverflow instead of wrapping.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint64_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  // this | other
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact quotient; requires b | a.
  Monomial divided_by(const Monomial& b) const;
  Monomial pow(std::uint64_t q) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
// g / gcd(g, m): the generator of the principal colon ((g) : m).
Monomial colon(const Monomial& g, const Monomial& m);

// Graded lexicographic comparison with x_1 > ... > x_n. Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

// All monomials of the given total degree in nvars variables, in descending grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t degree);
// All monomials of total degree <= bound, descending grlex.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint64_t bound);

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace skoszul
