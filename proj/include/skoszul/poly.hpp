#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "skoszul/field.hpp"
#include "skoszul/monomial.hpp"

namespace skoszul {

// S = K[x_1, ..., x_n].
struct PolyRing {
  Field field;
  std::size_t nvars;

  bool operator==(const PolyRing&) const = default;
};

struct Term {
  Monomial monomial;
  Scalar coeff;

  bool operator==(const Term&) const = default;
};

// Sparse polynomial with terms kept in strictly descending grlex order and no
// zero coefficients, so structural equality is mathematical equality.
class Poly {
 public:
  explicit Poly(PolyRing ring) : ring_(std::move(ring)) {}

  static Poly constant(const PolyRing& ring, const Scalar& c);
  static Poly constant(const PolyRing& ring, long long c) { return constant(ring, ring.field.from_int(c)); }
  static Poly monomial(const PolyRing& ring, const Monomial& m, const Scalar& c);
  static Poly monomial(const PolyRing& ring, const Monomial& m) { return monomial(ring, m, ring.field.one()); }
  static Poly variable(const PolyRing& ring, std::size_t index, Exponent power = 1);
  // Terms in any order; like terms are combined and zeros dropped.
  static Poly from_terms(const PolyRing& ring, std::vector<Term> terms);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Single term (monomial times nonzero scalar).
  bool is_term() const { return terms_.size() == 1; }
  // -1 for the zero polynomial.
  long long degree() const;
  bool is_homogeneous() const;
  const Term& leading_term() const { return terms_.front(); }
  Scalar coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& m, const Scalar& c) const;
  Poly pow(std::uint64_t e) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  PolyRing ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const PolyRing& a, const PolyRing& b);

// Image of f under the K-algebra map x_i -> images[i].
Poly substitute(const Poly& f, std::span<const Poly> images);

// Exact quotient f / g; throws NoSolution when g does not divide f.
Poly divide_exact(const Poly& f, const Poly& g);

// Dense matrix over S, used for Koszul matrices and the commutative solver.
class PolyMatrix {
 public:
  PolyMatrix(PolyRing ring, std::size_t rows, std::size_t cols);

  const PolyRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Poly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  bool is_zero() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

 private:
  PolyRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> entries_;
};

// Row vector times matrix over S.
std::vector<Poly> row_times(std::span<const Poly> row, const PolyMatrix& m);

}  // namespace skoszul
