#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "skoszul/endo.hpp"
#include "skoszul/poly.hpp"

namespace skoszul {

// Element sum_e f_e Theta^e of the left skew polynomial ring S[Theta; phi],
// always in left normal form (coefficients to the left of Theta powers), with
// the multiplication rule Theta * a = phi(a) * Theta.
class SkewPoly {
 public:
  explicit SkewPoly(Endo endo) : endo_(std::move(endo)) {}
  // f * Theta^e
  SkewPoly(Endo endo, Poly f, std::uint64_t e = 0);

  static SkewPoly theta(const Endo& endo, std::uint64_t e = 1);
  static SkewPoly constant(const Endo& endo, long long c);

  const Endo& endo() const { return endo_; }
  const PolyRing& ring() const { return endo_.ring(); }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for zero.
  long long theta_degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  // Largest total degree among the left coefficients; -1 for zero.
  long long poly_degree() const;
  // Left coefficient of Theta^e.
  Poly coeff(std::uint64_t e) const;
  const std::vector<Poly>& coefficients() const { return coeffs_; }

  SkewPoly operator-() const;
  SkewPoly& operator+=(const SkewPoly& b);
  SkewPoly& operator-=(const SkewPoly& b);
  friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
  friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }
  // (f Theta^e)(g Theta^d) = f phi^e(g) Theta^{e+d}
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
  SkewPoly& operator*=(const SkewPoly& b) { return *this = *this * b; }
  // Left scalar multiplication by an element of S.
  SkewPoly left_multiply(const Poly& f) const;

  friend bool operator==(const SkewPoly& a, const SkewPoly& b);

 private:
  void trim();

  Endo endo_;
  std::vector<Poly> coeffs_;  // index = Theta-degree; last entry nonzero
};

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b);

// sum f_e Theta^e -> sum f_e. Kills left multiples of Theta - 1.
Poly augment(const SkewPoly& a);

// Element of the opposite ring S[Theta; phi]^op, i.e. the right skew ring
// S[eps; phi]: same additive group, products taken in reverse order.
class OppositeSkewPoly {
 public:
  explicit OppositeSkewPoly(SkewPoly value) : value_(std::move(value)) {}
  const SkewPoly& value() const { return value_; }

  friend OppositeSkewPoly operator+(const OppositeSkewPoly& a, const OppositeSkewPoly& b) {
    return OppositeSkewPoly(a.value_ + b.value_);
  }
  friend OppositeSkewPoly operator*(const OppositeSkewPoly& a, const OppositeSkewPoly& b) {
    return OppositeSkewPoly(b.value_ * a.value_);
  }
  friend bool operator==(const OppositeSkewPoly&, const OppositeSkewPoly&) = default;

 private:
  SkewPoly value_;
};

inline OppositeSkewPoly opposite(SkewPoly a) { return OppositeSkewPoly(std::move(a)); }

// Dense matrix over S[Theta; phi]. Module elements are row vectors and maps
// act by right multiplication, so a map F_a -> F_b has shape rank(a) x rank(b).
class SkewMatrix {
 public:
  SkewMatrix(Endo endo, std::size_t rows, std::size_t cols);

  static SkewMatrix identity(const Endo& endo, std::size_t size);
  static SkewMatrix row_vector(const Endo& endo, std::vector<SkewPoly> entries);
  // Embeds S into S[Theta; phi] at Theta-degree 0.
  static SkewMatrix from_poly_matrix(const Endo& endo, const PolyMatrix& m);

  const Endo& endo() const { return endo_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SkewPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  SkewPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  bool is_zero() const;
  std::vector<SkewPoly> row(std::size_t r) const;

  SkewMatrix operator-() const;
  friend SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b);
  friend SkewMatrix operator-(const SkewMatrix& a, const SkewMatrix& b);
  // Parallel kernel; see smat_mul_serial for the reference.
  friend SkewMatrix operator*(const SkewMatrix& a, const SkewMatrix& b);
  SkewMatrix scaled(long long c) const;
  // {rows [r0, r1)} x {cols [c0, c1)}
  SkewMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  void set_block(std::size_t r0, std::size_t c0, const SkewMatrix& b);

  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b);

 private:
  Endo endo_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SkewPoly> entries_;
};

// Row-by-column product using skew_mul, factor order respected. Entries are
// computed in parallel (OpenMP) when available.
SkewMatrix smat_mul(const SkewMatrix& a, const SkewMatrix& b);
// Single-threaded reference for smat_mul.
SkewMatrix smat_mul_serial(const SkewMatrix& a, const SkewMatrix& b);

}  // namespace skoszul
