#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace skoszul {

// An element of F_p (stored as a residue together with its modulus) or of Q.
// Arithmetic between elements of different fields throws ArityMismatch.
class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    bool operator==(const Residue&) const = default;
  };

  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }

  // Only valid for the matching representation.
  std::uint32_t residue() const { return std::get<Residue>(value_).value; }
  std::uint32_t modulus() const { return std::get<Residue>(value_).modulus; }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  std::variant<Residue, mpq_class> value_;
};

// The coefficient field: characteristic 0 means Q, otherwise a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);  // throws InvalidField unless p is prime < 2^31
  // "q" or "gf:<p>"
  static Field from_descriptor(const std::string& text);

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  bool is_finite() const { return characteristic_ != 0; }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long v) const;
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;
  // Accepts "a" or "a/b" with optional sign.
  Scalar parse(const std::string& text) const;
  bool owns(const Scalar& s) const;

  // F_p: integer in [0, p); Q: "num/den".
  std::string format(const Scalar& s) const;
  std::string descriptor() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t c) : characteristic_(c) {}
  std::uint32_t characteristic_;
};

bool is_prime(std::uint64_t n);

}  // namespace skoszul
