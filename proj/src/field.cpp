#include "skoszul/field.hpp"

#include "skoszul/error.hpp"

namespace skoszul {

namespace {

[[noreturn]] void field_mismatch() {
  throw Error(ErrorCode::ArityMismatch, "scalars belong to different fields");
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value == 1 % r->modulus;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&value_))
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (auto r = std::get_if<Residue>(&value_))
    return Scalar(Residue{mod_pow(r->value, r->modulus - 2, r->modulus), r->modulus});
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) field_mismatch();
  if (auto ra = std::get_if<Scalar::Residue>(&a.value_)) {
    const auto& rb = std::get<Scalar::Residue>(b.value_);
    if (ra->modulus != rb.modulus) field_mismatch();
    std::uint32_t s = ra->value + rb.value;  // both < 2^31
    if (s >= ra->modulus) s -= ra->modulus;
    return Scalar(Scalar::Residue{s, ra->modulus});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) field_mismatch();
  if (auto ra = std::get_if<Scalar::Residue>(&a.value_)) {
    const auto& rb = std::get<Scalar::Residue>(b.value_);
    if (ra->modulus != rb.modulus) field_mismatch();
    auto prod = static_cast<std::uint64_t>(ra->value) * rb.value % ra->modulus;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(prod), ra->modulus});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidField, "characteristic must be a prime below 2^31, got " +
                                             std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::from_descriptor(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 12)
      throw Error(ErrorCode::InvalidField, "bad field descriptor '" + text + "'");
    return prime(std::stoull(digits));
  }
  throw Error(ErrorCode::InvalidField, "bad field descriptor '" + text + "'");
}

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(std::to_string(v))));
  long long r = v % static_cast<long long>(characteristic_);
  if (r < 0) r += characteristic_;
  return Scalar(Scalar::Residue{static_cast<std::uint32_t>(r), characteristic_});
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (is_rational()) return Scalar(mpq_class(num, den));
  const mpz_class p = characteristic_;
  mpz_class n = num % p, d = den % p;
  if (n < 0) n += p;
  if (d < 0) d += p;
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes modulo the characteristic");
  Scalar sn(Scalar::Residue{static_cast<std::uint32_t>(n.get_ui()), characteristic_});
  Scalar sd(Scalar::Residue{static_cast<std::uint32_t>(d.get_ui()), characteristic_});
  return sn / sd;
}

Scalar Field::parse(const std::string& text) const {
  const auto slash = text.find('/');
  try {
    mpz_class num(text.substr(0, slash), 10);
    mpz_class den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1), 10);
    return from_fraction(num, den);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad coefficient '" + text + "'");
  }
}

bool Field::owns(const Scalar& s) const {
  if (is_rational()) return s.is_rational();
  return !s.is_rational() && s.modulus() == characteristic_;
}

std::string Field::format(const Scalar& s) const {
  if (s.is_rational()) {
    const auto& q = s.rational();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  return std::to_string(s.residue());
}

std::string Field::descriptor() const {
  return is_rational() ? std::string("q") : "gf:" + std::to_string(characteristic_);
}

}  // namespace skoszul
