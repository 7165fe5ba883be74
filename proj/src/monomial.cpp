#include "skoszul/monomial.hpp"

#include <algorithm>
#include <limits>

#include "skoszul/error.hpp"

namespace skoszul {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<Exponent>::max();

Exponent narrow(std::uint64_t v) {
  if (v > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "exponent exceeds 32 bits");
  return static_cast<Exponent>(v);
}

void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::ArityMismatch, "monomials in " + std::to_string(a.nvars()) + " and " +
                                              std::to_string(b.nvars()) + " variables");
}

void fill_degree(std::size_t nvars, std::uint64_t degree, std::size_t index,
                 std::vector<Exponent>& current, std::vector<Monomial>& out) {
  if (index + 1 == nvars) {
    current[index] = narrow(degree);
    out.emplace_back(current);
    return;
  }
  for (std::uint64_t e = degree + 1; e-- > 0;) {
    current[index] = narrow(e);
    fill_degree(nvars, degree - e, index + 1, current, out);
  }
  current[index] = 0;
}

}  // namespace

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw Error(ErrorCode::ExponentOverflow, "integer overflow in addition");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw Error(ErrorCode::ExponentOverflow, "integer overflow in multiplication");
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ = checked_add(degree_, e);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  std::vector<Exponent> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  require_same_arity(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<Exponent> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = narrow(static_cast<std::uint64_t>(a.exps_[i]) + b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::divided_by(const Monomial& b) const {
  if (!b.divides(*this)) throw Error(ErrorCode::InvariantViolation, "inexact monomial division");
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - b.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::pow(std::uint64_t q) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = narrow(checked_mul(exps_[i], q));
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& g, const Monomial& m) { return g.divided_by(gcd(g, m)); }

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto ea = a.exponents(), eb = b.exponents();
  for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] < eb[i] ? -1 : 1;
  if (ea.size() != eb.size()) return ea.size() < eb.size() ? -1 : 1;
  return 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Exponent> current(nvars, 0);
  fill_degree(nvars, degree, 0, current, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint64_t bound) {
  std::vector<Monomial> out;
  for (std::uint64_t d = bound + 1; d-- > 0;) {
    auto part = monomials_of_degree(nvars, d);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace skoszul
