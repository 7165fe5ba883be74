#include "skoszul/poly.hpp"

#include <algorithm>

#include "skoszul/error.hpp"

namespace skoszul {

namespace {

bool term_greater(const Term& a, const Term& b) { return grlex_compare(a.monomial, b.monomial) > 0; }

// Sort descending and combine like terms.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// Merge two canonical term lists, b scaled by sign.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = grlex_compare(a[i].monomial, b[j].monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(negate_b ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Scalar c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (a.nvars != b.nvars)
    throw Error(ErrorCode::ArityMismatch, "polynomials in " + std::to_string(a.nvars) + " and " +
                                              std::to_string(b.nvars) + " variables");
  if (!(a.field == b.field))
    throw Error(ErrorCode::ArityMismatch,
                "polynomials over " + a.field.descriptor() + " and " + b.field.descriptor());
}

Poly Poly::constant(const PolyRing& ring, const Scalar& c) {
  return monomial(ring, Monomial(ring.nvars), c);
}

Poly Poly::monomial(const PolyRing& ring, const Monomial& m, const Scalar& c) {
  if (m.nvars() != ring.nvars) throw Error(ErrorCode::ArityMismatch, "monomial arity differs from ring");
  if (!ring.field.owns(c)) throw Error(ErrorCode::ArityMismatch, "coefficient from another field");
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

Poly Poly::variable(const PolyRing& ring, std::size_t index, Exponent power) {
  return monomial(ring, Monomial::variable(ring.nvars, index, power));
}

Poly Poly::from_terms(const PolyRing& ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.monomial.nvars() != ring.nvars)
      throw Error(ErrorCode::ArityMismatch, "term arity differs from ring");
    if (!ring.field.owns(t.coeff)) throw Error(ErrorCode::ArityMismatch, "coefficient from another field");
  }
  Poly p(ring);
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff.is_one();
}

long long Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long long>(terms_.front().monomial.degree());
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

Scalar Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return ring_.field.zero();
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial, -t.coeff});
  return r;
}

Poly& Poly::operator+=(const Poly& b) {
  require_same_ring(ring_, b.ring_);
  if (b.terms_.empty()) return *this;
  terms_ = merge(terms_, b.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  require_same_ring(ring_, b.ring_);
  if (b.terms_.empty()) return *this;
  terms_ = merge(terms_, b.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_);
  Poly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].monomial, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].monomial, b.terms_[0].coeff);
  std::vector<Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) prods.push_back(Term{ta.monomial * tb.monomial, ta.coeff * tb.coeff});
  r.terms_ = canonicalize(std::move(prods));
  return r;
}

Poly& Poly::operator*=(const Poly& b) { return *this = *this * b; }

Poly Poly::scaled(const Scalar& c) const {
  return times_monomial(Monomial(ring_.nvars), c);
}

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order; a nonzero scalar keeps terms nonzero.
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, t.coeff * c});
  return r;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = constant(ring_, ring_.field.one());
  Poly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly substitute(const Poly& f, std::span<const Poly> images) {
  const PolyRing& ring = f.ring();
  if (images.size() != ring.nvars)
    throw Error(ErrorCode::ArityMismatch, "substitution needs " + std::to_string(ring.nvars) +
                                              " images, got " + std::to_string(images.size()));
  if (images.empty()) return f;
  const PolyRing& target = images.front().ring();
  for (const auto& img : images) require_same_ring(target, img.ring());
  if (!(target.field == ring.field)) throw Error(ErrorCode::ArityMismatch, "substitution changes the field");

  const bool all_terms = std::all_of(images.begin(), images.end(), [](const Poly& p) { return p.is_term(); });
  if (all_terms) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      Monomial m(target.nvars);
      Scalar c = t.coeff;
      for (std::size_t i = 0; i < ring.nvars; ++i) {
        const Exponent e = t.monomial[i];
        if (e == 0) continue;
        const Term& img = images[i].leading_term();
        m = m * img.monomial.pow(e);
        for (Exponent k = 0; k < e && !c.is_zero(); ++k) c *= img.coeff;
      }
      out.push_back(Term{std::move(m), std::move(c)});
    }
    return Poly::from_terms(target, std::move(out));
  }

  // Cache powers of each image as they are requested.
  std::vector<std::vector<Poly>> powers(ring.nvars);
  auto power_of = [&](std::size_t i, Exponent e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, target.field.one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly result(target);
  for (const auto& t : f.terms()) {
    Poly term = Poly::constant(target, t.coeff);
    for (std::size_t i = 0; i < ring.nvars && !term.is_zero(); ++i)
      if (t.monomial[i] != 0) term *= power_of(i, t.monomial[i]);
    result += term;
  }
  return result;
}

Poly divide_exact(const Poly& f, const Poly& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  const Term& lead = g.leading_term();
  const Scalar lead_inv = lead.coeff.inverse();
  std::vector<Term> quotient;
  Poly rest = f;
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!lead.monomial.divides(t.monomial))
      throw Error(ErrorCode::NoSolution, "polynomial is not divisible");
    Term q{t.monomial.divided_by(lead.monomial), t.coeff * lead_inv};
    rest -= g.times_monomial(q.monomial, q.coeff);
    quotient.push_back(std::move(q));
  }
  return Poly::from_terms(f.ring(), std::move(quotient));
}

PolyMatrix::PolyMatrix(PolyRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring)) {}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shapes");
  PolyMatrix r(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

std::vector<Poly> row_times(std::span<const Poly> row, const PolyMatrix& m) {
  if (row.size() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "row length differs from matrix rows");
  std::vector<Poly> out(m.cols(), Poly(m.ring()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (row[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) out[c] += row[r] * m.at(r, c);
  }
  return out;
}

}  // namespace skoszul
