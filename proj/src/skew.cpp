#include "skoszul/skew.hpp"

#include <algorithm>

#include "skoszul/error.hpp"
#include "skoszul/parallel.hpp"

namespace skoszul {

namespace {

void require_same_endo(const Endo& a, const Endo& b) {
  if (!(a == b)) throw Error(ErrorCode::EndoMismatch, "skew elements over different endomorphisms");
}

}  // namespace

SkewPoly::SkewPoly(Endo endo, Poly f, std::uint64_t e) : endo_(std::move(endo)) {
  require_same_ring(endo_.ring(), f.ring());
  if (f.is_zero()) return;
  coeffs_.assign(e + 1, Poly(endo_.ring()));
  coeffs_[e] = std::move(f);
}

SkewPoly SkewPoly::theta(const Endo& endo, std::uint64_t e) {
  return SkewPoly(endo, Poly::constant(endo.ring(), 1), e);
}

SkewPoly SkewPoly::constant(const Endo& endo, long long c) {
  return SkewPoly(endo, Poly::constant(endo.ring(), c));
}

long long SkewPoly::poly_degree() const {
  long long d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

Poly SkewPoly::coeff(std::uint64_t e) const {
  return e < coeffs_.size() ? coeffs_[e] : Poly(endo_.ring());
}

void SkewPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly r(endo_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

SkewPoly& SkewPoly::operator+=(const SkewPoly& b) {
  require_same_endo(endo_, b.endo_);
  if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), Poly(endo_.ring()));
  for (std::size_t e = 0; e < b.coeffs_.size(); ++e) coeffs_[e] += b.coeffs_[e];
  trim();
  return *this;
}

SkewPoly& SkewPoly::operator-=(const SkewPoly& b) {
  require_same_endo(endo_, b.endo_);
  if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), Poly(endo_.ring()));
  for (std::size_t e = 0; e < b.coeffs_.size(); ++e) coeffs_[e] -= b.coeffs_[e];
  trim();
  return *this;
}

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
  require_same_endo(a.endo_, b.endo_);
  SkewPoly r(a.endo_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Poly(a.ring()));
  for (std::size_t e = 0; e < a.coeffs_.size(); ++e) {
    if (a.coeffs_[e].is_zero()) continue;
    for (std::size_t d = 0; d < b.coeffs_.size(); ++d) {
      if (b.coeffs_[d].is_zero()) continue;
      r.coeffs_[e + d] += a.coeffs_[e] * a.endo_.apply(b.coeffs_[d], e);
    }
  }
  r.trim();
  return r;
}

SkewPoly SkewPoly::left_multiply(const Poly& f) const {
  require_same_ring(endo_.ring(), f.ring());
  SkewPoly r(endo_);
  if (f.is_zero()) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(f * c);
  r.trim();
  return r;
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
  return a.endo_ == b.endo_ && a.coeffs_ == b.coeffs_;
}

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b) { return a * b; }

Poly augment(const SkewPoly& a) {
  Poly sum(a.ring());
  for (const auto& c : a.coefficients()) sum += c;
  return sum;
}

SkewMatrix::SkewMatrix(Endo endo, std::size_t rows, std::size_t cols)
    : endo_(endo), rows_(rows), cols_(cols), entries_(rows * cols, SkewPoly(endo)) {}

SkewMatrix SkewMatrix::identity(const Endo& endo, std::size_t size) {
  SkewMatrix m(endo, size, size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = SkewPoly::constant(endo, 1);
  return m;
}

SkewMatrix SkewMatrix::row_vector(const Endo& endo, std::vector<SkewPoly> entries) {
  SkewMatrix m(endo, 1, entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require_same_endo(endo, entries[i].endo());
    m.entries_[i] = std::move(entries[i]);
  }
  return m;
}

SkewMatrix SkewMatrix::from_poly_matrix(const Endo& endo, const PolyMatrix& m) {
  require_same_ring(endo.ring(), m.ring());
  SkewMatrix r(endo, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = SkewPoly(endo, m.at(i, j));
  return r;
}

bool SkewMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const SkewPoly& p) { return p.is_zero(); });
}

std::vector<SkewPoly> SkewMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<long>(r * cols_), entries_.begin() + static_cast<long>((r + 1) * cols_)};
}

SkewMatrix SkewMatrix::operator-() const {
  SkewMatrix r(endo_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
  return r;
}

SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b) {
  require_same_endo(a.endo_, b.endo_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shapes");
  SkewMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

SkewMatrix operator-(const SkewMatrix& a, const SkewMatrix& b) { return a + (-b); }

SkewMatrix operator*(const SkewMatrix& a, const SkewMatrix& b) { return smat_mul(a, b); }

SkewMatrix SkewMatrix::scaled(long long c) const {
  const Poly k = Poly::constant(endo_.ring(), c);
  SkewMatrix r(endo_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].left_multiply(k);
  return r;
}

SkewMatrix SkewMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  if (r0 > r1 || r1 > rows_ || c0 > c1 || c1 > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  SkewMatrix r(endo_, r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) r.at(i - r0, j - c0) = at(i, j);
  return r;
}

void SkewMatrix::set_block(std::size_t r0, std::size_t c0, const SkewMatrix& b) {
  require_same_endo(endo_, b.endo_);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
  return a.endo_ == b.endo_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

void check_product(const SkewMatrix& a, const SkewMatrix& b) {
  require_same_endo(a.endo(), b.endo());
  if (a.cols() != b.rows())
    throw Error(ErrorCode::ShapeMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                              std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

SkewPoly product_entry(const SkewMatrix& a, const SkewMatrix& b, std::size_t i, std::size_t j) {
  SkewPoly sum(a.endo());
  for (std::size_t k = 0; k < a.cols(); ++k)
    if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) sum += a.at(i, k) * b.at(k, j);
  return sum;
}

}  // namespace

SkewMatrix smat_mul_serial(const SkewMatrix& a, const SkewMatrix& b) {
  check_product(a, b);
  SkewMatrix r(a.endo(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) = product_entry(a, b, i, j);
  return r;
}

SkewMatrix smat_mul(const SkewMatrix& a, const SkewMatrix& b) {
  check_product(a, b);
  SkewMatrix r(a.endo(), a.rows(), b.cols());
  const std::size_t cols = b.cols();
  parallel_for(a.rows() * cols, [&](std::size_t idx) {
    r.at(idx / cols, idx % cols) = product_entry(a, b, idx / cols, idx % cols);
  });
  return r;
}

}  // namespace skoszul
