#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "skoszul/field.hpp"

namespace skoszul {

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

// In-place reduced row echelon form of a dense row-major matrix over F_p.
// Returns the pivot column of each nonzero row, in order. The first variant
// eliminates rows in parallel; the serial one is kept as its reference.
std::vector<std::size_t> rref_mod_p(std::span<std::uint32_t> a, std::size_t rows, std::size_t cols,
                                    std::uint32_t p);
std::vector<std::size_t> rref_mod_p_serial(std::span<std::uint32_t> a, std::size_t rows, std::size_t cols,
                                           std::uint32_t p);
std::vector<std::size_t> rref_rational(std::span<mpq_class> a, std::size_t rows, std::size_t cols);

// Sparse linear system sum_j a_ij x_j = b_i over a field. Unknowns that never
// share an equation are independent, so the system is split into connected
// blocks and each block is reduced densely.
class LinearSystem {
 public:
  LinearSystem(Field field, std::size_t unknowns) : field_(std::move(field)), unknowns_(unknowns) {}

  const Field& field() const { return field_; }
  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }

  void add_equation(SparseVector lhs, Scalar rhs);
  void add_equation(SparseVector lhs) { add_equation(std::move(lhs), field_.zero()); }

  // A particular solution with every free unknown set to zero; nullopt when
  // the system is inconsistent.
  std::optional<std::vector<Scalar>> solve() const;
  // Basis of the solution space of the homogeneous system.
  std::vector<SparseVector> nullspace() const;

 private:
  struct Block;
  std::vector<Block> blocks() const;

  Field field_;
  std::size_t unknowns_;
  std::vector<SparseVector> rows_;
  std::vector<Scalar> rhs_;
};

}  // namespace skoszul
