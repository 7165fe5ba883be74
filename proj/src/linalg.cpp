#include "skoszul/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "skoszul/error.hpp"
#include "skoszul/parallel.hpp"

namespace skoszul {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, exp = p - 2;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// row_target -= factor * row_pivot over columns [from, cols).
inline void axpy_mod_p(std::uint32_t* target, const std::uint32_t* pivot, std::uint32_t factor,
                       std::size_t from, std::size_t cols, std::uint32_t p) {
  const std::uint64_t neg = p - factor;
  for (std::size_t c = from; c < cols; ++c) {
    if (pivot[c] == 0) continue;
    target[c] = static_cast<std::uint32_t>((target[c] + neg * pivot[c]) % p);
  }
}

template <bool Parallel>
std::vector<std::size_t> rref_mod_p_impl(std::span<std::uint32_t> a, std::size_t rows, std::size_t cols,
                                         std::uint32_t p) {
  if (a.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "rref buffer size");
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t r = row;
    while (r < rows && a[r * cols + col] == 0) ++r;
    if (r == rows) continue;
    if (r != row)
      std::swap_ranges(a.begin() + static_cast<long>(r * cols), a.begin() + static_cast<long>((r + 1) * cols),
                       a.begin() + static_cast<long>(row * cols));
    std::uint32_t* prow = a.data() + row * cols;
    const std::uint64_t inv = inv_mod(prow[col], p);
    for (std::size_t c = col; c < cols; ++c) prow[c] = static_cast<std::uint32_t>(prow[c] * inv % p);

    const long long nrows = static_cast<long long>(rows);
    if constexpr (Parallel) {
#ifdef SKOSZUL_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (rows * (cols - col) > 16384)
#endif
      for (long long i = 0; i < nrows; ++i) {
        std::uint32_t* target = a.data() + static_cast<std::size_t>(i) * cols;
        if (static_cast<std::size_t>(i) != row && target[col] != 0)
          axpy_mod_p(target, prow, target[col], col, cols, p);
      }
    } else {
      for (long long i = 0; i < nrows; ++i) {
        std::uint32_t* target = a.data() + static_cast<std::size_t>(i) * cols;
        if (static_cast<std::size_t>(i) != row && target[col] != 0)
          axpy_mod_p(target, prow, target[col], col, cols, p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref_mod_p(std::span<std::uint32_t> a, std::size_t rows, std::size_t cols,
                                    std::uint32_t p) {
  return rref_mod_p_impl<true>(a, rows, cols, p);
}

std::vector<std::size_t> rref_mod_p_serial(std::span<std::uint32_t> a, std::size_t rows, std::size_t cols,
                                           std::uint32_t p) {
  return rref_mod_p_impl<false>(a, rows, cols, p);
}

std::vector<std::size_t> rref_rational(std::span<mpq_class> a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "rref buffer size");
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t r = row;
    while (r < rows && sgn(a[r * cols + col]) == 0) ++r;
    if (r == rows) continue;
    if (r != row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a[r * cols + c], a[row * cols + c]);
    const mpq_class inv = 1 / a[row * cols + col];
    for (std::size_t c = col; c < cols; ++c) a[row * cols + c] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || sgn(a[i * cols + col]) == 0) continue;
      const mpq_class f = a[i * cols + col];
      for (std::size_t c = col; c < cols; ++c)
        if (sgn(a[row * cols + c]) != 0) a[i * cols + c] -= f * a[row * cols + c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

struct LinearSystem::Block {
  std::vector<std::size_t> unknowns;   // global ids, ascending
  std::vector<std::size_t> equations;  // row ids
};

void LinearSystem::add_equation(SparseVector lhs, Scalar rhs) {
  for (const auto& [j, c] : lhs) {
    if (j >= unknowns_) throw Error(ErrorCode::ShapeMismatch, "unknown index out of range");
    if (!field_.owns(c)) throw Error(ErrorCode::ArityMismatch, "coefficient from another field");
  }
  lhs.erase(std::remove_if(lhs.begin(), lhs.end(), [](const auto& e) { return e.second.is_zero(); }), lhs.end());
  rows_.push_back(std::move(lhs));
  rhs_.push_back(std::move(rhs));
}

std::vector<LinearSystem::Block> LinearSystem::blocks() const {
  std::vector<std::size_t> parent(unknowns_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& row : rows_)
    for (std::size_t k = 1; k < row.size(); ++k) {
      const std::size_t a = find(row[0].first), b = find(row[k].first);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<long> block_of_root(unknowns_, -1);
  std::vector<Block> out;
  for (std::size_t j = 0; j < unknowns_; ++j) {
    const std::size_t root = find(j);
    if (block_of_root[root] < 0) {
      block_of_root[root] = static_cast<long>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(block_of_root[root])].unknowns.push_back(j);
  }
  Block constants;  // equations without unknowns
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) {
      constants.equations.push_back(i);
      continue;
    }
    out[static_cast<std::size_t>(block_of_root[find(rows_[i][0].first)])].equations.push_back(i);
  }
  if (!constants.equations.empty()) out.push_back(std::move(constants));
  return out;
}

namespace {

// Reduced block: pivot rows expressed over local unknown columns plus the RHS.
struct ReducedBlock {
  bool consistent = true;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<Scalar>> pivot_rows;  // each of length u + 1
};

ReducedBlock reduce_block(const Field& field, const std::vector<SparseVector>& rows,
                          const std::vector<Scalar>& rhs, const std::vector<std::size_t>& unknowns,
                          const std::vector<std::size_t>& equations, bool allow_parallel) {
  const std::size_t u = unknowns.size();
  const std::size_t cols = u + 1;
  const std::size_t m = equations.size();
  auto local = [&](std::size_t global) {
    return static_cast<std::size_t>(std::lower_bound(unknowns.begin(), unknowns.end(), global) - unknowns.begin());
  };
  ReducedBlock out;
  if (field.is_finite()) {
    const std::uint32_t p = field.characteristic();
    std::vector<std::uint32_t> a(m * cols, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& [j, c] : rows[equations[i]]) {
        auto& cell = a[i * cols + local(j)];
        cell = static_cast<std::uint32_t>((static_cast<std::uint64_t>(cell) + c.residue()) % p);
      }
      a[i * cols + u] = rhs[equations[i]].residue();
    }
    const auto pivots = allow_parallel ? rref_mod_p(a, m, cols, p) : rref_mod_p_serial(a, m, cols, p);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] == u) {
        out.consistent = false;
        return out;
      }
      out.pivot_cols.push_back(pivots[r]);
      std::vector<Scalar> row;
      row.reserve(cols);
      for (std::size_t c = 0; c < cols; ++c) row.emplace_back(Scalar::Residue{a[r * cols + c], p});
      out.pivot_rows.push_back(std::move(row));
    }
    return out;
  }
  std::vector<mpq_class> a(m * cols);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [j, c] : rows[equations[i]]) a[i * cols + local(j)] += c.rational();
    a[i * cols + u] = rhs[equations[i]].rational();
  }
  const auto pivots = rref_rational(a, m, cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == u) {
      out.consistent = false;
      return out;
    }
    out.pivot_cols.push_back(pivots[r]);
    std::vector<Scalar> row;
    row.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) row.emplace_back(a[r * cols + c]);
    out.pivot_rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Scalar>> LinearSystem::solve() const {
  const auto parts = blocks();
  std::vector<Scalar> x(unknowns_, field_.zero());
  std::vector<ReducedBlock> reduced(parts.size());
  const bool single = parts.size() == 1;
  parallel_for(parts.size(), [&](std::size_t b) {
    reduced[b] = reduce_block(field_, rows_, rhs_, parts[b].unknowns, parts[b].equations, single);
  });
  for (std::size_t b = 0; b < parts.size(); ++b) {
    if (!reduced[b].consistent) return std::nullopt;
    const std::size_t u = parts[b].unknowns.size();
    for (std::size_t r = 0; r < reduced[b].pivot_cols.size(); ++r)
      x[parts[b].unknowns[reduced[b].pivot_cols[r]]] = reduced[b].pivot_rows[r][u];
  }
  return x;
}

std::vector<SparseVector> LinearSystem::nullspace() const {
  const auto parts = blocks();
  std::vector<ReducedBlock> reduced(parts.size());
  const bool single = parts.size() == 1;
  std::vector<Scalar> zero_rhs(rhs_.size(), field_.zero());
  parallel_for(parts.size(), [&](std::size_t b) {
    reduced[b] = reduce_block(field_, rows_, zero_rhs, parts[b].unknowns, parts[b].equations, single);
  });
  std::vector<SparseVector> basis;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    const auto& unk = parts[b].unknowns;
    const auto& red = reduced[b];
    std::vector<bool> is_pivot(unk.size(), false);
    for (auto c : red.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < unk.size(); ++f) {
      if (is_pivot[f]) continue;
      SparseVector v;
      for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
        if (!red.pivot_rows[r][f].is_zero()) v.emplace_back(unk[red.pivot_cols[r]], -red.pivot_rows[r][f]);
      v.emplace_back(unk[f], field_.one());
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

}  // namespace skoszul
