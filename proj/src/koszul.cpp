#include "skoszul/koszul.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "skoszul/error.hpp"
#include "skoszul/linalg.hpp"

namespace skoszul {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Subset> subsets(std::size_t n, std::size_t l) {
  std::vector<Subset> out;
  if (l > n) return out;
  Subset cur(l);
  for (std::size_t i = 0; i < l; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = l;
    while (i > 0 && cur[i - 1] == n - l + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < l; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::string subset_label(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

PolyMatrix koszul_matrix(std::span<const Poly> seq, std::size_t l) {
  const std::size_t n = seq.size();
  if (n == 0) throw Error(ErrorCode::EmptySequence, "Koszul matrix of an empty sequence");
  if (l < 1 || l > n)
    throw Error(ErrorCode::LevelOutOfRange, "Koszul level " + std::to_string(l) + " outside [1, " +
                                                std::to_string(n) + "]");
  const PolyRing& ring = seq.front().ring();
  for (const auto& y : seq) require_same_ring(ring, y.ring());
  const auto rows = subsets(n, l);
  const auto cols = subsets(n, l - 1);
  PolyMatrix m(ring, rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < l; ++k) {
      Subset face = rows[r];
      face.erase(face.begin() + static_cast<long>(k));
      const auto c = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), face) - cols.begin());
      m.at(r, c) = (k % 2 == 0) ? seq[rows[r][k]] : -seq[rows[r][k]];
    }
  }
  return m;
}

PolyMatrix twist(const PolyMatrix& m, const Endo& phi, std::uint64_t k) {
  PolyMatrix r(m.ring(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = phi.apply(m.at(i, j), k);
  return r;
}

SkewMatrix twist_diagonal(const Endo& phi, std::span<const Poly> multipliers, std::size_t l) {
  const std::size_t n = multipliers.size();
  if (l > n) throw Error(ErrorCode::LevelOutOfRange, "diagonal level exceeds sequence length");
  const auto basis = subsets(n, l);
  SkewMatrix d(phi, basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Poly prod = Poly::constant(phi.ring(), 1);
    for (auto j : basis[i]) prod *= multipliers[j];
    d.at(i, i) = SkewPoly::theta(phi) - SkewPoly(phi, prod);
  }
  return d;
}

namespace {

using Degree = std::vector<long long>;

struct Shifts {
  std::vector<Degree> row;  // a_r
  std::vector<Degree> col;  // b_c
  std::vector<std::size_t> row_comp;
  std::vector<std::size_t> col_comp;
};

// Potentials with a_r - b_c = deg(M_rc) on every nonzero entry, one free
// anchor per connected component of the row/column incidence graph.
std::optional<Shifts> find_shifts(const PolyMatrix& m, bool multigraded) {
  const std::size_t rows = m.rows(), cols = m.cols(), width = multigraded ? m.ring().nvars : 1;
  std::vector<std::optional<Degree>> entry_deg(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const Poly& e = m.at(r, c);
      if (e.is_zero()) continue;
      if (multigraded) {
        if (!e.is_term()) return std::nullopt;
        const auto exps = e.leading_term().monomial.exponents();
        entry_deg[r * cols + c] = Degree(exps.begin(), exps.end());
      } else {
        if (!e.is_homogeneous()) return std::nullopt;
        entry_deg[r * cols + c] = Degree{e.degree()};
      }
    }
  Shifts s;
  std::vector<std::optional<Degree>> row(rows), col(cols);
  s.row_comp.assign(rows, 0);
  s.col_comp.assign(cols, 0);
  std::size_t comp = 0;
  // Nodes: rows are 0..rows-1, columns rows..rows+cols-1.
  for (std::size_t start = 0; start < rows + cols; ++start) {
    const bool is_row = start < rows;
    if (is_row ? row[start].has_value() : col[start - rows].has_value()) continue;
    (is_row ? row[start] : col[start - rows]) = Degree(width, 0);
    std::queue<std::size_t> queue;
    queue.push(start);
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop();
      if (node < rows) {
        s.row_comp[node] = comp;
        for (std::size_t c = 0; c < cols; ++c) {
          const auto& d = entry_deg[node * cols + c];
          if (!d) continue;
          Degree want(width);
          for (std::size_t k = 0; k < width; ++k) want[k] = (*row[node])[k] - (*d)[k];
          if (!col[c]) {
            col[c] = want;
            queue.push(rows + c);
          } else if (*col[c] != want) {
            return std::nullopt;
          }
        }
      } else {
        const std::size_t c = node - rows;
        s.col_comp[c] = comp;
        for (std::size_t r = 0; r < rows; ++r) {
          const auto& d = entry_deg[r * cols + c];
          if (!d) continue;
          Degree want(width);
          for (std::size_t k = 0; k < width; ++k) want[k] = (*col[c])[k] + (*d)[k];
          if (!row[r]) {
            row[r] = want;
            queue.push(r);
          } else if (*row[r] != want) {
            return std::nullopt;
          }
        }
      }
    }
    ++comp;
  }
  for (auto& r : row) s.row.push_back(std::move(*r));
  for (auto& c : col) s.col.push_back(std::move(*c));
  return s;
}

Degree degree_of(const Monomial& m, bool multigraded) {
  if (!multigraded) return Degree{static_cast<long long>(m.degree())};
  return Degree(m.exponents().begin(), m.exponents().end());
}

struct ColumnMonomialLess {
  bool operator()(const std::pair<std::size_t, Monomial>& a, const std::pair<std::size_t, Monomial>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return grlex_compare(a.second, b.second) < 0;
  }
};

struct Candidate {
  std::size_t row;
  Monomial monomial;
};

}  // namespace

std::vector<Poly> solve_right(const PolyMatrix& m, std::span<const Poly> b) {
  if (b.size() != m.cols())
    throw Error(ErrorCode::ShapeMismatch, "right-hand side has " + std::to_string(b.size()) + " entries, matrix " +
                                              std::to_string(m.cols()) + " columns");
  const PolyRing& ring = m.ring();
  for (const auto& e : b) require_same_ring(ring, e.ring());
  std::vector<Poly> x(m.rows(), Poly(ring));
  if (std::all_of(b.begin(), b.end(), [](const Poly& p) { return p.is_zero(); })) return x;

  bool multigraded = true;
  auto shifts = find_shifts(m, true);
  if (!shifts) {
    multigraded = false;
    shifts = find_shifts(m, false);
  }
  if (!shifts) throw Error(ErrorCode::NonHomogeneous, "matrix admits no grading compatible with its entries");

  // Candidate monomials of X: for each term mu of B_c, the group degree
  // alpha = deg(mu) + b_c fixes deg(X_r) = alpha - a_r for rows of that component.
  std::set<std::pair<std::size_t, Degree>> groups;
  for (std::size_t c = 0; c < b.size(); ++c)
    for (const auto& t : b[c].terms()) {
      Degree alpha = degree_of(t.monomial, multigraded);
      for (std::size_t k = 0; k < alpha.size(); ++k) alpha[k] += shifts->col[c][k];
      groups.emplace(shifts->col_comp[c], std::move(alpha));
    }
  std::vector<Candidate> unknowns;
  for (const auto& [comp, alpha] : groups) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (shifts->row_comp[r] != comp) continue;
      Degree need(alpha.size());
      bool feasible = true;
      for (std::size_t k = 0; k < alpha.size(); ++k) {
        need[k] = alpha[k] - shifts->row[r][k];
        if (need[k] < 0 || need[k] > static_cast<long long>(UINT32_MAX)) feasible = false;
      }
      if (!feasible) continue;
      if (multigraded) {
        unknowns.push_back(Candidate{r, Monomial(std::vector<Exponent>(need.begin(), need.end()))});
      } else {
        for (auto& mono : monomials_of_degree(ring.nvars, static_cast<std::uint64_t>(need[0])))
          unknowns.push_back(Candidate{r, std::move(mono)});
      }
    }
  }

  // One equation per (column, monomial) that B or any candidate touches.
  std::map<std::pair<std::size_t, Monomial>, std::size_t, ColumnMonomialLess> eq_index;
  std::vector<SparseVector> lhs;
  std::vector<Scalar> rhs;
  auto equation = [&](std::size_t c, const Monomial& mono) -> std::size_t {
    auto [it, inserted] = eq_index.try_emplace({c, mono}, lhs.size());
    if (inserted) {
      lhs.emplace_back();
      rhs.push_back(ring.field.zero());
    }
    return it->second;
  };
  for (std::size_t c = 0; c < b.size(); ++c)
    for (const auto& t : b[c].terms()) rhs[equation(c, t.monomial)] = t.coeff;
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& cand = unknowns[u];
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& t : m.at(cand.row, c).terms())
        lhs[equation(c, cand.monomial * t.monomial)].emplace_back(u, t.coeff);
  }

  LinearSystem system(ring.field, unknowns.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) system.add_equation(std::move(lhs[i]), rhs[i]);
  const auto solution = system.solve();
  if (!solution) throw Error(ErrorCode::NoSolution, "right-hand side is not in the row space");

  std::vector<std::vector<Term>> terms(m.rows());
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (!(*solution)[u].is_zero()) terms[unknowns[u].row].push_back(Term{unknowns[u].monomial, (*solution)[u]});
  for (std::size_t r = 0; r < m.rows(); ++r) x[r] = Poly::from_terms(ring, std::move(terms[r]));

  const auto check = row_times(x, m);
  if (!std::equal(check.begin(), check.end(), b.begin()))
    throw Error(ErrorCode::InvariantViolation, "solver produced a non-solution");
  return x;
}

}  // namespace skoszul
