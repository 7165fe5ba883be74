#pragma once

#include <span>
#include <string>
#include <vector>

#include "skoszul/poly.hpp"
#include "skoszul/skew.hpp"

namespace skoszul {

// Strictly increasing 0-based indices i_1 < ... < i_l.
using Subset = std::vector<std::size_t>;

// The l-subsets of {0, ..., n-1} in lexicographic order.
std::vector<Subset> subsets(std::size_t n, std::size_t l);
std::size_t binomial(std::size_t n, std::size_t k);
// "{1,3}" with 1-based indices.
std::string subset_label(const Subset& s);

// Matrix of the Koszul differential d_l on (y_1, ..., y_n): rows are the
// l-subsets, columns the (l-1)-subsets, and row J carries (-1)^{r-1} y_{j_r}
// in the column J minus j_r. Throws LevelOutOfRange unless 1 <= l <= n.
PolyMatrix koszul_matrix(std::span<const Poly> seq, std::size_t l);

// Entry-wise image of a matrix under phi^k.
PolyMatrix twist(const PolyMatrix& m, const Endo& phi, std::uint64_t k = 1);

// D_l: diagonal with entries Theta - prod_{j in J} t_j over the l-subsets J.
// l = 0 gives the 1x1 matrix (Theta - 1).
SkewMatrix twist_diagonal(const Endo& phi, std::span<const Poly> multipliers, std::size_t l);

// Finds X with X * M = B (X and B row vectors over S). The system is split by
// degree: a Z^n-multigrading when every nonzero entry of M is a single term,
// otherwise the standard Z-grading when the entries are homogeneous with
// consistent row/column shifts. Throws NonHomogeneous when neither grading
// exists and NoSolution when B is not in the row space of M.
std::vector<Poly> solve_right(const PolyMatrix& m, std::span<const Poly> b);

}  // namespace skoszul
