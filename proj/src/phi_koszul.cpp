#include "skoszul/phi_koszul.hpp"

#include <map>
#include <tuple>

#include "skoszul/error.hpp"
#include "skoszul/linalg.hpp"
#include "skoszul/monomial_ideal.hpp"
#include "skoszul/parallel.hpp"
#include "skoszul/random.hpp"

namespace skoszul {

std::size_t PhiKoszulComplex::rank(std::size_t l) const {
  if (l > n() + 1) throw Error(ErrorCode::LevelOutOfRange, "module index " + std::to_string(l));
  return binomial(n(), l) + (l == 0 ? 0 : binomial(n(), l - 1));
}

const SkewMatrix& PhiKoszulComplex::differential(std::size_t l) const {
  if (l < 1 || l > n() + 1)
    throw Error(ErrorCode::LevelOutOfRange, "differential index " + std::to_string(l) + " outside [1, " +
                                                std::to_string(n() + 1) + "]");
  return differentials_[l - 1];
}

const PolyMatrix& PhiKoszulComplex::koszul(std::size_t l) const {
  if (l < 1 || l > n()) throw Error(ErrorCode::LevelOutOfRange, "Koszul level " + std::to_string(l));
  return koszul_[l - 1];
}

const PolyMatrix& PhiKoszulComplex::twisted_koszul(std::size_t l) const {
  if (l < 1 || l > n()) throw Error(ErrorCode::LevelOutOfRange, "Koszul level " + std::to_string(l));
  return twisted_koszul_[l - 1];
}

std::vector<std::string> PhiKoszulComplex::basis_labels(std::size_t l) const {
  rank(l);
  std::vector<std::string> out;
  for (const auto& s : subsets(n(), l)) out.push_back("e" + subset_label(s));
  if (l > 0)
    for (const auto& s : subsets(n(), l - 1)) out.push_back("e" + subset_label(s) + "^u");
  return out;
}

void PhiKoszulComplex::replace_differential(std::size_t l, SkewMatrix d) {
  const SkewMatrix& old = differential(l);
  if (d.rows() != old.rows() || d.cols() != old.cols())
    throw Error(ErrorCode::ShapeMismatch, "replacement differential has the wrong shape");
  if (!(d.endo() == endo_)) throw Error(ErrorCode::EndoMismatch, "replacement differential over another ring");
  differentials_[l - 1] = std::move(d);
}

PhiKoszulComplex build_phi_koszul(std::size_t n, const Endo& endo, std::optional<std::vector<Poly>> sequence) {
  if (n == 0) throw Error(ErrorCode::EmptySequence, "the complex needs n >= 1");
  const PolyRing& ring = endo.ring();
  PhiKoszulComplex c(endo);
  if (sequence) {
    if (sequence->size() != n)
      throw Error(ErrorCode::ArityMismatch, "sequence has " + std::to_string(sequence->size()) + " entries, n = " +
                                                std::to_string(n));
    for (const auto& y : *sequence) {
      require_same_ring(ring, y.ring());
      if (y.is_zero()) throw Error(ErrorCode::NotStructural, "sequence entries must be nonzero");
    }
    c.sequence_ = std::move(*sequence);
    c.default_sequence_ = false;
    for (const auto& y : c.sequence_) {
      try {
        c.twist_.push_back(divide_exact(endo.apply(y), y));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoSolution) throw;
        throw Error(ErrorCode::NotStructural, "phi(y) is not a multiple of y for a sequence entry");
      }
    }
  } else {
    if (n != ring.nvars)
      throw Error(ErrorCode::ArityMismatch, "the default sequence needs n = " + std::to_string(ring.nvars));
    for (std::size_t i = 0; i < n; ++i) c.sequence_.push_back(Poly::variable(ring, i));
    c.twist_ = endo.multipliers();
  }

  for (std::size_t l = 1; l <= n; ++l) {
    c.koszul_.push_back(koszul_matrix(c.sequence_, l));
    c.twisted_koszul_.push_back(twist(c.koszul_.back(), endo));
  }

  // d_{l+1} = [[M_{l+1}, 0], [(-1)^l D_l, M_l^phi]] for 0 <= l <= n, where
  // M_{n+1} has no rows and M_0 no columns.
  for (std::size_t l = 0; l <= n; ++l) {
    const std::size_t top = binomial(n, l + 1), mid = binomial(n, l), right = l == 0 ? 0 : binomial(n, l - 1);
    SkewMatrix d(endo, top + mid, mid + right);
    if (l + 1 <= n) d.set_block(0, 0, SkewMatrix::from_poly_matrix(endo, c.koszul_[l]));
    SkewMatrix diag = twist_diagonal(endo, c.twist_, l);
    d.set_block(top, 0, l % 2 == 0 ? diag : -diag);
    if (l >= 1) d.set_block(top, mid, SkewMatrix::from_poly_matrix(endo, c.twisted_koszul_[l - 1]));
    c.differentials_.push_back(std::move(d));
  }
  return c;
}

namespace {

std::string level_name(const std::string& base, std::size_t l) { return base + " l=" + std::to_string(l); }

SkewMatrix signed_matrix(const SkewMatrix& m, std::size_t exponent) { return exponent % 2 == 0 ? m : -m; }

}  // namespace

Report verify_phi_koszul(const PhiKoszulComplex& c, TruncationBounds bounds) {
  Report report;
  report.title = "verify";
  const std::size_t n = c.n();

  std::vector<char> chain_ok(n), lemma_ok(n);
  parallel_for(n, [&](std::size_t i) {
    const std::size_t l = i + 1;
    chain_ok[i] = (c.differential(l + 1) * c.differential(l)).is_zero();

    const SkewMatrix& up = c.differential(l + 1);
    const SkewMatrix& down = c.differential(l);
    const std::size_t up_top = binomial(n, l + 1), wl = binomial(n, l), wl1 = binomial(n, l - 1);
    const SkewMatrix twisted = up.block(up_top, up.rows(), wl, up.cols());
    const SkewMatrix d_l = signed_matrix(up.block(up_top, up.rows(), 0, wl), l);
    const SkewMatrix m_l = down.block(0, wl, 0, wl1);
    const SkewMatrix d_prev = signed_matrix(down.block(wl, down.rows(), 0, wl1), l - 1);
    lemma_ok[i] = twisted * d_prev == d_l * m_l;
  });
  for (std::size_t l = 1; l <= n; ++l) report.add(level_name("chain", l), chain_ok[l - 1] != 0);
  for (std::size_t l = 1; l <= n; ++l) report.add(level_name("lemma", l), lemma_ok[l - 1] != 0);

  bool ranks_ok = c.rank(0) == 1 && c.rank(n + 1) == 1;
  std::string ranks = "(";
  for (std::size_t l = 0; l <= n + 1; ++l) {
    ranks += (l ? ", " : "") + std::to_string(c.rank(l));
    ranks_ok = ranks_ok && c.rank(l) == binomial(n, l) + (l ? binomial(n, l - 1) : 0);
    if (l >= 1) {
      const SkewMatrix& d = c.differential(l);
      ranks_ok = ranks_ok && d.rows() == c.rank(l) && d.cols() == c.rank(l - 1);
    }
  }
  report.add("ranks", ranks_ok, ranks + ")");

  if (c.ring().field.is_finite()) {
    const auto kernel = truncated_kernel(c.differential(n + 1), bounds);
    report.add("injectivity", kernel.empty(),
               "kernel dimension " + std::to_string(kernel.size()) + " at Theta-degree <= " +
                   std::to_string(bounds.theta_degree) + ", degree <= " + std::to_string(bounds.poly_degree));
  } else {
    report.skip("injectivity", "truncated kernels are computed over F_p only");
  }
  return report;
}

Report h0_check(const PhiKoszulComplex& c, std::size_t samples, std::uint64_t seed) {
  const MonomialIdeal ideal = monomial_ideal_of(c.sequence());
  const Endo& phi = c.endo();
  const SkewMatrix& d1 = c.differential(1);
  Report report;
  report.title = "h0";

  bool gens_ok = true;
  for (std::size_t r = 0; r < d1.rows(); ++r) gens_ok = gens_ok && reduce_mod(augment(d1.at(r, 0)), ideal).is_zero();
  report.add("generators", gens_ok, "augmented entries of d_1 reduce to 0 modulo I_n");

  Rng rng(seed);
  const RandomShape shape{3, 3, 2};
  bool image_ok = true, theta_ok = true, section_ok = true;
  const SkewPoly theta_minus_one = SkewPoly::theta(phi) - SkewPoly::constant(phi, 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const SkewMatrix q = random_matrix(phi, rng, 1, d1.rows(), shape);
    image_ok = image_ok && reduce_mod(augment((q * d1).at(0, 0)), ideal).is_zero();
    theta_ok = theta_ok && augment(random_skew(phi, rng, shape) * theta_minus_one).is_zero();
    const Poly f = random_poly(c.ring(), rng, shape);
    section_ok = section_ok && augment(SkewPoly(phi, f)) == f;
  }
  report.add("image", image_ok, std::to_string(samples) + " random elements of im d_1");
  report.add("theta-minus-one", theta_ok, std::to_string(samples) + " left multiples of Theta - 1");
  report.add("section", section_ok, std::to_string(samples) + " Theta-degree 0 elements fixed");
  return report;
}

SkewMatrix ses_inclusion(const PhiKoszulComplex& c, std::size_t l) {
  const std::size_t w = c.wedge_rank(l);
  SkewMatrix m(c.endo(), w, c.rank(l));
  for (std::size_t i = 0; i < w; ++i) m.at(i, i) = SkewPoly::constant(c.endo(), 1);
  return m;
}

SkewMatrix ses_projection(const PhiKoszulComplex& c, std::size_t l) {
  const std::size_t w = c.wedge_rank(l), rest = c.rank(l) - w;
  SkewMatrix m(c.endo(), c.rank(l), rest);
  for (std::size_t i = 0; i < rest; ++i) m.at(w + i, i) = SkewPoly::constant(c.endo(), 1);
  return m;
}

SkewMatrix shifted_twisted_differential(const PhiKoszulComplex& c, std::size_t l) {
  if (l < 1 || l > c.n() + 1) throw Error(ErrorCode::LevelOutOfRange, "shifted level " + std::to_string(l));
  if (l == 1) return SkewMatrix(c.endo(), 1, 0);
  return SkewMatrix::from_poly_matrix(c.endo(), c.twisted_koszul(l - 1));
}

namespace {

// d'_l : K'_l -> K'_{l-1}, the untwisted Koszul differential on the e_J.
SkewMatrix wedge_differential(const PhiKoszulComplex& c, std::size_t l) {
  if (l == c.n() + 1) return SkewMatrix(c.endo(), 0, c.wedge_rank(c.n()));
  return SkewMatrix::from_poly_matrix(c.endo(), c.koszul(l));
}

}  // namespace

Report ses_verify(const PhiKoszulComplex& c) {
  const std::size_t n = c.n();
  Report report;
  report.title = "ses";
  bool incl = true, proj = true, zero = true, ranks = true, target = true;
  for (std::size_t l = 1; l <= n + 1; ++l) {
    incl = incl && ses_inclusion(c, l) * c.differential(l) == wedge_differential(c, l) * ses_inclusion(c, l - 1);
    proj = proj && c.differential(l) * ses_projection(c, l - 1) ==
                       ses_projection(c, l) * shifted_twisted_differential(c, l);
    if (l >= 2) target = target && (shifted_twisted_differential(c, l) * shifted_twisted_differential(c, l - 1)).is_zero();
  }
  for (std::size_t l = 0; l <= n + 1; ++l) {
    const SkewMatrix i = ses_inclusion(c, l), p = ses_projection(c, l);
    zero = zero && (i * p).is_zero();
    ranks = ranks && c.rank(l) == i.rows() + p.cols();
  }
  report.add("inclusion chain map", incl);
  report.add("projection chain map", proj);
  report.add("composite zero", zero);
  report.add("rank additivity", ranks);
  report.add("shifted complex", target, "shifted twisted Koszul differentials compose to 0");
  return report;
}

namespace {

std::vector<Poly> theta_slice(const SkewMatrix& row, std::size_t from, std::size_t to, std::uint64_t e) {
  std::vector<Poly> out;
  for (std::size_t j = from; j < to; ++j) out.push_back(row.at(0, j).coeff(e));
  return out;
}

long long max_theta_degree(const SkewMatrix& row, std::size_t from, std::size_t to) {
  long long deg = -1;
  for (std::size_t j = from; j < to; ++j) deg = std::max(deg, row.at(0, j).theta_degree());
  return deg;
}

// Solves X * m_e = b per Theta-degree e, with m_e the matrix for degree e, and
// returns sum_e X_e Theta^e as entries [0, rows).
std::vector<SkewPoly> solve_by_degree(const Endo& phi, const PolyMatrix& base, const SkewMatrix& rhs,
                                      std::size_t from, std::size_t to) {
  std::vector<SkewPoly> out(base.rows(), SkewPoly(phi));
  const long long top = max_theta_degree(rhs, from, to);
  for (long long e = 0; e <= top; ++e) {
    const auto b = theta_slice(rhs, from, to, static_cast<std::uint64_t>(e));
    const PolyMatrix m = twist(base, phi, static_cast<std::uint64_t>(e));
    std::vector<Poly> x;
    try {
      x = solve_right(m, b);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NoSolution) throw;
      throw Error(ErrorCode::InvariantViolation, "lifting step has no solution at Theta-degree " + std::to_string(e) +
                                                     "; the sequence may not be Koszul-regular");
    }
    for (std::size_t r = 0; r < x.size(); ++r)
      if (!x[r].is_zero()) out[r] += SkewPoly(phi, std::move(x[r]), static_cast<std::uint64_t>(e));
  }
  return out;
}

}  // namespace

CycleWitness lift_cycle(const PhiKoszulComplex& c, std::size_t l, const SkewMatrix& p) {
  const std::size_t n = c.n();
  if (l < 1 || l > n) throw Error(ErrorCode::LevelOutOfRange, "cycles are lifted at levels 1..n");
  if (p.rows() != 1 || p.cols() != c.rank(l))
    throw Error(ErrorCode::ShapeMismatch, "cycle must be a 1 x " + std::to_string(c.rank(l)) + " row");
  const Endo& phi = c.endo();
  if (!(p.endo() == phi)) throw Error(ErrorCode::EndoMismatch, "cycle over another skew ring");
  if (!(p * c.differential(l)).is_zero()) throw Error(ErrorCode::NotACycle, "P * d_l is not zero");

  const std::size_t wl = c.wedge_rank(l);
  // Q'' M_l^phi = P'', solved against the Koszul matrix of phi^{e+1}(y) in degree e.
  const auto q2 = solve_by_degree(phi, c.twisted_koszul(l), p, wl, p.cols());
  SkewMatrix q2_row = SkewMatrix::row_vector(phi, q2);
  const SkewMatrix r = p.block(0, 1, 0, wl) + signed_matrix(q2_row * twist_diagonal(phi, c.twist_multipliers(), l), l - 1);

  std::vector<SkewPoly> q;
  if (l == n) {
    if (!r.is_zero()) throw Error(ErrorCode::InvariantViolation, "top-level remainder is nonzero");
  } else {
    q = solve_by_degree(phi, c.koszul(l + 1), r, 0, r.cols());
  }
  q.insert(q.end(), q2.begin(), q2.end());
  SkewMatrix preimage = SkewMatrix::row_vector(phi, std::move(q));
  if (!(preimage * c.differential(l + 1) == p))
    throw Error(ErrorCode::InvariantViolation, "lifted preimage does not map to the cycle");
  return CycleWitness{l, p, std::move(preimage), true};
}

std::vector<CycleWitness> lift_cycles(const PhiKoszulComplex& c, std::size_t l, std::span<const SkewMatrix> ps) {
  std::vector<std::optional<CycleWitness>> slots(ps.size());
  parallel_for(ps.size(), [&](std::size_t i) { slots[i] = lift_cycle(c, l, ps[i]); });
  std::vector<CycleWitness> out;
  out.reserve(ps.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<CycleWitness> lift_cycles_serial(const PhiKoszulComplex& c, std::size_t l,
                                             std::span<const SkewMatrix> ps) {
  std::vector<CycleWitness> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(lift_cycle(c, l, p));
  return out;
}

namespace {

struct EquationKey {
  std::size_t col;
  std::uint64_t theta;
  Monomial monomial;
};

struct EquationKeyLess {
  bool operator()(const EquationKey& a, const EquationKey& b) const {
    if (a.col != b.col) return a.col < b.col;
    if (a.theta != b.theta) return a.theta < b.theta;
    return grlex_compare(a.monomial, b.monomial) < 0;
  }
};

}  // namespace

std::vector<SkewMatrix> truncated_kernel(const SkewMatrix& d, TruncationBounds bounds) {
  const Endo& phi = d.endo();
  const PolyRing& ring = phi.ring();
  if (!ring.field.is_finite()) throw Error(ErrorCode::FieldUnsupported, "truncated kernels need an F_p field");
  const auto monos = monomials_up_to_degree(ring.nvars, bounds.poly_degree);
  const std::size_t per_theta = monos.size(), per_row = per_theta * (bounds.theta_degree + 1);
  LinearSystem system(ring.field, d.rows() * per_row);

  std::map<EquationKey, SparseVector, EquationKeyLess> equations;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::uint64_t e = 0; e <= bounds.theta_degree; ++e)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        const auto& coeffs = d.at(r, c).coefficients();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
          if (coeffs[k].is_zero()) continue;
          // (x^mu Theta^e)(g Theta^k) = x^mu phi^e(g) Theta^{e+k}
          const Poly g = phi.apply(coeffs[k], e);
          for (std::size_t mi = 0; mi < per_theta; ++mi) {
            const std::size_t unknown = r * per_row + e * per_theta + mi;
            for (const auto& t : g.terms())
              equations[EquationKey{c, e + k, monos[mi] * t.monomial}].emplace_back(unknown, t.coeff);
          }
        }
      }
  for (auto& [key, row] : equations) system.add_equation(std::move(row));

  std::vector<SkewMatrix> basis;
  for (const auto& v : system.nullspace()) {
    std::vector<std::vector<std::vector<Term>>> terms(d.rows(), std::vector<std::vector<Term>>(bounds.theta_degree + 1));
    for (const auto& [u, coeff] : v) {
      const std::size_t r = u / per_row, e = (u % per_row) / per_theta, mi = u % per_theta;
      terms[r][e].push_back(Term{monos[mi], coeff});
    }
    std::vector<SkewPoly> entries;
    for (std::size_t r = 0; r < d.rows(); ++r) {
      SkewPoly entry(phi);
      for (std::uint64_t e = 0; e <= bounds.theta_degree; ++e)
        if (!terms[r][e].empty()) entry += SkewPoly(phi, Poly::from_terms(ring, std::move(terms[r][e])), e);
      entries.push_back(std::move(entry));
    }
    basis.push_back(SkewMatrix::row_vector(phi, std::move(entries)));
  }
  return basis;
}

std::vector<SkewMatrix> sample_cycles(const PhiKoszulComplex& c, std::size_t l, TruncationBounds bounds,
                                      std::size_t count, std::uint64_t seed) {
  if (!c.ring().field.is_finite()) throw Error(ErrorCode::FieldUnsupported, "cycle sampling needs an F_p field");
  if (l < 1 || l > c.n() + 1) throw Error(ErrorCode::LevelOutOfRange, "cycle level " + std::to_string(l));
  if (count == 0) return {};
  const auto basis = truncated_kernel(c.differential(l), bounds);
  const Field& field = c.ring().field;
  Rng rng(seed);
  std::vector<SkewMatrix> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    SkewMatrix v(c.endo(), 1, c.rank(l));
    for (const auto& b : basis) {
      const Scalar a = field.from_int(static_cast<long long>(rng.below(field.characteristic())));
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < v.cols(); ++j) {
        SkewPoly scaled(c.endo());
        for (std::size_t e = 0; e < b.at(0, j).coefficients().size(); ++e)
          scaled += SkewPoly(c.endo(), b.at(0, j).coefficients()[e].scaled(a), e);
        v.at(0, j) += scaled;
      }
    }
    if (!(v * c.differential(l)).is_zero())
      throw Error(ErrorCode::InvariantViolation, "sampled vector is not a cycle");
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace skoszul
