#include "skoszul/serialize.hpp"

#include "skoszul/error.hpp"
#include "skoszul/text.hpp"

namespace skoszul {

namespace {

Json coefficient_json(const Field& field, const Scalar& c) {
  if (field.is_finite()) return c.residue();
  return field.format(c);
}

Scalar coefficient_from_json(const Json& j, const Field& field) {
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  if (j.is_string()) return field.parse(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "coefficient must be an integer or a \"p/q\" string");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ParseError, what);
}

}  // namespace

Json to_json(const Monomial& m) {
  Json out = Json::array();
  for (auto e : m.exponents()) out.push_back(e);
  return out;
}

Json to_json(const Poly& f) {
  Json out = Json::array();
  for (const auto& t : f.terms()) out.push_back(Json::array({coefficient_json(f.ring().field, t.coeff), to_json(t.monomial)}));
  return out;
}

Poly poly_from_json(const Json& j, const PolyRing& ring) {
  require(j.is_array(), "polynomial must be a list of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    require(t.is_array() && t.size() == 2 && t[1].is_array() && t[1].size() == ring.nvars, "malformed term");
    std::vector<Exponent> exps;
    for (const auto& e : t[1]) {
      require(e.is_number_unsigned(), "exponents must be nonnegative integers");
      exps.push_back(e.get<Exponent>());
    }
    terms.push_back(Term{Monomial(std::move(exps)), coefficient_from_json(t[0], ring.field)});
  }
  return Poly::from_terms(ring, std::move(terms));
}

Json to_json(const SkewPoly& a) {
  Json out = Json::array();
  for (std::size_t e = 0; e < a.coefficients().size(); ++e)
    if (!a.coefficients()[e].is_zero()) out.push_back(Json::array({e, to_json(a.coefficients()[e])}));
  return out;
}

SkewPoly skew_from_json(const Json& j, const Endo& endo) {
  require(j.is_array(), "skew polynomial must be a list of [e, poly] pairs");
  SkewPoly out(endo);
  for (const auto& piece : j) {
    require(piece.is_array() && piece.size() == 2 && piece[0].is_number_unsigned(), "malformed [e, poly] pair");
    out += SkewPoly(endo, poly_from_json(piece[1], endo.ring()), piece[0].get<std::uint64_t>());
  }
  return out;
}

Json to_json(const SkewMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

SkewMatrix matrix_from_json(const Json& j, const Endo& endo, std::size_t rows, std::size_t cols) {
  require(j.is_array() && j.size() == rows, "matrix has the wrong number of rows");
  SkewMatrix m(endo, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require(j[r].is_array() && j[r].size() == cols, "matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = skew_from_json(j[r][c], endo);
  }
  return m;
}

Json to_json(const MonomialIdeal& i) {
  Json out = Json::array();
  for (const auto& g : i.generators()) out.push_back(to_json(g));
  return out;
}

Json to_json(const PhiKoszulComplex& c) {
  Json out;
  out["field"] = c.ring().field.descriptor();
  out["endo"] = format_endo(c.endo());
  out["flatness_asserted"] = c.endo().flatness_asserted();
  out["n"] = c.n();
  out["nvars"] = c.ring().nvars;
  out["default_sequence"] = c.default_sequence();
  Json seq = Json::array();
  for (const auto& y : c.sequence()) seq.push_back(to_json(y));
  out["sequence"] = std::move(seq);
  Json ranks = Json::array();
  for (std::size_t l = 0; l <= c.n() + 1; ++l) ranks.push_back(c.rank(l));
  out["ranks"] = std::move(ranks);
  Json diffs = Json::array();
  for (std::size_t l = c.n() + 1; l >= 1; --l) {
    const SkewMatrix& d = c.differential(l);
    Json entry;
    entry["level"] = l;
    entry["shape"] = Json::array({d.rows(), d.cols()});
    entry["source_basis"] = c.basis_labels(l);
    entry["target_basis"] = c.basis_labels(l - 1);
    entry["matrix"] = to_json(d);
    diffs.push_back(std::move(entry));
  }
  out["differentials"] = std::move(diffs);
  return out;
}

PhiKoszulComplex complex_from_json(const Json& j) {
  require(j.is_object(), "complex must be a JSON object");
  for (const char* key : {"field", "endo", "n", "nvars", "sequence", "differentials"})
    require(j.contains(key), std::string("complex is missing '") + key + "'");
  const PolyRing ring{Field::from_descriptor(j["field"].get<std::string>()), j["nvars"].get<std::size_t>()};
  const Endo endo = parse_endo(j["endo"].get<std::string>(), ring, j.value("flatness_asserted", true));
  const std::size_t n = j["n"].get<std::size_t>();
  std::optional<std::vector<Poly>> seq;
  if (!j.value("default_sequence", true)) {
    seq.emplace();
    for (const auto& y : j["sequence"]) seq->push_back(poly_from_json(y, ring));
  }
  PhiKoszulComplex c = build_phi_koszul(n, endo, std::move(seq));
  require(j["differentials"].is_array() && j["differentials"].size() == n + 1, "complex needs n + 1 differentials");
  for (const auto& d : j["differentials"]) {
    const std::size_t l = d.at("level").get<std::size_t>();
    const SkewMatrix& ref = c.differential(l);
    c.replace_differential(l, matrix_from_json(d.at("matrix"), endo, ref.rows(), ref.cols()));
  }
  return c;
}

Json to_json(const Report& r) {
  Json out;
  out["title"] = r.title;
  out["passed"] = r.all_passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["status"] = to_string(c.status);
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  return out;
}

Json to_json(const CycleWitness& w) {
  Json out;
  out["level"] = w.level;
  out["verified"] = w.verified;
  out["cycle"] = to_json(w.cycle);
  out["preimage"] = to_json(w.preimage);
  return out;
}

Json to_json(const GenerationReport& r) {
  Json out;
  out["p"] = r.p;
  out["e_max"] = r.e_max;
  Json levels = Json::array();
  for (const auto& level : r.levels) {
    Json entry;
    entry["e"] = level.e;
    entry["bracket"] = to_json(level.piece.bracket);
    entry["colon"] = to_json(level.piece.colon_ideal);
    Json socle = Json::array();
    for (const auto& g : level.piece.socle_generators) socle.push_back(to_json(g));
    entry["generators"] = std::move(socle);
    entry["generated"] = to_json(level.generated);
    entry["matches_colon"] = level.equal;
    levels.push_back(std::move(entry));
  }
  out["levels"] = std::move(levels);
  out["degree_one_generated"] = r.degree_one_generated;
  out["j1_principal"] = r.j1_principal;
  out["u"] = r.u ? to_json(*r.u) : Json(nullptr);
  out["skew_form"] = r.skew_form;
  out["horizon"] = "bounded: levels 1.." + std::to_string(r.e_max) + " only";
  out["checks"] = to_json(r.checks);
  return out;
}

}  // namespace skoszul
