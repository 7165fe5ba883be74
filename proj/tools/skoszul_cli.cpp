#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "skoszul/error.hpp"
#include "skoszul/fedder.hpp"
#include "skoszul/parallel.hpp"
#include "skoszul/phi_koszul.hpp"
#include "skoszul/random.hpp"
#include "skoszul/serialize.hpp"
#include "skoszul/text.hpp"

using namespace skoszul;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t n = 0;
  std::size_t vars = 0;
  std::string endo;
  std::string field;
  std::string sequence;
  std::string bounds = "2,4";
  std::string format = "text";
  std::string complex_file;
  std::string ideal;
  std::size_t samples = 100;
  std::size_t level = 0;
  std::uint64_t seed = 0;
  std::uint32_t p = 0;
  std::uint64_t emax = 2;
  bool assert_flat = false;
};

TruncationBounds parse_bounds(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--bounds expects E,d");
  try {
    std::size_t used = 0;
    const auto e = std::stoull(text.substr(0, comma), &used);
    if (used != comma) throw UsageError("--bounds expects E,d");
    const auto rest = text.substr(comma + 1);
    const auto d = std::stoull(rest, &used);
    if (used != rest.size()) throw UsageError("--bounds expects E,d");
    return TruncationBounds{e, d};
  } catch (const std::logic_error&) {
    throw UsageError("--bounds expects nonnegative integers E,d, got '" + text + "'");
  }
}

Field field_for(const Options& o) {
  if (!o.field.empty()) return Field::from_descriptor(o.field);
  if (o.endo.rfind("frobenius:", 0) == 0) {
    const auto at = o.endo.find("p=");
    if (at != std::string::npos) return Field::from_descriptor("gf:" + o.endo.substr(at + 2, o.endo.find(',', at) - at - 2));
  }
  return Field::rationals();
}

PhiKoszulComplex complex_for(const Options& o) {
  if (!o.complex_file.empty()) {
    std::ifstream in(o.complex_file);
    if (!in) throw UsageError("--complex: cannot read '" + o.complex_file + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw UsageError("--complex: " + std::string(e.what()));
    }
    return complex_from_json(j);
  }
  if (o.n == 0) throw UsageError("--n is required (n >= 1)");
  if (o.endo.empty()) throw UsageError("--endo is required");
  const PolyRing ring{field_for(o), o.vars ? o.vars : o.n};
  const Endo phi = parse_endo(o.endo, ring, o.assert_flat);
  std::optional<std::vector<Poly>> seq;
  if (!o.sequence.empty()) seq = parse_poly_list(o.sequence, ring, ';');
  return build_phi_koszul(o.n, phi, std::move(seq));
}

void print_report_text(std::ostream& out, const Report& r) {
  out << "[" << r.title << "]\n";
  for (const auto& c : r.checks) {
    out << "  " << c.name << ": " << to_string(c.status);
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
}

void print_complex_text(std::ostream& out, const PhiKoszulComplex& c) {
  out << "field " << c.ring().field.descriptor() << ", endo " << format_endo(c.endo()) << ", n = " << c.n() << "\n";
  out << "ranks";
  for (std::size_t l = 0; l <= c.n() + 1; ++l) out << " " << c.rank(l);
  out << "\n";
  for (std::size_t l = c.n() + 1; l >= 1; --l) {
    const SkewMatrix& d = c.differential(l);
    out << "d_" << l << " (" << d.rows() << " x " << d.cols() << ")\n";
    const auto labels = c.basis_labels(l);
    for (std::size_t r = 0; r < d.rows(); ++r) {
      out << "  " << labels[r] << ": [";
      for (std::size_t k = 0; k < d.cols(); ++k) out << (k ? ", " : "") << format_skew(d.at(r, k));
      out << "]\n";
    }
  }
}

int run_build(const Options& o) {
  const auto c = complex_for(o);
  if (o.format == "json") std::cout << to_json(c).dump(2) << "\n";
  else print_complex_text(std::cout, c);
  return kPass;
}

int run_verify(const Options& o) {
  const auto c = complex_for(o);
  std::vector<Report> reports{verify_phi_koszul(c, parse_bounds(o.bounds)), ses_verify(c)};
  if (generates_monomial_ideal(c.sequence())) reports.push_back(h0_check(c, o.samples, o.seed));
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.all_passed();
  if (o.format == "json") {
    Json out;
    out["field"] = c.ring().field.descriptor();
    out["endo"] = format_endo(c.endo());
    out["n"] = c.n();
    out["passed"] = passed;
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    out["reports"] = std::move(list);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(std::cout, r);
    std::cout << (passed ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return passed ? kPass : kFail;
}

int run_lift(const Options& o) {
  const auto c = complex_for(o);
  const auto bounds = parse_bounds(o.bounds);
  std::vector<std::size_t> levels;
  if (o.level) {
    if (o.level > c.n()) throw UsageError("--level must lie in 1.." + std::to_string(c.n()));
    levels.push_back(o.level);
  } else {
    for (std::size_t l = 1; l <= c.n(); ++l) levels.push_back(l);
  }
  Report report;
  report.title = "lift";
  Json witnesses = Json::array();
  Rng rng(o.seed);
  const RandomShape shape{3, 3, 2};
  for (auto l : levels) {
    std::vector<SkewMatrix> boundaries;
    for (std::size_t s = 0; s < o.samples; ++s)
      boundaries.push_back(random_matrix(c.endo(), rng, 1, c.rank(l + 1), shape) * c.differential(l + 1));
    std::vector<std::pair<std::string, std::vector<SkewMatrix>>> batches{{"boundaries", std::move(boundaries)}};
    if (c.ring().field.is_finite())
      batches.emplace_back("kernel cycles", sample_cycles(c, l, bounds, o.samples, o.seed + l));
    else
      report.skip("kernel cycles l=" + std::to_string(l), "cycle sampling needs an F_p field");
    for (const auto& [name, batch] : batches) {
      std::size_t ok = 0;
      std::string detail;
      for (const auto& p : batch) {
        try {
          const auto w = lift_cycle(c, l, p);
          if (w.verified) ++ok;
          if (o.format == "json" && &p == &batch.front())
            witnesses.push_back(to_json(w));
        } catch (const Error& e) {
          if (detail.empty()) detail = e.what();
        }
      }
      report.add(name + " l=" + std::to_string(l), ok == batch.size(),
                 std::to_string(ok) + "/" + std::to_string(batch.size()) + " lifted" + (detail.empty() ? "" : "; " + detail));
    }
  }
  if (o.format == "json") {
    Json out = to_json(report);
    out["examples"] = std::move(witnesses);
    std::cout << out.dump(2) << "\n";
  } else {
    print_report_text(std::cout, report);
  }
  return report.all_passed() ? kPass : kFail;
}

int run_fedder(const Options& o) {
  if (o.ideal.empty()) throw UsageError("--ideal is required");
  std::uint32_t p = o.p;
  if (!o.field.empty()) {
    const Field f = Field::from_descriptor(o.field);
    if (f.is_rational()) throw UsageError("--field must be gf:<p> for Frobenius pieces");
    if (p && p != f.characteristic()) throw UsageError("--p and --field disagree");
    p = f.characteristic();
  }
  if (!p) throw UsageError("--p or --field gf:<p> is required");
  const std::size_t nvars = o.vars ? o.vars : infer_nvars(o.ideal);
  if (nvars == 0) throw UsageError("--ideal mentions no variables; pass --vars");
  const auto ideal = parse_monomial_ideal(o.ideal, nvars);
  const auto r = generation_check(ideal, p, o.emax);
  if (o.format == "json") {
    Json out;
    out["ideal"] = to_json(ideal);
    out["nvars"] = nvars;
    const Json report = to_json(r);
    for (const auto& [k, v] : report.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "I = " << format_ideal(ideal) << ", p = " << p << "\n";
    for (const auto& level : r.levels) {
      std::cout << "e = " << level.e << ": colon " << format_ideal(level.piece.colon_ideal) << ", generators";
      for (const auto& g : level.piece.socle_generators) std::cout << " " << format_monomial(g);
      std::cout << ", J_e " << (level.equal ? "matches" : "differs") << "\n";
    }
    std::cout << "degree-one generated up to e = " << r.e_max << ": " << (r.degree_one_generated ? "yes" : "no") << "\n";
    std::cout << "principal degree-one piece: " << (r.u ? format_monomial(*r.u) : std::string("no")) << "\n";
    std::cout << "skew form A[u Theta; F] up to e = " << r.e_max << ": " << (r.skew_form ? "yes" : "no") << "\n";
    print_report_text(std::cout, r.checks);
  }
  return r.checks.all_passed() ? kPass : kFail;
}

bool is_usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidField:
    case ErrorCode::CharacteristicMismatch:
    case ErrorCode::ArityMismatch:
    case ErrorCode::NotStructural:
    case ErrorCode::EmptySequence:
    case ErrorCode::LevelOutOfRange:
    case ErrorCode::DegenerateIdeal:
    case ErrorCode::InvalidExponent:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::NonMonomialSequence:
    case ErrorCode::FieldUnsupported:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();
  CLI::App app{"Skew polynomial Koszul complexes and Frobenius pieces"};
  app.require_subcommand(1);
  Options o;

  auto complex_flags = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Length of the sequence");
    sub->add_option("--vars", o.vars, "Number of ring variables (default n)");
    sub->add_option("--endo", o.endo, "frobenius:p=<p>,e=<e> | power:t=<t> | custom:<s1>;...");
    sub->add_option("--field", o.field, "gf:<p> or q");
    sub->add_option("--sequence", o.sequence, "Custom sequence y1;y2;... (default the variables)");
    sub->add_flag("--assert-flat", o.assert_flat, "Assert flatness of a custom endomorphism");
    sub->add_option("--complex", o.complex_file, "Read the complex from a JSON file written by build");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", o.seed, "Seed for sampling (default 0)");
  };

  auto* build = app.add_subcommand("build", "Print the differentials");
  complex_flags(build);
  auto* verify = app.add_subcommand("verify", "Check the identities of the complex");
  complex_flags(verify);
  verify->add_option("--bounds", o.bounds, "Truncation E,d for the injectivity check");
  verify->add_option("--samples", o.samples, "Random samples for the H_0 check");
  auto* lift = app.add_subcommand("lift", "Lift sampled cycles through the next differential");
  complex_flags(lift);
  lift->add_option("--level", o.level, "Level l (default all 1..n)");
  lift->add_option("--bounds", o.bounds, "Truncation E,d for kernel sampling");
  lift->add_option("--samples", o.samples, "Cycles per batch");
  auto* fedder = app.add_subcommand("fedder", "Frobenius pieces of a monomial ideal");
  fedder->add_option("--ideal", o.ideal, "Comma-separated monomials, e.g. \"x*y, y*z\"");
  fedder->add_option("--p", o.p, "Prime");
  fedder->add_option("--emax", o.emax, "Largest level to compute (>= 2)");
  fedder->add_option("--field", o.field, "gf:<p>");
  fedder->add_option("--vars", o.vars, "Number of variables (default inferred)");
  fedder->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*build) return run_build(o);
    if (*verify) return run_verify(o);
    if (*lift) return run_lift(o);
    if (*fedder) return run_fedder(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << (is_usage_code(e.code()) ? "usage error: " : "error: ") << e.what() << "\n";
    return is_usage_code(e.code()) ? kUsage : kFail;
  }
  return kUsage;
}
