#include "skoszul/text.hpp"

#include <cctype>
#include <charconv>

#include "skoszul/error.hpp"

namespace skoszul {

namespace {

int alias_index(char c) {
  switch (c) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    case 'w': return 3;
    default: return -1;
  }
}

std::uint64_t parse_unsigned(std::string_view s, const std::string& what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::ParseError, "bad " + what + " '" + std::string(s) + "'");
  return v;
}

class Parser {
 public:
  Parser(std::string_view text, const PolyRing& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly f = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Poly expression() {
    Poly f(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Poly t = term();
    f = negate ? -t : t;
    while (true) {
      if (accept('+')) f += term();
      else if (accept('-')) f -= term();
      else break;
    }
    return f;
  }

  Poly term() {
    Poly f = power();
    while (accept('*')) f *= power();
    return f;
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      const auto d = digits();
      if (d.empty()) fail("expected an exponent");
      base = base.pow(parse_unsigned(d, "exponent"));
    }
    return base;
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly f = expression();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num(digits());
      std::string literal = num;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const auto den = digits();
        if (den.empty()) fail("expected a denominator");
        literal += "/" + std::string(den);
      }
      return Poly::constant(ring_, ring_.field.parse(literal));
    }
    const int alias = alias_index(c);
    if (alias >= 0) {
      ++pos_;
      std::size_t index = 0;
      if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const auto k = parse_unsigned(text_.substr(start, pos_ - start), "variable index");
        if (k == 0 || k > ring_.nvars) fail("variable x" + std::to_string(k) + " outside x1..x" + std::to_string(ring_.nvars));
        index = k - 1;
      } else {
        if (ring_.nvars > 4) fail("the aliases x, y, z, w need at most 4 variables");
        index = static_cast<std::size_t>(alias);
        if (index >= ring_.nvars) fail("alias '" + std::string(1, c) + "' outside the ring");
      }
      return Poly::variable(ring_, index);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Coefficient text and whether it is negative, for sign-aware printing.
std::pair<std::string, bool> coefficient_text(const Field& field, const Scalar& c) {
  if (field.is_finite()) return {field.format(c), false};
  const mpq_class& q = c.rational();
  mpq_class a = abs(q);
  std::string s = a.get_den() == 1 ? a.get_num().get_str() : a.get_num().get_str() + "/" + a.get_den().get_str();
  return {s, sgn(q) < 0};
}

}  // namespace

Poly parse_poly(std::string_view text, const PolyRing& ring) { return Parser(text, ring).parse(); }

std::vector<Poly> parse_poly_list(std::string_view text, const PolyRing& ring, char separator) {
  std::vector<Poly> out;
  for (auto piece : split(text, separator)) out.push_back(parse_poly(trim(piece), ring));
  return out;
}

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto [coeff, negative] = coefficient_text(f.ring().field, t.coeff);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) out += coeff;
    else if (coeff == "1") out += format_monomial(t.monomial);
    else out += coeff + "*" + format_monomial(t.monomial);
  }
  return out;
}

std::string format_skew(const SkewPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t k = a.coefficients().size(); k-- > 0;) {
    const Poly& f = a.coefficients()[k];
    if (f.is_zero()) continue;
    const std::string theta = k == 1 ? "Theta" : "Theta^" + std::to_string(k);
    std::string piece;
    if (k == 0) piece = format_poly(f);
    else if (f.is_one()) piece = theta;
    else if ((-f).is_one()) piece = "-" + theta;
    else if (f.is_term()) piece = format_poly(f) + "*" + theta;
    else piece = "(" + format_poly(f) + ")*" + theta;
    if (out.empty()) out = piece;
    else if (piece.front() == '-' && (k == 0 ? f.is_term() : true)) out += " - " + piece.substr(1);
    else out += " + " + piece;
  }
  return out;
}

MonomialIdeal parse_monomial_ideal(std::string_view text, std::size_t nvars) {
  const PolyRing ring{Field::rationals(), nvars};
  std::vector<Monomial> gens;
  for (auto piece : split(text, ',')) {
    piece = trim(piece);
    if (piece.empty()) continue;
    const Poly f = parse_poly(piece, ring);
    if (f.is_zero()) continue;
    if (!f.is_term()) throw Error(ErrorCode::ParseError, "'" + std::string(piece) + "' is not a monomial");
    gens.push_back(f.leading_term().monomial);
  }
  return MonomialIdeal(nvars, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& i) {
  std::string out = "(";
  for (std::size_t k = 0; k < i.generators().size(); ++k) out += (k ? ", " : "") + format_monomial(i.generators()[k]);
  return out + ")";
}

std::size_t infer_nvars(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const int alias = alias_index(text[pos]);
    if (alias < 0) continue;
    if (text[pos] == 'x' && pos + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
      std::size_t end = pos + 1;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      best = std::max<std::size_t>(best, parse_unsigned(text.substr(pos + 1, end - pos - 1), "variable index"));
      pos = end - 1;
    } else {
      best = std::max<std::size_t>(best, static_cast<std::size_t>(alias) + 1);
    }
  }
  return best;
}

Endo parse_endo(std::string_view descriptor, const PolyRing& ring, bool assert_flat) {
  const std::size_t colon = descriptor.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "endomorphism descriptor needs a family prefix: '" + std::string(descriptor) + "'");
  const std::string_view family = descriptor.substr(0, colon), body = descriptor.substr(colon + 1);
  if (family == "custom") {
    auto mults = parse_poly_list(body, ring, ';');
    if (mults.size() != ring.nvars)
      throw Error(ErrorCode::ArityMismatch, "custom endomorphism needs " + std::to_string(ring.nvars) + " multipliers");
    return Endo::custom(ring, std::move(mults), assert_flat);
  }
  std::uint64_t p = 0, e = 0, t = 0;
  bool has_p = false, has_e = false, has_t = false;
  for (auto item : split(body, ',')) {
    item = trim(item);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + std::string(item) + "'");
    const auto key = trim(item.substr(0, eq));
    const auto value = parse_unsigned(trim(item.substr(eq + 1)), "value for " + std::string(key));
    if (key == "p") p = value, has_p = true;
    else if (key == "e") e = value, has_e = true;
    else if (key == "t") t = value, has_t = true;
    else throw Error(ErrorCode::ParseError, "unknown key '" + std::string(key) + "'");
  }
  if (family == "frobenius") {
    if (!has_p || has_t) throw Error(ErrorCode::ParseError, "frobenius needs p=<p>[,e=<e>]");
    if (!has_e) e = 1;
    if (e > UINT32_MAX || p > UINT32_MAX) throw Error(ErrorCode::ExponentOverflow, "frobenius parameters too large");
    return Endo::frobenius(ring, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
  }
  if (family == "power") {
    if (!has_t || has_p || has_e) throw Error(ErrorCode::ParseError, "power needs t=<t>");
    return Endo::power(ring, t);
  }
  throw Error(ErrorCode::ParseError, "unknown endomorphism family '" + std::string(family) + "'");
}

std::string format_endo(const Endo& phi) {
  switch (phi.family()) {
    case EndoFamily::Frobenius:
      return "frobenius:p=" + std::to_string(phi.frobenius_prime()) + ",e=" + std::to_string(phi.frobenius_exponent());
    case EndoFamily::Power:
      return "power:t=" + std::to_string(phi.power_exponent());
    case EndoFamily::Custom: {
      std::string out = "custom:";
      for (std::size_t i = 0; i < phi.multipliers().size(); ++i) out += (i ? ";" : "") + format_poly(phi.multipliers()[i]);
      return out;
    }
  }
  return "custom:";
}

}  // namespace skoszul
