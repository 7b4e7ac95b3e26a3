#include "newton_mu/polynomial.hpp"
#include "newton_mu/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace newton_mu {

namespace {

const std::set<std::string> kParameters = {"t", "s", "gamma", "\xCE\xB3"};

struct Factor {
  std::string name;
  std::int64_t power = 1;
  std::size_t pos = 0;
};

struct RawTerm {
  Rational coef = 1;
  std::vector<Factor> vars;
  bool symbolic = false;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>& declared) : t_(text), declared_(declared) {}

  std::vector<RawTerm> parse() {
    skip_ws();
    if (pos_ == t_.size()) throw ParseError("empty input", pos_);
    std::vector<RawTerm> terms;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    for (;;) {
      RawTerm term = parse_term();
      term.coef *= sign;
      terms.push_back(std::move(term));
      skip_ws();
      if (pos_ == t_.size()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      sign = c == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    return std::string(t_.substr(start, pos_ - start));
  }

  RawTerm parse_term() {
    RawTerm term;
    for (;;) {
      parse_factor(term);
      skip_ws();
      if (peek() != '*') return term;
      ++pos_;
      skip_ws();
    }
  }

  void parse_factor(RawTerm& term) {
    const std::size_t start = pos_;
    if (pos_ == t_.size()) throw ParseError("expected a term", pos_);
    const unsigned char c = static_cast<unsigned char>(peek());
    if (std::isdigit(c)) {
      const std::string num = digits();
      Rational value(Integer(num, 10));
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t dpos = pos_;
        const std::string den = digits();
        if (den.empty()) throw ParseError("expected a denominator", dpos);
        if (Integer(den, 10) == 0) throw ParseError("zero denominator", dpos);
        value = make_rational(Integer(num, 10), Integer(den, 10));
        skip_ws();
      }
      if (peek() == '^') throw ParseError("exponent on a numeric coefficient", pos_);
      term.coef *= value;
      return;
    }
    if (!ident_start(c)) throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", start);
    while (pos_ < t_.size() && ident_char(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    Factor f{std::string(t_.substr(start, pos_ - start)), 1, start};
    const std::size_t after = pos_;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t epos = pos_;
      const std::string e = digits();
      if (e.empty() || e.size() > 9) throw ParseError("malformed exponent", epos);
      f.power = std::stoll(e);
    } else {
      pos_ = after;
    }
    if (kParameters.count(f.name) && !declared_.count(f.name)) {
      term.symbolic = true;
      return;
    }
    term.vars.push_back(std::move(f));
  }

  std::string_view t_;
  const std::set<std::string>& declared_;
  std::size_t pos_ = 0;
};

bool indexed_name(const std::string& s) {
  return s.size() >= 2 && s[0] == 'z' && std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::vector<std::string> infer_alphabet(const std::vector<RawTerm>& terms) {
  bool indexed = false;
  std::size_t highest = 0;
  for (const auto& t : terms)
    for (const auto& f : t.vars)
      if (indexed_name(f.name) && f.name[1] != '0') {
        indexed = true;
        highest = std::max<std::size_t>(highest, std::stoul(f.name.substr(1)));
      }
  if (indexed) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= highest; ++i) out.push_back("z" + std::to_string(i));
    return out;
  }
  static const std::vector<std::string> kShort = {"x", "y", "z", "w"};
  std::size_t n = 1;
  for (const auto& t : terms)
    for (const auto& f : t.vars) {
      auto it = std::find(kShort.begin(), kShort.end(), f.name);
      if (it != kShort.end()) n = std::max<std::size_t>(n, static_cast<std::size_t>(it - kShort.begin()) + 1);
    }
  return {kShort.begin(), kShort.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  const std::set<std::string> declared(variables.begin(), variables.end());
  if (declared.size() != variables.size()) throw UsageError("duplicate variable name");
  const auto terms = Parser(text, declared).parse();
  const auto alphabet = variables.empty() ? infer_alphabet(terms) : variables;
  if (alphabet.size() > CoordinateSubset::kMaxDim) throw UsageError("too many variables");

  std::map<Exponent, std::pair<Rational, bool>> acc;
  for (const auto& t : terms) {
    Exponent e(alphabet.size(), 0);
    for (const auto& f : t.vars) {
      auto it = std::find(alphabet.begin(), alphabet.end(), f.name);
      if (it == alphabet.end()) throw ParseError("unknown variable '" + f.name + "'", f.pos);
      e[static_cast<std::size_t>(it - alphabet.begin())] += f.power;
    }
    auto& slot = acc[e];
    slot.first += t.coef;
    slot.second = slot.second || t.symbolic;
  }
  Polynomial p{SupportSet(alphabet, {Exponent(alphabet.size(), 0)}), {}, {}};
  std::vector<Exponent> pts;
  for (auto& [e, v] : acc) {
    if (v.first == 0 && !v.second) continue;
    pts.push_back(e);
    p.coefficients[e] = v.first == 0 ? Rational(1) : v.first;
    if (v.second) p.symbolic.push_back(e);
  }
  if (pts.empty()) throw ParseError("the polynomial is identically zero", 0);
  p.support = SupportSet(alphabet, std::move(pts));
  return p;
}

namespace {

std::string monomial_text(const SupportSet& s, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += s.variables()[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_text(const SupportSet& s) {
  std::string out;
  for (const auto& e : s.points()) {
    if (!out.empty()) out += " + ";
    const auto m = monomial_text(s, e);
    out += m.empty() ? "1" : m;
  }
  return out;
}

std::string to_text(const Polynomial& p) {
  std::string out;
  for (const auto& e : p.support.points()) {
    Rational c = p.coefficients.count(e) ? p.coefficients.at(e) : Rational(1);
    const bool symbolic = std::find(p.symbolic.begin(), p.symbolic.end(), e) != p.symbolic.end();
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string factors;
    if (c != 1) factors = to_string(c);
    if (symbolic) factors += std::string(factors.empty() ? "" : "*") + "t";
    const auto m = monomial_text(p.support, e);
    if (!m.empty()) factors += std::string(factors.empty() ? "" : "*") + m;
    out += factors.empty() ? "1" : factors;
  }
  return out;
}

Polynomial with_generic_coefficients(const SupportSet& s) {
  Polynomial p{s, {}, {}};
  long candidate = 2;
  for (const auto& e : s.points()) {
    for (;; ++candidate) {
      bool prime = true;
      for (long d = 2; d * d <= candidate && prime; ++d) prime = candidate % d != 0;
      if (prime) break;
    }
    p.coefficients[e] = candidate++;
  }
  return p;
}

}  // namespace newton_mu
