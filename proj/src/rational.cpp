#include "newton_mu/rational.hpp"
#include "newton_mu/errors.hpp"

#include <stdexcept>

namespace newton_mu {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("empty integer");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(trim(text.substr(0, slash)));
  const std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && den_text[0] == '-')
    throw std::invalid_argument("negative denominator in '" + std::string(text) + "'");
  return make_rational(num, parse_integer(den_text));
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

const char* DomainError::kind_name() const noexcept {
  switch (kind_) {
    case Kind::NotConvenient: return "not_convenient";
    case Kind::Containment: return "containment";
    case Kind::InvalidRegion: return "invalid_region";
    case Kind::Degenerate: return "degenerate";
    case Kind::Hypothesis: return "hypothesis";
    case Kind::Guardrail: return "guardrail";
    case Kind::NotStabilized: return "not_stabilized";
    case Kind::Inconsistent: return "inconsistent";
  }
  return "domain";
}

namespace {
std::string missing_axes_message(const std::vector<std::size_t>& axes) {
  std::string msg = "support is not convenient; no pure power on ";
  msg += axes.size() == 1 ? "axis " : "axes ";
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (i) msg += ",";
    msg += std::to_string(axes[i] + 1);
  }
  return msg + " (apply standard_modification)";
}
}  // namespace

NotConvenientError::NotConvenientError(std::vector<std::size_t> missing_axes)
    : DomainError(Kind::NotConvenient, missing_axes_message(missing_axes)),
      missing_(std::move(missing_axes)) {}

}  // namespace newton_mu
