#include "wvg/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "wvg/error.hpp"

namespace wvg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Parse: return "Parse";
    case Errc::InvalidRepresentation: return "InvalidRepresentation";
    case Errc::InvalidGame: return "InvalidGame";
    case Errc::TooManyPlayers: return "TooManyPlayers";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EpsilonTooLarge: return "EpsilonTooLarge";
    case Errc::MalformedProgram: return "MalformedProgram";
    case Errc::NotInPolytope: return "NotInPolytope";
    case Errc::NotWeighted: return "NotWeighted";
    case Errc::EmptyPolytope: return "EmptyPolytope";
    case Errc::BudgetZero: return "BudgetZero";
    case Errc::AnchorNotStrict: return "AnchorNotStrict";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::BadParameters: return "BadParameters";
    case Errc::GamesDiffer: return "GamesDiffer";
    case Errc::NotEfficient: return "NotEfficient";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

void Rational::set(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw Error(Errc::OutOfRange, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw Error(Errc::Parse, "not a rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text), mpz_class(1));
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
    throw Error(Errc::Parse, "not a rational: '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num_text), den);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int significant_digits) const {
  mpf_class f(value_, 256);
  std::ostringstream os;
  os.precision(significant_digits);
  os << f;
  return os.str();
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::OutOfRange, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational sum(std::span<const Rational> values) {
  mpq_class acc(0);
  for (const auto& v : values) acc += v.mpq();
  return Rational(acc);
}

Rational l1_distance(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "l1 distance of unequal lengths");
  mpq_class acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += ::abs(mpq_class(a[i].mpq() - b[i].mpq()));
  return Rational(acc);
}

Rational linf_distance(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "linf distance of unequal lengths");
  mpq_class best(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpq_class d = ::abs(mpq_class(a[i].mpq() - b[i].mpq()));
    if (d > best) best = d;
  }
  return Rational(best);
}

std::vector<std::string> to_strings(std::span<const Rational> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

RationalVector parse_rationals(std::span<const std::string> texts) {
  RationalVector out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(Rational::parse(t));
  return out;
}

}  // namespace wvg
