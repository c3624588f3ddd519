#include "cohere/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "cohere/error.hpp"

namespace cohere {

ParseError::ParseError(const std::string& what, std::size_t column, std::size_t line)
    : Error(line == 0 ? "column " + std::to_string(column) + ": " + what
                      : "line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + what),
      message_(what),
      column_(column),
      line_(line) {}

UnknownAtomError::UnknownAtomError(const std::string& name)
    : Error("unknown atom '" + name + "'"), name_(name) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational", 1);

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed fraction '" + std::string(text) + "'", 1);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 2);
    result = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw ParseError("malformed decimal '" + std::string(text) + "'", 1);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    result = Rational(digits, scale);
  } else {
    if (!all_digits(s)) throw ParseError("malformed rational '" + std::string(text) + "'", 1);
    result = Rational(mpz_class(std::string(s), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale + Rational(1, 2);
  mpz_class rounded = scaled.get_num() / scaled.get_den();
  std::string body = rounded.get_str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  std::string out = (q < 0 && rounded != 0) ? "-" : "";
  out += body.substr(0, body.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + body.substr(body.size() - static_cast<std::size_t>(digits));
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

void require_unit(const Rational& q, std::string_view what) {
  if (q < 0 || q > 1)
    throw std::domain_error(std::string(what) + " " + to_string(q) + " outside [0, 1]");
}

void require_unit(std::span<const Rational> qs, std::string_view what) {
  for (const auto& q : qs) require_unit(q, what);
}

}  // namespace cohere
