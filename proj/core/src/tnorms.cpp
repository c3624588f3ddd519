#include "cohere/tnorms.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cohere/error.hpp"

namespace cohere {

OperatorFamily OperatorFamily::hamacher(Rational lambda) {
  if (lambda < 0) throw std::domain_error("Hamacher parameter must be nonnegative");
  OperatorFamily f(Kind::Hamacher);
  f.lambda_ = std::move(lambda);
  return f;
}

OperatorFamily OperatorFamily::hamacher_infinite() { return OperatorFamily(Kind::Hamacher); }

OperatorFamily OperatorFamily::parse(std::string_view name, std::optional<std::string_view> lambda) {
  if (name == "hamacher" || name == "ham") {
    if (!lambda) throw std::invalid_argument("hamacher needs a lambda (a/b or inf)");
    if (*lambda == "inf") return hamacher_infinite();
    return hamacher(parse_rational(*lambda));
  }
  if (lambda) throw std::invalid_argument("lambda only applies to the hamacher family");
  if (name == "min" || name == "minimum") return minimum();
  if (name == "prod" || name == "product") return product();
  if (name == "luk" || name == "lukasiewicz") return lukasiewicz();
  if (name == "drastic") return drastic();
  throw std::invalid_argument("unknown operator family '" + std::string(name) + "'");
}

std::string OperatorFamily::name() const {
  switch (kind_) {
    case Kind::Minimum: return "min";
    case Kind::Product: return "prod";
    case Kind::Lukasiewicz: return "luk";
    case Kind::Drastic: return "drastic";
    case Kind::Hamacher: return "hamacher(" + (lambda_ ? to_string(*lambda_) : std::string("inf")) + ")";
  }
  return "?";
}

namespace {

Rational drastic_product(const Rational& x, const Rational& y) {
  if (x < 1 && y < 1) return 0;
  return std::min(x, y);
}

Rational drastic_sum(const Rational& x, const Rational& y) {
  if (x > 0 && y > 0) return 1;
  return std::max(x, y);
}

template <typename Binary>
Rational fold(std::span<const Rational> args, Binary op) {
  if (args.empty()) throw std::invalid_argument("t-norm/t-conorm of an empty argument list");
  require_unit(args, "t-norm argument");
  Rational acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = op(acc, args[i]);
  return acc;
}

}  // namespace

Rational tnorm(const OperatorFamily& f, const Rational& x, const Rational& y) {
  require_unit(x, "t-norm argument");
  require_unit(y, "t-norm argument");
  switch (f.kind()) {
    case OperatorFamily::Kind::Minimum: return std::min(x, y);
    case OperatorFamily::Kind::Product: return x * y;
    case OperatorFamily::Kind::Lukasiewicz: return std::max(Rational(x + y - 1), Rational(0));
    case OperatorFamily::Kind::Drastic: return drastic_product(x, y);
    case OperatorFamily::Kind::Hamacher: {
      if (f.lambda_infinite()) return drastic_product(x, y);
      const Rational& lambda = *f.lambda();
      if (lambda == 0 && x == 0 && y == 0) return 0;
      Rational den = lambda + (1 - lambda) * (x + y - x * y);
      return x * y / den;
    }
  }
  throw std::logic_error("unreachable");
}

Rational tconorm(const OperatorFamily& f, const Rational& x, const Rational& y) {
  require_unit(x, "t-conorm argument");
  require_unit(y, "t-conorm argument");
  switch (f.kind()) {
    case OperatorFamily::Kind::Minimum: return std::max(x, y);
    case OperatorFamily::Kind::Product: return x + y - x * y;
    case OperatorFamily::Kind::Lukasiewicz: return std::min(Rational(x + y), Rational(1));
    case OperatorFamily::Kind::Drastic: return drastic_sum(x, y);
    case OperatorFamily::Kind::Hamacher: {
      if (f.lambda_infinite()) return drastic_sum(x, y);
      const Rational& lambda = *f.lambda();
      if (lambda == 0 && x == 1 && y == 1) return 1;
      Rational num = x + y - x * y - (1 - lambda) * x * y;
      Rational den = 1 - (1 - lambda) * x * y;
      return num / den;
    }
  }
  throw std::logic_error("unreachable");
}

Rational tnorm(const OperatorFamily& f, std::span<const Rational> args) {
  return fold(args, [&f](const Rational& a, const Rational& b) { return tnorm(f, a, b); });
}

Rational tconorm(const OperatorFamily& f, std::span<const Rational> args) {
  return fold(args, [&f](const Rational& a, const Rational& b) { return tconorm(f, a, b); });
}

Rational hamacher0_nary(std::span<const Rational> args) {
  if (args.empty()) throw std::invalid_argument("Hamacher product of an empty argument list");
  require_unit(args, "t-norm argument");
  Rational sum = 0;
  for (const auto& p : args) {
    if (p == 0) return 0;
    sum += (1 - p) / p;
  }
  return 1 / (sum + 1);
}

Rational hamacher0_conary(std::span<const Rational> args) {
  if (args.empty()) throw std::invalid_argument("Hamacher sum of an empty argument list");
  require_unit(args, "t-conorm argument");
  Rational sum = 0;
  for (const auto& p : args) {
    if (p == 1) return 1;
    sum += p / (1 - p);
  }
  return sum / (sum + 1);
}

Rational dual_eval(const OperatorFamily& f, std::span<const Rational> args) {
  require_unit(args, "t-conorm argument");
  std::vector<Rational> complement;
  complement.reserve(args.size());
  for (const auto& p : args) complement.emplace_back(1 - p);
  return 1 - tnorm(f, complement);
}

}  // namespace cohere
