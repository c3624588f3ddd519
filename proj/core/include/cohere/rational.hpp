#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cohere {

/// Exact rational number; every probability, stake and t-norm argument is one.
using Rational = mpq_class;

/// A probability in [0, 1]. Kept as a plain Rational; range is enforced at the
/// boundaries through require_unit().
using UnitValue = Rational;

/// Parses "a/b", "-a/b", integers and decimals ("0.2" -> 1/5, "1e-3" is not
/// accepted). Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Short form: "0", "1", "2/3", "-1/2".
std::string to_string(const Rational& q);

/// Always "num/den", e.g. "0/1", "2/3". Used by the JSON shape.
std::string to_fraction(const Rational& q);

/// Decimal rendering with `digits` places after the point (rounded half up).
std::string to_decimal(const Rational& q, int digits = 6);

double to_double(const Rational& q);

/// Throws std::domain_error unless 0 <= q <= 1. `what` names the quantity.
void require_unit(const Rational& q, std::string_view what = "probability");
void require_unit(std::span<const Rational> qs, std::string_view what = "probability");

}  // namespace cohere
