#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cohere/rational.hpp"

namespace cohere {

/// A t-norm family together with its dual t-conorm.
class OperatorFamily {
 public:
  enum class Kind { Minimum, Product, Lukasiewicz, Drastic, Hamacher };

  static OperatorFamily minimum() { return OperatorFamily(Kind::Minimum); }
  static OperatorFamily product() { return OperatorFamily(Kind::Product); }
  static OperatorFamily lukasiewicz() { return OperatorFamily(Kind::Lukasiewicz); }
  static OperatorFamily drastic() { return OperatorFamily(Kind::Drastic); }
  /// Hamacher family with parameter lambda >= 0 (std::domain_error otherwise).
  static OperatorFamily hamacher(Rational lambda);
  /// Hamacher family at lambda = infinity, i.e. the drastic pair.
  static OperatorFamily hamacher_infinite();

  /// Names: min, prod, luk, drastic, hamacher. `lambda` is "a/b", a decimal or
  /// "inf"; it is required for hamacher and rejected otherwise.
  static OperatorFamily parse(std::string_view name, std::optional<std::string_view> lambda = {});

  Kind kind() const { return kind_; }
  /// Hamacher parameter; nullopt means infinity. Empty for other kinds.
  const std::optional<Rational>& lambda() const { return lambda_; }
  bool lambda_infinite() const { return kind_ == Kind::Hamacher && !lambda_; }

  std::string name() const;

 private:
  explicit OperatorFamily(Kind k) : kind_(k) {}
  Kind kind_;
  std::optional<Rational> lambda_;
};

/// Binary operators; arguments outside [0, 1] throw std::domain_error.
Rational tnorm(const OperatorFamily& f, const Rational& x, const Rational& y);
Rational tconorm(const OperatorFamily& f, const Rational& x, const Rational& y);

/// k-ary extensions by left fold: T(p_1..p_k) = T(T(p_1..p_{k-1}), p_k). One
/// argument is returned as is; an empty list throws std::invalid_argument.
/// Every argument must lie in [0, 1] (std::domain_error otherwise).
Rational tnorm(const OperatorFamily& f, std::span<const Rational> args);
Rational tconorm(const OperatorFamily& f, std::span<const Rational> args);

/// Closed form of the Hamacher product (lambda = 0) on [0,1]^k:
/// 0 if some p_i = 0, else 1 / (sum (1-p_i)/p_i + 1).
Rational hamacher0_nary(std::span<const Rational> args);

/// Closed form of the Hamacher sum (lambda = 0) on [0,1]^k:
/// 1 if some p_i = 1, else s / (s + 1) with s = sum p_i/(1-p_i).
Rational hamacher0_conary(std::span<const Rational> args);

/// The dual t-conorm evaluated through complementation:
/// 1 - T(1-p_1, ..., 1-p_k).
Rational dual_eval(const OperatorFamily& f, std::span<const Rational> args);

}  // namespace cohere
