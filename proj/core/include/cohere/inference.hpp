#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cohere/coherence.hpp"
#include "cohere/conditionals.hpp"
#include "cohere/events.hpp"
#include "cohere/rational.hpp"

namespace cohere {

struct NamedConditional {
  std::string name;
  ConditionalEvent conditional;
  std::optional<Rational> probability;
};

/// A conditional knowledge base: a context plus uniquely named conditional
/// events, optionally with probabilities, and a list of query conditionals.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(Context ctx) : ctx_(std::move(ctx)) {}

  const Context& context() const { return ctx_; }
  std::span<const NamedConditional> conditionals() const { return conditionals_; }
  std::span<const ConditionalEvent> queries() const { return queries_; }

  /// Throws std::invalid_argument on a duplicate name, std::domain_error on a
  /// probability outside [0, 1] and ImpossibleAntecedentError.
  void add(std::string name, ConditionalEvent ce, std::optional<Rational> probability = {});
  void add_query(ConditionalEvent ce);

  const NamedConditional* find(std::string_view name) const;

  std::vector<ConditionalEvent> family() const;
  std::size_t size() const { return conditionals_.size(); }
  /// Every conditional carries a probability.
  bool fully_assessed() const;

 private:
  Context ctx_;
  std::vector<NamedConditional> conditionals_;
  std::vector<ConditionalEvent> queries_;
};

// --- p-consistency and p-entailment ----------------------------------------

/// The all-ones assessment on `family` is coherent.
bool p_consistent(std::span<const ConditionalEvent> family, const Context& ctx, const EngineOptions& opts = {});
bool p_consistent(const KnowledgeBase& kb, const EngineOptions& opts = {});

/// The coherent extensions of the all-ones assessment to `target` reduce to
/// {1}. Throws NotPConsistentError when the family is not p-consistent.
bool p_entails(std::span<const ConditionalEvent> family, const ConditionalEvent& target, const Context& ctx,
               const EngineOptions& opts = {});
bool p_entails(const KnowledgeBase& kb, const ConditionalEvent& target, const EngineOptions& opts = {});

/// Largest family searched exhaustively by p_entails_qc.
inline constexpr std::size_t kMaxQcSubsetFamily = 12;

/// Some nonempty subset S of the family has C(S) ⊆ target in the
/// Goodman-Nguyen sense, or the target's antecedent implies its consequent.
/// Requires target consequent & antecedent to be possible
/// (std::invalid_argument), a p-consistent family (NotPConsistentError) and at
/// most kMaxQcSubsetFamily members (SizeLimitError).
bool p_entails_qc(std::span<const ConditionalEvent> family, const ConditionalEvent& target, const Context& ctx);
bool p_entails_qc(const KnowledgeBase& kb, const ConditionalEvent& target);

// --- closed-form bounds -----------------------------------------------------
//
// These assume logically independent premises; constraints among the events
// can only tighten the true interval, which extension_interval computes.

enum class RuleKind { QuasiAnd, QuasiOr, OrRule, GNChain, Compound, DualCompound, Biconditional };

std::string_view to_string(RuleKind k);

/// [T_L(p), S_0^H(p)]
ProbabilityInterval qc_bounds(std::span<const Rational> p);
/// [T_0^H(p), S_L(p)]
ProbabilityInterval qd_bounds(std::span<const Rational> p);
/// [T_0^H(p), S_0^H(p)]
ProbabilityInterval or_rule_bounds(std::span<const Rational> p);
/// [p_1, p_k]; the premises must be nondecreasing (std::invalid_argument).
ProbabilityInterval gn_chain_bounds(std::span<const Rational> p);
/// The product, as a degenerate interval.
ProbabilityInterval compound_bounds(std::span<const Rational> p);
/// x + y - xy
Rational dual_compound_value(const Rational& x, const Rational& y);
/// T_0^H(x, y), with (0, 0) -> 0.
Rational biconditional_value(const Rational& x, const Rational& y);

struct RuleBounds {
  RuleKind kind;
  std::vector<Rational> premises;
  ProbabilityInterval interval;
};

/// Dispatches to the function above; the two-argument rules need exactly two
/// premises.
RuleBounds rule_bounds(RuleKind kind, std::span<const Rational> p);

// --- premise regions --------------------------------------------------------

/// L_gamma: premise vectors whose conclusion has lower bound >= gamma.
/// U_gamma: premise vectors whose conclusion has upper bound <= gamma.
bool in_L_gamma_qc(std::span<const Rational> p, const Rational& gamma);
bool in_U_gamma_qc(std::span<const Rational> p, const Rational& gamma);
bool in_L_gamma_qd(std::span<const Rational> p, const Rational& gamma);
bool in_U_gamma_qd(std::span<const Rational> p, const Rational& gamma);

struct GammaRegion {
  enum class Bound { Lower, Upper };
  enum class Operation { QuasiAnd, QuasiOr };

  Bound bound;
  Operation operation;
  Rational gamma;

  bool contains(std::span<const Rational> p) const;
};

// --- loops ------------------------------------------------------------------

/// Atoms A1..An and the loop family {A2|A1, A3|A2, ..., A1|An}.
Context loop_context(std::size_t n);
std::vector<ConditionalEvent> loop_family(const Context& ctx);

/// {A_sigma(i) | A_i : i = 1..n} for a 1-based permutation sigma.
std::vector<ConditionalEvent> deranged_family(const Context& ctx, std::span<const std::size_t> sigma);

/// The loop family and the deranged family p-entail each other member by
/// member. Requires 2 <= n <= 5 and a derangement of 1..n
/// (std::invalid_argument).
bool loop_entails(std::size_t n, std::span<const std::size_t> derangement, const EngineOptions& opts = {});

}  // namespace cohere
