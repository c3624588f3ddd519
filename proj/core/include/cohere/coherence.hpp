#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohere/conditionals.hpp"
#include "cohere/events.hpp"
#include "cohere/rational.hpp"
#include "cohere/simplex.hpp"

namespace cohere {

struct EngineOptions {
  /// Desk-scale bound on the number of constituents of any family examined.
  std::size_t max_constituents = kDefaultMaxConstituents;
};

/// A family of conditional events F_n with a probability vector P_n.
class Assessment {
 public:
  /// Throws std::invalid_argument on a length mismatch or an empty family,
  /// std::domain_error on a probability outside [0, 1] and
  /// ImpossibleAntecedentError on an impossible antecedent.
  Assessment(Context ctx, std::vector<ConditionalEvent> family, std::vector<Rational> probs);

  const Context& context() const { return ctx_; }
  std::span<const ConditionalEvent> family() const { return family_; }
  std::span<const Rational> probs() const { return probs_; }
  std::size_t size() const { return family_.size(); }

  /// The sub-assessment on the given (ascending, distinct) indices.
  Assessment subset(std::span<const std::size_t> indices) const;
  /// This assessment with one more conditional event appended.
  Assessment extended(const ConditionalEvent& ce, const Rational& p) const;

 private:
  Context ctx_;
  std::vector<ConditionalEvent> family_;
  std::vector<Rational> probs_;
};

/// The system
///   sum_h q_hj lambda_h = p_j  (j = 1..n),  sum_h lambda_h = 1,  lambda >= 0
/// over the constituents C_1..C_m contained in H_1 v ... v H_n, where
/// q_hj is 1, 0 or p_j as C_h lies in E_j H_j, E_j^c H_j or H_j^c.
///
/// `profiles[h]` may carry extra trailing columns for conditional events that
/// shaped the partition without contributing an equation (see
/// extension_interval); `points[h]` always has exactly n entries.
struct SigmaSystem {
  std::vector<std::vector<TruthValue3>> profiles;
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> probs;

  std::size_t constituent_count() const { return points.size(); }
  std::size_t size() const { return probs.size(); }

  /// C_h ⊆ H_j for column j of the profile.
  bool in_antecedent(std::size_t h, std::size_t j) const {
    return profiles[h][j] != TruthValue3::Void;
  }

  /// The feasibility problem for lambda (objective zero).
  lp::Problem problem() const;
};

SigmaSystem build_sigma(const Assessment& a, const EngineOptions& opts = {});

/// Builds Sigma for `a` over the partition generated by a's family plus
/// `extra`; the extra events appear only as trailing profile columns.
SigmaSystem build_sigma(const Assessment& a, std::span<const ConditionalEvent> extra,
                        const EngineOptions& opts = {});

/// Values g_h = sum_j s_j (q_hj - p_j) of the random gain on C_1..C_m.
std::vector<Rational> gains(const SigmaSystem& s, std::span<const Rational> stakes);

/// Exactly one of the two is set: a solution lambda of the system, or a stake
/// vector whose gains are all >= 1 (hence strictly positive: a Dutch book).
struct Feasibility {
  std::optional<std::vector<Rational>> witness;
  std::optional<std::vector<Rational>> stakes;

  bool feasible() const { return witness.has_value(); }
};

Feasibility sigma_feasible(const SigmaSystem& s);

/// Per conditional event j: M_j = max over the solutions of Sigma of
/// Phi_j(lambda) = sum over C_r ⊆ H_j of lambda_r, and I_0 = { j : M_j = 0 }.
struct SolutionFunctionals {
  std::vector<Rational> maxima;
  std::vector<std::size_t> zero_set;
};

/// Requires a feasible system (std::invalid_argument otherwise).
SolutionFunctionals solution_functionals(const SigmaSystem& s);

/// One step of the coherence recursion.
struct TraceLevel {
  std::vector<std::size_t> indices;  // positions in the original family
  SigmaSystem sigma;
  std::optional<std::vector<Rational>> witness;
  std::optional<std::vector<Rational>> stakes;
  std::vector<Rational> maxima;        // M_j for each entry of `indices`
  std::vector<std::size_t> zero_set;   // I_0, as original positions
};

struct CoherenceVerdict {
  bool coherent = false;
  /// Solution of the deciding level's system (coherent verdicts).
  std::optional<std::vector<Rational>> witness;
  /// Stakes on the deciding level's indices with all gains > 0 (incoherent).
  std::optional<std::vector<Rational>> certificate;
  std::vector<TraceLevel> trace;

  const TraceLevel& deciding_level() const { return trace.back(); }
};

/// Solves Sigma; if it has no solution the assessment is incoherent. Otherwise
/// computes every M_j; an empty I_0 means coherent, else the check recurses on
/// the sub-assessment indexed by I_0 (always a strict subset).
CoherenceVerdict check_coherence(const Assessment& a, const EngineOptions& opts = {});

struct ProbabilityInterval {
  Rational lo;
  Rational hi;

  friend bool operator==(const ProbabilityInterval&, const ProbabilityInterval&) = default;
};

/// "[lo, hi]" in short rational form.
std::string to_string(const ProbabilityInterval& iv);

struct ExtensionResult {
  ProbabilityInterval interval;
  /// The target's antecedent has upper probability 0 over every solution and
  /// the bounds came from a sub-assessment or from the target alone.
  bool vacuous = false;
  bool lo_validated = false;
  bool hi_validated = false;
  std::vector<std::string> warnings;
};

/// The set of z such that (P_n, z) on F_n ∪ {target} is coherent.
///
/// Over the solution polytope of Sigma (built on the partition of the
/// enlarged family) the ratio (mass on target true) / (mass on target
/// antecedent) is minimised and maximised as two linear programs after scaling
/// the denominator to 1. Solutions where the antecedent carries no mass are
/// resolved by recursing on the premises whose antecedents also carry none
/// there; with no such premise only the target's own logic constrains z. Both endpoints are
/// then re-validated with check_coherence.
///
/// Throws IncoherentAssessmentError when `a` itself is incoherent.
ExtensionResult extension_interval(const Assessment& a, const ConditionalEvent& target,
                                   const EngineOptions& opts = {});

}  // namespace cohere
