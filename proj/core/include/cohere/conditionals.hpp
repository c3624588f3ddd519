#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cohere/events.hpp"

namespace cohere {

/// Three-valued truth of a conditional event, ordered False < Void < True.
enum class TruthValue3 { False = 0, Void = 1, True = 2 };

constexpr bool operator<(TruthValue3 a, TruthValue3 b) {
  return static_cast<int>(a) < static_cast<int>(b);
}
constexpr bool operator<=(TruthValue3 a, TruthValue3 b) { return !(b < a); }

std::string_view to_string(TruthValue3 v);

/// The conditional event consequent|antecedent.
///
/// Construction is structural; the "antecedent not impossible" invariant
/// depends on a Context and is enforced by require_valid() and by every
/// operation that takes a Context.
struct ConditionalEvent {
  Event consequent;
  Event antecedent;

  ConditionalEvent() = default;
  ConditionalEvent(Event consequent, Event antecedent)
      : consequent(std::move(consequent)), antecedent(std::move(antecedent)) {}
};

/// Throws ImpossibleAntecedentError when the antecedent is impossible in `ctx`.
void require_valid(const ConditionalEvent& ce, const Context& ctx);
void require_valid(std::span<const ConditionalEvent> family, const Context& ctx);

/// Checked constructor.
ConditionalEvent make_conditional(const Context& ctx, Event consequent, Event antecedent);

TruthValue3 truth_value(const ConditionalEvent& ce, World w);

/// (E|H)^c = E^c|H
ConditionalEvent negate(const ConditionalEvent& ce);

/// C(F) = AND_i (E_i H_i | ~H_i) | OR_i H_i. A singleton family is returned
/// unchanged. Throws std::invalid_argument on an empty family.
ConditionalEvent quasi_conjunction(std::span<const ConditionalEvent> family);

/// D(F) = (OR_i E_i H_i) | OR_i H_i. A singleton family is returned unchanged.
ConditionalEvent quasi_disjunction(std::span<const ConditionalEvent> family);

/// Goodman-Nguyen inclusion a ⊆ b: A H B^c K, H^c B^c K and A H K^c are all
/// impossible, i.e. t(a) <= t(b) on every admissible world.
bool gn_includes(const ConditionalEvent& a, const ConditionalEvent& b, const Context& ctx);

/// A_1 ... A_n | (A_1 v ... v A_n). Requires at least two events, each
/// non-impossible; throws std::invalid_argument / ImpossibleAntecedentError.
ConditionalEvent n_conditional(std::span<const Event> events, const Context& ctx);

/// Semantic equality: world-equivalent antecedents and the same truth value on
/// every admissible world.
bool equivalent(const ConditionalEvent& a, const ConditionalEvent& b, const Context& ctx);

/// "E | H", parenthesising a top-level disjunction in the consequent or in the
/// antecedent so that parse_conditional() reads it back to the same trees.
std::string to_string(const ConditionalEvent& ce);

/// Parses `consequent | antecedent`. The conditioning bar is the first
/// unparenthesised `|` whose left and right sides both parse as events; so
/// `A | B | H` is A given (B or H) and `(A | B) | H` is (A or B) given H.
/// Does not check the antecedent; see make_conditional().
ConditionalEvent parse_conditional(std::string_view text, const Context& ctx);

// --- constituents -----------------------------------------------------------

/// One class of admissible worlds sharing the same True/Void/False profile over
/// a family of conditional events.
struct Constituent {
  std::vector<TruthValue3> profile;
  std::vector<World> worlds;  // ascending enumeration order; worlds.front() represents
};

/// Partition of the admissible worlds generated by a family: `c0` collects the
/// worlds where every antecedent is false (absent when that is impossible);
/// `inside` holds C_1..C_m, ordered by their first world.
struct ConstituentSet {
  std::optional<Constituent> c0;
  std::vector<Constituent> inside;

  std::size_t size() const { return inside.size() + (c0 ? 1 : 0); }
};

/// Default desk-scale bound on m (3^7).
inline constexpr std::size_t kDefaultMaxConstituents = 2187;

/// Throws std::invalid_argument on an empty family, ImpossibleAntecedentError
/// when some antecedent is impossible and SizeLimitError when m exceeds
/// `max_constituents`.
ConstituentSet constituents(std::span<const ConditionalEvent> family, const Context& ctx,
                            std::size_t max_constituents = kDefaultMaxConstituents);

}  // namespace cohere
