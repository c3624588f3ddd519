#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cohere/rational.hpp"

namespace cohere::lp {

/// Equality-form linear program over nonnegative variables:
///   optimise objective . x  subject to  rows x = rhs,  x >= 0.
/// Each row must have exactly `objective.size()` entries.
struct Problem {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;

  std::size_t variables() const { return objective.size(); }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<Rational> x;  // empty unless Optimal
  Rational value;
};

/// Dense two-phase simplex in exact arithmetic with Bland's smallest-index
/// rule for both the entering and the leaving variable, so it always
/// terminates. Throws std::invalid_argument on ragged input.
Solution maximize(const Problem& p);
Solution minimize(const Problem& p);

/// Any basic feasible point (the objective is ignored), or nullopt.
std::optional<std::vector<Rational>> feasible_point(Problem p);

}  // namespace cohere::lp
