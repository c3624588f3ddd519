#pragma once

#include <cstddef>
#include <vector>

#include "cohere/coherence.hpp"
#include "cohere/rational.hpp"

/// Brute-force reference computations by vertex enumeration. They share no
/// code with the simplex engine and serve to cross-check it on small inputs.
namespace cohere::oracle {

/// Vertex enumeration visits every basis, so it is kept to few variables.
inline constexpr std::size_t kMaxVariables = 14;

/// { x >= 0 : rows x = rhs }
struct Polytope {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

/// The solution set of Sigma: the Q_h equations plus sum lambda = 1.
Polytope polytope(const SigmaSystem& s);

/// All vertices, each once, in lexicographic order. Throws SizeLimitError
/// beyond kMaxVariables variables.
std::vector<std::vector<Rational>> vertices(const Polytope& p);

/// Coherence decided by vertex enumeration of each level's solution set.
bool is_coherent(const Assessment& a);

/// The coherent extension interval: extreme ratios over the vertices with a
/// positive denominator, and recursion on the premises without mass over the
/// vertices where the target's antecedent carries none. Throws
/// IncoherentAssessmentError when `a` is incoherent.
ProbabilityInterval extension_interval_bruteforce(const Assessment& a, const ConditionalEvent& target);

}  // namespace cohere::oracle
