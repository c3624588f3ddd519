#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cohere/coherence.hpp"
#include "cohere/error.hpp"
#include "cohere/inference.hpp"

namespace cohere {

/// Knowledge-base file problem, located by 1-based line and column.
class KnowledgeBaseError : public ParseError {
 public:
  enum class Kind { Syntax, UnknownAtom, DuplicateName, ProbabilityRange, ImpossibleAntecedent, Io };

  KnowledgeBaseError(Kind kind, const std::string& what, std::size_t line, std::size_t column)
      : ParseError(what, column, line), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct LoadedKnowledgeBase {
  KnowledgeBase kb;
  /// Present when the kb is nonempty and every conditional has a probability.
  std::optional<Assessment> assessment;
};

/// Reads the line-oriented format:
///
///   # comment
///   atoms: L S G N
///   constraints:
///     L & ~S
///   conditionals:
///     f1: G | L = 1
///     f2: S | L = 0.9
///     f3: ~N | L & S
///   queries:
///     ~N | L
///
/// Atom names may also continue on the lines after `atoms:`, separated by
/// blanks or commas. A conditional without `name:` is named c1, c2, ... by
/// position. Probabilities are `a/b`, integers or decimals and are converted
/// exactly. Throws KnowledgeBaseError.
LoadedKnowledgeBase parse_kb(std::string_view text);
LoadedKnowledgeBase load_kb(const std::filesystem::path& path);

/// Text that parse_kb() reads back to the same structure.
std::string serialize_kb(const KnowledgeBase& kb);

/// Same atoms, constraints, names, conditionals (structurally), probabilities
/// and queries.
bool same_structure(const KnowledgeBase& a, const KnowledgeBase& b);

}  // namespace cohere
