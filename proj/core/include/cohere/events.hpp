#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cohere {

using AtomId = std::uint32_t;

/// Total truth assignment over the atoms of one Context. Atom i is bit i.
class World {
 public:
  constexpr World() = default;
  constexpr explicit World(std::uint32_t bits) : bits_(bits) {}

  constexpr bool operator[](AtomId atom) const { return (bits_ >> atom) & 1u; }
  constexpr std::uint32_t bits() const { return bits_; }

  friend constexpr bool operator==(World, World) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Immutable Boolean formula over the atoms of a Context.
///
/// Structural operations (`!`, `&`, `|`) only build trees; nothing is decided
/// until the formula is evaluated against a World. Atom nodes carry the index
/// the owning Context assigned, so events from different contexts must not be
/// mixed.
class Event {
 public:
  enum class Kind { True, False, Atom, Not, And, Or };

  /// Constant-true event (the sure event).
  static Event sure();
  /// Constant-false event (the impossible event).
  static Event impossible();
  static Event atom(AtomId id, std::string name);

  Event();  // sure event

  Kind kind() const;
  /// Atom index; only meaningful for Kind::Atom.
  AtomId atom_id() const;
  const std::string& atom_name() const;
  /// Operands: one for Not, two for And/Or, none otherwise.
  const Event& lhs() const;
  const Event& rhs() const;

  bool evaluate(World w) const;

  /// Structural (not semantic) equality.
  bool same_structure(const Event& other) const;

  friend Event operator!(const Event& e);
  friend Event operator&(const Event& a, const Event& b);
  friend Event operator|(const Event& a, const Event& b);

 private:
  struct Node;
  explicit Event(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Formula text with the minimal parentheses needed to re-parse to the same
/// tree: `~` binds tighter than `&`, which binds tighter than `|`, both binary
/// operators associate to the left.
std::string to_string(const Event& e);

/// Atoms named by the event, in ascending index order without duplicates.
std::vector<AtomId> atoms_of(const Event& e);

/// All assignments over `atom_count` atoms in which every constraint is false.
/// Order is lexicographic over atom order with false < true, so the first atom
/// varies slowest.
std::vector<World> enumerate_worlds(std::size_t atom_count, std::span<const Event> constraints);

/// Atom set plus "this event is impossible" declarations. Cheap to copy; all
/// copies share one immutable representation including the admissible worlds.
class Context {
 public:
  /// Hard bound on the atom count for exhaustive world enumeration.
  static constexpr std::size_t kMaxAtoms = 20;

  Context();
  explicit Context(std::vector<std::string> atoms);
  Context(std::vector<std::string> atoms, std::vector<Event> constraints);

  /// Parses every constraint with the event grammar against `atoms`.
  static Context from_text(std::vector<std::string> atoms,
                           std::span<const std::string> constraints = {});

  std::span<const std::string> atoms() const;
  std::span<const Event> constraints() const;
  std::span<const World> worlds() const;
  std::size_t atom_count() const;

  std::optional<AtomId> find(std::string_view name) const;
  /// Throws UnknownAtomError.
  Event atom(std::string_view name) const;

  bool is_impossible(const Event& e) const;
  bool implies(const Event& a, const Event& b) const;
  bool equivalent(const Event& a, const Event& b) const;

  /// Readable rendering of a world: "A ~B H ~K".
  std::string describe(World w) const;

  /// Contexts are the same when they declare the same atoms (in order) and
  /// structurally identical constraints.
  bool same_as(const Context& other) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Parses the event grammar:
///   or   := and ('|' and)*
///   and  := not ('&' not)*
///   not  := '~' not | primary ('^c')*
///   primary := 'T' | 'F' | identifier | '(' or ')'
/// Identifiers are [A-Za-z_][A-Za-z0-9_]*; `T` and `F` are reserved. The
/// suffix `^c` is an alternative spelling of complement: `N^c` reads as `~N`.
/// Throws ParseError (with column) or UnknownAtomError.
Event parse_event(std::string_view text, const Context& ctx);

/// Identifiers appearing in `text`, in order of first appearance, excluding the
/// constants. Used when no atom declaration is available.
std::vector<std::string> scan_identifiers(std::string_view text);

bool is_identifier(std::string_view s);

}  // namespace cohere
