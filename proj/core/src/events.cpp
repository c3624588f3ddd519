#include "cohere/events.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "cohere/error.hpp"
#include "parse_detail.hpp"

namespace cohere {

struct Event::Node {
  Kind kind;
  AtomId atom = 0;
  std::string name;
  Event lhs_ev{nullptr};
  Event rhs_ev{nullptr};
};

Event::Event(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Event::Event() : Event(sure()) {}

Event Event::sure() {
  static const auto node = std::make_shared<const Node>(Node{Kind::True, 0, {}, Event(nullptr), Event(nullptr)});
  return Event(node);
}

Event Event::impossible() {
  static const auto node = std::make_shared<const Node>(Node{Kind::False, 0, {}, Event(nullptr), Event(nullptr)});
  return Event(node);
}

Event Event::atom(AtomId id, std::string name) {
  return Event(std::make_shared<const Node>(Node{Kind::Atom, id, std::move(name), Event(nullptr), Event(nullptr)}));
}

Event::Kind Event::kind() const { return node_->kind; }
AtomId Event::atom_id() const { return node_->atom; }
const std::string& Event::atom_name() const { return node_->name; }
const Event& Event::lhs() const { return node_->lhs_ev; }
const Event& Event::rhs() const { return node_->rhs_ev; }

bool Event::evaluate(World w) const {
  switch (node_->kind) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return w[node_->atom];
    case Kind::Not: return !node_->lhs_ev.evaluate(w);
    case Kind::And: return node_->lhs_ev.evaluate(w) && node_->rhs_ev.evaluate(w);
    case Kind::Or: return node_->lhs_ev.evaluate(w) || node_->rhs_ev.evaluate(w);
  }
  return false;
}

bool Event::same_structure(const Event& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::True:
    case Kind::False: return true;
    case Kind::Atom: return node_->atom == other.node_->atom && node_->name == other.node_->name;
    case Kind::Not: return node_->lhs_ev.same_structure(other.node_->lhs_ev);
    case Kind::And:
    case Kind::Or:
      return node_->lhs_ev.same_structure(other.node_->lhs_ev) &&
             node_->rhs_ev.same_structure(other.node_->rhs_ev);
  }
  return false;
}

Event operator!(const Event& e) {
  return Event(std::make_shared<const Event::Node>(
      Event::Node{Event::Kind::Not, 0, {}, e, Event(nullptr)}));
}

Event operator&(const Event& a, const Event& b) {
  return Event(std::make_shared<const Event::Node>(Event::Node{Event::Kind::And, 0, {}, a, b}));
}

Event operator|(const Event& a, const Event& b) {
  return Event(std::make_shared<const Event::Node>(Event::Node{Event::Kind::Or, 0, {}, a, b}));
}

namespace {

int precedence(Event::Kind k) {
  switch (k) {
    case Event::Kind::Or: return 1;
    case Event::Kind::And: return 2;
    case Event::Kind::Not: return 3;
    default: return 4;
  }
}

void print(const Event& e, std::string& out) {
  auto child = [&out](const Event& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  switch (e.kind()) {
    case Event::Kind::True: out += 'T'; break;
    case Event::Kind::False: out += 'F'; break;
    case Event::Kind::Atom: out += e.atom_name(); break;
    case Event::Kind::Not:
      out += '~';
      child(e.lhs(), precedence(e.lhs().kind()) < 3);
      break;
    case Event::Kind::And:
    case Event::Kind::Or: {
      int p = precedence(e.kind());
      child(e.lhs(), precedence(e.lhs().kind()) < p);
      out += e.kind() == Event::Kind::And ? " & " : " | ";
      child(e.rhs(), precedence(e.rhs().kind()) <= p);
      break;
    }
  }
}

void collect_atoms(const Event& e, std::vector<AtomId>& out) {
  switch (e.kind()) {
    case Event::Kind::Atom: out.push_back(e.atom_id()); break;
    case Event::Kind::Not: collect_atoms(e.lhs(), out); break;
    case Event::Kind::And:
    case Event::Kind::Or:
      collect_atoms(e.lhs(), out);
      collect_atoms(e.rhs(), out);
      break;
    default: break;
  }
}

}  // namespace

std::string to_string(const Event& e) {
  std::string out;
  print(e, out);
  return out;
}

std::vector<AtomId> atoms_of(const Event& e) {
  std::vector<AtomId> out;
  collect_atoms(e, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<World> enumerate_worlds(std::size_t atom_count, std::span<const Event> constraints) {
  if (atom_count > Context::kMaxAtoms)
    throw SizeLimitError("too many atoms for exhaustive enumeration: " + std::to_string(atom_count) +
                         " (limit " + std::to_string(Context::kMaxAtoms) + ")");
  std::vector<World> out;
  const std::uint32_t total = std::uint32_t{1} << atom_count;
  for (std::uint32_t i = 0; i < total; ++i) {
    // Atom 0 is the most significant position of the counter.
    std::uint32_t bits = 0;
    for (std::size_t j = 0; j < atom_count; ++j)
      if ((i >> (atom_count - 1 - j)) & 1u) bits |= std::uint32_t{1} << j;
    World w(bits);
    bool admissible = std::none_of(constraints.begin(), constraints.end(),
                                   [w](const Event& c) { return c.evaluate(w); });
    if (admissible) out.push_back(w);
  }
  return out;
}

// --- Context ----------------------------------------------------------------

struct Context::Impl {
  std::vector<std::string> atoms;
  std::vector<Event> constraints;
  std::vector<World> worlds;
};

Context::Context() : Context(std::vector<std::string>{}) {}

Context::Context(std::vector<std::string> atoms) : Context(std::move(atoms), {}) {}

Context::Context(std::vector<std::string> atoms, std::vector<Event> constraints) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!is_identifier(atoms[i]) || atoms[i] == "T" || atoms[i] == "F")
      throw std::invalid_argument("invalid atom name '" + atoms[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (atoms[i] == atoms[j]) throw std::invalid_argument("duplicate atom '" + atoms[i] + "'");
  }
  for (const auto& c : constraints)
    for (AtomId a : atoms_of(c))
      if (a >= atoms.size())
        throw std::invalid_argument("constraint refers to an atom outside the context");
  auto impl = std::make_shared<Impl>();
  impl->worlds = enumerate_worlds(atoms.size(), constraints);
  impl->atoms = std::move(atoms);
  impl->constraints = std::move(constraints);
  impl_ = std::move(impl);
}

Context Context::from_text(std::vector<std::string> atoms, std::span<const std::string> constraints) {
  Context bare(atoms);
  std::vector<Event> parsed;
  parsed.reserve(constraints.size());
  for (const auto& text : constraints) parsed.push_back(parse_event(text, bare));
  return Context(std::move(atoms), std::move(parsed));
}

std::span<const std::string> Context::atoms() const { return impl_->atoms; }
std::span<const Event> Context::constraints() const { return impl_->constraints; }
std::span<const World> Context::worlds() const { return impl_->worlds; }
std::size_t Context::atom_count() const { return impl_->atoms.size(); }

std::optional<AtomId> Context::find(std::string_view name) const {
  const auto& atoms = impl_->atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i] == name) return static_cast<AtomId>(i);
  return std::nullopt;
}

Event Context::atom(std::string_view name) const {
  auto id = find(name);
  if (!id) throw UnknownAtomError(std::string(name));
  return Event::atom(*id, std::string(name));
}

bool Context::is_impossible(const Event& e) const {
  for (AtomId a : atoms_of(e))
    if (a >= atom_count()) throw UnknownAtomError("#" + std::to_string(a));
  return std::none_of(impl_->worlds.begin(), impl_->worlds.end(),
                      [&e](World w) { return e.evaluate(w); });
}

bool Context::implies(const Event& a, const Event& b) const { return is_impossible(a & !b); }

bool Context::equivalent(const Event& a, const Event& b) const {
  return implies(a, b) && implies(b, a);
}

std::string Context::describe(World w) const {
  std::string out;
  for (std::size_t i = 0; i < impl_->atoms.size(); ++i) {
    if (!out.empty()) out += ' ';
    if (!w[static_cast<AtomId>(i)]) out += '~';
    out += impl_->atoms[i];
  }
  return out;
}

bool Context::same_as(const Context& other) const {
  if (impl_ == other.impl_) return true;
  if (impl_->atoms != other.impl_->atoms) return false;
  if (impl_->constraints.size() != other.impl_->constraints.size()) return false;
  for (std::size_t i = 0; i < impl_->constraints.size(); ++i)
    if (!impl_->constraints[i].same_structure(other.impl_->constraints[i])) return false;
  return true;
}

// --- parsing ----------------------------------------------------------------

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto first = static_cast<unsigned char>(s.front());
  if (!std::isalpha(first) && first != '_') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

namespace detail {

namespace {

class EventParser {
 public:
  EventParser(std::string_view text, const Context& ctx, std::size_t column_offset)
      : text_(text), ctx_(ctx), offset_(column_offset) {}

  Event parse() {
    skip_space();
    if (pos_ == text_.size()) fail("expected an event");
    Event e = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Event parse_or() {
    Event e = parse_and();
    while (accept('|')) e = e | parse_and();
    return e;
  }

  Event parse_and() {
    Event e = parse_not();
    while (accept('&')) e = e & parse_not();
    return e;
  }

  Event parse_not() {
    if (accept('~')) return !parse_not();
    Event e = parse_primary();
    while (accept('^')) {
      if (pos_ == text_.size() || text_[pos_] != 'c') fail("expected 'c' after '^'");
      ++pos_;
      e = !e;
    }
    return e;
  }

  Event parse_primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Event e = parse_or();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "T") return Event::sure();
      if (name == "F") return Event::impossible();
      auto id = ctx_.find(name);
      if (!id) throw UnknownAtomError(std::string(name));
      return Event::atom(*id, std::string(name));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Context& ctx_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Event parse_event_at(std::string_view text, const Context& ctx, std::size_t column_offset) {
  return EventParser(text, ctx, column_offset).parse();
}

}  // namespace detail

Event parse_event(std::string_view text, const Context& ctx) {
  return detail::parse_event_at(text, ctx, 0);
}

std::vector<std::string> scan_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c == '^') {
      i += 2;  // complement suffix "^c"
    } else if (std::isalpha(c) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string name(text.substr(start, i - start));
      if (name != "T" && name != "F" && std::find(out.begin(), out.end(), name) == out.end())
        out.push_back(std::move(name));
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace cohere
