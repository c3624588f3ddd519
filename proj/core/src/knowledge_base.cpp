#include "cohere/knowledge_base.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "parse_detail.hpp"

namespace cohere {

namespace {

using Kind = KnowledgeBaseError::Kind;

enum class Section { None, Atoms, Constraints, Conditionals, Queries };

struct Line {
  std::size_t number;
  std::size_t indent;  // 0-based offset of `text` inside the raw line
  std::string text;
};

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Trims blanks and a trailing comment; `indent` receives the leading offset.
std::string strip(std::string_view raw, std::size_t& indent) {
  std::size_t hash = raw.find('#');
  if (hash != std::string_view::npos) raw = raw.substr(0, hash);
  std::size_t b = 0;
  while (b < raw.size() && is_blank(raw[b])) ++b;
  std::size_t e = raw.size();
  while (e > b && is_blank(raw[e - 1])) --e;
  indent = b;
  return std::string(raw.substr(b, e - b));
}

// 1-based column of the first whole-word occurrence of `name` in `text`.
std::size_t find_word(std::string_view text, std::string_view name) {
  for (std::size_t pos = text.find(name); pos != std::string_view::npos; pos = text.find(name, pos + 1)) {
    auto ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    bool left = pos == 0 || !ident(text[pos - 1]);
    bool right = pos + name.size() >= text.size() || !ident(text[pos + name.size()]);
    if (left && right) return pos + 1;
  }
  return 1;
}

class Loader {
 public:
  LoadedKnowledgeBase run(std::string_view text) {
    split(text);
    Context ctx = build_context();
    KnowledgeBase kb(ctx);
    for (std::size_t i = 0; i < conditional_lines_.size(); ++i) add_conditional(kb, conditional_lines_[i], i + 1);
    for (const Line& l : query_lines_) {
      ConditionalEvent ce = conditional_at(l, l.text, l.indent, ctx);
      check_antecedent(ce, ctx, l);
      kb.add_query(ce);
    }
    LoadedKnowledgeBase out{kb, std::nullopt};
    if (kb.size() > 0 && kb.fully_assessed()) {
      std::vector<Rational> probs;
      for (const auto& nc : kb.conditionals()) probs.push_back(*nc.probability);
      out.assessment.emplace(ctx, kb.family(), std::move(probs));
    }
    return out;
  }

 private:
  void split(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    Section section = Section::None;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(start, end - start);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      ++number;
      start = end + 1;

      std::size_t indent = 0;
      std::string body = strip(raw, indent);
      if (body.empty()) {
        if (end == text.size()) break;
        continue;
      }
      if (auto s = header(body, number, indent)) {
        section = *s;
      } else {
        Line l{number, indent, body};
        switch (section) {
          case Section::None:
            throw KnowledgeBaseError(Kind::Syntax, "expected a section header (atoms:, constraints:, conditionals:, queries:)",
                                     number, indent + 1);
          case Section::Atoms: add_atoms(l, body); break;
          case Section::Constraints: constraint_lines_.push_back(l); break;
          case Section::Conditionals: conditional_lines_.push_back(l); break;
          case Section::Queries: query_lines_.push_back(l); break;
        }
      }
      if (end == text.size()) break;
    }
  }

  // Recognises "atoms:", "constraints:" etc.; atom names may follow on the
  // header line itself.
  std::optional<Section> header(const std::string& body, std::size_t number, std::size_t indent) {
    static const std::pair<std::string_view, Section> names[] = {{"atoms", Section::Atoms},
                                                                  {"constraints", Section::Constraints},
                                                                  {"conditionals", Section::Conditionals},
                                                                  {"queries", Section::Queries}};
    for (const auto& [name, section] : names) {
      if (body.compare(0, name.size(), name) != 0) continue;
      std::size_t k = name.size();
      while (k < body.size() && is_blank(body[k])) ++k;
      if (k >= body.size() || body[k] != ':') continue;
      std::string rest = body.substr(k + 1);
      if (section == Section::Atoms) {
        if (atoms_declared_)
          throw KnowledgeBaseError(Kind::Syntax, "atoms declared twice", number, indent + 1);
        atoms_declared_ = true;
        add_atoms(Line{number, indent + k + 1, rest}, rest);
      } else if (rest.find_first_not_of(" \t") != std::string::npos) {
        // "constraints: X" style single-line entries are not part of the format.
        throw KnowledgeBaseError(Kind::Syntax, "entries go on the lines after '" + std::string(name) + ":'", number,
                                 indent + k + 2);
      }
      return section;
    }
    return std::nullopt;
  }

  void add_atoms(const Line& l, std::string_view list) {
    std::size_t i = 0;
    while (i < list.size()) {
      while (i < list.size() && (is_blank(list[i]) || list[i] == ',')) ++i;
      std::size_t b = i;
      while (i < list.size() && !is_blank(list[i]) && list[i] != ',') ++i;
      if (b == i) continue;
      std::string name(list.substr(b, i - b));
      std::size_t column = l.indent + b + 1;
      if (!is_identifier(name))
        throw KnowledgeBaseError(Kind::Syntax, "invalid atom name '" + name + "'", l.number, column);
      for (const auto& a : atoms_)
        if (a == name) throw KnowledgeBaseError(Kind::DuplicateName, "atom '" + name + "' declared twice", l.number, column);
      atoms_.push_back(name);
    }
  }

  Context build_context() {
    if (atoms_.empty() && (!constraint_lines_.empty() || !conditional_lines_.empty() || !query_lines_.empty()))
      throw KnowledgeBaseError(Kind::Syntax, "no atoms declared", 1, 1);
    if (atoms_.size() > Context::kMaxAtoms)
      throw KnowledgeBaseError(Kind::Syntax, "more than " + std::to_string(Context::kMaxAtoms) + " atoms", 1, 1);
    Context bare(atoms_);
    std::vector<Event> constraints;
    for (const Line& l : constraint_lines_) constraints.push_back(event_at(l, l.text, l.indent, bare));
    return Context(atoms_, std::move(constraints));
  }

  Event event_at(const Line& l, std::string_view text, std::size_t offset, const Context& ctx) {
    try {
      return detail::parse_event_at(text, ctx, offset);
    } catch (const ParseError& e) {
      throw KnowledgeBaseError(Kind::Syntax, e.message(), l.number, e.column());
    } catch (const UnknownAtomError& e) {
      throw KnowledgeBaseError(Kind::UnknownAtom, e.what(), l.number, offset + find_word(text, e.name()));
    }
  }

  ConditionalEvent conditional_at(const Line& l, std::string_view text, std::size_t offset, const Context& ctx) {
    try {
      return parse_conditional(text, ctx);
    } catch (const ParseError& e) {
      throw KnowledgeBaseError(Kind::Syntax, e.message(), l.number, offset + e.column());
    } catch (const UnknownAtomError& e) {
      throw KnowledgeBaseError(Kind::UnknownAtom, e.what(), l.number, offset + find_word(text, e.name()));
    }
  }

  void check_antecedent(const ConditionalEvent& ce, const Context& ctx, const Line& l) {
    if (ctx.is_impossible(ce.antecedent))
      throw KnowledgeBaseError(Kind::ImpossibleAntecedent, "impossible antecedent in '" + to_string(ce) + "'",
                               l.number, l.indent + 1);
  }

  void add_conditional(KnowledgeBase& kb, const Line& l, std::size_t position) {
    std::string_view body = l.text;
    std::size_t offset = l.indent;
    std::string name = "c" + std::to_string(position);

    // Optional "name:" prefix.
    std::size_t colon = body.find(':');
    if (colon != std::string_view::npos) {
      std::size_t e = colon;
      while (e > 0 && is_blank(body[e - 1])) --e;
      std::string candidate(body.substr(0, e));
      if (!is_identifier(candidate))
        throw KnowledgeBaseError(Kind::Syntax, "invalid conditional name '" + candidate + "'", l.number, offset + 1);
      name = candidate;
      std::size_t b = colon + 1;
      while (b < body.size() && is_blank(body[b])) ++b;
      body = body.substr(b);
      offset += b;
    }
    if (kb.find(name))
      throw KnowledgeBaseError(Kind::DuplicateName, "duplicate conditional name '" + name + "'", l.number,
                               l.indent + 1);

    std::optional<Rational> prob;
    std::size_t eq = body.rfind('=');
    if (eq != std::string_view::npos) {
      std::string_view value = body.substr(eq + 1);
      std::size_t lead = 0;
      while (lead < value.size() && is_blank(value[lead])) ++lead;
      std::size_t column = offset + eq + 1 + lead + 1;
      std::string trimmed(value.substr(lead));
      while (!trimmed.empty() && is_blank(trimmed.back())) trimmed.pop_back();
      try {
        prob = parse_rational(trimmed);
      } catch (const ParseError& e) {
        throw KnowledgeBaseError(Kind::Syntax, e.message(), l.number, column);
      }
      if (*prob < 0 || *prob > 1)
        throw KnowledgeBaseError(Kind::ProbabilityRange, "probability " + to_string(*prob) + " outside [0, 1]",
                                 l.number, column);
      body = body.substr(0, eq);
      while (!body.empty() && is_blank(body.back())) body.remove_suffix(1);
    }
    ConditionalEvent ce = conditional_at(l, body, offset, kb.context());
    check_antecedent(ce, kb.context(), l);
    kb.add(name, ce, prob);
  }

  bool atoms_declared_ = false;
  std::vector<std::string> atoms_;
  std::vector<Line> constraint_lines_;
  std::vector<Line> conditional_lines_;
  std::vector<Line> query_lines_;
};

}  // namespace

LoadedKnowledgeBase parse_kb(std::string_view text) { return Loader().run(text); }

LoadedKnowledgeBase load_kb(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KnowledgeBaseError(Kind::Io, "cannot open '" + path.string() + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kb(buf.str());
}

std::string serialize_kb(const KnowledgeBase& kb) {
  std::ostringstream out;
  out << "atoms:";
  for (const auto& a : kb.context().atoms()) out << ' ' << a;
  out << '\n';
  if (!kb.context().constraints().empty()) {
    out << "constraints:\n";
    for (const auto& c : kb.context().constraints()) out << "  " << to_string(c) << '\n';
  }
  if (kb.size() > 0) {
    out << "conditionals:\n";
    for (const auto& nc : kb.conditionals()) {
      out << "  " << nc.name << ": " << to_string(nc.conditional);
      if (nc.probability) out << " = " << to_string(*nc.probability);
      out << '\n';
    }
  }
  if (!kb.queries().empty()) {
    out << "queries:\n";
    for (const auto& q : kb.queries()) out << "  " << to_string(q) << '\n';
  }
  return out.str();
}

bool same_structure(const KnowledgeBase& a, const KnowledgeBase& b) {
  if (!a.context().same_as(b.context())) return false;
  if (a.size() != b.size() || a.queries().size() != b.queries().size()) return false;
  auto same_ce = [](const ConditionalEvent& x, const ConditionalEvent& y) {
    return x.consequent.same_structure(y.consequent) && x.antecedent.same_structure(y.antecedent);
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.conditionals()[i];
    const auto& y = b.conditionals()[i];
    if (x.name != y.name || x.probability != y.probability || !same_ce(x.conditional, y.conditional)) return false;
  }
  for (std::size_t i = 0; i < a.queries().size(); ++i)
    if (!same_ce(a.queries()[i], b.queries()[i])) return false;
  return true;
}

}  // namespace cohere
