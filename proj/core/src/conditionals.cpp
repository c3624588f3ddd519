#include "cohere/conditionals.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cohere/error.hpp"
#include "parse_detail.hpp"

namespace cohere {

std::string_view to_string(TruthValue3 v) {
  switch (v) {
    case TruthValue3::False: return "False";
    case TruthValue3::Void: return "Void";
    case TruthValue3::True: return "True";
  }
  return "?";
}

void require_valid(const ConditionalEvent& ce, const Context& ctx) {
  if (ctx.is_impossible(ce.antecedent))
    throw ImpossibleAntecedentError("impossible antecedent in '" + to_string(ce) + "'");
}

void require_valid(std::span<const ConditionalEvent> family, const Context& ctx) {
  for (const auto& ce : family) require_valid(ce, ctx);
}

ConditionalEvent make_conditional(const Context& ctx, Event consequent, Event antecedent) {
  ConditionalEvent ce(std::move(consequent), std::move(antecedent));
  require_valid(ce, ctx);
  return ce;
}

TruthValue3 truth_value(const ConditionalEvent& ce, World w) {
  if (!ce.antecedent.evaluate(w)) return TruthValue3::Void;
  return ce.consequent.evaluate(w) ? TruthValue3::True : TruthValue3::False;
}

ConditionalEvent negate(const ConditionalEvent& ce) { return {!ce.consequent, ce.antecedent}; }

ConditionalEvent quasi_conjunction(std::span<const ConditionalEvent> family) {
  if (family.empty()) throw std::invalid_argument("quasi conjunction of an empty family");
  if (family.size() == 1) return family.front();
  auto term = [](const ConditionalEvent& ce) { return (ce.consequent & ce.antecedent) | !ce.antecedent; };
  Event consequent = term(family[0]);
  Event antecedent = family[0].antecedent;
  for (std::size_t i = 1; i < family.size(); ++i) {
    consequent = consequent & term(family[i]);
    antecedent = antecedent | family[i].antecedent;
  }
  return {consequent, antecedent};
}

ConditionalEvent quasi_disjunction(std::span<const ConditionalEvent> family) {
  if (family.empty()) throw std::invalid_argument("quasi disjunction of an empty family");
  if (family.size() == 1) return family.front();
  Event consequent = family[0].consequent & family[0].antecedent;
  Event antecedent = family[0].antecedent;
  for (std::size_t i = 1; i < family.size(); ++i) {
    consequent = consequent | (family[i].consequent & family[i].antecedent);
    antecedent = antecedent | family[i].antecedent;
  }
  return {consequent, antecedent};
}

bool gn_includes(const ConditionalEvent& a, const ConditionalEvent& b, const Context& ctx) {
  const Event& A = a.consequent;
  const Event& H = a.antecedent;
  const Event& B = b.consequent;
  const Event& K = b.antecedent;
  return ctx.is_impossible(A & H & !B & K) && ctx.is_impossible((!H) & (!B) & K) &&
         ctx.is_impossible(A & H & !K);
}

ConditionalEvent n_conditional(std::span<const Event> events, const Context& ctx) {
  if (events.size() < 2) throw std::invalid_argument("n-conditional needs at least two events");
  for (const auto& e : events)
    if (ctx.is_impossible(e))
      throw ImpossibleAntecedentError("n-conditional of an impossible event '" + to_string(e) + "'");
  Event all = events[0];
  Event any = events[0];
  for (std::size_t i = 1; i < events.size(); ++i) {
    all = all & events[i];
    any = any | events[i];
  }
  return make_conditional(ctx, all, any);
}

bool equivalent(const ConditionalEvent& a, const ConditionalEvent& b, const Context& ctx) {
  for (World w : ctx.worlds())
    if (truth_value(a, w) != truth_value(b, w)) return false;
  // Equal truth functions already force equal antecedents (Void exactly off
  // the antecedent); the explicit check keeps the definition literal.
  return ctx.equivalent(a.antecedent, b.antecedent);
}

std::string to_string(const ConditionalEvent& ce) {
  auto side = [](const Event& e) {
    std::string s = to_string(e);
    return e.kind() == Event::Kind::Or ? "(" + s + ")" : s;
  };
  return side(ce.consequent) + " | " + side(ce.antecedent);
}

ConditionalEvent parse_conditional(std::string_view text, const Context& ctx) {
  std::vector<std::size_t> bars;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == '|' && depth == 0) bars.push_back(i);
  }
  if (bars.empty()) {
    // Surface syntax errors of the whole text before complaining about the bar.
    detail::parse_event_at(text, ctx, 0);
    throw ParseError("expected a conditioning bar '|' in '" + std::string(text) + "'", text.size() + 1);
  }
  std::optional<ParseError> first_error;
  for (std::size_t bar : bars) {
    try {
      Event lhs = detail::parse_event_at(text.substr(0, bar), ctx, 0);
      Event rhs = detail::parse_event_at(text.substr(bar + 1), ctx, bar + 1);
      return {lhs, rhs};
    } catch (const ParseError& e) {
      if (!first_error) first_error = e;
    }
  }
  throw *first_error;
}

ConstituentSet constituents(std::span<const ConditionalEvent> family, const Context& ctx,
                            std::size_t max_constituents) {
  if (family.empty()) throw std::invalid_argument("constituents of an empty family");
  require_valid(family, ctx);

  ConstituentSet out;
  std::map<std::vector<TruthValue3>, std::size_t> index;
  std::vector<TruthValue3> profile(family.size());
  for (World w : ctx.worlds()) {
    bool all_void = true;
    for (std::size_t j = 0; j < family.size(); ++j) {
      profile[j] = truth_value(family[j], w);
      all_void = all_void && profile[j] == TruthValue3::Void;
    }
    if (all_void) {
      if (!out.c0) out.c0 = Constituent{profile, {}};
      out.c0->worlds.push_back(w);
      continue;
    }
    auto [it, inserted] = index.try_emplace(profile, out.inside.size());
    if (inserted) {
      if (out.inside.size() >= max_constituents)
        throw SizeLimitError("more than " + std::to_string(max_constituents) +
                             " constituents; raise COHERE_MAX_CONSTITUENTS to continue");
      out.inside.push_back(Constituent{profile, {}});
    }
    out.inside[it->second].worlds.push_back(w);
  }
  return out;
}

}  // namespace cohere
