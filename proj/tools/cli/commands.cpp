#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cohere/coherence.hpp"
#include "cohere/conditionals.hpp"
#include "cohere/error.hpp"
#include "cohere/inference.hpp"
#include "cohere/knowledge_base.hpp"
#include "cohere/oracle.hpp"
#include "cohere/tnorms.hpp"
#include "json_output.hpp"

namespace cohere::cli {

namespace {

/// Misuse of the command line that CLI11 itself cannot detect.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The brute-force path disagrees with the engine.
class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string kb_path;
  bool json = false;
  bool strict = false;
  bool oracle = false;
  std::string atoms;
  std::vector<std::string> constraints;
};

EngineOptions engine_options() {
  EngineOptions opts;
  if (const char* v = std::getenv("COHERE_MAX_CONSTITUENTS"); v && *v) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (*end != '\0' || n == 0) throw UsageError(std::string("COHERE_MAX_CONSTITUENTS must be a positive integer, got '") + v + "'");
    opts.max_constituents = static_cast<std::size_t>(n);
  }
  return opts;
}

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

struct Workspace {
  Context ctx;
  std::optional<LoadedKnowledgeBase> kb;
};

// The context comes from --kb, or else from --atoms/--constraint, with atoms
// inferred from every expression on the command line when not declared.
Workspace workspace(const Globals& g, const std::vector<std::string>& texts) {
  if (!g.kb_path.empty()) {
    if (!g.atoms.empty() || !g.constraints.empty())
      throw UsageError("--atoms/--constraint cannot be combined with --kb");
    LoadedKnowledgeBase loaded = load_kb(g.kb_path);
    Context ctx = loaded.kb.context();
    return {ctx, std::move(loaded)};
  }
  std::vector<std::string> atoms;
  if (!g.atoms.empty()) {
    atoms = split_names(g.atoms);
  } else {
    auto collect = [&](const std::string& t) {
      for (auto& name : scan_identifiers(t))
        if (std::find(atoms.begin(), atoms.end(), name) == atoms.end()) atoms.push_back(name);
    };
    for (const auto& t : texts) collect(t);
    for (const auto& t : g.constraints) collect(t);
  }
  return {Context::from_text(atoms, g.constraints), std::nullopt};
}

struct Assessed {
  ConditionalEvent ce;
  std::optional<Rational> p;
};

// "E | H" or "E | H = p".
Assessed parse_assessed(const std::string& text, const Context& ctx) {
  std::size_t eq = text.rfind('=');
  Assessed a;
  if (eq != std::string::npos) {
    std::string value = text.substr(eq + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t") + 1);
    a.p = parse_rational(value);
    require_unit(*a.p, "probability of '" + text.substr(0, eq) + "'");
  }
  a.ce = parse_conditional(std::string_view(text).substr(0, eq == std::string::npos ? text.size() : eq), ctx);
  require_valid(a.ce, ctx);
  return a;
}

std::vector<ConditionalEvent> parse_family(const std::vector<std::string>& items, const Context& ctx) {
  std::vector<ConditionalEvent> out;
  for (const auto& t : items) {
    Assessed a = parse_assessed(t, ctx);
    if (a.p) throw UsageError("no probability expected in '" + t + "'");
    out.push_back(a.ce);
  }
  return out;
}

Assessment parse_assessment(const std::vector<std::string>& items, const Context& ctx) {
  std::vector<ConditionalEvent> family;
  std::vector<Rational> probs;
  for (const auto& t : items) {
    Assessed a = parse_assessed(t, ctx);
    if (!a.p) throw UsageError("missing '= p' in '" + t + "'");
    family.push_back(a.ce);
    probs.push_back(*a.p);
  }
  if (family.empty()) throw UsageError("no conditional events given");
  return Assessment(ctx, std::move(family), std::move(probs));
}

// Premises come from the kb, or from --premise items, never both.
std::vector<ConditionalEvent> premises(const Workspace& ws, const std::vector<std::string>& items) {
  if (ws.kb) {
    if (!items.empty()) throw UsageError("--premise cannot be combined with --kb");
    auto f = ws.kb->kb.family();
    if (f.empty()) throw UsageError("the knowledge base has no conditionals");
    return f;
  }
  if (items.empty()) throw UsageError("give premises with --kb or --premise");
  return parse_family(items, ws.ctx);
}

Assessment assessment_from(const Workspace& ws, const std::vector<std::string>& items) {
  if (ws.kb) {
    if (!items.empty()) throw UsageError("conditionals cannot be given both inline and with --kb");
    if (!ws.kb->assessment) throw UsageError("every conditional in the knowledge base needs a probability");
    return *ws.kb->assessment;
  }
  return parse_assessment(items, ws.ctx);
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& t : items) out.push_back(parse_rational(t));
  return out;
}

std::string tuple(std::span<const Rational> qs) {
  std::string s = "(";
  for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? ", " : "") + to_string(qs[i]);
  return s + ")";
}

std::string index_set(std::span<const std::size_t> idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + std::to_string(idx[i] + 1);
  return s + "}";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int verdict_exit(const Globals& g, bool positive) { return g.strict && !positive ? kExitNegative : kExitOk; }

void cross_check(bool agree, const std::string& what) {
  if (!agree) throw OracleMismatch("brute-force oracle disagrees on " + what);
}

// --- check ---------------------------------------------------------------

int cmd_check(const Globals& g, const std::vector<std::string>& items, std::ostream& out) {
  Workspace ws = workspace(g, items);
  Assessment a = assessment_from(ws, items);
  CoherenceVerdict v = check_coherence(a, engine_options());
  if (g.oracle) cross_check(oracle::is_coherent(a) == v.coherent, "coherence");
  const char* verdict = v.coherent ? "COHERENT" : "INCOHERENT";

  if (g.json) {
    Json j{{"command", "check"}, {"verdict", verdict}};
    j.update(to_json(v));
    print_json(out, j);
    return verdict_exit(g, v.coherent);
  }
  out << verdict << '\n';
  for (std::size_t k = 0; k < v.trace.size(); ++k) {
    const TraceLevel& level = v.trace[k];
    out << "level " << k + 1 << ": J = " << index_set(level.indices);
    if (level.witness) out << ", I0 = " << index_set(level.zero_set);
    out << '\n';
  }
  if (v.witness) out << "witness: " << tuple(*v.witness) << '\n';
  if (v.certificate) {
    out << "stakes on " << index_set(v.deciding_level().indices) << ": " << tuple(*v.certificate) << '\n';
    out << "gains: " << tuple(gains(v.deciding_level().sigma, *v.certificate)) << '\n';
  }
  return verdict_exit(g, v.coherent);
}

// --- consistent ------------------------------------------------------------

int cmd_consistent(const Globals& g, const std::vector<std::string>& items, std::ostream& out) {
  Workspace ws = workspace(g, items);
  std::vector<ConditionalEvent> family;
  if (ws.kb) {
    if (!items.empty()) throw UsageError("conditionals cannot be given both inline and with --kb");
    family = ws.kb->kb.family();
  } else {
    family = parse_family(items, ws.ctx);
  }
  if (family.empty()) throw UsageError("no conditional events given");
  bool ok = p_consistent(family, ws.ctx, engine_options());
  if (g.oracle) {
    Assessment ones(ws.ctx, family, std::vector<Rational>(family.size(), Rational(1)));
    cross_check(oracle::is_coherent(ones) == ok, "p-consistency");
  }
  const char* verdict = ok ? "P-CONSISTENT" : "NOT P-CONSISTENT";
  if (g.json)
    print_json(out, Json{{"command", "consistent"}, {"verdict", verdict}, {"p_consistent", ok}});
  else
    out << verdict << '\n';
  return verdict_exit(g, ok);
}

// --- entails -------------------------------------------------------------

int cmd_entails(const Globals& g, const std::vector<std::string>& target_texts, const std::vector<std::string>& premise_texts,
                const std::string& method, std::ostream& out, std::ostream& err) {
  std::vector<std::string> texts = target_texts;
  texts.insert(texts.end(), premise_texts.begin(), premise_texts.end());
  Workspace ws = workspace(g, texts);
  std::vector<ConditionalEvent> family = premises(ws, premise_texts);

  std::vector<ConditionalEvent> targets = parse_family(target_texts, ws.ctx);
  if (targets.empty() && ws.kb) targets.assign(ws.kb->kb.queries().begin(), ws.kb->kb.queries().end());
  if (targets.empty()) throw UsageError("no target given and the knowledge base lists no queries");

  const EngineOptions opts = engine_options();
  const bool use_lp = method != "qc";
  const bool use_qc = method != "lp";
  bool all = true;
  bool disagreement = false;
  Json results = Json::array();
  for (const auto& t : targets) {
    std::optional<bool> lp, qc;
    if (use_lp) lp = p_entails(family, t, ws.ctx, opts);
    if (use_qc) qc = p_entails_qc(family, t, ws.ctx);
    if (g.oracle && lp) {
      Assessment ones(ws.ctx, family, std::vector<Rational>(family.size(), Rational(1)));
      ProbabilityInterval iv = oracle::extension_interval_bruteforce(ones, t);
      cross_check((iv.lo == 1 && iv.hi == 1) == *lp, "p-entailment of " + to_string(t));
    }
    bool entailed = lp ? *lp : *qc;
    if (lp && qc && *lp != *qc) {
      disagreement = true;
      err << "error: methods disagree on " << to_string(t) << " (lp: " << (*lp ? "yes" : "no")
          << ", qc: " << (*qc ? "yes" : "no") << ")\n";
    }
    all = all && entailed;
    const char* verdict = entailed ? "P-ENTAILED" : "NOT P-ENTAILED";
    if (g.json) {
      Json r{{"target", to_string(t)}, {"verdict", verdict}, {"entailed", entailed}};
      if (lp) r["lp"] = *lp;
      if (qc) r["qc"] = *qc;
      results.push_back(r);
    } else if (targets.size() == 1) {
      out << verdict << '\n';
    } else {
      out << verdict << "  " << to_string(t) << '\n';
    }
  }
  if (g.json) print_json(out, Json{{"command", "entails"}, {"method", method}, {"results", results}});
  if (disagreement) return kExitError;
  return verdict_exit(g, all);
}

// --- bounds --------------------------------------------------------------

const std::map<std::string, RuleKind>& rule_names() {
  static const std::map<std::string, RuleKind> names{
      {"qc", RuleKind::QuasiAnd},       {"qd", RuleKind::QuasiOr},        {"or", RuleKind::OrRule},
      {"gn", RuleKind::GNChain},        {"compound", RuleKind::Compound}, {"dual", RuleKind::DualCompound},
      {"bic", RuleKind::Biconditional}};
  return names;
}

// Conclusion of each rule for a concrete family.
ConditionalEvent rule_target(RuleKind kind, std::span<const ConditionalEvent> f, const Context& ctx) {
  auto conj = [&] {
    Event e = f[0].consequent;
    for (std::size_t i = 1; i < f.size(); ++i) e = e & f[i].consequent;
    return e;
  };
  switch (kind) {
    case RuleKind::QuasiAnd:
    case RuleKind::GNChain: return quasi_conjunction(f);
    case RuleKind::QuasiOr: return quasi_disjunction(f);
    case RuleKind::OrRule: {
      Event h = f[0].antecedent;
      for (std::size_t i = 1; i < f.size(); ++i) {
        if (!ctx.equivalent(f[i].consequent, f[0].consequent))
          throw UsageError("the Or rule needs premises with a common consequent");
        h = h | f[i].antecedent;
      }
      return {f[0].consequent, h};
    }
    case RuleKind::Compound: return {conj(), f[0].antecedent};
    case RuleKind::Biconditional: {
      Event any = f[0].consequent;
      for (std::size_t i = 1; i < f.size(); ++i) any = any | f[i].consequent;
      return {conj(), any};
    }
    case RuleKind::DualCompound: break;
  }
  throw UsageError("give the conclusion with --target for this rule");
}

// Logically independent family on fresh atoms for which the closed form of
// `kind` is the exact extension interval (used by --oracle).
std::pair<Assessment, ConditionalEvent> canonical_instance(RuleKind kind, std::span<const Rational> p) {
  const std::size_t n = p.size();
  std::vector<Rational> probs(p.begin(), p.end());
  std::vector<std::string> names;
  auto atom = [&](const Context& ctx, const std::string& name) { return ctx.atom(name); };
  switch (kind) {
    case RuleKind::QuasiAnd:
    case RuleKind::QuasiOr: {
      for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("A" + std::to_string(i));
        names.push_back("H" + std::to_string(i));
      }
      Context ctx(names);
      std::vector<ConditionalEvent> f;
      for (std::size_t i = 1; i <= n; ++i)
        f.emplace_back(atom(ctx, "A" + std::to_string(i)), atom(ctx, "H" + std::to_string(i)));
      ConditionalEvent t = kind == RuleKind::QuasiAnd ? quasi_conjunction(f) : quasi_disjunction(f);
      return {Assessment(ctx, f, probs), t};
    }
    case RuleKind::OrRule: {
      names.push_back("A");
      for (std::size_t i = 1; i <= n; ++i) names.push_back("H" + std::to_string(i));
      Context ctx(names);
      std::vector<ConditionalEvent> f;
      for (std::size_t i = 1; i <= n; ++i) f.emplace_back(atom(ctx, "A"), atom(ctx, "H" + std::to_string(i)));
      return {Assessment(ctx, f, probs), rule_target(kind, f, ctx)};
    }
    case RuleKind::GNChain: {
      if (n != 2) break;
      Context ctx = Context::from_text({"A", "H", "B", "K"}, std::vector<std::string>{"A & H & ~B & K", "~H & ~B & K", "A & H & ~K"});
      std::vector<ConditionalEvent> f{{atom(ctx, "A"), atom(ctx, "H")}, {atom(ctx, "B"), atom(ctx, "K")}};
      return {Assessment(ctx, f, probs), quasi_conjunction(f)};
    }
    case RuleKind::Compound: {
      names.push_back("H");
      for (std::size_t i = 1; i <= n; ++i) names.push_back("A" + std::to_string(i));
      Context ctx(names);
      std::vector<ConditionalEvent> f;
      Event given = atom(ctx, "H");
      for (std::size_t i = 1; i <= n; ++i) {
        Event a = atom(ctx, "A" + std::to_string(i));
        f.emplace_back(a, given);
        given = a & given;
      }
      return {Assessment(ctx, f, probs), rule_target(kind, f, ctx)};
    }
    case RuleKind::Biconditional: {
      if (n != 2) break;
      Context ctx(std::vector<std::string>{"A", "B"});
      std::vector<ConditionalEvent> f{{atom(ctx, "A"), atom(ctx, "B")}, {atom(ctx, "B"), atom(ctx, "A")}};
      return {Assessment(ctx, f, probs), rule_target(kind, f, ctx)};
    }
    case RuleKind::DualCompound: {
      if (n != 2) break;
      Context ctx(std::vector<std::string>{"A", "B", "H"});
      Event a = atom(ctx, "A"), b = atom(ctx, "B"), h = atom(ctx, "H");
      std::vector<ConditionalEvent> f{{a, h}, {b, (!a) & h}};
      return {Assessment(ctx, f, probs), ConditionalEvent(a | b, h)};
    }
  }
  throw UsageError("--oracle has no reference instance for this rule and premise count");
}

int cmd_bounds(const Globals& g, const std::string& rule, const std::vector<std::string>& values,
               const std::string& target_text, std::ostream& out, std::ostream& err) {
  auto it = rule_names().find(rule);
  if (it == rule_names().end()) throw UsageError("unknown rule '" + rule + "' (qc, qd, or, gn, compound, dual, bic)");
  const RuleKind kind = it->second;
  std::vector<Rational> p = parse_rationals(values);

  ProbabilityInterval iv;
  std::string method;
  if (!g.kb_path.empty()) {
    Workspace ws = workspace(g, {});
    if (!ws.ctx.constraints().empty())
      err << "warning: the knowledge base declares constraints; closed forms assume logically independent "
             "premises, so the linear-programming path is used\n";
    std::vector<ConditionalEvent> f = ws.kb->kb.family();
    if (f.empty()) throw UsageError("the knowledge base has no conditionals");
    if (p.empty()) {
      if (!ws.kb->assessment) throw UsageError("give premise probabilities or assess every conditional in the kb");
      p.assign(ws.kb->assessment->probs().begin(), ws.kb->assessment->probs().end());
    }
    if (p.size() != f.size())
      throw UsageError("expected " + std::to_string(f.size()) + " probabilities, got " + std::to_string(p.size()));
    ConditionalEvent target = target_text.empty() ? rule_target(kind, f, ws.ctx) : parse_family({target_text}, ws.ctx)[0];
    Assessment a(ws.ctx, f, p);
    ExtensionResult r = extension_interval(a, target, engine_options());
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';
    if (g.oracle) cross_check(oracle::extension_interval_bruteforce(a, target) == r.interval, "the bounds");
    iv = r.interval;
    method = "lp";
  } else {
    if (!target_text.empty()) throw UsageError("--target needs --kb");
    if (p.empty()) throw UsageError("no premise probabilities given");
    iv = rule_bounds(kind, p).interval;
    method = "closed-form";
    if (g.oracle) {
      auto [a, target] = canonical_instance(kind, p);
      cross_check(oracle::extension_interval_bruteforce(a, target) == iv, "the bounds");
    }
  }
  if (g.json)
    print_json(out, Json{{"command", "bounds"}, {"rule", rule}, {"method", method}, {"premises", to_json(p)}, {"interval", to_json(iv)}});
  else
    out << to_string(iv) << '\n';
  return kExitOk;
}

// --- region --------------------------------------------------------------

GammaRegion parse_region(const std::string& name, const Rational& gamma) {
  static const std::map<std::string, std::pair<GammaRegion::Bound, GammaRegion::Operation>> names{
      {"Lqc", {GammaRegion::Bound::Lower, GammaRegion::Operation::QuasiAnd}},
      {"Uqc", {GammaRegion::Bound::Upper, GammaRegion::Operation::QuasiAnd}},
      {"Lqd", {GammaRegion::Bound::Lower, GammaRegion::Operation::QuasiOr}},
      {"Uqd", {GammaRegion::Bound::Upper, GammaRegion::Operation::QuasiOr}}};
  auto it = names.find(name);
  if (it == names.end()) throw UsageError("unknown region '" + name + "' (Lqc, Uqc, Lqd, Uqd)");
  require_unit(gamma, "gamma");
  return GammaRegion{it->second.first, it->second.second, gamma};
}

int cmd_region(const Globals& g, const std::string& name, const std::string& gamma_text,
               const std::vector<std::string>& values, int grid, std::ostream& out) {
  GammaRegion region = parse_region(name, parse_rational(gamma_text));
  if (grid > 0) {
    if (!values.empty()) throw UsageError("--grid samples the unit square; omit the premise probabilities");
    // Rows from p2 = 1 down to 0, columns p1 = 0..1.
    std::vector<std::string> rows;
    for (int y = grid; y >= 0; --y) {
      std::string row;
      for (int x = 0; x <= grid; ++x) {
        const Rational p[] = {Rational(x, grid), Rational(y, grid)};
        row.push_back(region.contains(p) ? '#' : '.');
      }
      rows.push_back(row);
    }
    if (g.json) {
      print_json(out, Json{{"command", "region"}, {"region", name}, {"gamma", to_json(region.gamma)}, {"grid", grid}, {"rows", rows}});
    } else {
      out << name << " gamma=" << to_string(region.gamma) << " (x: p1 0..1 left to right, y: p2 1..0 top to bottom)\n";
      for (const auto& r : rows) out << r << '\n';
    }
    return kExitOk;
  }
  std::vector<Rational> p = parse_rationals(values);
  if (p.empty()) throw UsageError("no premise probabilities given");
  bool in = region.contains(p);
  if (g.json)
    print_json(out, Json{{"command", "region"}, {"region", name}, {"gamma", to_json(region.gamma)}, {"premises", to_json(p)}, {"member", in}});
  else
    out << (in ? "IN" : "NOT IN") << '\n';
  return verdict_exit(g, in);
}

// --- loop ----------------------------------------------------------------

int cmd_loop(const Globals& g, std::size_t n, std::vector<std::size_t> derangement, bool pairs, std::ostream& out) {
  if (n < 2 || n > 5) throw UsageError("--n must be between 2 and 5");
  if (derangement.empty()) {
    derangement.push_back(n);
    for (std::size_t i = 1; i < n; ++i) derangement.push_back(i);
  }
  if (derangement.size() != n) throw UsageError("the derangement needs exactly " + std::to_string(n) + " entries");
  const EngineOptions opts = engine_options();
  bool mutual = loop_entails(n, derangement, opts);
  Context ctx = loop_context(n);
  auto loop = loop_family(ctx);

  Json pair_results = Json::array();
  std::vector<std::string> pair_lines;
  bool all_pairs = true;
  if (pairs) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        ConditionalEvent t(ctx.atom(ctx.atoms()[i]), ctx.atom(ctx.atoms()[j]));
        bool e = p_entails(loop, t, ctx, opts);
        all_pairs = all_pairs && e;
        pair_lines.push_back(std::string(e ? "P-ENTAILED" : "NOT P-ENTAILED") + "  " + to_string(t));
        pair_results.push_back(Json{{"target", to_string(t)}, {"entailed", e}});
      }
  }
  const char* verdict = mutual ? "MUTUALLY P-ENTAILED" : "NOT MUTUALLY P-ENTAILED";
  if (g.json) {
    Json j{{"command", "loop"}, {"n", n}, {"derangement", derangement}, {"verdict", verdict}, {"mutual", mutual}};
    if (pairs) j["pairs"] = pair_results;
    print_json(out, j);
  } else {
    out << verdict << '\n';
    for (const auto& l : pair_lines) out << l << '\n';
  }
  return verdict_exit(g, mutual && all_pairs);
}

// --- truth-table -----------------------------------------------------------

char truth_letter(TruthValue3 v) {
  switch (v) {
    case TruthValue3::True: return 'T';
    case TruthValue3::False: return 'F';
    case TruthValue3::Void: return 'V';
  }
  return '?';
}

// Conjunction of the literals shared by every world of the class, e.g.
// "AHK^c"; atoms with multi-letter names are separated by blanks.
std::string constituent_label(const Constituent& c, const Context& ctx) {
  bool short_names = std::all_of(ctx.atoms().begin(), ctx.atoms().end(), [](const std::string& a) { return a.size() == 1; });
  std::string label;
  for (std::size_t i = 0; i < ctx.atom_count(); ++i) {
    const AtomId id = static_cast<AtomId>(i);
    bool first = c.worlds.front()[id];
    bool constant = std::all_of(c.worlds.begin(), c.worlds.end(), [&](World w) { return w[id] == first; });
    if (!constant) continue;
    if (!short_names && !label.empty()) label += ' ';
    label += ctx.atoms()[i] + (first ? "" : "^c");
  }
  return label.empty() ? "T" : label;
}

int cmd_truth_table(const Globals& g, const std::vector<std::string>& items, std::ostream& out) {
  Workspace ws = workspace(g, items);
  std::vector<ConditionalEvent> family;
  if (ws.kb && items.empty())
    family = ws.kb->kb.family();
  else
    family = parse_family(items, ws.ctx);
  if (family.empty()) throw UsageError("no conditional events given");

  std::vector<ConditionalEvent> columns = family;
  std::vector<std::string> headers;
  for (const auto& ce : family) headers.push_back(to_string(ce));
  if (family.size() > 1) {
    columns.push_back(quasi_conjunction(family));
    columns.push_back(quasi_disjunction(family));
    headers.push_back("C");
    headers.push_back("D");
  }
  ConstituentSet cs = constituents(columns, ws.ctx, engine_options().max_constituents);
  std::vector<const Constituent*> rows;
  if (cs.c0) rows.push_back(&*cs.c0);
  for (const auto& c : cs.inside) rows.push_back(&c);

  if (g.json) {
    Json jr = Json::array();
    for (const Constituent* c : rows) {
      std::vector<std::string> vals;
      for (TruthValue3 v : c->profile) vals.emplace_back(1, truth_letter(v));
      jr.push_back(Json{{"constituent", constituent_label(*c, ws.ctx)}, {"values", vals}});
    }
    print_json(out, Json{{"command", "truth-table"}, {"columns", headers}, {"rows", jr}});
    return kExitOk;
  }
  std::size_t label_width = std::string("constituent").size();
  for (const Constituent* c : rows) label_width = std::max(label_width, constituent_label(*c, ws.ctx).size());
  out << std::left << std::setw(static_cast<int>(label_width)) << "constituent";
  for (const auto& h : headers) out << "  " << h;
  out << '\n';
  for (const Constituent* c : rows) {
    out << std::left << std::setw(static_cast<int>(label_width)) << constituent_label(*c, ws.ctx);
    for (std::size_t k = 0; k < headers.size(); ++k)
      out << "  " << std::setw(static_cast<int>(headers[k].size())) << truth_letter(c->profile[k]);
    out << '\n';
  }
  return kExitOk;
}

// --- tnorm / tconorm -----------------------------------------------------

int cmd_operator(const Globals& g, bool conorm, const std::string& family_name, const std::string& lambda,
                 const std::vector<std::string>& values, std::ostream& out) {
  OperatorFamily f = OperatorFamily::parse(family_name, lambda.empty() ? std::nullopt : std::optional<std::string_view>(lambda));
  std::vector<Rational> args = parse_rationals(values);
  Rational v = conorm ? tconorm(f, args) : tnorm(f, args);
  if (g.json)
    print_json(out, Json{{"command", conorm ? "tconorm" : "tnorm"}, {"family", f.name()}, {"arguments", to_json(args)},
                         {"value", to_json(v)}, {"decimal", to_decimal(v)}});
  else
    out << to_string(v) << " (" << to_decimal(v) << ")\n";
  return kExitOk;
}

// --- extend --------------------------------------------------------------

int cmd_extend(const Globals& g, const std::string& target_text, const std::vector<std::string>& premise_texts,
               std::ostream& out, std::ostream& err) {
  std::vector<std::string> texts = premise_texts;
  texts.push_back(target_text);
  Workspace ws = workspace(g, texts);
  Assessment a = ws.kb ? assessment_from(ws, premise_texts) : parse_assessment(premise_texts, ws.ctx);
  ConditionalEvent target = parse_family({target_text}, ws.ctx)[0];
  ExtensionResult r = extension_interval(a, target, engine_options());
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  if (g.oracle) cross_check(oracle::extension_interval_bruteforce(a, target) == r.interval, "the extension interval");
  if (g.json) {
    Json j{{"command", "extend"}, {"target", to_string(target)}};
    j.update(to_json(r));
    print_json(out, j);
  } else {
    out << to_string(r.interval) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence checking, probabilistic entailment and t-norm bounds for conditional events", "cohere"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--kb", g.kb_path, "Knowledge-base file");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--strict", g.strict, "Exit with 1 on a negative verdict");
  app.add_flag("--oracle", g.oracle, "Cross-check with brute-force vertex enumeration (small inputs)")->group("");
  app.add_option("--atoms", g.atoms, "Atom names for inline expressions (default: inferred)");
  app.add_option("--constraint", g.constraints, "Event declared impossible (repeatable)");

  std::vector<std::string> items, premise_items, values, targets;
  std::string method = "lp", rule, region_name, gamma, family_name, lambda, target;
  int grid = 0;
  std::size_t loop_n = 0;
  std::vector<std::size_t> derangement;
  bool pairs = false;

  auto* check = app.add_subcommand("check", "Coherence of an assessment: --kb file or \"E | H = p\" items");
  check->add_option("assessment", items, "Assessed conditional events");
  auto* consistent = app.add_subcommand("consistent", "p-consistency of a family");
  consistent->add_option("family", items, "Conditional events");
  auto* entails = app.add_subcommand("entails", "p-entailment of targets (default: the kb queries)");
  entails->add_option("target", targets, "Target conditional events");
  entails->add_option("--premise", premise_items, "Premise conditional event (repeatable)");
  entails->add_option("--method", method, "lp, qc or both")->check(CLI::IsMember({"lp", "qc", "both"}));
  auto* bounds = app.add_subcommand("bounds", "Interval for a rule's conclusion");
  bounds->add_option("rule", rule, "qc, qd, or, gn, compound, dual or bic")->required();
  bounds->add_option("p", values, "Premise probabilities");
  bounds->add_option("--target", target, "Conclusion to bound (with --kb)");
  auto* region = app.add_subcommand("region", "Membership in a premise region L_gamma / U_gamma");
  region->add_option("region", region_name, "Lqc, Uqc, Lqd or Uqd")->required();
  region->add_option("p", values, "Premise probabilities");
  region->add_option("--gamma", gamma, "Threshold in [0, 1]")->required();
  region->add_option("--grid", grid, "Print an (N+1)x(N+1) membership map for two premises")->check(CLI::Range(1, 200));
  auto* loop = app.add_subcommand("loop", "Loop family versus a deranged family");
  loop->add_option("--n", loop_n, "Number of atoms (2..5)")->required();
  loop->add_option("--derangement", derangement, "1-based derangement (default: n 1 2 ... n-1)");
  loop->add_flag("--pairs", pairs, "Also decide A_i | A_j for all i != j");
  auto* table = app.add_subcommand("truth-table", "Three-valued truth table of a family with C and D");
  table->add_option("family", items, "Conditional events");
  auto* tn = app.add_subcommand("tnorm", "Evaluate a t-norm");
  auto* tc = app.add_subcommand("tconorm", "Evaluate a t-conorm");
  for (auto* sub : {tn, tc}) {
    sub->add_option("family", family_name, "min, prod, luk, drastic or hamacher")->required();
    sub->add_option("args", values, "Arguments in [0, 1]")->required();
    sub->add_option("--lambda", lambda, "Hamacher parameter (a/b or inf)");
  }
  auto* extend = app.add_subcommand("extend", "Coherent extension interval for a target");
  extend->add_option("target", target, "Target conditional event")->required();
  extend->add_option("--premise", premise_items, "Assessed premise \"E | H = p\" (repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*check) return cmd_check(g, items, out);
    if (*consistent) return cmd_consistent(g, items, out);
    if (*entails) return cmd_entails(g, targets, premise_items, method, out, err);
    if (*bounds) return cmd_bounds(g, rule, values, target, out, err);
    if (*region) return cmd_region(g, region_name, gamma, values, grid, out);
    if (*loop) return cmd_loop(g, loop_n, derangement, pairs, out);
    if (*table) return cmd_truth_table(g, items, out);
    if (*tn) return cmd_operator(g, false, family_name, lambda, values, out);
    if (*tc) return cmd_operator(g, true, family_name, lambda, values, out);
    if (*extend) return cmd_extend(g, target, premise_items, out, err);
  } catch (const OracleMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace cohere::cli
