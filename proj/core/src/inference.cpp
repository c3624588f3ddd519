#include "cohere/inference.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cohere/error.hpp"
#include "cohere/tnorms.hpp"

namespace cohere {

void KnowledgeBase::add(std::string name, ConditionalEvent ce, std::optional<Rational> probability) {
  if (find(name)) throw std::invalid_argument("duplicate conditional name '" + name + "'");
  require_valid(ce, ctx_);
  if (probability) require_unit(*probability, "probability of '" + name + "'");
  conditionals_.push_back({std::move(name), std::move(ce), std::move(probability)});
}

void KnowledgeBase::add_query(ConditionalEvent ce) {
  require_valid(ce, ctx_);
  queries_.push_back(std::move(ce));
}

const NamedConditional* KnowledgeBase::find(std::string_view name) const {
  for (const auto& nc : conditionals_)
    if (nc.name == name) return &nc;
  return nullptr;
}

std::vector<ConditionalEvent> KnowledgeBase::family() const {
  std::vector<ConditionalEvent> out;
  for (const auto& nc : conditionals_) out.push_back(nc.conditional);
  return out;
}

bool KnowledgeBase::fully_assessed() const {
  return std::all_of(conditionals_.begin(), conditionals_.end(),
                     [](const NamedConditional& nc) { return nc.probability.has_value(); });
}

namespace {

Assessment all_ones(std::span<const ConditionalEvent> family, const Context& ctx) {
  return Assessment(ctx, {family.begin(), family.end()}, std::vector<Rational>(family.size(), Rational(1)));
}

}  // namespace

bool p_consistent(std::span<const ConditionalEvent> family, const Context& ctx, const EngineOptions& opts) {
  return check_coherence(all_ones(family, ctx), opts).coherent;
}

bool p_consistent(const KnowledgeBase& kb, const EngineOptions& opts) {
  auto f = kb.family();
  return p_consistent(f, kb.context(), opts);
}

bool p_entails(std::span<const ConditionalEvent> family, const ConditionalEvent& target, const Context& ctx,
               const EngineOptions& opts) {
  Assessment a = all_ones(family, ctx);
  if (!check_coherence(a, opts).coherent) throw NotPConsistentError("the family is not p-consistent");
  ProbabilityInterval iv = extension_interval(a, target, opts).interval;
  return iv.lo == 1 && iv.hi == 1;
}

bool p_entails(const KnowledgeBase& kb, const ConditionalEvent& target, const EngineOptions& opts) {
  auto f = kb.family();
  return p_entails(f, target, kb.context(), opts);
}

bool p_entails_qc(std::span<const ConditionalEvent> family, const ConditionalEvent& target, const Context& ctx) {
  require_valid(target, ctx);
  if (ctx.is_impossible(target.consequent & target.antecedent))
    throw std::invalid_argument("target " + to_string(target) + " has an impossible consequent-antecedent conjunction");
  if (family.size() > kMaxQcSubsetFamily)
    throw SizeLimitError("subset search limited to " + std::to_string(kMaxQcSubsetFamily) + " conditionals");
  if (!p_consistent(family, ctx)) throw NotPConsistentError("the family is not p-consistent");
  if (ctx.implies(target.antecedent, target.consequent)) return true;

  const std::uint32_t n = static_cast<std::uint32_t>(family.size());
  std::vector<ConditionalEvent> subset;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    subset.clear();
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(family[i]);
    if (gn_includes(quasi_conjunction(subset), target, ctx)) return true;
  }
  return false;
}

bool p_entails_qc(const KnowledgeBase& kb, const ConditionalEvent& target) {
  auto f = kb.family();
  return p_entails_qc(f, target, kb.context());
}

std::string_view to_string(RuleKind k) {
  switch (k) {
    case RuleKind::QuasiAnd: return "qc";
    case RuleKind::QuasiOr: return "qd";
    case RuleKind::OrRule: return "or";
    case RuleKind::GNChain: return "gn";
    case RuleKind::Compound: return "compound";
    case RuleKind::DualCompound: return "dual";
    case RuleKind::Biconditional: return "bic";
  }
  return "?";
}

namespace {

void require_premises(std::span<const Rational> p) {
  if (p.empty()) throw std::invalid_argument("at least one premise probability is required");
  require_unit(p, "premise probability");
}

Rational lukasiewicz_sum(std::span<const Rational> p) {
  return tconorm(OperatorFamily::lukasiewicz(), p);
}

}  // namespace

ProbabilityInterval qc_bounds(std::span<const Rational> p) {
  require_premises(p);
  return {tnorm(OperatorFamily::lukasiewicz(), p), hamacher0_conary(p)};
}

ProbabilityInterval qd_bounds(std::span<const Rational> p) {
  require_premises(p);
  return {hamacher0_nary(p), lukasiewicz_sum(p)};
}

ProbabilityInterval or_rule_bounds(std::span<const Rational> p) {
  require_premises(p);
  return {hamacher0_nary(p), hamacher0_conary(p)};
}

ProbabilityInterval gn_chain_bounds(std::span<const Rational> p) {
  require_premises(p);
  if (!std::is_sorted(p.begin(), p.end()))
    throw std::invalid_argument("a Goodman-Nguyen chain needs nondecreasing probabilities");
  return {p.front(), p.back()};
}

ProbabilityInterval compound_bounds(std::span<const Rational> p) {
  require_premises(p);
  Rational z = tnorm(OperatorFamily::product(), p);
  return {z, z};
}

Rational dual_compound_value(const Rational& x, const Rational& y) {
  require_unit(x, "premise probability");
  require_unit(y, "premise probability");
  return tconorm(OperatorFamily::product(), x, y);
}

Rational biconditional_value(const Rational& x, const Rational& y) {
  const Rational p[] = {x, y};
  return hamacher0_nary(p);
}

RuleBounds rule_bounds(RuleKind kind, std::span<const Rational> p) {
  RuleBounds r{kind, {p.begin(), p.end()}, {}};
  auto pair = [&] {
    if (p.size() != 2) throw std::invalid_argument(std::string(to_string(kind)) + " takes exactly two premises");
  };
  switch (kind) {
    case RuleKind::QuasiAnd: r.interval = qc_bounds(p); break;
    case RuleKind::QuasiOr: r.interval = qd_bounds(p); break;
    case RuleKind::OrRule: r.interval = or_rule_bounds(p); break;
    case RuleKind::GNChain: r.interval = gn_chain_bounds(p); break;
    case RuleKind::Compound: r.interval = compound_bounds(p); break;
    case RuleKind::DualCompound: {
      pair();
      Rational z = dual_compound_value(p[0], p[1]);
      r.interval = {z, z};
      break;
    }
    case RuleKind::Biconditional: {
      pair();
      Rational z = biconditional_value(p[0], p[1]);
      r.interval = {z, z};
      break;
    }
  }
  return r;
}

namespace {

void require_region_args(std::span<const Rational> p, const Rational& gamma) {
  require_premises(p);
  require_unit(gamma, "gamma");
}

}  // namespace

bool in_L_gamma_qc(std::span<const Rational> p, const Rational& gamma) {
  require_region_args(p, gamma);
  if (gamma == 0) return true;
  Rational sum = std::accumulate(p.begin(), p.end(), Rational(0));
  return sum >= gamma + static_cast<long>(p.size()) - 1;
}

bool in_U_gamma_qc(std::span<const Rational> p, const Rational& gamma) {
  require_region_args(p, gamma);
  if (gamma == 1) return true;
  if (p[0] > gamma) return false;
  for (std::size_t k = 1; k < p.size(); ++k) {
    Rational u = hamacher0_conary(p.first(k));
    Rational r = (gamma - u) / (1 - (2 - gamma) * u);
    if (p[k] > r) return false;
  }
  return true;
}

bool in_L_gamma_qd(std::span<const Rational> p, const Rational& gamma) {
  require_region_args(p, gamma);
  if (gamma == 0) return true;
  if (p[0] < gamma) return false;
  for (std::size_t k = 1; k < p.size(); ++k) {
    Rational l = hamacher0_nary(p.first(k));
    Rational r = gamma * l / (l - gamma + gamma * l);
    if (p[k] < r) return false;
  }
  return true;
}

bool in_U_gamma_qd(std::span<const Rational> p, const Rational& gamma) {
  require_region_args(p, gamma);
  if (gamma == 1) return true;
  Rational sum = std::accumulate(p.begin(), p.end(), Rational(0));
  return sum <= gamma;
}

bool GammaRegion::contains(std::span<const Rational> p) const {
  if (operation == Operation::QuasiAnd)
    return bound == Bound::Lower ? in_L_gamma_qc(p, gamma) : in_U_gamma_qc(p, gamma);
  return bound == Bound::Lower ? in_L_gamma_qd(p, gamma) : in_U_gamma_qd(p, gamma);
}

Context loop_context(std::size_t n) {
  if (n < 2) throw std::invalid_argument("a loop needs at least two atoms");
  std::vector<std::string> atoms;
  for (std::size_t i = 1; i <= n; ++i) atoms.push_back("A" + std::to_string(i));
  return Context(std::move(atoms));
}

std::vector<ConditionalEvent> loop_family(const Context& ctx) {
  const std::size_t n = ctx.atom_count();
  std::vector<ConditionalEvent> out;
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(Event::atom(static_cast<AtomId>((i + 1) % n), ctx.atoms()[(i + 1) % n]),
                     Event::atom(static_cast<AtomId>(i), ctx.atoms()[i]));
  return out;
}

std::vector<ConditionalEvent> deranged_family(const Context& ctx, std::span<const std::size_t> sigma) {
  const std::size_t n = ctx.atom_count();
  if (sigma.size() != n) throw std::invalid_argument("permutation length must match the atom count");
  std::vector<bool> seen(n, false);
  std::vector<ConditionalEvent> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t target = sigma[i];
    if (target < 1 || target > n || seen[target - 1])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[target - 1] = true;
    out.emplace_back(Event::atom(static_cast<AtomId>(target - 1), ctx.atoms()[target - 1]),
                     Event::atom(static_cast<AtomId>(i), ctx.atoms()[i]));
  }
  return out;
}

bool loop_entails(std::size_t n, std::span<const std::size_t> derangement, const EngineOptions& opts) {
  if (n < 2 || n > 5) throw std::invalid_argument("loop size must be between 2 and 5");
  for (std::size_t i = 0; i < derangement.size(); ++i)
    if (derangement[i] == i + 1) throw std::invalid_argument("not a derangement: " + std::to_string(i + 1) + " is fixed");
  Context ctx = loop_context(n);
  auto loop = loop_family(ctx);
  auto other = deranged_family(ctx, derangement);
  auto entails_all = [&](const std::vector<ConditionalEvent>& from, const std::vector<ConditionalEvent>& to) {
    return std::all_of(to.begin(), to.end(), [&](const ConditionalEvent& t) { return p_entails(from, t, ctx, opts); });
  };
  return entails_all(loop, other) && entails_all(other, loop);
}

}  // namespace cohere
