#include "cohere/coherence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "cohere/error.hpp"

namespace cohere {

Assessment::Assessment(Context ctx, std::vector<ConditionalEvent> family, std::vector<Rational> probs)
    : ctx_(std::move(ctx)), family_(std::move(family)), probs_(std::move(probs)) {
  if (family_.empty()) throw std::invalid_argument("assessment of an empty family");
  if (family_.size() != probs_.size())
    throw std::invalid_argument("assessment has " + std::to_string(family_.size()) +
                                " conditional events but " + std::to_string(probs_.size()) +
                                " probabilities");
  require_unit(std::span<const Rational>(probs_), "probability");
  require_valid(family_, ctx_);
}

Assessment Assessment::subset(std::span<const std::size_t> indices) const {
  std::vector<ConditionalEvent> f;
  std::vector<Rational> p;
  for (std::size_t i : indices) {
    if (i >= family_.size()) throw std::out_of_range("assessment index out of range");
    f.push_back(family_[i]);
    p.push_back(probs_[i]);
  }
  return Assessment(ctx_, std::move(f), std::move(p));
}

Assessment Assessment::extended(const ConditionalEvent& ce, const Rational& p) const {
  auto f = family_;
  auto q = probs_;
  f.push_back(ce);
  q.push_back(p);
  return Assessment(ctx_, std::move(f), std::move(q));
}

lp::Problem SigmaSystem::problem() const {
  const std::size_t m = constituent_count();
  const std::size_t n = size();
  lp::Problem p;
  p.objective.assign(m, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(m);
    for (std::size_t h = 0; h < m; ++h) row[h] = points[h][j];
    p.rows.push_back(std::move(row));
    p.rhs.push_back(probs[j]);
  }
  p.rows.emplace_back(m, Rational(1));
  p.rhs.emplace_back(1);
  return p;
}

SigmaSystem build_sigma(const Assessment& a, const EngineOptions& opts) {
  return build_sigma(a, {}, opts);
}

SigmaSystem build_sigma(const Assessment& a, std::span<const ConditionalEvent> extra,
                        const EngineOptions& opts) {
  std::vector<ConditionalEvent> all(a.family().begin(), a.family().end());
  all.insert(all.end(), extra.begin(), extra.end());
  ConstituentSet cs = constituents(all, a.context(), opts.max_constituents);

  SigmaSystem s;
  s.probs.assign(a.probs().begin(), a.probs().end());
  const std::size_t n = a.size();
  for (auto& c : cs.inside) {
    std::vector<Rational> q(n);
    for (std::size_t j = 0; j < n; ++j) {
      switch (c.profile[j]) {
        case TruthValue3::True: q[j] = 1; break;
        case TruthValue3::False: q[j] = 0; break;
        case TruthValue3::Void: q[j] = s.probs[j]; break;
      }
    }
    s.points.push_back(std::move(q));
    s.profiles.push_back(std::move(c.profile));
  }
  return s;
}

std::vector<Rational> gains(const SigmaSystem& s, std::span<const Rational> stakes) {
  if (stakes.size() != s.size()) throw std::invalid_argument("one stake per conditional event expected");
  std::vector<Rational> g(s.constituent_count());
  for (std::size_t h = 0; h < g.size(); ++h)
    for (std::size_t j = 0; j < stakes.size(); ++j) g[h] += stakes[j] * (s.points[h][j] - s.probs[j]);
  return g;
}

namespace {

// Stakes s with sum_j s_j (q_hj - p_j) >= 1 for every h, written with
// s = s_plus - s_minus and a surplus e_h.
std::optional<std::vector<Rational>> dutch_book(const SigmaSystem& s) {
  const std::size_t m = s.constituent_count();
  const std::size_t n = s.size();
  lp::Problem p;
  p.objective.assign(2 * n + m, 0);
  for (std::size_t h = 0; h < m; ++h) {
    std::vector<Rational> row(2 * n + m);
    for (std::size_t j = 0; j < n; ++j) {
      Rational coeff = s.points[h][j] - s.probs[j];
      row[j] = coeff;
      row[n + j] = -coeff;
    }
    row[2 * n + h] = -1;
    p.rows.push_back(std::move(row));
    p.rhs.emplace_back(1);
  }
  auto x = lp::feasible_point(std::move(p));
  if (!x) return std::nullopt;
  std::vector<Rational> stakes(n);
  for (std::size_t j = 0; j < n; ++j) stakes[j] = (*x)[j] - (*x)[n + j];
  return stakes;
}

// Maximum of the mass on the constituents selected by `pick` over the
// solutions of `s`.
template <typename Pick>
Rational max_mass(const SigmaSystem& s, Pick pick) {
  lp::Problem p = s.problem();
  for (std::size_t h = 0; h < s.constituent_count(); ++h) p.objective[h] = pick(h) ? 1 : 0;
  lp::Solution sol = lp::maximize(p);
  if (sol.status != lp::Status::Optimal) throw std::invalid_argument("Sigma has no solution");
  return sol.value;
}

template <typename Pick>
Rational min_mass(const SigmaSystem& s, Pick pick) {
  lp::Problem p = s.problem();
  for (std::size_t h = 0; h < s.constituent_count(); ++h) p.objective[h] = pick(h) ? 1 : 0;
  lp::Solution sol = lp::minimize(p);
  if (sol.status != lp::Status::Optimal) throw std::invalid_argument("Sigma has no solution");
  return sol.value;
}

// The same system with the constituents failing `keep` forced to zero mass.
template <typename Keep>
SigmaSystem restrict_to(const SigmaSystem& s, Keep keep) {
  SigmaSystem r;
  r.probs = s.probs;
  for (std::size_t h = 0; h < s.constituent_count(); ++h) {
    if (!keep(h)) continue;
    r.profiles.push_back(s.profiles[h]);
    r.points.push_back(s.points[h]);
  }
  return r;
}

}  // namespace

Feasibility sigma_feasible(const SigmaSystem& s) {
  Feasibility f;
  if (auto x = lp::feasible_point(s.problem())) {
    f.witness = std::move(*x);
    return f;
  }
  f.stakes = dutch_book(s);
  if (!f.stakes) throw std::logic_error("Sigma is neither solvable nor refuted by a Dutch book");
  return f;
}

SolutionFunctionals solution_functionals(const SigmaSystem& s) {
  SolutionFunctionals out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    out.maxima.push_back(max_mass(s, [&](std::size_t h) { return s.in_antecedent(h, j); }));
    if (out.maxima.back() == 0) out.zero_set.push_back(j);
  }
  return out;
}

CoherenceVerdict check_coherence(const Assessment& a, const EngineOptions& opts) {
  CoherenceVerdict v;
  std::vector<std::size_t> indices(a.size());
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  Assessment current = a;
  for (;;) {
    TraceLevel level;
    level.indices = indices;
    level.sigma = build_sigma(current, opts);
    Feasibility f = sigma_feasible(level.sigma);
    if (!f.feasible()) {
      level.stakes = f.stakes;
      v.coherent = false;
      v.certificate = std::move(f.stakes);
      v.trace.push_back(std::move(level));
      return v;
    }
    level.witness = f.witness;
    SolutionFunctionals fn = solution_functionals(level.sigma);
    level.maxima = fn.maxima;
    for (std::size_t j : fn.zero_set) level.zero_set.push_back(indices[j]);
    if (fn.zero_set.empty()) {
      v.coherent = true;
      v.witness = std::move(f.witness);
      v.trace.push_back(std::move(level));
      return v;
    }
    if (fn.zero_set.size() == indices.size())
      throw std::logic_error("every antecedent has zero upper probability");
    std::vector<std::size_t> next = level.zero_set;
    current = current.subset(fn.zero_set);
    indices = std::move(next);
    v.trace.push_back(std::move(level));
  }
}

std::string to_string(const ProbabilityInterval& iv) {
  return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

namespace {

// Extreme values of mass(target true) / mass(target antecedent) over the
// solutions of `s` with a positive denominator, via y = t lambda and the
// normalisation sum_{antecedent} y = 1.
ProbabilityInterval ratio_range(const SigmaSystem& s, std::size_t target) {
  const std::size_t m = s.constituent_count();
  const std::size_t n = s.size();
  lp::Problem p;
  p.objective.assign(m + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(m + 1);
    for (std::size_t h = 0; h < m; ++h) row[h] = s.points[h][j];
    row[m] = -s.probs[j];
    p.rows.push_back(std::move(row));
    p.rhs.emplace_back(0);
  }
  std::vector<Rational> total(m + 1, Rational(1));
  total[m] = -1;
  p.rows.push_back(std::move(total));
  p.rhs.emplace_back(0);
  std::vector<Rational> den(m + 1);
  for (std::size_t h = 0; h < m; ++h) {
    if (s.in_antecedent(h, target)) den[h] = 1;
    if (s.profiles[h][target] == TruthValue3::True) p.objective[h] = 1;
  }
  p.rows.push_back(std::move(den));
  p.rhs.emplace_back(1);

  lp::Solution lo = lp::minimize(p);
  lp::Solution hi = lp::maximize(p);
  if (lo.status != lp::Status::Optimal || hi.status != lp::Status::Optimal)
    throw std::logic_error("ratio program failed although the antecedent can carry mass");
  return {lo.value, hi.value};
}

ProbabilityInterval coherent_set(const Assessment& a, const ConditionalEvent& target,
                                 const EngineOptions& opts, bool* vacuous);

// Values the target can take on its own: 1 when its antecedent implies the
// consequent, 0 when it excludes it, anything otherwise.
ProbabilityInterval standalone_range(const ConditionalEvent& target, const Context& ctx) {
  const Event& e = target.consequent;
  const Event& h = target.antecedent;
  if (ctx.is_impossible((!e) & h)) return {1, 1};
  if (ctx.is_impossible(e & h)) return {0, 0};
  return {0, 1};
}

// Bounds imposed by the premises whose antecedents carry no mass on any
// solution of `s`, together with the target itself.
ProbabilityInterval residual_bounds(const Assessment& a, const SigmaSystem& s,
                                    const ConditionalEvent& target, const EngineOptions& opts) {
  std::vector<std::size_t> zero = solution_functionals(s).zero_set;
  if (zero.empty()) return standalone_range(target, a.context());
  return coherent_set(a.subset(zero), target, opts, nullptr);
}

ProbabilityInterval coherent_set(const Assessment& a, const ConditionalEvent& target,
                                 const EngineOptions& opts, bool* vacuous) {
  const ConditionalEvent extra[] = {target};
  SigmaSystem s = build_sigma(a, extra, opts);
  const std::size_t t = a.size();
  auto in_target = [&](std::size_t h) { return s.in_antecedent(h, t); };

  if (!lp::feasible_point(s.problem())) throw std::logic_error("Sigma of a coherent assessment has no solution");
  if (max_mass(s, in_target) == 0) {
    if (vacuous) *vacuous = true;
    return residual_bounds(a, s, target, opts);
  }
  ProbabilityInterval range = ratio_range(s, t);
  if (min_mass(s, in_target) > 0) return range;

  // Solutions giving the antecedent no mass admit further values of z.
  SigmaSystem null_face = restrict_to(s, [&](std::size_t h) { return !in_target(h); });
  ProbabilityInterval extra_range = residual_bounds(a, null_face, target, opts);
  return {std::min(range.lo, extra_range.lo), std::max(range.hi, extra_range.hi)};
}

bool accepts(const Assessment& a, const ConditionalEvent& target, const Rational& z,
             const EngineOptions& opts) {
  return check_coherence(a.extended(target, z), opts).coherent;
}

// Moves `bad` towards `good` (which is accepted) until the gap falls below
// 2^-32; returns the last accepted point.
Rational shrink(const Assessment& a, const ConditionalEvent& target, Rational good, Rational bad,
                const EngineOptions& opts) {
  const Rational eps(1, 4294967296UL);
  while (abs(good - bad) > eps) {
    Rational mid = (good + bad) / 2;
    if (accepts(a, target, mid, opts))
      good = mid;
    else
      bad = mid;
  }
  return good;
}

}  // namespace

ExtensionResult extension_interval(const Assessment& a, const ConditionalEvent& target,
                                   const EngineOptions& opts) {
  require_valid(target, a.context());
  if (!check_coherence(a, opts).coherent)
    throw IncoherentAssessmentError("the premise assessment is incoherent");

  ExtensionResult r;
  r.interval = coherent_set(a, target, opts, &r.vacuous);
  r.lo_validated = accepts(a, target, r.interval.lo, opts);
  r.hi_validated = r.interval.lo == r.interval.hi ? r.lo_validated : accepts(a, target, r.interval.hi, opts);
  if (r.lo_validated && r.hi_validated) return r;

  if (!r.lo_validated) r.warnings.push_back("lower bound " + to_string(r.interval.lo) + " failed validation");
  if (!r.hi_validated) r.warnings.push_back("upper bound " + to_string(r.interval.hi) + " failed validation");
  ProbabilityInterval iv = r.interval;
  std::optional<Rational> inner;
  if (r.lo_validated) inner = iv.lo;
  else if (r.hi_validated) inner = iv.hi;
  else if (Rational mid = (iv.lo + iv.hi) / 2; accepts(a, target, mid, opts)) inner = mid;
  if (!inner) {
    r.warnings.push_back("no accepted point found; interval left unchanged");
    return r;
  }
  if (!r.lo_validated) iv.lo = shrink(a, target, *inner, iv.lo, opts);
  if (!r.hi_validated) iv.hi = shrink(a, target, *inner, iv.hi, opts);
  r.warnings.push_back("interval shrunk to " + to_string(iv) + " (approximate)");
  r.interval = iv;
  return r;
}

}  // namespace cohere
