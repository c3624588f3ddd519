#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cohere/coherence.hpp"
#include "cohere/conditionals.hpp"
#include "cohere/events.hpp"
#include "cohere/rational.hpp"

namespace cohere::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline ConditionalEvent ce(const char* text, const Context& ctx) {
  ConditionalEvent c = parse_conditional(text, ctx);
  require_valid(c, ctx);
  return c;
}

inline std::vector<ConditionalEvent> family(std::initializer_list<const char*> texts, const Context& ctx) {
  std::vector<ConditionalEvent> out;
  for (const char* t : texts) out.push_back(ce(t, ctx));
  return out;
}

inline std::vector<Rational> qs(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(q(t));
  return out;
}

inline ProbabilityInterval iv(const char* lo, const char* hi) { return {q(lo), q(hi)}; }

/// Seeded source of small random rationals and structures.
class Random {
 public:
  explicit Random(std::uint32_t seed) : rng_(seed) {}

  /// k / d with d in [1, max_den] and 0 <= k <= d.
  Rational unit(int max_den = 12) {
    int d = std::uniform_int_distribution<int>(1, max_den)(rng_);
    int k = std::uniform_int_distribution<int>(0, d)(rng_);
    Rational r(k, d);
    r.canonicalize();
    return r;
  }

  /// Strictly inside (0, 1).
  Rational open_unit(int max_den = 12) {
    int d = std::uniform_int_distribution<int>(2, max_den)(rng_);
    int k = std::uniform_int_distribution<int>(1, d - 1)(rng_);
    Rational r(k, d);
    r.canonicalize();
    return r;
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Random formula over the first `atoms` atoms of `ctx` with the given depth.
  Event event(const Context& ctx, int depth) {
    if (depth == 0 || coin(0.3)) {
      int a = integer(0, static_cast<int>(ctx.atom_count()) - 1);
      Event e = ctx.atom(ctx.atoms()[static_cast<std::size_t>(a)]);
      return coin(0.3) ? !e : e;
    }
    switch (integer(0, 2)) {
      case 0: return !event(ctx, depth - 1);
      case 1: return event(ctx, depth - 1) & event(ctx, depth - 1);
      default: return event(ctx, depth - 1) | event(ctx, depth - 1);
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace cohere::testing
