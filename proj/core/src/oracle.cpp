#include "cohere/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cohere/error.hpp"

namespace cohere::oracle {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form of [rows | rhs]; returns the nonzero rows or
// nullopt when the system is inconsistent.
std::optional<Matrix> reduce(const Matrix& rows, const std::vector<Rational>& rhs) {
  Matrix m = rows;
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = 0; k <= cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  for (std::size_t i = r; i < m.size(); ++i)
    if (m[i][cols] != 0) return std::nullopt;
  m.resize(r);
  return m;
}

// Solves the square system given by `basis` columns of the reduced rows.
std::optional<std::vector<Rational>> solve_basis(const Matrix& reduced, const std::vector<std::size_t>& basis) {
  const std::size_t r = basis.size();
  const std::size_t rhs_col = reduced[0].size() - 1;
  Matrix a(r, std::vector<Rational>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) a[i][k] = reduced[i][basis[k]];
    a[i][r] = reduced[i][rhs_col];
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (p < r && a[p][c] == 0) ++p;
    if (p == r) return std::nullopt;
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k <= r; ++k) a[i][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = a[i][r] / a[i][i];
  return x;
}

struct System {
  std::vector<std::vector<TruthValue3>> profiles;
  Matrix points;  // premises only
  std::vector<Rational> probs;
};

// Constituents inside the union of all antecedents of `premises` and
// `extra`, grouped directly from the admissible worlds.
System make_system(const Assessment& a, const std::vector<ConditionalEvent>& extra) {
  std::vector<ConditionalEvent> all(a.family().begin(), a.family().end());
  all.insert(all.end(), extra.begin(), extra.end());
  std::set<std::vector<TruthValue3>> seen;
  System s;
  s.probs.assign(a.probs().begin(), a.probs().end());
  for (World w : a.context().worlds()) {
    std::vector<TruthValue3> profile;
    for (const auto& ce : all) {
      bool in = ce.antecedent.evaluate(w);
      profile.push_back(!in ? TruthValue3::Void
                            : ce.consequent.evaluate(w) ? TruthValue3::True : TruthValue3::False);
    }
    if (std::all_of(profile.begin(), profile.end(), [](TruthValue3 v) { return v == TruthValue3::Void; }))
      continue;
    if (!seen.insert(profile).second) continue;
    std::vector<Rational> q;
    for (std::size_t j = 0; j < a.size(); ++j)
      q.push_back(profile[j] == TruthValue3::Void ? s.probs[j] : Rational(profile[j] == TruthValue3::True ? 1 : 0));
    s.points.push_back(std::move(q));
    s.profiles.push_back(std::move(profile));
  }
  return s;
}

Polytope polytope_of(const Matrix& points, const std::vector<Rational>& probs) {
  const std::size_t m = points.size();
  Polytope p;
  for (std::size_t j = 0; j < probs.size(); ++j) {
    std::vector<Rational> row(m);
    for (std::size_t h = 0; h < m; ++h) row[h] = points[h][j];
    p.rows.push_back(std::move(row));
    p.rhs.push_back(probs[j]);
  }
  p.rows.emplace_back(m, Rational(1));
  p.rhs.emplace_back(1);
  return p;
}

std::vector<std::vector<Rational>> solutions(const System& s) { return vertices(polytope_of(s.points, s.probs)); }

Rational mass(const System& s, const std::vector<Rational>& x, std::size_t column) {
  Rational sum = 0;
  for (std::size_t h = 0; h < x.size(); ++h)
    if (s.profiles[h][column] != TruthValue3::Void) sum += x[h];
  return sum;
}

// Premises whose antecedents carry no mass at any of `verts`.
std::vector<std::size_t> zero_set(const System& s, const std::vector<std::vector<Rational>>& verts) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.probs.size(); ++j) {
    bool zero = std::all_of(verts.begin(), verts.end(), [&](const auto& x) { return mass(s, x, j) == 0; });
    if (zero) out.push_back(j);
  }
  return out;
}

}  // namespace

Polytope polytope(const SigmaSystem& s) { return polytope_of(s.points, s.probs); }

std::vector<std::vector<Rational>> vertices(const Polytope& p) {
  const Matrix& rows = p.rows;
  const std::vector<Rational>& rhs = p.rhs;
  if (rows.size() != rhs.size()) throw std::invalid_argument("row/rhs count mismatch");
  if (rows.empty()) throw std::invalid_argument("vertex enumeration needs at least one row");
  const std::size_t n = rows[0].size();
  if (n > kMaxVariables)
    throw SizeLimitError("vertex enumeration limited to " + std::to_string(kMaxVariables) + " variables, got " +
                         std::to_string(n));
  auto reduced = reduce(rows, rhs);
  if (!reduced) return {};
  std::set<std::vector<Rational>> found;
  const std::size_t r = reduced->size();
  if (r == 0) {
    found.insert(std::vector<Rational>(n));
    return {found.begin(), found.end()};
  }
  // Enumerate r-subsets of the columns via a selection mask.
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::vector<std::size_t> basis;
    for (std::size_t c = 0; c < n; ++c)
      if (pick[c]) basis.push_back(c);
    auto x = solve_basis(*reduced, basis);
    if (!x || std::any_of(x->begin(), x->end(), [](const Rational& v) { return v < 0; })) continue;
    std::vector<Rational> point(n);
    for (std::size_t k = 0; k < r; ++k) point[basis[k]] = (*x)[k];
    found.insert(std::move(point));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {found.begin(), found.end()};
}

bool is_coherent(const Assessment& a) {
  Assessment current = a;
  for (;;) {
    System s = make_system(current, {});
    auto verts = solutions(s);
    if (verts.empty()) return false;
    auto zero = zero_set(s, verts);
    if (zero.empty()) return true;
    current = current.subset(zero);
  }
}

namespace {

// Range of the target with no premises: scan the worlds of its antecedent.
ProbabilityInterval alone(const Context& ctx, const ConditionalEvent& target) {
  bool can_be_true = false, can_be_false = false;
  for (World w : ctx.worlds()) {
    TruthValue3 t = truth_value(target, w);
    can_be_true |= t == TruthValue3::True;
    can_be_false |= t == TruthValue3::False;
  }
  return {can_be_false ? 0 : 1, can_be_true ? 1 : 0};
}

ProbabilityInterval interval_of(const Assessment& a, const ConditionalEvent& target) {
  System s = make_system(a, {target});
  const std::size_t t = a.size();
  auto verts = solutions(s);
  if (verts.empty()) throw std::logic_error("no solution for a coherent assessment");

  std::optional<ProbabilityInterval> range;
  std::vector<std::vector<Rational>> null_face;
  for (const auto& x : verts) {
    Rational den = mass(s, x, t);
    if (den == 0) {
      null_face.push_back(x);
      continue;
    }
    Rational num = 0;
    for (std::size_t h = 0; h < x.size(); ++h)
      if (s.profiles[h][t] == TruthValue3::True) num += x[h];
    Rational ratio = num / den;
    if (!range) range = ProbabilityInterval{ratio, ratio};
    range->lo = std::min(range->lo, ratio);
    range->hi = std::max(range->hi, ratio);
  }
  if (null_face.empty()) return *range;

  auto zero = zero_set(s, null_face);
  ProbabilityInterval rest = zero.empty() ? alone(a.context(), target) : interval_of(a.subset(zero), target);
  if (!range) return rest;
  return {std::min(range->lo, rest.lo), std::max(range->hi, rest.hi)};
}

}  // namespace

ProbabilityInterval extension_interval_bruteforce(const Assessment& a, const ConditionalEvent& target) {
  require_valid(target, a.context());
  if (!is_coherent(a)) throw IncoherentAssessmentError("the premise assessment is incoherent");
  return interval_of(a, target);
}

}  // namespace cohere::oracle
