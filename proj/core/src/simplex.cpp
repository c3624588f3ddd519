#include "cohere/simplex.hpp"

#include <stdexcept>
#include <utility>

namespace cohere::lp {

namespace {

class Tableau {
 public:
  // Columns: original variables, then one artificial per row.
  Tableau(const Problem& p) : vars_(p.variables()), rows_(p.rows.size()) {
    if (p.rhs.size() != rows_) throw std::invalid_argument("rhs size does not match row count");
    cols_ = vars_ + rows_;
    a_.assign(rows_, std::vector<Rational>(cols_ + 1));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (p.rows[i].size() != vars_) throw std::invalid_argument("ragged constraint row");
      const bool flip = p.rhs[i] < 0;
      for (std::size_t j = 0; j < vars_; ++j) a_[i][j] = flip ? Rational(-p.rows[i][j]) : p.rows[i][j];
      a_[i][vars_ + i] = 1;
      a_[i][cols_] = flip ? Rational(-p.rhs[i]) : p.rhs[i];
      basis_[i] = vars_ + i;
    }
  }

  // Maximises cost . x over columns [0, limit). Returns false when unbounded.
  bool optimise(const std::vector<Rational>& cost, std::size_t limit) {
    for (;;) {
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (is_basic(j)) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < rows_; ++i)
          if (sgn(a_[i][j]) != 0) d -= cost_of(cost, basis_[i]) * a_[i][j];
        if (d > 0) {
          entering = j;
          break;
        }
      }
      if (entering == limit) return true;

      std::size_t leaving = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (a_[i][entering] <= 0) continue;
        Rational ratio = a_[i][cols_] / a_[i][entering];
        if (leaving == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == rows_) return false;
      pivot(leaving, entering);
    }
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_; ++i) v += cost_of(cost, basis_[i]) * a_[i][cols_];
    return v;
  }

  // After phase one: pivots zero-level artificials out of the basis and drops
  // rows that turn out to be linearly dependent.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_;) {
      if (basis_[i] < vars_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < vars_ && sgn(a_[i][j]) == 0) ++j;
      if (j < vars_) {
        pivot(i, j);
        ++i;
      } else {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --rows_;
      }
    }
  }

  std::vector<Rational> point() const {
    std::vector<Rational> x(vars_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < vars_) x[basis_[i]] = a_[i][cols_];
    return x;
  }

  std::size_t vars() const { return vars_; }
  std::size_t cols() const { return cols_; }

 private:
  bool is_basic(std::size_t j) const {
    for (std::size_t b : basis_)
      if (b == j) return true;
    return false;
  }

  static const Rational& cost_of(const std::vector<Rational>& cost, std::size_t j) {
    static const Rational zero = 0;
    return j < cost.size() ? cost[j] : zero;
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / a_[r][c];
    for (auto& v : a_[r]) v *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(a_[i][c]) == 0) continue;
      Rational factor = a_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(a_[r][j]) != 0) a_[i][j] -= factor * a_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t vars_;
  std::size_t rows_;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> a_;
  std::vector<std::size_t> basis_;
};

// Phase one; returns false when the constraints are infeasible.
bool phase_one(Tableau& t) {
  std::vector<Rational> cost(t.cols());
  for (std::size_t j = t.vars(); j < t.cols(); ++j) cost[j] = -1;
  t.optimise(cost, t.cols());  // bounded by 0
  if (t.value(cost) < 0) return false;
  t.expel_artificials();
  return true;
}

}  // namespace

Solution maximize(const Problem& p) {
  Tableau t(p);
  Solution s;
  if (!phase_one(t)) {
    s.status = Status::Infeasible;
    return s;
  }
  if (!t.optimise(p.objective, t.vars())) {
    s.status = Status::Unbounded;
    return s;
  }
  s.status = Status::Optimal;
  s.x = t.point();
  s.value = t.value(p.objective);
  return s;
}

Solution minimize(const Problem& p) {
  Problem negated = p;
  for (auto& c : negated.objective) c = -c;
  Solution s = maximize(negated);
  if (s.status == Status::Optimal) s.value = -s.value;
  return s;
}

std::optional<std::vector<Rational>> feasible_point(Problem p) {
  for (auto& c : p.objective) c = 0;
  Tableau t(p);
  if (!phase_one(t)) return std::nullopt;
  return t.point();
}

}  // namespace cohere::lp
