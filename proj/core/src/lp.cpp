#include "persuasion/lp.hpp"

#include <utility>

#include "persuasion/errors.hpp"

namespace persuasion {

int LPProblem::add_variable(std::string name, Rational objective_coeff, bool nonneg) {
  variables.push_back(std::move(name));
  nonnegative.push_back(nonneg);
  objective.push_back(std::move(objective_coeff));
  return static_cast<int>(variables.size()) - 1;
}

void LPProblem::add_eq(std::vector<Rational> row, Rational rhs) {
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

void LPProblem::add_ge(std::vector<Rational> row, Rational rhs) {
  ge_rows.push_back(std::move(row));
  ge_rhs.push_back(std::move(rhs));
}

void LPProblem::add_le(std::vector<Rational> row, Rational rhs) {
  for (auto& c : row) c = -c;
  add_ge(std::move(row), -rhs);
}

void LPProblem::check() const {
  const std::size_t n = variables.size();
  if (objective.size() != n || nonnegative.size() != n) {
    throw DomainError("LP objective/nonnegativity arity mismatch");
  }
  for (const auto& row : eq_rows) {
    if (row.size() != n) throw DomainError("LP equality row arity mismatch");
  }
  for (const auto& row : ge_rows) {
    if (row.size() != n) throw DomainError("LP inequality row arity mismatch");
  }
  if (eq_rhs.size() != eq_rows.size() || ge_rhs.size() != ge_rows.size()) {
    throw DomainError("LP rhs count mismatch");
  }
}

namespace {

// Dense simplex tableau over exact rationals.
struct Tableau {
  int rows = 0;
  int cols = 0;  // structural + surplus + artificial
  std::vector<std::vector<Rational>> a;  // rows x cols
  std::vector<Rational> rhs;
  std::vector<int> basis;  // basic column per row

  void pivot(int row, int col) {
    Rational inv = Rational(1) / a[row][col];
    for (auto& v : a[row]) v *= inv;
    rhs[row] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Rational factor = a[r][col];
      for (int c = 0; c < cols; ++c) {
        if (a[row][c].is_zero()) continue;
        a[r][c] -= factor * a[row][c];
      }
      rhs[r] -= factor * rhs[row];
    }
    basis[row] = col;
  }
};

// Maximizes cost.x over the tableau's feasible basis with Bland's rule.
// `allowed[c]` bars barred columns (artificials in phase 2).
// Returns false when unbounded.
bool run_simplex(Tableau& t, const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
  // Reduced-cost row, kept in sync with the basis by elimination.
  std::vector<Rational> z = cost;
  for (int r = 0; r < t.rows; ++r) {
    Rational factor = z[t.basis[r]];
    if (factor.is_zero()) continue;
    for (int c = 0; c < t.cols; ++c) {
      if (t.a[r][c].is_zero()) continue;
      z[c] -= factor * t.a[r][c];
    }
  }

  for (;;) {
    int entering = -1;
    for (int c = 0; c < t.cols; ++c) {
      if (allowed[c] && z[c].sign() > 0) {
        entering = c;  // Bland: lowest improving index
        break;
      }
    }
    if (entering < 0) return true;

    int leaving = -1;
    Rational best_ratio;
    for (int r = 0; r < t.rows; ++r) {
      if (t.a[r][entering].sign() <= 0) continue;
      Rational ratio = t.rhs[r] / t.a[r][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[r] < t.basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) return false;  // improving ray

    t.pivot(leaving, entering);
    Rational factor = z[entering];
    for (int c = 0; c < t.cols; ++c) {
      if (t.a[leaving][c].is_zero()) continue;
      z[c] -= factor * t.a[leaving][c];
    }
  }
}

}  // namespace

LPSolution solve_lp(const LPProblem& problem) {
  problem.check();
  const int n = problem.variable_count();

  // Standard-form columns: free variables split into positive/negative parts.
  struct Column {
    int var;
    int sign;  // +1 or -1
  };
  std::vector<Column> structural;
  for (int v = 0; v < n; ++v) {
    structural.push_back({v, +1});
    if (!problem.nonnegative[v]) structural.push_back({v, -1});
  }
  const int num_structural = static_cast<int>(structural.size());
  const int num_ge = static_cast<int>(problem.ge_rows.size());
  const int rows = static_cast<int>(problem.eq_rows.size()) + num_ge;
  const int num_artificial = rows;
  const int cols = num_structural + num_ge + num_artificial;

  Tableau t;
  t.rows = rows;
  t.cols = cols;
  t.a.assign(rows, std::vector<Rational>(cols));
  t.rhs.assign(rows, Rational());
  t.basis.assign(rows, 0);

  auto fill_row = [&](int r, const std::vector<Rational>& src, const Rational& rhs) {
    for (int c = 0; c < num_structural; ++c) {
      const auto& col = structural[c];
      if (src[col.var].is_zero()) continue;
      t.a[r][c] = col.sign > 0 ? src[col.var] : -src[col.var];
    }
    t.rhs[r] = rhs;
  };

  int r = 0;
  for (std::size_t i = 0; i < problem.eq_rows.size(); ++i, ++r) {
    fill_row(r, problem.eq_rows[i], problem.eq_rhs[i]);
  }
  for (int i = 0; i < num_ge; ++i, ++r) {
    fill_row(r, problem.ge_rows[i], problem.ge_rhs[i]);
    t.a[r][num_structural + i] = -1;  // surplus
  }
  // Make every rhs nonnegative, then seed the basis with artificials.
  for (int row = 0; row < rows; ++row) {
    if (t.rhs[row].sign() < 0) {
      for (auto& v : t.a[row]) v = -v;
      t.rhs[row] = -t.rhs[row];
    }
    t.a[row][num_structural + num_ge + row] = 1;
    t.basis[row] = num_structural + num_ge + row;
  }

  std::vector<bool> allow_all(cols, true);

  // Phase 1: maximize -(sum of artificials).
  std::vector<Rational> phase1(cols);
  for (int c = num_structural + num_ge; c < cols; ++c) phase1[c] = Rational(-1);
  run_simplex(t, phase1, allow_all);  // bounded by construction

  Rational infeasibility;
  for (int row = 0; row < rows; ++row) {
    if (t.basis[row] >= num_structural + num_ge) infeasibility += t.rhs[row];
  }
  LPSolution solution;
  if (infeasibility.sign() > 0) {
    solution.status = LPStatus::Infeasible;
    return solution;
  }

  // Pivot leftover zero-level artificials out of the basis; drop any row
  // with no structural pivot (it is redundant).
  std::vector<bool> allowed(cols, true);
  for (int c = num_structural + num_ge; c < cols; ++c) allowed[c] = false;
  for (int row = 0; row < rows; ++row) {
    if (t.basis[row] < num_structural + num_ge) continue;
    int col = -1;
    for (int c = 0; c < num_structural + num_ge; ++c) {
      if (!t.a[row][c].is_zero()) {
        col = c;
        break;
      }
    }
    if (col >= 0) t.pivot(row, col);
    // else: redundant row; its artificial stays basic at level 0 and the
    // barred column set keeps it from ever re-entering elsewhere.
  }

  // Phase 2: the real objective on structural columns.
  std::vector<Rational> phase2(cols);
  for (int c = 0; c < num_structural; ++c) {
    const auto& col = structural[c];
    phase2[c] = col.sign > 0 ? problem.objective[col.var] : -problem.objective[col.var];
  }
  if (!run_simplex(t, phase2, allowed)) {
    solution.status = LPStatus::Unbounded;
    return solution;
  }

  solution.status = LPStatus::Optimal;
  solution.values.assign(n, Rational());
  for (int row = 0; row < rows; ++row) {
    int b = t.basis[row];
    if (b < num_structural) {
      const auto& col = structural[b];
      solution.values[col.var] += col.sign > 0 ? t.rhs[row] : -t.rhs[row];
    }
  }
  for (int v = 0; v < n; ++v) {
    solution.objective_value += problem.objective[v] * solution.values[v];
  }
  for (int row = 0; row < rows; ++row) {
    int b = t.basis[row];
    if (b < num_structural) {
      solution.basis.push_back(problem.variables[structural[b].var] +
                               (structural[b].sign < 0 ? "-" : ""));
    } else if (b < num_structural + num_ge) {
      solution.basis.push_back("surplus" + std::to_string(b - num_structural));
    } else {
      solution.basis.push_back("artificial" + std::to_string(b - num_structural - num_ge));
    }
  }
  return solution;
}

}  // namespace persuasion
