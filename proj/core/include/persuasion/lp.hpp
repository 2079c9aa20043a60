#pragma once

#include <string>
#include <vector>

#include "persuasion/rational.hpp"

namespace persuasion {

enum class LPStatus { Optimal, Infeasible, Unbounded };

// A linear program in the form
//   maximize c.x  subject to  Aeq x = beq,  Age x >= bge,
// with per-variable nonnegativity flags (free variables are split internally).
struct LPProblem {
  std::vector<std::string> variables;
  std::vector<bool> nonnegative;
  std::vector<Rational> objective;

  std::vector<std::vector<Rational>> eq_rows;
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> ge_rows;
  std::vector<Rational> ge_rhs;

  int add_variable(std::string name, Rational objective_coeff = Rational(), bool nonneg = true);
  void add_eq(std::vector<Rational> row, Rational rhs);
  void add_ge(std::vector<Rational> row, Rational rhs);
  void add_le(std::vector<Rational> row, Rational rhs);

  int variable_count() const { return static_cast<int>(variables.size()); }
  int constraint_count() const { return static_cast<int>(eq_rows.size() + ge_rows.size()); }

  void check() const;  // throws DomainError on ragged rows
};

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Rational> values;  // per original variable, when optimal
  Rational objective_value;
  std::vector<std::string> basis;  // basic variables certifying the optimum
};

// Exact primal simplex with Bland's anti-cycling rule; two phases with
// artificial variables. Terminates on every input; infeasible and unbounded
// problems are reported as statuses.
LPSolution solve_lp(const LPProblem& problem);

}  // namespace persuasion
