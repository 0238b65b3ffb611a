#include "jrep/lp.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "jrep/error.hpp"

namespace jrep {

void LinearProgram::validate() const {
  if (variable_labels.size() != objective.size()) {
    throw InvalidArgument("variable label count does not match objective size");
  }
  for (const LinearConstraint& row : constraints) {
    if (row.coefficients.size() != objective.size()) {
      throw InvalidArgument("constraint '" + row.label + "' has the wrong number of coefficients");
    }
  }
}

std::string LinearProgram::serialize() const {
  std::ostringstream out;
  const auto write_row = [&](const std::vector<Rational>& coefficients) {
    bool first = true;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      if (coefficients[j] == 0) continue;
      out << (first ? "" : " + ") << to_fraction_string(coefficients[j]) << ' '
          << variable_labels[j];
      first = false;
    }
    if (first) out << '0';
  };
  out << "maximize ";
  write_row(objective);
  out << '\n';
  for (const LinearConstraint& row : constraints) {
    out << row.label << ": ";
    write_row(row.coefficients);
    switch (row.relation) {
      case Relation::LessEqual: out << " <= "; break;
      case Relation::GreaterEqual: out << " >= "; break;
      case Relation::Equal: out << " = "; break;
    }
    out << to_fraction_string(row.rhs) << '\n';
  }
  return out.str();
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

/// Dense tableau over the standard-form columns, rhs in the last column.
class Tableau {
 public:
  Matrix rows;
  std::vector<std::size_t> basis;
  std::vector<bool> artificial;
  std::size_t pivots = 0;

  std::size_t num_columns() const { return artificial.size(); }
  std::size_t rhs() const { return artificial.size(); }

  void pivot(std::size_t row, std::size_t col) {
    const Rational factor = rows[row][col];
    for (auto& entry : rows[row]) entry /= factor;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == row || rows[i][col] == 0) continue;
      const Rational scale = rows[i][col];
      for (std::size_t j = 0; j <= rhs(); ++j) {
        if (rows[row][j] != 0) rows[i][j] -= scale * rows[row][j];
      }
    }
    basis[row] = col;
    ++pivots;
  }

  Rational value(const std::vector<Rational>& objective) const {
    Rational total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) total += objective[basis[i]] * rows[i][rhs()];
    return total;
  }

  /// Maximizes `objective` with Bland's rule. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& objective, bool allow_artificial) {
    std::vector<bool> is_basic(num_columns(), false);
    while (true) {
      std::fill(is_basic.begin(), is_basic.end(), false);
      for (std::size_t b : basis) is_basic[b] = true;

      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < num_columns() && !entering; ++j) {
        if (is_basic[j] || (artificial[j] && !allow_artificial)) continue;
        Rational reduced = objective[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i][j] != 0 && objective[basis[i]] != 0) reduced -= objective[basis[i]] * rows[i][j];
        }
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][*entering] <= 0) continue;
        Rational ratio = rows[i][rhs()] / rows[i][*entering];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }
};

/// Solves M y = rhs for square non-singular M by Gauss-Jordan elimination.
std::vector<Rational> solve_square(Matrix m, std::vector<Rational> rhs) {
  const std::size_t size = m.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot][col] == 0) ++pivot;
    if (pivot == size) throw std::logic_error("simplex basis is singular");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t i = 0; i < size; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational factor = m[i][col] / m[col][col];
      for (std::size_t j = col; j < size; ++j) m[i][j] -= factor * m[col][j];
      rhs[i] -= factor * rhs[col];
    }
  }
  for (std::size_t i = 0; i < size; ++i) rhs[i] /= m[i][i];
  return rhs;
}

bool satisfies(const LinearConstraint& row, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (std::size_t j = 0; j < x.size(); ++j) lhs += row.coefficients[j] * x[j];
  switch (row.relation) {
    case Relation::LessEqual: return lhs <= row.rhs;
    case Relation::GreaterEqual: return lhs >= row.rhs;
    case Relation::Equal: return lhs == row.rhs;
  }
  return false;
}

}  // namespace

SimplexResult simplex_solve(const LinearProgram& lp) {
  lp.validate();
  const std::size_t num_vars = lp.num_variables();
  const std::size_t num_rows = lp.constraints.size();

  // Standard form: rows with non-negative rhs; slack, surplus and artificial
  // columns appended after the structural ones.
  std::vector<int> sign(num_rows, 1);
  std::vector<Relation> relation(num_rows);
  for (std::size_t i = 0; i < num_rows; ++i) {
    relation[i] = lp.constraints[i].relation;
    if (lp.constraints[i].rhs < 0) {
      sign[i] = -1;
      if (relation[i] == Relation::LessEqual) {
        relation[i] = Relation::GreaterEqual;
      } else if (relation[i] == Relation::GreaterEqual) {
        relation[i] = Relation::LessEqual;
      }
    }
  }
  std::size_t num_columns = num_vars;
  std::vector<std::size_t> slack_col(num_rows), artificial_col(num_rows);
  std::vector<bool> artificial(num_vars, false);
  for (std::size_t i = 0; i < num_rows; ++i) {
    if (relation[i] != Relation::Equal) {
      slack_col[i] = num_columns++;
      artificial.push_back(false);
    }
    if (relation[i] != Relation::LessEqual) {
      artificial_col[i] = num_columns++;
      artificial.push_back(true);
    }
  }

  Matrix standard(num_rows, std::vector<Rational>(num_columns, Rational(0)));
  std::vector<Rational> rhs(num_rows);
  Tableau tableau;
  tableau.artificial = artificial;
  for (std::size_t i = 0; i < num_rows; ++i) {
    for (std::size_t j = 0; j < num_vars; ++j) standard[i][j] = lp.constraints[i].coefficients[j] * sign[i];
    rhs[i] = lp.constraints[i].rhs * sign[i];
    if (relation[i] == Relation::LessEqual) standard[i][slack_col[i]] = 1;
    if (relation[i] == Relation::GreaterEqual) standard[i][slack_col[i]] = -1;
    if (relation[i] != Relation::LessEqual) standard[i][artificial_col[i]] = 1;
    tableau.rows.push_back(standard[i]);
    tableau.rows.back().push_back(rhs[i]);
    tableau.basis.push_back(relation[i] == Relation::LessEqual ? slack_col[i] : artificial_col[i]);
  }
  std::vector<std::size_t> active_rows(num_rows);
  for (std::size_t i = 0; i < num_rows; ++i) active_rows[i] = i;

  SimplexResult result;

  // Phase 1: drive the artificial variables to zero.
  std::vector<Rational> phase_one(num_columns, Rational(0));
  for (std::size_t j = 0; j < num_columns; ++j) {
    if (artificial[j]) phase_one[j] = -1;
  }
  tableau.optimize(phase_one, true);
  if (tableau.value(phase_one) < 0) {
    result.status = SimplexStatus::Infeasible;
    result.pivots = tableau.pivots;
    return result;
  }
  for (std::size_t i = 0; i < tableau.rows.size();) {
    if (!artificial[tableau.basis[i]]) {
      ++i;
      continue;
    }
    std::optional<std::size_t> replacement;
    for (std::size_t j = 0; j < num_columns && !replacement; ++j) {
      if (!artificial[j] && tableau.rows[i][j] != 0) replacement = j;
    }
    if (replacement) {
      tableau.pivot(i, *replacement);
      ++i;
    } else {
      // Redundant equality: drop it.
      tableau.rows.erase(tableau.rows.begin() + static_cast<std::ptrdiff_t>(i));
      tableau.basis.erase(tableau.basis.begin() + static_cast<std::ptrdiff_t>(i));
      active_rows.erase(active_rows.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2.
  std::vector<Rational> objective(num_columns, Rational(0));
  for (std::size_t j = 0; j < num_vars; ++j) objective[j] = lp.objective[j];
  const bool bounded = tableau.optimize(objective, false);
  result.pivots = tableau.pivots;
  if (!bounded) {
    result.status = SimplexStatus::Unbounded;
    return result;
  }

  result.status = SimplexStatus::Optimal;
  result.value = tableau.value(objective);
  result.solution.assign(num_vars, Rational(0));
  for (std::size_t i = 0; i < tableau.rows.size(); ++i) {
    if (tableau.basis[i] < num_vars) {
      result.solution[tableau.basis[i]] = tableau.rows[i][tableau.rhs()];
      result.basis.push_back(tableau.basis[i]);
    }
  }
  std::sort(result.basis.begin(), result.basis.end());

  // Certificate: y with y^T B = c_B, then reduced costs and duality gap.
  const std::size_t size = active_rows.size();
  Matrix basis_transposed(size, std::vector<Rational>(size));
  std::vector<Rational> basic_costs(size);
  for (std::size_t r = 0; r < size; ++r) {
    basic_costs[r] = objective[tableau.basis[r]];
    for (std::size_t i = 0; i < size; ++i) {
      basis_transposed[r][i] = standard[active_rows[i]][tableau.basis[r]];
    }
  }
  const std::vector<Rational> y =
      size == 0 ? std::vector<Rational>{} : solve_square(basis_transposed, basic_costs);
  for (std::size_t j = 0; j < num_columns; ++j) {
    if (artificial[j]) continue;
    Rational reduced = objective[j];
    for (std::size_t i = 0; i < size; ++i) reduced -= y[i] * standard[active_rows[i]][j];
    if (reduced > 0) throw std::logic_error("simplex optimum is not dual feasible");
  }
  Rational dual_value = 0;
  result.duals.assign(num_rows, Rational(0));
  for (std::size_t i = 0; i < size; ++i) {
    dual_value += y[i] * rhs[active_rows[i]];
    result.duals[active_rows[i]] = y[i] * sign[active_rows[i]];
  }
  if (dual_value != result.value) throw std::logic_error("simplex duality gap is non-zero");
  for (const auto& x : result.solution) {
    if (x < 0) throw std::logic_error("simplex solution has a negative entry");
  }
  for (const LinearConstraint& row : lp.constraints) {
    if (!satisfies(row, result.solution)) {
      throw std::logic_error("simplex solution violates '" + row.label + "'");
    }
  }
  return result;
}

}  // namespace jrep
