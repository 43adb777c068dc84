#pragma once

#include <vector>

#include "tropinv/rational.hpp"

namespace tropinv {

/// Linear program in equality standard form:
///   maximize  objective . y
///   subject to  rows[i] . y == rhs[i]  for all i,  y >= 0.
/// Callers encode free variables as differences and inequalities via slacks.
struct LpProblem {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// For Optimal: `solution` is an optimal basic point and `value` its objective.
/// For Unbounded: `solution` is a feasible point and `ray` an improving
/// recession direction (objective . ray > 0). For Infeasible both are empty.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> solution;
  std::vector<Rational> ray;
};

/// Exact two-phase primal simplex over the rationals with Bland's rule, so it
/// terminates on every input. Deterministic: identical problems give identical
/// bases and certificates.
LpResult solve_lp(const LpProblem& problem);

/// Convex hull membership with certificates.
/// inside == true:  `coefficients[i]`, one per point, are convex weights
///                  reproducing the query.
/// inside == false: `normal` and `offset` give a strictly separating
///                  functional: normal . p <= offset for every point while
///                  normal . query >= offset + 1.
struct HullCertificate {
  bool inside = false;
  std::vector<Rational> coefficients;
  std::vector<Rational> normal;
  Rational offset;
};

HullCertificate in_convex_hull(const std::vector<std::vector<Rational>>& points,
                               const std::vector<Rational>& query);

/// Integer-point convenience overload.
HullCertificate in_convex_hull(const std::vector<std::vector<int>>& points,
                               const std::vector<int>& query);

}  // namespace tropinv
