#include "tropinv/lp.hpp"

#include <cstddef>

#include "tropinv/errors.hpp"

namespace tropinv {
namespace {

using Row = std::vector<mpq_class>;

// Full-tableau simplex state. Basis columns are kept as identity columns;
// `zrow` holds reduced costs, `zval` the objective at the current basic point.
struct Tableau {
  std::vector<Row> tab;
  Row rhs;
  Row zrow;
  mpq_class zval;
  std::vector<std::size_t> basis;

  std::size_t rows() const { return tab.size(); }
  std::size_t cols() const { return zrow.size(); }

  void pivot(std::size_t r, std::size_t c) {
    mpq_class inv = 1 / tab[r][c];
    mpq_class tmp;
    for (auto& x : tab[r]) x *= inv;
    rhs[r] *= inv;
    tab[r][c] = 1;  // exact, avoids inv*piv round trip
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || sgn(tab[i][c]) == 0) continue;
      mpq_class f = tab[i][c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(tab[r][j]) == 0) continue;
        tmp = f;
        tmp *= tab[r][j];
        tab[i][j] -= tmp;
      }
      tmp = f;
      tmp *= rhs[r];
      rhs[i] -= tmp;
      tab[i][c] = 0;
    }
    if (sgn(zrow[c]) != 0) {
      mpq_class f = zrow[c];
      tmp = f;
      tmp *= rhs[r];
      zval += tmp;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(tab[r][j]) == 0) continue;
        tmp = f;
        tmp *= tab[r][j];
        zrow[j] -= tmp;
      }
      zrow[c] = 0;
    }
    basis[r] = c;
  }

  // Runs primal simplex with Bland's rule. Returns the entering column on
  // unboundedness, or cols() at optimality.
  std::size_t run() {
    for (;;) {
      std::size_t enter = cols();
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(zrow[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols()) return cols();
      std::size_t leave = rows();
      mpq_class best;
      mpq_class ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(tab[i][enter]) <= 0) continue;
        ratio = rhs[i] / tab[i][enter];
        if (leave == rows() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == rows()) return enter;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const LpProblem& problem) {
  const std::size_t nv = problem.objective.size();
  const std::size_t m = problem.rows.size();
  if (problem.rhs.size() != m)
    throw DimensionError("lp: rhs length differs from row count");
  for (const auto& row : problem.rows)
    if (row.size() != nv)
      throw DimensionError("lp: row length differs from objective length");

  Tableau t;
  t.tab.assign(m, Row(nv + m, 0));
  t.rhs.assign(m, 0);
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = problem.rhs[i].sign() < 0;
    for (std::size_t j = 0; j < nv; ++j) {
      const mpq_class& a = problem.rows[i][j].raw();
      t.tab[i][j] = flip ? mpq_class(-a) : a;
    }
    t.rhs[i] = flip ? mpq_class(-problem.rhs[i].raw()) : problem.rhs[i].raw();
    t.tab[i][nv + i] = 1;
    t.basis[i] = nv + i;
  }

  // Phase 1: maximize minus the artificial sum; reduced costs against the
  // all-artificial basis are the column sums.
  t.zrow.assign(nv + m, 0);
  t.zval = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) t.zrow[j] += t.tab[i][j];
    t.zval -= t.rhs[i];
  }
  t.run();
  LpResult res;
  if (sgn(t.zval) < 0) {
    res.status = LpStatus::Infeasible;
    return res;
  }

  // Pivot leftover artificials out; a row where that is impossible is a
  // redundant constraint and gets dropped.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < nv) {
      keep.push_back(i);
      continue;
    }
    std::size_t c = nv;
    for (std::size_t j = 0; j < nv; ++j) {
      if (sgn(t.tab[i][j]) != 0) {
        c = j;
        break;
      }
    }
    if (c < nv) {
      t.pivot(i, c);
      keep.push_back(i);
    }
  }
  if (keep.size() < m) {
    Tableau fresh;
    for (std::size_t i : keep) {
      fresh.tab.push_back(std::move(t.tab[i]));
      fresh.rhs.push_back(std::move(t.rhs[i]));
      fresh.basis.push_back(t.basis[i]);
    }
    t.tab = std::move(fresh.tab);
    t.rhs = std::move(fresh.rhs);
    t.basis = std::move(fresh.basis);
  }
  for (auto& row : t.tab) row.resize(nv);

  // Phase 2 over the original columns only.
  t.zrow.assign(nv, 0);
  t.zval = 0;
  for (std::size_t j = 0; j < nv; ++j) t.zrow[j] = problem.objective[j].raw();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const mpq_class& cb = problem.objective[t.basis[i]].raw();
    if (sgn(cb) == 0) continue;
    mpq_class tmp;
    for (std::size_t j = 0; j < nv; ++j) {
      if (sgn(t.tab[i][j]) == 0) continue;
      tmp = cb;
      tmp *= t.tab[i][j];
      t.zrow[j] -= tmp;
    }
    tmp = cb;
    tmp *= t.rhs[i];
    t.zval += tmp;
  }
  for (std::size_t i = 0; i < t.rows(); ++i) t.zrow[t.basis[i]] = 0;

  std::size_t stop = t.run();
  res.solution.assign(nv, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i)
    res.solution[t.basis[i]] = Rational(t.rhs[i]);
  if (stop == t.cols()) {
    res.status = LpStatus::Optimal;
    res.value = Rational(t.zval);
    return res;
  }
  res.status = LpStatus::Unbounded;
  res.ray.assign(nv, Rational(0));
  res.ray[stop] = Rational(1);
  for (std::size_t i = 0; i < t.rows(); ++i)
    res.ray[t.basis[i]] = Rational(mpq_class(-t.tab[i][stop]));
  return res;
}

HullCertificate in_convex_hull(const std::vector<std::vector<Rational>>& points,
                               const std::vector<Rational>& query) {
  if (points.empty()) throw DomainError("convex hull of empty point set");
  const std::size_t d = query.size();
  for (const auto& p : points)
    if (p.size() != d) throw DimensionError("hull: point dimension mismatch");
  const std::size_t np = points.size();

  LpProblem member;
  member.objective.assign(np, Rational(0));
  member.rows.assign(d + 1, std::vector<Rational>(np, Rational(0)));
  member.rhs.assign(d + 1, Rational(0));
  for (std::size_t j = 0; j < np; ++j) {
    for (std::size_t i = 0; i < d; ++i) member.rows[i][j] = points[j][i];
    member.rows[d][j] = Rational(1);
  }
  for (std::size_t i = 0; i < d; ++i) member.rhs[i] = query[i];
  member.rhs[d] = Rational(1);

  HullCertificate cert;
  LpResult r = solve_lp(member);
  if (r.status == LpStatus::Optimal) {
    cert.inside = true;
    cert.coefficients = std::move(r.solution);
    return cert;
  }

  // Farkas direction: find (w, t) with w.p <= t on all points and
  // w.query >= t + 1. Variables: w+, w- (d each), t+, t-, point slacks,
  // query surplus.
  const std::size_t vw = 2 * d;
  const std::size_t vt = 2;
  const std::size_t nv = vw + vt + np + 1;
  LpProblem sep;
  sep.objective.assign(nv, Rational(0));
  sep.rows.assign(np + 1, std::vector<Rational>(nv, Rational(0)));
  sep.rhs.assign(np + 1, Rational(0));
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      sep.rows[i][2 * k] = points[i][k];
      sep.rows[i][2 * k + 1] = -points[i][k];
    }
    sep.rows[i][vw] = Rational(-1);
    sep.rows[i][vw + 1] = Rational(1);
    sep.rows[i][vw + vt + i] = Rational(1);
    sep.rhs[i] = Rational(0);
  }
  for (std::size_t k = 0; k < d; ++k) {
    sep.rows[np][2 * k] = query[k];
    sep.rows[np][2 * k + 1] = -query[k];
  }
  sep.rows[np][vw] = Rational(-1);
  sep.rows[np][vw + 1] = Rational(1);
  sep.rows[np][vw + vt + np] = Rational(-1);
  sep.rhs[np] = Rational(1);
  LpResult s = solve_lp(sep);
  if (s.status != LpStatus::Optimal)
    throw DomainError("hull: separator lp unsolvable");  // Farkas: cannot happen
  cert.inside = false;
  cert.normal.reserve(d);
  for (std::size_t k = 0; k < d; ++k)
    cert.normal.push_back(s.solution[2 * k] - s.solution[2 * k + 1]);
  cert.offset = s.solution[vw] - s.solution[vw + 1];
  return cert;
}

HullCertificate in_convex_hull(const std::vector<std::vector<int>>& points,
                               const std::vector<int>& query) {
  std::vector<std::vector<Rational>> qp;
  qp.reserve(points.size());
  for (const auto& p : points) {
    std::vector<Rational> row;
    row.reserve(p.size());
    for (int x : p) row.push_back(Rational(x));
    qp.push_back(std::move(row));
  }
  std::vector<Rational> qq;
  qq.reserve(query.size());
  for (int x : query) qq.push_back(Rational(x));
  return in_convex_hull(qp, qq);
}

}  // namespace tropinv
