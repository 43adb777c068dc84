#include "tropinv/trop_poly.hpp"

#include <sstream>

#include "tropinv/errors.hpp"
#include "tropinv/lp.hpp"

namespace tropinv {

int norm1(const Exponent& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

int norm_inf(const Exponent& a) {
  int s = 0;
  for (int x : a) s = std::max(s, x);
  return s;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionError("exponent length mismatch");
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

namespace {

void check_exponent(int arity, const Exponent& exp) {
  if (static_cast<int>(exp.size()) != arity)
    throw DimensionError("exponent length differs from arity");
  for (int x : exp)
    if (x < 0) throw DomainError("negative exponent entry");
}

}  // namespace

TropPoly::TropPoly(int arity) : arity_(arity), canonical_(true) {
  if (arity < 1) throw DomainError("arity must be positive");
}

TropPoly TropPoly::one(int arity) {
  return monomial(arity, Exponent(static_cast<std::size_t>(arity), 0),
                  Rational(0));
}

TropPoly TropPoly::constant(int arity, const TropScalar& c) {
  if (c.is_bottom()) return zero(arity);
  return monomial(arity, Exponent(static_cast<std::size_t>(arity), 0),
                  c.value());
}

TropPoly TropPoly::monomial(int arity, Exponent exp, Rational coef) {
  TropPoly f(arity);
  check_exponent(arity, exp);
  f.terms_.emplace(std::move(exp), std::move(coef));
  return f;
}

TropPoly TropPoly::variable(int arity, int i) {
  if (i < 0 || i >= arity) throw DomainError("variable index out of range");
  Exponent e(static_cast<std::size_t>(arity), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(arity, std::move(e), Rational(0));
}

TropScalar TropPoly::coefficient(const Exponent& exp) const {
  check_exponent(arity_, exp);
  auto it = terms_.find(exp);
  return it == terms_.end() ? TropScalar::bottom() : TropScalar(it->second);
}

void TropPoly::set_term(Exponent exp, const TropScalar& coef) {
  check_exponent(arity_, exp);
  if (coef.is_bottom())
    terms_.erase(exp);
  else
    terms_.insert_or_assign(std::move(exp), coef.value());
  canonical_ = terms_.size() <= 1;
}

std::string TropPoly::to_string() const {
  if (terms_.empty()) return "-inf";
  std::ostringstream out;
  if (terms_.size() > 1) out << "max{";
  bool first_term = true;
  for (const auto& [exp, coef] : terms_) {
    if (!first_term) out << ", ";
    first_term = false;
    bool wrote = false;
    if (coef != Rational(0) || norm1(exp) == 0) {
      out << coef.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (wrote) out << " + ";
      if (exp[i] != 1) out << exp[i] << "*";
      out << "x" << (i + 1);
      wrote = true;
    }
  }
  if (terms_.size() > 1) out << "}";
  return out.str();
}

TropPoly trop_add(const TropPoly& f, const TropPoly& g) {
  if (f.arity() != g.arity()) throw DimensionError("arity mismatch in add");
  if (g.is_zero()) return f;
  if (f.is_zero()) return g;
  TropPoly out = f;
  for (const auto& [exp, coef] : g.terms()) {
    TropScalar cur = out.coefficient(exp);
    if (cur.is_bottom() || cur.value() < coef)
      out.set_term(exp, TropScalar(coef));
  }
  return out;
}

TropPoly trop_mul(const TropPoly& f, const TropPoly& g) {
  if (f.arity() != g.arity()) throw DimensionError("arity mismatch in mul");
  TropPoly out(f.arity());
  if (f.is_zero() || g.is_zero()) return out;
  for (const auto& [ea, ca] : f.terms()) {
    for (const auto& [eb, cb] : g.terms()) {
      Exponent e = exp_add(ea, eb);
      Rational c = ca + cb;
      TropScalar cur = out.coefficient(e);
      if (cur.is_bottom() || cur.value() < c)
        out.set_term(std::move(e), TropScalar(std::move(c)));
    }
  }
  return out;
}

TropPoly trop_pow(const TropPoly& f, int m) {
  if (m < 0) throw DomainError("negative tropical power");
  TropPoly out = TropPoly::one(f.arity());
  for (int i = 0; i < m; ++i) out = trop_mul(out, f);
  return out;
}

TropScalar evaluate(const TropPoly& f, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != f.arity())
    throw DimensionError("point length differs from arity");
  TropScalar best = TropScalar::bottom();
  mpq_class acc;
  mpq_class term;
  for (const auto& [exp, coef] : f.terms()) {
    acc = coef.raw();
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (exp[i] == 0) continue;
      term = point[i].raw();
      term *= exp[i];
      acc += term;
    }
    TropScalar v{Rational(acc)};
    if (best < v) best = v;
  }
  return best;
}

int degree(const TropPoly& f) {
  int d = -1;
  for (const auto& [exp, coef] : f.terms()) d = std::max(d, norm1(exp));
  return d;
}

namespace {

// Value of the upper envelope of the lifted terms at `target`: the maximum of
// sum coef_a y_a over convex weights y with sum y_a a = target. Empty when
// the target lies outside the hull of the given supports.
std::optional<Rational> envelope_value(
    const std::vector<const Exponent*>& supports,
    const std::vector<const Rational*>& coefs, const Exponent& target) {
  const std::size_t np = supports.size();
  const std::size_t d = target.size();
  LpProblem p;
  p.objective.reserve(np);
  for (const Rational* c : coefs) p.objective.push_back(*c);
  p.rows.assign(d + 1, std::vector<Rational>(np, Rational(0)));
  p.rhs.reserve(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < np; ++j)
      p.rows[i][j] = Rational((*supports[j])[i]);
    p.rhs.push_back(Rational(target[i]));
  }
  for (std::size_t j = 0; j < np; ++j) p.rows[d][j] = Rational(1);
  p.rhs.push_back(Rational(1));
  LpResult r = solve_lp(p);
  if (r.status == LpStatus::Infeasible) return std::nullopt;
  if (r.status != LpStatus::Optimal)
    throw DomainError("envelope program unbounded");  // cannot happen: y is convex
  return r.value;
}

}  // namespace

bool dominates(const TropPoly& f, const Exponent& exp, const Rational& coef) {
  check_exponent(f.arity(), exp);
  if (f.is_zero()) return false;
  std::vector<const Exponent*> sup;
  std::vector<const Rational*> cf;
  sup.reserve(f.terms().size());
  cf.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) {
    sup.push_back(&e);
    cf.push_back(&c);
  }
  auto v = envelope_value(sup, cf, exp);
  return v.has_value() && *v >= coef;
}

bool is_redundant_term(const TropPoly& f, const Exponent& exp) {
  auto it = f.terms().find(exp);
  if (it == f.terms().end()) throw DomainError("exponent is not a term of f");
  if (f.terms().size() <= 1) return false;
  std::vector<const Exponent*> sup;
  std::vector<const Rational*> cf;
  sup.reserve(f.terms().size() - 1);
  cf.reserve(f.terms().size() - 1);
  for (const auto& [e, c] : f.terms()) {
    if (e == exp) continue;
    sup.push_back(&e);
    cf.push_back(&c);
  }
  auto v = envelope_value(sup, cf, exp);
  return v.has_value() && *v >= it->second;
}

TropPoly canonicalize(const TropPoly& f) {
  // A term is redundant exactly when its lifted point is not a vertex of the
  // upper hull, so testing each term against the full original support gives
  // the same set as iterated removal, in any order.
  return canonicalize_by_orbits(f, [](const Exponent& e) { return e; });
}

bool trop_equals(const TropPoly& f, const TropPoly& g) {
  if (f.arity() != g.arity()) throw DimensionError("arity mismatch in equals");
  return canonicalize(f).terms() == canonicalize(g).terms();
}

namespace {

// A point v with coef + exp.v > F(v), given that the term is not dominated
// by F.
std::vector<Rational> find_violation(const TropPoly& F, const Exponent& exp,
                                     const Rational& coef) {
  const std::size_t n = static_cast<std::size_t>(F.arity());
  if (F.is_zero()) return std::vector<Rational>(n, Rational(0));

  // Variables: x0+, x0-, then sign-split coordinates, then one slack per
  // term of F. Constraints: x0 + a.x <= -c_a. The objective x0 + exp.x has
  // optimum max_v (exp.v - F(v)).
  const std::size_t nt = F.terms().size();
  const std::size_t nv = 2 + 2 * n + nt;
  LpProblem p;
  p.objective.assign(nv, Rational(0));
  p.objective[0] = Rational(1);
  p.objective[1] = Rational(-1);
  for (std::size_t i = 0; i < n; ++i) {
    p.objective[2 + 2 * i] = Rational(exp[i]);
    p.objective[2 + 2 * i + 1] = Rational(-exp[i]);
  }
  std::size_t row_idx = 0;
  for (const auto& [a, c] : F.terms()) {
    std::vector<Rational> row(nv, Rational(0));
    row[0] = Rational(1);
    row[1] = Rational(-1);
    for (std::size_t i = 0; i < n; ++i) {
      row[2 + 2 * i] = Rational(a[i]);
      row[2 + 2 * i + 1] = Rational(-a[i]);
    }
    row[2 + 2 * n + row_idx] = Rational(1);
    p.rows.push_back(std::move(row));
    p.rhs.push_back(-c);
    ++row_idx;
  }
  LpResult r = solve_lp(p);
  auto coords = [&](const std::vector<Rational>& y) {
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = y[2 + 2 * i] - y[2 + 2 * i + 1];
    return v;
  };
  if (r.status == LpStatus::Optimal) {
    if (!(r.value > -coef))
      throw DomainError("violation requested for a dominated term");
    return coords(r.solution);
  }
  if (r.status != LpStatus::Unbounded)
    throw DomainError("violation program infeasible");  // cannot happen
  // Walk the improving ray until the objective clears -coef.
  Rational obj0(0);
  Rational rate(0);
  for (std::size_t j = 0; j < nv; ++j) {
    obj0 += p.objective[j] * r.solution[j];
    rate += p.objective[j] * r.ray[j];
  }
  Rational t = (-coef - obj0) / rate + Rational(1);
  if (t < Rational(1)) t = Rational(1);
  std::vector<Rational> base = coords(r.solution);
  std::vector<Rational> dir = coords(r.ray);
  for (std::size_t i = 0; i < n; ++i) base[i] += t * dir[i];
  return base;
}

}  // namespace

std::optional<std::vector<Rational>> witness_point(const TropPoly& f,
                                                   const TropPoly& g) {
  if (f.arity() != g.arity())
    throw DimensionError("arity mismatch in witness");
  TropPoly cf = canonicalize(f);
  TropPoly cg = canonicalize(g);
  if (cf.terms() == cg.terms()) return std::nullopt;
  for (const auto& [exp, coef] : cg.terms())
    if (!dominates(cf, exp, coef)) return find_violation(cf, exp, coef);
  for (const auto& [exp, coef] : cf.terms())
    if (!dominates(cg, exp, coef)) return find_violation(cg, exp, coef);
  throw DomainError("distinct canonical forms dominate each other");  // cannot happen
}

}  // namespace tropinv
