#include "tropinv/lattice_polytope.hpp"

#include <set>

#include "tropinv/errors.hpp"
#include "tropinv/lp.hpp"

namespace tropinv {

LatticePolytope LatticePolytope::empty(int dim) {
  if (dim < 1) throw DomainError("polytope dimension must be positive");
  return LatticePolytope(dim);
}

LatticePolytope LatticePolytope::hull_of(int dim,
                                         std::vector<Exponent> points) {
  LatticePolytope out = empty(dim);
  std::set<Exponent> distinct;
  for (auto& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw DimensionError("point dimension differs from polytope dimension");
    distinct.insert(std::move(p));
  }
  if (distinct.size() <= 1) {
    out.vertices_.assign(distinct.begin(), distinct.end());
    return out;
  }
  // A point is a vertex exactly when it is outside the hull of the others,
  // so each can be tested against the full set independently.
  std::vector<Exponent> all(distinct.begin(), distinct.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<std::vector<int>> others;
    others.reserve(all.size() - 1);
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i) others.push_back(all[j]);
    if (!in_convex_hull(others, all[i]).inside)
      out.vertices_.push_back(all[i]);
  }
  return out;
}

LatticePolytope poly_join(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim()) throw DimensionError("join dimension mismatch");
  std::vector<Exponent> pts = a.vertices();
  pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
  return LatticePolytope::hull_of(a.dim(), std::move(pts));
}

LatticePolytope poly_minkowski(const LatticePolytope& a,
                               const LatticePolytope& b) {
  if (a.dim() != b.dim()) throw DimensionError("sum dimension mismatch");
  if (a.is_empty() || b.is_empty()) return LatticePolytope::empty(a.dim());
  std::vector<Exponent> pts;
  pts.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) pts.push_back(exp_add(u, v));
  return LatticePolytope::hull_of(a.dim(), std::move(pts));
}

LatticePolytope newton_polytope(const TropPoly& f) {
  std::vector<Exponent> pts;
  pts.reserve(f.terms().size());
  for (const auto& [exp, coef] : f.terms()) pts.push_back(exp);
  return LatticePolytope::hull_of(f.arity(), std::move(pts));
}

bool poly_equals(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim()) throw DimensionError("equals dimension mismatch");
  return a == b;
}

bool contains(const LatticePolytope& a, const Exponent& q) {
  if (static_cast<int>(q.size()) != a.dim())
    throw DimensionError("query dimension differs from polytope dimension");
  if (a.is_empty()) return false;
  std::vector<std::vector<int>> pts(a.vertices().begin(), a.vertices().end());
  return in_convex_hull(pts, q).inside;
}

namespace {

// Whether some functional is maximized exactly on {u, v} among `verts`:
// find w with w.(u - v) = 0 and w.(u - p) >= 1 for every other vertex p.
bool pair_is_edge(const std::vector<Exponent>& verts, std::size_t ui,
                  std::size_t vi) {
  const std::size_t d = verts[ui].size();
  const std::size_t others = verts.size() - 2;
  if (others == 0) return true;
  const std::size_t nv = 2 * d + others;  // w sign-split, then surpluses
  LpProblem p;
  p.objective.assign(nv, Rational(0));
  std::vector<Rational> eq(nv, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    int diff = verts[ui][k] - verts[vi][k];
    eq[2 * k] = Rational(diff);
    eq[2 * k + 1] = Rational(-diff);
  }
  p.rows.push_back(std::move(eq));
  p.rhs.push_back(Rational(0));
  std::size_t slot = 0;
  for (std::size_t j = 0; j < verts.size(); ++j) {
    if (j == ui || j == vi) continue;
    std::vector<Rational> row(nv, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
      int diff = verts[ui][k] - verts[j][k];
      row[2 * k] = Rational(diff);
      row[2 * k + 1] = Rational(-diff);
    }
    row[2 * d + slot] = Rational(-1);
    p.rows.push_back(std::move(row));
    p.rhs.push_back(Rational(1));
    ++slot;
  }
  return solve_lp(p).status == LpStatus::Optimal;
}

}  // namespace

std::vector<std::pair<Exponent, Exponent>> edges(const LatticePolytope& a) {
  std::vector<std::pair<Exponent, Exponent>> out;
  const auto& verts = a.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (pair_is_edge(verts, i, j)) out.emplace_back(verts[i], verts[j]);
  return out;  // vertices are sorted, so the pair list already is
}

}  // namespace tropinv
