#pragma once

#include <utility>
#include <vector>

#include "tropinv/trop_poly.hpp"

namespace tropinv {

/// Convex hull of finitely many integer points, stored as its sorted,
/// vertex-minimal V-representation. The empty polytope is allowed.
class LatticePolytope {
 public:
  static LatticePolytope empty(int dim);
  /// Reduces to vertices via exact hull-membership programs.
  static LatticePolytope hull_of(int dim, std::vector<Exponent> points);

  int dim() const { return dim_; }
  bool is_empty() const { return vertices_.empty(); }
  /// Sorted lexicographically; every element is a vertex.
  const std::vector<Exponent>& vertices() const { return vertices_; }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const LatticePolytope& a, const LatticePolytope& b) {
    return !(a == b);
  }

 private:
  explicit LatticePolytope(int dim) : dim_(dim) {}

  int dim_ = 0;
  std::vector<Exponent> vertices_;
};

/// Hull of the union.
LatticePolytope poly_join(const LatticePolytope& a, const LatticePolytope& b);

/// Minkowski sum; empty is absorbing.
LatticePolytope poly_minkowski(const LatticePolytope& a,
                               const LatticePolytope& b);

/// Hull of the support; coefficients are ignored, the zero polynomial gives
/// the empty polytope.
LatticePolytope newton_polytope(const TropPoly& f);

bool poly_equals(const LatticePolytope& a, const LatticePolytope& b);

bool contains(const LatticePolytope& a, const Exponent& q);

/// Unordered vertex pairs forming one-dimensional faces, each pair and the
/// list itself sorted lexicographically.
std::vector<std::pair<Exponent, Exponent>> edges(const LatticePolytope& a);

}  // namespace tropinv
