#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropinv/trop_scalar.hpp"

namespace tropinv {

/// Exponent vector in N^n.
using Exponent = std::vector<int>;

int norm1(const Exponent& a);
int norm_inf(const Exponent& a);
Exponent exp_add(const Exponent& a, const Exponent& b);

/// Tropical polynomial in n variables: finitely many terms, each a
/// nonnegative integer exponent vector with a finite rational coefficient.
/// The zero polynomial has no terms. Term maps are kept deduplicated; the
/// `is_canonical()` flag records that redundant terms have been removed, i.e.
/// every term is a vertex of the upper hull of the lifted support.
class TropPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit TropPoly(int arity);

  static TropPoly zero(int arity) { return TropPoly(arity); }
  static TropPoly one(int arity);
  static TropPoly constant(int arity, const TropScalar& c);
  static TropPoly monomial(int arity, Exponent exp, Rational coef);
  /// x_i for 0-based index i.
  static TropPoly variable(int arity, int i);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_canonical() const { return canonical_; }

  /// Coefficient of `exp`; bottom when absent.
  TropScalar coefficient(const Exponent& exp) const;

  /// Sets (finite) or erases (bottom) a term; clears the canonical flag.
  void set_term(Exponent exp, const TropScalar& coef);

  std::string to_string() const;

  friend bool operator==(const TropPoly& a, const TropPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TropPoly& a, const TropPoly& b) {
    return !(a == b);
  }

 private:
  friend TropPoly canonicalize(const TropPoly& f);
  template <typename Orbit>
  friend TropPoly canonicalize_by_orbits(const TropPoly& f, Orbit&& orbit_of);

  int arity_;
  TermMap terms_;
  bool canonical_;
};

TropPoly trop_add(const TropPoly& f, const TropPoly& g);
TropPoly trop_mul(const TropPoly& f, const TropPoly& g);
TropPoly trop_pow(const TropPoly& f, int m);

/// Max over terms of coefficient + exponent . point.
TropScalar evaluate(const TropPoly& f, const std::vector<Rational>& point);

/// Largest term 1-norm; -1 for the zero polynomial.
int degree(const TropPoly& f);

/// Whether dropping `exp` (which must be a term of f) leaves the function
/// unchanged: decided by an exact convex multiplier program over the
/// remaining lifted support.
bool is_redundant_term(const TropPoly& f, const Exponent& exp);

/// Removes every redundant term. The result is the unique minimal-support
/// representative of the function class of f.
TropPoly canonicalize(const TropPoly& f);

/// Function equality, decided on canonical forms.
bool trop_equals(const TropPoly& f, const TropPoly& g);

/// A rational point where f and g differ, or nullopt when equal as functions.
std::optional<std::vector<Rational>> witness_point(const TropPoly& f,
                                                  const TropPoly& g);

/// Whether the term (exp, coef) is dominated by f, i.e. f(v) >= coef + exp.v
/// holds everywhere. Exposed for the witness search.
bool dominates(const TropPoly& f, const Exponent& exp, const Rational& coef);

/// Canonicalization that runs one redundancy program per orbit class.
/// `orbit_of` maps a support exponent to its class (each class's verdict must
/// be uniform, which holds when the term map is invariant under a group
/// gluing the classes). Used by the transfer pipeline.
template <typename Orbit>
TropPoly canonicalize_by_orbits(const TropPoly& f, Orbit&& orbit_of) {
  if (f.is_canonical() || f.terms().size() <= 1) {
    TropPoly out = f;
    out.canonical_ = true;
    return out;
  }
  TropPoly out(f.arity());
  std::map<Exponent, bool> verdict;
  for (const auto& [exp, coef] : f.terms()) {
    Exponent rep = orbit_of(exp);
    auto it = verdict.find(rep);
    if (it == verdict.end())
      it = verdict.emplace(rep, !is_redundant_term(f, exp)).first;
    if (it->second) out.terms_.emplace(exp, coef);
  }
  out.canonical_ = true;
  return out;
}

}  // namespace tropinv
