#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tropinv/perm_group.hpp"

namespace tropinv {

/// Formal quotient of tropical polynomials; the denominator is nonzero.
/// Both components are stored in canonical form. As a function it is
/// num(v) - den(v).
struct TropRational {
  TropPoly num;
  TropPoly den;

  TropRational(TropPoly numerator, TropPoly denominator);
};

/// Equality as functions: cross products must agree canonically.
bool rat_equals(const TropRational& a, const TropRational& b);

TropScalar evaluate(const TropRational& r, const std::vector<Rational>& point);

/// Expression over transfer generators Tr(x^alpha): leaves are generator
/// exponents, inner nodes tropical sum, product, integer power, quotient.
/// Immutable tree with shared subterms.
class InvExpr {
 public:
  enum class Kind { Gen, Add, Mul, Pow, Div };

  static InvExpr gen(Exponent alpha);
  static InvExpr add(std::vector<InvExpr> args);  // at least one argument
  static InvExpr mul(std::vector<InvExpr> args);  // at least one argument
  static InvExpr pow(InvExpr base, int exponent);  // exponent >= 1
  static InvExpr div(InvExpr numerator, InvExpr denominator);

  Kind kind() const { return node_->kind; }
  const Exponent& exponent() const { return node_->alpha; }  // Gen only
  int power() const { return node_->m; }                     // Pow only
  const std::vector<InvExpr>& args() const { return node_->args; }

  /// Total number of nodes in the tree (shared nodes counted once per use).
  std::size_t node_count() const;

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    Exponent alpha;
    int m = 0;
    std::vector<InvExpr> args;
  };
  explicit InvExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Pairing of the enumerated group elements with the first |G| primes.
struct PrimeAssignment {
  std::vector<Permutation> elements;
  std::vector<long long> primes;
  long long modulus = 1;  // product of the primes

  /// Throws ResourceError when the prime product would not fit comfortably
  /// in 64 bits (groups of order above 15).
  static PrimeAssignment for_group(const PermGroup& g);
};

/// The unique vector with 0 <= gamma_j < modulus and
/// gamma_j == -(elements[i](beta))_j  mod primes[i]  for every i, j.
Exponent crt_gamma(const PrimeAssignment& pa, const Exponent& beta);

/// Rewrites the transfer of x^beta as an expression in transfer generators
/// with all generator exponents bounded by the prime product in every
/// coordinate. Throws ResourceError past `max_nodes` created nodes.
InvExpr rewrite_transfer(const PermGroup& g, const Exponent& beta,
                         std::size_t max_nodes = 100000);

/// Value of the expression at a point, reading each generator Gen(alpha) as
/// the transfer function max over the group of the relabelled monomial.
Rational expr_eval(const PermGroup& g, const InvExpr& e,
                   const std::vector<Rational>& point);

/// The transfer the expression denotes, as an explicit rational function.
TropRational expr_to_rational(const PermGroup& g, const InvExpr& e);

/// For a univariate quotient with every coefficient equal to the tropical
/// unit: the exponents (a, b) in Z^2 with  r = x^a (1 + x)^b.
std::pair<long, long> factor_boolean_univariate(const TropRational& r);

/// Inverse of the factorization, for round trips: x^a (1 + x)^b as a
/// quotient of Boolean polynomials.
TropRational boolean_univariate(long a, long b);

}  // namespace tropinv
