#pragma once

#include <vector>

#include "tropinv/perm_group.hpp"

namespace tropinv {

/// k-th tropical elementary symmetric polynomial in n variables: the sum of
/// all squarefree degree-k monomials with unit coefficient. Canonical as
/// built (every 0/1 support point of weight k is a vertex of the hypersimplex).
TropPoly elementary_symmetric(int n, int k);

/// Whether a majorizes b: equal totals and every sorted-descending prefix sum
/// of a dominates the one of b. Equivalent to b lying in the hull of the
/// rearrangements of a (Rado).
bool majorizes(const Exponent& a, const Exponent& b);

/// Exponents c_1..c_n with  transfer(x^gamma) = e_1^c_1 ... e_n^c_n  under
/// the full symmetric group.
struct EDecomposition {
  std::vector<int> exponents;
};

/// Closed form: with g sorted descending, c_i = g_i - g_{i+1} and c_n = g_n.
EDecomposition sn_decompose(const Exponent& gamma);

/// Product of e_k powers named by a decomposition, in canonical form.
TropPoly e_product(int n, const EDecomposition& d);

/// Checks transfer(x^a) * transfer(x^b) == transfer(x^(a+b)) under the full
/// symmetric group; a and b must be sorted descending.
bool product_transfer_check(const Exponent& a, const Exponent& b);

/// For a group generated by its transpositions, the finite generating set of
/// the invariant semiring: per transposition block B the polynomials
/// e_1..e_|B| of the block variables, embedded in n variables. Throws
/// NotFinitelyGeneratedError otherwise.
std::vector<TropPoly> finite_generators(const PermGroup& g);

/// Number of distinct edge directions of orbit polytopes of strictly
/// decreasing exponents of 1-norm at most `bound`. Directions are primitive
/// integer vectors up to sign.
int edge_direction_census(const PermGroup& g, int bound);

}  // namespace tropinv
