#include "tropinv/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "tropinv/errors.hpp"

namespace tropinv {

TropPoly elementary_symmetric(int n, int k) {
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  TropPoly f(n);
  Exponent e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> place = [&](int from, int left) {
    if (left == 0) {
      f.set_term(e, TropScalar::one());
      return;
    }
    for (int i = from; i <= n - left; ++i) {
      e[static_cast<std::size_t>(i)] = 1;
      place(i + 1, left - 1);
      e[static_cast<std::size_t>(i)] = 0;
    }
  };
  place(0, k);
  // Every support point is a vertex of the weight-k hypersimplex, so
  // canonicalization keeps all of them; it is run anyway to certify the flag.
  return canonicalize(f);
}

bool majorizes(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionError("length mismatch");
  Exponent sa = a;
  Exponent sb = b;
  std::sort(sa.begin(), sa.end(), std::greater<int>());
  std::sort(sb.begin(), sb.end(), std::greater<int>());
  long pa = 0;
  long pb = 0;
  for (std::size_t i = 0; i + 1 < sa.size(); ++i) {
    pa += sa[i];
    pb += sb[i];
    if (pa < pb) return false;
  }
  pa += sa.empty() ? 0 : sa.back();
  pb += sb.empty() ? 0 : sb.back();
  return pa == pb;
}

EDecomposition sn_decompose(const Exponent& gamma) {
  if (gamma.empty()) throw DomainError("empty exponent");
  for (int x : gamma)
    if (x < 0) throw DomainError("negative exponent entry");
  Exponent g = gamma;
  std::sort(g.begin(), g.end(), std::greater<int>());
  EDecomposition d;
  d.exponents.resize(g.size());
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    d.exponents[i] = g[i] - g[i + 1];
  d.exponents.back() = g.back();
  return d;
}

TropPoly e_product(int n, const EDecomposition& d) {
  if (static_cast<int>(d.exponents.size()) != n)
    throw DimensionError("decomposition length differs from n");
  PermGroup sn = PermGroup::symmetric(n);
  TropPoly acc = TropPoly::one(n);
  for (int k = 1; k <= n; ++k) {
    int c = d.exponents[static_cast<std::size_t>(k - 1)];
    if (c < 0) throw DomainError("negative decomposition entry");
    TropPoly ek = elementary_symmetric(n, k);
    for (int i = 0; i < c; ++i)
      acc = canonicalize_invariant(sn, trop_mul(acc, ek));
  }
  return acc;
}

bool product_transfer_check(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionError("length mismatch");
  auto sorted = [](const Exponent& x) {
    return std::is_sorted(x.begin(), x.end(), std::greater<int>());
  };
  if (!sorted(a) || !sorted(b))
    throw DomainError("exponents must be sorted descending");
  const int n = static_cast<int>(a.size());
  PermGroup sn = PermGroup::symmetric(n);
  TropPoly ta = transfer(sn, TropPoly::monomial(n, a, Rational(0)));
  TropPoly tb = transfer(sn, TropPoly::monomial(n, b, Rational(0)));
  TropPoly lhs = canonicalize_invariant(sn, trop_mul(ta, tb));
  TropPoly rhs = transfer(sn, TropPoly::monomial(n, exp_add(a, b), Rational(0)));
  return lhs == rhs;
}

std::vector<TropPoly> finite_generators(const PermGroup& g) {
  TranspositionBlocks tb = transposition_blocks(g);
  if (!tb.transposition_generated)
    throw NotFinitelyGeneratedError(
        "group is not generated by its transpositions");
  const int n = g.n();
  std::vector<TropPoly> out;
  for (const auto& block : tb.blocks) {
    const int bsize = static_cast<int>(block.size());
    for (int k = 1; k <= bsize; ++k) {
      TropPoly small = elementary_symmetric(bsize, k);
      TropPoly lifted(n);
      for (const auto& [exp, coef] : small.terms()) {
        Exponent e(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < bsize; ++i)
          e[static_cast<std::size_t>(block[static_cast<std::size_t>(i)] - 1)] =
              exp[static_cast<std::size_t>(i)];
        lifted.set_term(std::move(e), TropScalar(coef));
      }
      out.push_back(canonicalize(lifted));
    }
  }
  return out;
}

namespace {

// Primitive representative of u - v with the first nonzero entry positive.
Exponent primitive_direction(const Exponent& u, const Exponent& v) {
  Exponent d(u.size());
  int g = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    d[i] = u[i] - v[i];
    g = std::gcd(g, std::abs(d[i]));
  }
  for (auto& x : d) x /= g;
  for (auto& x : d) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : d) y = -y;
    break;
  }
  return d;
}

// All strictly decreasing nonnegative exponents with 1-norm at most `bound`.
std::vector<Exponent> strict_staircase(int n, int bound) {
  std::vector<Exponent> out;
  Exponent cur;
  std::function<void(int, int)> rec = [&](int prev, int left) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    int tail = n - static_cast<int>(cur.size()) - 1;
    for (int v = std::min(prev - 1, left); v >= tail; --v) {
      if (tail * (tail - 1) / 2 > left - v) continue;
      cur.push_back(v);
      rec(v, left - v);
      cur.pop_back();
    }
  };
  rec(bound + 1, bound);
  return out;
}

}  // namespace

int edge_direction_census(const PermGroup& g, int bound) {
  if (bound < 0) throw DomainError("negative bound");
  const int n = g.n();
  std::set<Exponent> directions;
  for (const auto& alpha : strict_staircase(n, bound)) {
    auto orbit = transfer(g, LatticePolytope::hull_of(n, {alpha}));
    for (const auto& [u, v] : edges(orbit))
      directions.insert(primitive_direction(u, v));
  }
  return static_cast<int>(directions.size());
}

}  // namespace tropinv
