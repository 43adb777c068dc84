// Acceptance gate. Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any criterion fails. All sample counts, size
// bounds, and runtime caps are pinned here. Every numeric check is exact
// rational arithmetic; the only tolerances are the two runtime caps.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tropinv/invariants.hpp"
#include "tropinv/json_io.hpp"
#include "tropinv/lattice_polytope.hpp"
#include "tropinv/lp.hpp"
#include "tropinv/orbit_embed.hpp"
#include "tropinv/perm_group.hpp"
#include "tropinv/rational_inv.hpp"
#include "tropinv/rng.hpp"
#include "tropinv/trop_poly.hpp"

using namespace tropinv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;  // first failure, for the FAIL line
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (cond || !o.pass) return;
  o.pass = false;
  o.detail = what;
}

TropPoly random_poly_box(Rng& rng, int arity, int max_terms, int max_exp,
                         long coef_box, long coef_den) {
  TropPoly f(arity);
  long nt = rng.uniform(0, max_terms);
  for (long t = 0; t < nt; ++t)
    f.set_term(rng.int_vector(arity, 0, max_exp),
               TropScalar(rng.rational(-coef_box, coef_box, coef_den)));
  return f;
}

TropPoly random_nonzero_box(Rng& rng, int arity, int max_terms, int max_exp,
                            long coef_box, long coef_den) {
  for (;;) {
    TropPoly f =
        random_poly_box(rng, arity, max_terms, max_exp, coef_box, coef_den);
    if (!f.is_zero()) return f;
  }
}

bool same_function(const TropPoly& f, const TropPoly& g) {
  return !witness_point(f, g).has_value();
}

/// All weakly decreasing tuples of length n with entries in [0, hi].
void sorted_tuples(int n, int hi, Exponent& cur, std::vector<Exponent>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = hi; v >= 0; --v) {
    cur.push_back(v);
    sorted_tuples(n, v, cur, out);
    cur.pop_back();
  }
}

std::vector<Exponent> orbit_points(const Exponent& a) {
  Exponent s = a;
  std::sort(s.begin(), s.end());
  std::vector<Exponent> out;
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

int max_gen_norm(const InvExpr& e) {
  if (e.kind() == InvExpr::Kind::Gen) return norm_inf(e.exponent());
  int best = 0;
  for (const auto& a : e.args()) best = std::max(best, max_gen_norm(a));
  return best;
}

std::string exp_text(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

/// 500 random polynomials: canonicalization preserves the function at 1000
/// random points each, and deleting any surviving term changes the function
/// at an explicit witness point. Cap 60 s.
Outcome criterion_canonical() {
  constexpr int kPolys = 500;
  constexpr int kPoints = 1000;
  constexpr double kCapSeconds = 60.0;
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  Rng rng(0xC1);
  for (int i = 0; i < kPolys && o.pass; ++i) {
    int n = 1 + i % 3;
    TropPoly f = random_poly_box(rng, n, 8, 5, 10, 8);
    TropPoly cf = canonicalize(f);
    for (int p = 0; p < kPoints && o.pass; ++p) {
      std::vector<Rational> v = rng.point(n, -10, 10, 8);
      expect(o, evaluate(f, v) == evaluate(cf, v),
             "canonical form changed the function value (poly " +
                 std::to_string(i) + ")");
    }
    for (const auto& [exp, coef] : cf.terms()) {
      TropPoly del = cf;
      del.set_term(exp, TropScalar::bottom());
      auto w = witness_point(cf, del);
      expect(o, w.has_value(),
             "no witness after deleting a canonical term (poly " +
                 std::to_string(i) + ")");
      if (w)
        expect(o, evaluate(cf, *w) != evaluate(del, *w),
               "witness point does not separate (poly " + std::to_string(i) +
                   ")");
      if (!o.pass) break;
    }
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  expect(o, dt < kCapSeconds,
         "runtime " + std::to_string(dt) + "s exceeds 60s cap");
  return o;
}

/// Idempotence, Frobenius powers up to 4, multiplicative cancellation, and
/// the hull-domination equivalence, 200 random instances each.
Outcome criterion_semiring_laws() {
  constexpr int kInstances = 200;
  Outcome o;
  Rng rng(0xC2);

  for (int i = 0; i < kInstances && o.pass; ++i) {
    int n = 1 + i % 3;
    TropPoly f = random_poly_box(rng, n, 6, 4, 5, 4);
    expect(o, same_function(trop_add(f, f), f),
           "idempotence failed (instance " + std::to_string(i) + ")");
  }

  for (int i = 0; i < kInstances && o.pass; ++i) {
    TropPoly f = random_poly_box(rng, 2, 3, 2, 5, 4);
    TropPoly g = random_poly_box(rng, 2, 3, 2, 5, 4);
    TropPoly s = trop_add(f, g);
    for (int m = 2; m <= 4 && o.pass; ++m)
      expect(o,
             same_function(trop_pow(s, m),
                           trop_add(trop_pow(f, m), trop_pow(g, m))),
             "Frobenius power " + std::to_string(m) + " failed (instance " +
                 std::to_string(i) + ")");
  }

  for (int i = 0; i < kInstances && o.pass; ++i) {
    int n = 1 + i % 3;
    TropPoly f = random_poly_box(rng, n, 4, 3, 5, 4);
    TropPoly g = (i % 4 == 0) ? canonicalize(f)
                              : random_poly_box(rng, n, 4, 3, 5, 4);
    TropPoly h = random_nonzero_box(rng, n, 4, 3, 5, 4);
    bool plain = same_function(f, g);
    bool scaled = same_function(trop_mul(f, h), trop_mul(g, h));
    expect(o, plain == scaled,
           "cancellation failed (instance " + std::to_string(i) + ")");
  }

  for (int i = 0; i < kInstances && o.pass; ++i) {
    int n = 1 + i % 3;
    std::vector<Exponent> support;
    long npts = rng.uniform(1, 6);
    for (long t = 0; t < npts; ++t)
      support.push_back(rng.int_vector(n, 0, 5));
    Exponent beta;
    if (i % 2 == 0) {
      beta = rng.int_vector(n, 0, 5);
    } else {
      // Guaranteed hull point: a support point, or an integral midpoint.
      const Exponent& a = support[rng.index(support.size())];
      const Exponent& b = support[rng.index(support.size())];
      beta = a;
      bool even = true;
      for (std::size_t j = 0; j < a.size(); ++j)
        even = even && ((a[j] + b[j]) % 2 == 0);
      if (even)
        for (std::size_t j = 0; j < a.size(); ++j) beta[j] = (a[j] + b[j]) / 2;
    }
    TropPoly hullpoly(n);
    for (const auto& a : support) hullpoly.set_term(a, TropScalar::one());
    bool inside = in_convex_hull(support, beta).inside;
    bool dominated = dominates(hullpoly, beta, Rational(0));
    expect(o, inside == dominated,
           "hull membership disagrees with term domination (instance " +
               std::to_string(i) + ")");
    if (inside) {
      for (int p = 0; p < 20 && o.pass; ++p) {
        std::vector<Rational> v = rng.point(n, -6, 6, 4);
        Rational lhs(0);
        for (int j = 0; j < n; ++j)
          lhs = lhs + Rational(beta[static_cast<std::size_t>(j)]) *
                          v[static_cast<std::size_t>(j)];
        expect(o, TropScalar(lhs) <= evaluate(hullpoly, v),
               "hull point exceeds the support maximum (instance " +
                   std::to_string(i) + ")");
      }
    }
  }
  return o;
}

/// Transfer of a monomial product equals the product of transfers over the
/// full symmetric group: exhaustive for n <= 4 with entries <= 4, then 100
/// random pairs with entries up to 8. The elementary-symmetric decomposition
/// reproduces every monomial transfer for n <= 4 with entries <= 5.
Outcome criterion_transfer_products() {
  Outcome o;
  for (int n = 1; n <= 4 && o.pass; ++n) {
    std::vector<Exponent> tuples;
    Exponent cur;
    sorted_tuples(n, 4, cur, tuples);
    for (std::size_t i = 0; i < tuples.size() && o.pass; ++i)
      for (std::size_t j = i; j < tuples.size() && o.pass; ++j)
        expect(o, product_transfer_check(tuples[i], tuples[j]),
               "product identity failed at n=" + std::to_string(n) + " " +
                   exp_text(tuples[i]) + " * " + exp_text(tuples[j]));
  }

  Rng rng(0xC3);
  for (int i = 0; i < 100 && o.pass; ++i) {
    Exponent a = rng.int_vector(4, 0, 8);
    Exponent b = rng.int_vector(4, 0, 8);
    std::sort(a.begin(), a.end(), std::greater<int>());
    std::sort(b.begin(), b.end(), std::greater<int>());
    expect(o, product_transfer_check(a, b),
           "product identity failed on random pair " + exp_text(a) + " * " +
               exp_text(b));
  }

  for (int n = 1; n <= 4 && o.pass; ++n) {
    PermGroup sn = PermGroup::symmetric(n);
    std::vector<Exponent> tuples;
    Exponent cur;
    sorted_tuples(n, 5, cur, tuples);
    for (const auto& gamma : tuples) {
      TropPoly direct = transfer(sn, TropPoly::monomial(n, gamma, Rational(0)));
      TropPoly built = e_product(n, sn_decompose(gamma));
      expect(o, direct == built,
             "elementary-symmetric decomposition failed for gamma=" +
                 exp_text(gamma));
      if (!o.pass) break;
    }
  }
  return o;
}

/// Majorization (sorted prefix dominance with equal totals) agrees with exact
/// membership in the convex hull of the permutation orbit, 300 pairs.
Outcome criterion_majorization() {
  constexpr int kPairs = 300;
  Outcome o;
  Rng rng(0xC4);
  for (int i = 0; i < kPairs && o.pass; ++i) {
    int n = 2 + i % 3;
    Exponent a = rng.int_vector(n, 0, 6);
    Exponent b;
    if (i % 2 == 0) {
      b = rng.int_vector(n, 0, 6);
    } else {
      // Robin Hood moves keep the total and stay inside the orbit hull.
      b = a;
      long moves = rng.uniform(0, 3);
      for (long m = 0; m < moves; ++m) {
        std::size_t hi = rng.index(b.size());
        std::size_t lo = rng.index(b.size());
        if (b[hi] > b[lo] + 1) {
          --b[hi];
          ++b[lo];
        }
      }
    }
    bool rado = majorizes(a, b);
    bool hull = in_convex_hull(orbit_points(a), b).inside;
    expect(o, rado == hull,
           "majorization disagrees with orbit-hull membership for a=" +
               exp_text(a) + " b=" + exp_text(b));
  }
  return o;
}

/// Finite generation of the invariant semiring holds exactly for groups
/// generated by their transpositions; generator lists are invariant.
Outcome criterion_finite_generation() {
  Outcome o;
  auto cyc = [](int n, const std::string& text) {
    return Permutation::from_cycles(n, text);
  };

  struct Case {
    std::string name;
    PermGroup group;
    bool finitely_generated;
  };
  std::vector<Case> cases;
  cases.push_back({"S4", PermGroup::symmetric(4), true});
  cases.push_back({"S2xS2", PermGroup::enumerate(
                                4, {cyc(4, "(1 2)"), cyc(4, "(3 4)")}),
                   true});
  cases.push_back({"C3", PermGroup::enumerate(3, {cyc(3, "(1 2 3)")}), false});
  cases.push_back(
      {"double-swap", PermGroup::enumerate(4, {cyc(4, "(1 2)(3 4)")}), false});
  cases.push_back({"C4", PermGroup::enumerate(4, {cyc(4, "(1 2 3 4)")}), false});
  cases.push_back({"A4", PermGroup::enumerate(
                             4, {cyc(4, "(1 2 3)"), cyc(4, "(1 2)(3 4)")}),
                   false});

  for (const auto& c : cases) {
    bool threw = false;
    std::vector<TropPoly> gens;
    try {
      gens = finite_generators(c.group);
    } catch (const NotFinitelyGeneratedError&) {
      threw = true;
    }
    expect(o, threw == !c.finitely_generated,
           "verdict wrong for " + c.name);
    if (!threw) {
      expect(o, gens.size() == static_cast<std::size_t>(c.group.n()),
             "generator count wrong for " + c.name);
      for (const auto& f : gens)
        expect(o, is_invariant(c.group, f),
               "non-invariant generator for " + c.name);
    }
    if (!o.pass) break;
  }
  return o;
}

/// Separating sets: elementary symmetrics plus one max filter per coset,
/// n + n!/|G| functions of degree at most max(n, n(n-1)/2); the embedding
/// never disagrees with the exact orbit distance on the 0..2 grid or on 1000
/// random pairs across cyclic and block groups up to n = 5.
Outcome criterion_separating() {
  Outcome o;
  auto cyc = [](int n, const std::string& text) {
    return Permutation::from_cycles(n, text);
  };

  auto check_shape = [&o](const std::string& name, const PermGroup& g,
                          const EmbeddingSpec& spec) {
    std::size_t fact = 1;
    for (int i = 2; i <= g.n(); ++i) fact *= static_cast<std::size_t>(i);
    expect(o, spec.e_polys.size() == static_cast<std::size_t>(g.n()),
           "elementary block has wrong size for " + name);
    expect(o, spec.f_polys.size() == fact / g.order(),
           "filter block has wrong size for " + name);
    int cap = std::max(g.n(), g.n() * (g.n() - 1) / 2);
    for (const auto& f : spec.e_polys)
      expect(o, degree(f) <= cap, "degree bound violated for " + name);
    for (const auto& f : spec.f_polys)
      expect(o, degree(f) <= cap, "degree bound violated for " + name);
  };

  std::vector<std::pair<std::string, PermGroup>> grid_groups;
  grid_groups.emplace_back("C3", PermGroup::enumerate(3, {cyc(3, "(1 2 3)")}));
  grid_groups.emplace_back("swap12",
                           PermGroup::enumerate(3, {cyc(3, "(1 2)")}));
  grid_groups.emplace_back("S3", PermGroup::symmetric(3));

  std::vector<std::vector<Rational>> grid;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        grid.push_back({Rational(a), Rational(b), Rational(c)});

  for (const auto& [name, g] : grid_groups) {
    EmbeddingSpec spec = separating_set(g);
    check_shape(name, g, spec);
    for (std::size_t i = 0; i < grid.size() && o.pass; ++i)
      for (std::size_t j = i; j < grid.size() && o.pass; ++j)
        expect(o,
               separation_check(spec, grid[i], grid[j]) !=
                   SeparationVerdict::Violation,
               "separation violation on the grid for " + name);
    if (!o.pass) break;
  }

  std::vector<std::pair<std::string, PermGroup>> roster;
  roster.emplace_back("S2", PermGroup::symmetric(2));
  roster.emplace_back("C3", PermGroup::enumerate(3, {cyc(3, "(1 2 3)")}));
  roster.emplace_back("swap12-n3", PermGroup::enumerate(3, {cyc(3, "(1 2)")}));
  roster.emplace_back("C4", PermGroup::enumerate(4, {cyc(4, "(1 2 3 4)")}));
  roster.emplace_back("S2xS2", PermGroup::enumerate(
                                   4, {cyc(4, "(1 2)"), cyc(4, "(3 4)")}));
  roster.emplace_back("C5", PermGroup::enumerate(5, {cyc(5, "(1 2 3 4 5)")}));
  roster.emplace_back(
      "blocks-n5",
      PermGroup::enumerate(5, {cyc(5, "(1 2)"), cyc(5, "(3 4)")}));

  std::vector<EmbeddingSpec> specs;
  for (const auto& [name, g] : roster) {
    specs.push_back(separating_set(g));
    check_shape(name, g, specs.back());
  }

  Rng rng(0xC6);
  for (int i = 0; i < 1000 && o.pass; ++i) {
    std::size_t pick = static_cast<std::size_t>(i) % roster.size();
    const PermGroup& g = roster[pick].second;
    std::vector<Rational> v = rng.point(g.n(), -3, 3, 4);
    std::vector<Rational> w =
        rng.coin() ? rng.point(g.n(), -3, 3, 4)
                   : g.elements()[rng.index(g.order())].act(v);
    expect(o,
           separation_check(specs[pick], v, w) != SeparationVerdict::Violation,
           "separation violation on a random pair for " + roster[pick].first);
  }
  return o;
}

/// Distortion reports over 1000 seeded pairs have a positive lower constant
/// and a finite upper constant, and are byte-identical across reruns.
Outcome criterion_distortion() {
  Outcome o;
  auto cyc = [](int n, const std::string& text) {
    return Permutation::from_cycles(n, text);
  };
  std::vector<std::pair<std::string, PermGroup>> groups;
  groups.emplace_back("C3", PermGroup::enumerate(3, {cyc(3, "(1 2 3)")}));
  groups.emplace_back("swap12", PermGroup::enumerate(3, {cyc(3, "(1 2)")}));
  groups.emplace_back("S3", PermGroup::symmetric(3));

  constexpr int kPairs = 1000;
  constexpr std::uint64_t kSeed = 2026;
  for (const auto& [name, g] : groups) {
    EmbeddingSpec spec = separating_set(g);
    DistortionReport a = distortion_estimate(spec, kPairs, kSeed, {});
    DistortionReport b = distortion_estimate(spec, kPairs, kSeed, {});
    expect(o, a.used > 0, "no usable pairs for " + name);
    expect(o, a.c1_sq > Rational(0), "lower constant is zero for " + name);
    expect(o, a.c2_sq >= a.c1_sq, "constants out of order for " + name);
    expect(o,
           dump_json(report_to_json(a)) == dump_json(report_to_json(b)) &&
               report_text(a) == report_text(b),
           "report not reproducible for " + name);
    if (!o.pass) break;
  }
  return o;
}

/// Rewriting transfers over the bounded generators: the prime-power identity
/// Tr(x^beta) * Tr(x^gamma) = sum_i Tr(x^delta_i)^{p_i} holds canonically,
/// every generator leaf stays below the prime-product degree bound, and the
/// expression evaluates like the transfer at 100 random points each. Cap 120s.
Outcome criterion_rewriting() {
  constexpr double kCapSeconds = 120.0;
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  auto cyc = [](int n, const std::string& text) {
    return Permutation::from_cycles(n, text);
  };

  struct Case {
    std::string name;
    PermGroup group;
    Exponent beta;
  };
  std::vector<Case> cases;
  cases.push_back({"S2 (7,0)", PermGroup::symmetric(2), {7, 0}});
  cases.push_back({"S2 (9,4)", PermGroup::symmetric(2), {9, 4}});
  cases.push_back({"S2 (13,2)", PermGroup::symmetric(2), {13, 2}});
  cases.push_back(
      {"C3 (31,1,0)", PermGroup::enumerate(3, {cyc(3, "(1 2 3)")}), {31, 1, 0}});

  Rng rng(0xC8);
  for (const auto& c : cases) {
    const PermGroup& g = c.group;
    const int n = g.n();
    PrimeAssignment pa = PrimeAssignment::for_group(g);

    // The identity behind one rewriting step, checked at the top level.
    Exponent gamma = crt_gamma(pa, c.beta);
    auto tr = [&g, n](const Exponent& e) {
      return transfer(g, TropPoly::monomial(n, e, Rational(0)));
    };
    TropPoly lhs = canonicalize_invariant(g, trop_mul(tr(c.beta), tr(gamma)));
    TropPoly rhs = TropPoly::zero(n);
    for (std::size_t i = 0; i < pa.elements.size(); ++i) {
      Exponent shifted = pa.elements[i].act(c.beta);
      Exponent delta(static_cast<std::size_t>(n));
      bool integral = true;
      for (std::size_t j = 0; j < delta.size(); ++j) {
        long sum = gamma[j] + shifted[j];
        integral = integral && (sum % pa.primes[i] == 0);
        delta[j] = static_cast<int>(sum / pa.primes[i]);
      }
      expect(o, integral, "non-integral quotient exponent for " + c.name);
      if (!integral) break;
      rhs = trop_add(rhs, trop_pow(tr(delta), static_cast<int>(pa.primes[i])));
    }
    if (!o.pass) break;
    rhs = canonicalize_invariant(g, rhs);
    expect(o, trop_equals(lhs, rhs),
           "prime-power identity failed for " + c.name);

    InvExpr e = rewrite_transfer(g, c.beta);
    expect(o, max_gen_norm(e) < pa.modulus,
           "generator degree bound violated for " + c.name);

    TropPoly direct = tr(c.beta);
    for (int p = 0; p < 100 && o.pass; ++p) {
      std::vector<Rational> v = rng.point(n, -10, 10, 8);
      expect(o, TropScalar(expr_eval(g, e, v)) == evaluate(direct, v),
             "expression value differs from the transfer for " + c.name);
    }
    if (!o.pass) break;
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  expect(o, dt < kCapSeconds,
         "runtime " + std::to_string(dt) + "s exceeds 120s cap");
  return o;
}

/// Newton polytopes: tropical sum maps to join, product to Minkowski sum,
/// relabelling commutes, and symmetrized inputs give fixed polytopes. 200
/// random pairs, all equalities exact.
Outcome criterion_newton() {
  constexpr int kPairs = 200;
  Outcome o;
  Rng rng(0xC9);
  for (int i = 0; i < kPairs && o.pass; ++i) {
    int n = 1 + i % 3;
    TropPoly f = random_poly_box(rng, n, 6, 4, 5, 4);
    TropPoly g = random_poly_box(rng, n, 6, 4, 5, 4);
    expect(o,
           poly_equals(newton_polytope(trop_add(f, g)),
                       poly_join(newton_polytope(f), newton_polytope(g))),
           "sum-to-join failed (pair " + std::to_string(i) + ")");
    expect(o,
           poly_equals(newton_polytope(trop_mul(f, g)),
                       poly_minkowski(newton_polytope(f), newton_polytope(g))),
           "product-to-Minkowski failed (pair " + std::to_string(i) + ")");

    PermGroup sn = PermGroup::symmetric(n);
    const Permutation& s = sn.elements()[rng.index(sn.order())];
    expect(o,
           poly_equals(newton_polytope(act_poly(s, f)),
                       act_polytope(s, newton_polytope(f))),
           "relabelling does not commute (pair " + std::to_string(i) + ")");

    TropPoly sym = transfer(sn, f);
    LatticePolytope pi = newton_polytope(sym);
    for (const auto& gen : sn.generators())
      expect(o, poly_equals(act_polytope(gen, pi), pi),
             "invariant polynomial with a moving polytope (pair " +
                 std::to_string(i) + ")");
  }
  return o;
}

/// Edge-direction census: strictly growing for the 3-cycle group between
/// degree bounds 4 and 8; constant at the 3 permutohedron directions for S3
/// from bound 6 on.
Outcome criterion_census() {
  Outcome o;
  PermGroup c3 =
      PermGroup::enumerate(3, {Permutation::from_cycles(3, "(1 2 3)")});
  int at4 = edge_direction_census(c3, 4);
  int at8 = edge_direction_census(c3, 8);
  expect(o, at8 > at4,
         "census did not grow: " + std::to_string(at4) + " -> " +
             std::to_string(at8));

  PermGroup s3 = PermGroup::symmetric(3);
  int stable = edge_direction_census(s3, 6);
  expect(o, stable == 3,
         "expected the 3 permutohedron directions, got " +
             std::to_string(stable));
  expect(o,
         edge_direction_census(s3, 7) == stable &&
             edge_direction_census(s3, 8) == stable,
         "census not stable past bound 6");
  return o;
}

/// Boolean univariate quotients factor uniquely through x and 1+x: 200
/// random exponent pairs round-trip, and x^2 + x^5 factors as (2, 3).
Outcome criterion_boolean_factor() {
  constexpr int kPairs = 200;
  Outcome o;
  Rng rng(0xCB);
  for (int i = 0; i < kPairs && o.pass; ++i) {
    long a = rng.uniform(-5, 5);
    long b = rng.uniform(-5, 5);
    TropRational r = boolean_univariate(a, b);
    auto [fa, fb] = factor_boolean_univariate(r);
    expect(o, fa == a && fb == b,
           "round trip failed for (" + std::to_string(a) + ", " +
               std::to_string(b) + ")");
    expect(o, rat_equals(boolean_univariate(fa, fb), r),
           "rebuilt quotient differs for (" + std::to_string(a) + ", " +
               std::to_string(b) + ")");
  }

  TropPoly num(1);
  num.set_term({2}, TropScalar::one());
  num.set_term({5}, TropScalar::one());
  auto [a, b] = factor_boolean_univariate(TropRational(num, TropPoly::one(1)));
  expect(o, a == 2 && b == 3, "x^2 + x^5 did not factor as (2, 3)");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"canonical forms are function-equal and term-minimal", criterion_canonical},
      {"semiring laws: idempotence, Frobenius, cancellation, hull domination",
       criterion_semiring_laws},
      {"monomial transfers multiply and decompose over symmetric groups",
       criterion_transfer_products},
      {"majorization matches orbit-hull membership", criterion_majorization},
      {"finite generation exactly for transposition-generated groups",
       criterion_finite_generation},
      {"separating sets never contradict the orbit distance",
       criterion_separating},
      {"distortion estimates are positive, ordered, and reproducible",
       criterion_distortion},
      {"transfers rewrite over bounded generators via the prime-power identity",
       criterion_rewriting},
      {"Newton polytopes: join/Minkowski homomorphism and equivariance",
       criterion_newton},
      {"edge-direction census grows for the 3-cycle group, stabilizes for S3",
       criterion_census},
      {"Boolean univariate quotients factor and round-trip",
       criterion_boolean_factor},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("[%2zu/%zu] %s  %s  (%.1fs)%s%s\n", i + 1, criteria.size(),
                o.pass ? "PASS" : "FAIL", criteria[i].name, dt,
                o.pass ? "" : "  -- ", o.pass ? "" : o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  if (failures) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
