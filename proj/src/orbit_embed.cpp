#include "tropinv/orbit_embed.hpp"

#include <gmp.h>

#include <sstream>

#include "tropinv/errors.hpp"
#include "tropinv/invariants.hpp"
#include "tropinv/rng.hpp"

namespace tropinv {

EmbeddingSpec separating_set(const PermGroup& g, int max_n) {
  const int n = g.n();
  EmbeddingSpec spec{g, {}, {}};
  for (int k = 1; k <= n; ++k)
    spec.e_polys.push_back(elementary_symmetric(n, k));
  Exponent rho(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = n - 1 - i;
  for (const auto& rep : coset_representatives(g, max_n))
    spec.f_polys.push_back(
        transfer(g, TropPoly::monomial(n, rep.act(rho), Rational(0))));
  return spec;
}

Rational max_filter(const PermGroup& g, const Exponent& z,
                    const std::vector<Rational>& v) {
  if (static_cast<int>(z.size()) != g.n() || v.size() != z.size())
    throw DimensionError("length differs from group degree");
  bool first = true;
  Rational best(0);
  for (const auto& s : g.elements()) {
    Exponent img = s.act(z);
    Rational acc(0);
    for (std::size_t i = 0; i < v.size(); ++i)
      acc += Rational(img[i]) * v[i];
    if (first || best < acc) best = acc;
    first = false;
  }
  return best;
}

Rational orbit_distance_sq(const PermGroup& g, const std::vector<Rational>& v,
                           const std::vector<Rational>& w) {
  if (static_cast<int>(v.size()) != g.n() || w.size() != v.size())
    throw DimensionError("length differs from group degree");
  bool first = true;
  Rational best(0);
  for (const auto& s : g.elements()) {
    std::vector<Rational> sw = s.act(w);
    Rational acc(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational d = v[i] - sw[i];
      acc += d * d;
    }
    if (first || acc < best) best = acc;
    first = false;
  }
  return best;
}

std::vector<Rational> embed(const EmbeddingSpec& spec,
                            const std::vector<Rational>& v) {
  std::vector<Rational> out;
  out.reserve(spec.size());
  for (const auto& p : spec.e_polys) out.push_back(evaluate(p, v).value());
  for (const auto& p : spec.f_polys) out.push_back(evaluate(p, v).value());
  return out;
}

SeparationVerdict separation_check(const EmbeddingSpec& spec,
                                   const std::vector<Rational>& v,
                                   const std::vector<Rational>& w) {
  bool same_orbit = orbit_distance_sq(spec.group, v, w) == Rational(0);
  bool same_image = embed(spec, v) == embed(spec, w);
  if (same_orbit) return same_image ? SeparationVerdict::SameOrbit
                                    : SeparationVerdict::Violation;
  return same_image ? SeparationVerdict::Violation
                    : SeparationVerdict::Separated;
}

std::string sqrt_decimal(const Rational& sq) {
  if (sq.sign() < 0) throw DomainError("square root of a negative value");
  // 20 significant decimal digits need a bit over 66 bits; 256 is ample and
  // pins the intermediate precision for reproducibility.
  mpf_class x(sq.raw(), 256);
  mpf_class r(0, 256);
  mpf_sqrt(r.get_mpf_t(), x.get_mpf_t());
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.20Fg", r.get_mpf_t());
  return buf;
}

DistortionReport distortion_estimate(const EmbeddingSpec& spec, int samples,
                                     std::uint64_t seed,
                                     const SampleBox& box) {
  if (samples < 1) throw DomainError("need at least one sample");
  if (box.lo >= box.hi || box.max_den < 1) throw DomainError("bad sample box");
  const int n = spec.group.n();
  DistortionReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.c1_sq = Rational(0);
  rep.c2_sq = Rational(0);
  for (int idx = 0; idx < samples; ++idx) {
    Rng rng = Rng::for_index(seed, static_cast<std::uint64_t>(idx));
    std::vector<Rational> v = rng.point(n, box.lo, box.hi, box.max_den);
    std::vector<Rational> w = rng.point(n, box.lo, box.hi, box.max_den);
    Rational d2 = orbit_distance_sq(spec.group, v, w);
    if (d2 == Rational(0)) continue;
    std::vector<Rational> pv = embed(spec, v);
    std::vector<Rational> pw = embed(spec, w);
    Rational img2(0);
    for (std::size_t i = 0; i < pv.size(); ++i) {
      Rational d = pv[i] - pw[i];
      img2 += d * d;
    }
    Rational ratio = img2 / d2;
    if (rep.used == 0 || ratio < rep.c1_sq) rep.c1_sq = ratio;
    if (rep.used == 0 || rep.c2_sq < ratio) rep.c2_sq = ratio;
    ++rep.used;
  }
  if (rep.used > 0) {
    rep.c1_text = sqrt_decimal(rep.c1_sq);
    rep.c2_text = sqrt_decimal(rep.c2_sq);
    rep.ratio_text = sqrt_decimal(rep.c2_sq / rep.c1_sq);
  }
  return rep;
}

std::string report_text(const DistortionReport& r) {
  std::ostringstream out;
  out << "samples " << r.samples << "\n";
  out << "used " << r.used << "\n";
  out << "seed " << r.seed << "\n";
  out << "c1_sq " << r.c1_sq.to_string() << "\n";
  out << "c2_sq " << r.c2_sq.to_string() << "\n";
  out << "c1 " << r.c1_text << "\n";
  out << "c2 " << r.c2_text << "\n";
  out << "ratio " << r.ratio_text << "\n";
  return out.str();
}

}  // namespace tropinv
