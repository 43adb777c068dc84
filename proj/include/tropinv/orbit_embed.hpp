#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropinv/perm_group.hpp"

namespace tropinv {

/// Separating family for a group: the elementary symmetric polynomials
/// e_1..e_n plus one transfer f_s = Tr(x^{s(rho)}) per right coset of the
/// group, rho = (n-1, ..., 1, 0). Evaluating all of them embeds orbit space
/// into R^(n + n!/|G|).
struct EmbeddingSpec {
  PermGroup group;
  std::vector<TropPoly> e_polys;
  std::vector<TropPoly> f_polys;

  std::size_t size() const { return e_polys.size() + f_polys.size(); }
};

EmbeddingSpec separating_set(const PermGroup& g, int max_n = 8);

/// max over the group of <s(z), v>: the transfer of the monomial x^z
/// evaluated at v.
Rational max_filter(const PermGroup& g, const Exponent& z,
                    const std::vector<Rational>& v);

/// Exact squared Euclidean distance between v and the orbit of w.
Rational orbit_distance_sq(const PermGroup& g, const std::vector<Rational>& v,
                           const std::vector<Rational>& w);

/// Evaluation of every spec polynomial at v, e-polynomials first.
std::vector<Rational> embed(const EmbeddingSpec& spec,
                            const std::vector<Rational>& v);

enum class SeparationVerdict {
  SameOrbit,   // zero orbit distance and equal embeddings
  Separated,   // positive orbit distance and different embeddings
  Violation,   // the embedding disagrees with the orbit distance
};

SeparationVerdict separation_check(const EmbeddingSpec& spec,
                                   const std::vector<Rational>& v,
                                   const std::vector<Rational>& w);

struct SampleBox {
  long lo = -10;
  long hi = 10;
  long max_den = 8;
};

/// Extremal squared ratios |phi(v)-phi(w)|^2 / d(v,w)^2 over sampled pairs
/// with nonzero orbit distance, kept exact; the decimal fields hold square
/// roots printed to 20 significant digits.
struct DistortionReport {
  int samples = 0;
  int used = 0;
  std::uint64_t seed = 0;
  Rational c1_sq;
  Rational c2_sq;
  std::string c1_text;
  std::string c2_text;
  std::string ratio_text;  // c2 / c1
};

/// Samples `samples` pairs from the box with per-index derived streams, so
/// identical arguments give byte-identical reports.
DistortionReport distortion_estimate(const EmbeddingSpec& spec, int samples,
                                     std::uint64_t seed,
                                     const SampleBox& box = {});

/// Plain-text table form of a report.
std::string report_text(const DistortionReport& r);

/// Square root of a nonnegative rational, printed to 20 significant decimal
/// digits at pinned intermediate precision.
std::string sqrt_decimal(const Rational& sq);

}  // namespace tropinv
