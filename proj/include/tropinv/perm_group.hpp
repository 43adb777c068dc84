#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tropinv/lattice_polytope.hpp"
#include "tropinv/trop_poly.hpp"

namespace tropinv {

/// Permutation of {0, ..., n-1}, stored as its image list.
class Permutation {
 public:
  static Permutation identity(int n);
  /// Validates that `images` lists 1..n exactly once each.
  static Permutation from_images_1based(const std::vector<int>& images);
  /// Parses disjoint-or-not cycle notation with 1-based entries, e.g.
  /// "(1 2 3)(4 5)" or "(1,2)". The empty string is the identity.
  static Permutation from_cycles(int n, const std::string& text);

  int size() const { return static_cast<int>(img_.size()); }
  /// Image of 0-based i.
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

  /// (a * b)(i) == a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  bool is_identity() const;
  /// Whether exactly two points move.
  bool is_transposition() const;

  std::vector<int> images_1based() const;
  std::string to_string() const;  // cycle notation

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

  /// Coordinate relabelling: result[s(i)] = values[i].
  Exponent act(const Exponent& values) const;
  std::vector<Rational> act(const std::vector<Rational>& values) const;

 private:
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

/// Subgroup of the symmetric group on n points, with its full element list
/// enumerated breadth-first from the generators (identity first, order
/// deterministic in the generator list).
class PermGroup {
 public:
  static PermGroup enumerate(int n, std::vector<Permutation> generators,
                             std::size_t max_order = 40320);
  static PermGroup trivial(int n);
  static PermGroup symmetric(int n);

  int n() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const;

 private:
  PermGroup(int n, std::vector<Permutation> gens,
            std::vector<Permutation> elems);
  int n_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::set<Permutation> lookup_;
};

/// Exponent relabelled by s.
Exponent act_exponent(const Permutation& s, const Exponent& exp);

/// Polynomial with every term exponent relabelled by s.
TropPoly act_poly(const Permutation& s, const TropPoly& f);

/// Polytope with every vertex relabelled by s.
LatticePolytope act_polytope(const Permutation& s, const LatticePolytope& a);

/// Whether the term map of f is fixed by every group element.
bool is_invariant(const PermGroup& g, const TropPoly& f);

/// Transfer: tropical sum of the orbit of f, returned in canonical form.
TropPoly transfer(const PermGroup& g, const TropPoly& f);

/// Join of the orbit of a polytope.
LatticePolytope transfer(const PermGroup& g, const LatticePolytope& a);

/// Canonicalization of a polynomial whose term map is g-invariant, running
/// one redundancy test per exponent orbit.
TropPoly canonicalize_invariant(const PermGroup& g, const TropPoly& f);

/// Partition of {1, ..., n} generated by the transpositions inside g,
/// with a flag telling whether those transpositions generate all of g.
struct TranspositionBlocks {
  std::vector<std::vector<int>> blocks;  // sorted, 1-based, cover {1..n}
  bool transposition_generated = false;
};

TranspositionBlocks transposition_blocks(const PermGroup& g);

/// One representative per right coset g·s, in lexicographic image order;
/// requires n small enough to sweep all n! permutations.
std::vector<Permutation> coset_representatives(const PermGroup& g,
                                               int max_n = 8);

}  // namespace tropinv
