#include "tropinv/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tropinv/errors.hpp"

namespace tropinv {

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("permutation degree must be positive");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images_1based(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw ValidationError("empty image list");
  std::vector<int> img(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw ValidationError("image list is not a permutation of 1..n");
    seen[static_cast<std::size_t>(v - 1)] = true;
    img[i] = v - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::string& text) {
  Permutation out = identity(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ValidationError("expected '(' in cycle text");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) throw ValidationError("expected number in cycle text");
      int v = std::stoi(text.substr(start, i - start));
      if (v < 1 || v > n) throw ValidationError("cycle entry out of range");
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      for (std::size_t l = k + 1; l < cycle.size(); ++l)
        if (cycle[k] == cycle[l])
          throw ValidationError("repeated entry in cycle");
    // Apply the cycle on the left of what has been parsed so far.
    std::vector<int> cyc(out.img_.size());
    std::iota(cyc.begin(), cyc.end(), 0);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      cyc[static_cast<std::size_t>(cycle[k])] =
          cycle[(k + 1) % cycle.size()];
    Permutation c{std::move(cyc)};
    out = c * out;
    skip_ws();
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DimensionError("degree mismatch in compose");
  std::vector<int> img(a.img_.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = a.img_[static_cast<std::size_t>(b.img_[i])];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    img[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) ++moved;
  return moved == 2;
}

std::vector<int> Permutation::images_1based() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

std::string Permutation::to_string() const {
  if (is_identity()) return "()";
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << " ";
      first = false;
      os << (j + 1);
      j = static_cast<std::size_t>(img_[j]);
    }
    os << ")";
  }
  return os.str();
}

Exponent Permutation::act(const Exponent& values) const {
  if (values.size() != img_.size())
    throw DimensionError("vector length differs from permutation degree");
  Exponent out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[static_cast<std::size_t>(img_[i])] = values[i];
  return out;
}

std::vector<Rational> Permutation::act(
    const std::vector<Rational>& values) const {
  if (values.size() != img_.size())
    throw DimensionError("vector length differs from permutation degree");
  std::vector<Rational> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[static_cast<std::size_t>(img_[i])] = values[i];
  return out;
}

PermGroup::PermGroup(int n, std::vector<Permutation> gens,
                     std::vector<Permutation> elems)
    : n_(n), generators_(std::move(gens)), elements_(std::move(elems)) {
  lookup_.insert(elements_.begin(), elements_.end());
}

PermGroup PermGroup::enumerate(int n, std::vector<Permutation> generators,
                               std::size_t max_order) {
  for (const auto& g : generators)
    if (g.size() != n) throw DimensionError("generator degree differs from n");
  std::vector<Permutation> elems = {Permutation::identity(n)};
  std::set<Permutation> seen(elems.begin(), elems.end());
  for (std::size_t head = 0; head < elems.size(); ++head) {
    Permutation cur = elems[head];  // copy: elems may reallocate
    for (const auto& g : generators) {
      Permutation next = g * cur;
      if (seen.insert(next).second) {
        elems.push_back(std::move(next));
        if (elems.size() > max_order)
          throw ResourceError("group order exceeds cap");
      }
    }
  }
  return PermGroup(n, std::move(generators), std::move(elems));
}

PermGroup PermGroup::trivial(int n) { return enumerate(n, {}); }

PermGroup PermGroup::symmetric(int n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> tr(static_cast<std::size_t>(n));
    std::iota(tr.begin(), tr.end(), 1);
    std::swap(tr[0], tr[1]);
    gens.push_back(Permutation::from_images_1based(tr));
    if (n >= 3) {
      std::vector<int> cyc(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        cyc[static_cast<std::size_t>(i)] = i == n - 1 ? 1 : i + 2;
      gens.push_back(Permutation::from_images_1based(cyc));
    }
  }
  return enumerate(n, std::move(gens));
}

bool PermGroup::contains(const Permutation& p) const {
  return p.size() == n_ && lookup_.count(p) > 0;
}

Exponent act_exponent(const Permutation& s, const Exponent& exp) {
  return s.act(exp);
}

TropPoly act_poly(const Permutation& s, const TropPoly& f) {
  if (s.size() != f.arity())
    throw DimensionError("permutation degree differs from arity");
  TropPoly out(f.arity());
  for (const auto& [exp, coef] : f.terms())
    out.set_term(s.act(exp), TropScalar(coef));
  return out;
}

LatticePolytope act_polytope(const Permutation& s, const LatticePolytope& a) {
  if (s.size() != a.dim())
    throw DimensionError("permutation degree differs from dimension");
  // Relabelling is a linear isomorphism, so images of vertices are exactly
  // the vertices of the image.
  std::vector<Exponent> verts;
  verts.reserve(a.vertices().size());
  for (const auto& v : a.vertices()) verts.push_back(s.act(v));
  std::sort(verts.begin(), verts.end());
  return LatticePolytope::hull_of(a.dim(), std::move(verts));
}

bool is_invariant(const PermGroup& g, const TropPoly& f) {
  if (g.n() != f.arity())
    throw DimensionError("group degree differs from arity");
  for (const auto& s : g.generators())
    for (const auto& [exp, coef] : f.terms()) {
      TropScalar c = f.coefficient(s.act(exp));
      if (c.is_bottom() || c.value() != coef) return false;
    }
  return true;
}

TropPoly canonicalize_invariant(const PermGroup& g, const TropPoly& f) {
  if (!is_invariant(g, f))
    throw DomainError("term map is not invariant under the group");
  // One redundancy test per exponent orbit; verdicts are constant on orbits
  // because relabelling permutes the lifted support without changing heights.
  return canonicalize_by_orbits(f, [&g](const Exponent& e) {
    Exponent best = e;
    for (const auto& s : g.elements()) {
      Exponent cand = s.act(e);
      if (cand < best) best = std::move(cand);
    }
    return best;
  });
}

TropPoly transfer(const PermGroup& g, const TropPoly& f) {
  if (g.n() != f.arity())
    throw DimensionError("group degree differs from arity");
  TropPoly sum(f.arity());
  for (const auto& s : g.elements()) sum = trop_add(sum, act_poly(s, f));
  return canonicalize_invariant(g, sum);
}

LatticePolytope transfer(const PermGroup& g, const LatticePolytope& a) {
  if (g.n() != a.dim())
    throw DimensionError("group degree differs from dimension");
  std::vector<Exponent> pts;
  pts.reserve(g.order() * a.vertices().size());
  for (const auto& s : g.elements())
    for (const auto& v : a.vertices()) pts.push_back(s.act(v));
  return LatticePolytope::hull_of(a.dim(), std::move(pts));
}

TranspositionBlocks transposition_blocks(const PermGroup& g) {
  const int n = g.n();
  std::vector<Permutation> trans;
  for (const auto& s : g.elements())
    if (s.is_transposition()) trans.push_back(s);

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(
              parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& t : trans)
    for (int i = 0; i < n; ++i)
      if (t(i) != i) parent[static_cast<std::size_t>(find(i))] = find(t(i));

  TranspositionBlocks out;
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    buckets[static_cast<std::size_t>(find(i))].push_back(i + 1);
  for (auto& b : buckets)
    if (!b.empty()) out.blocks.push_back(std::move(b));

  PermGroup sub = PermGroup::enumerate(n, trans, g.order());
  out.transposition_generated = sub.order() == g.order();
  return out;
}

std::vector<Permutation> coset_representatives(const PermGroup& g, int max_n) {
  const int n = g.n();
  if (n > max_n)
    throw ResourceError("coset sweep over n! permutations refused");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::set<std::vector<int>> covered;
  std::vector<Permutation> reps;
  do {
    if (covered.count(img)) continue;
    Permutation s = Permutation::from_images_1based(img);
    reps.push_back(s);
    for (const auto& t : g.elements())
      covered.insert((t * s).images_1based());
  } while (std::next_permutation(img.begin(), img.end()));
  return reps;
}

}  // namespace tropinv
