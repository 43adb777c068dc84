#include "tropinv/rational_inv.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "tropinv/errors.hpp"

namespace tropinv {

TropRational::TropRational(TropPoly numerator, TropPoly denominator)
    : num(canonicalize(numerator)), den(canonicalize(denominator)) {
  if (num.arity() != den.arity())
    throw DimensionError("numerator and denominator arity differ");
  if (den.is_zero()) throw DomainError("zero denominator polynomial");
}

bool rat_equals(const TropRational& a, const TropRational& b) {
  if (a.num.arity() != b.num.arity())
    throw DimensionError("arity mismatch in quotient equality");
  return trop_equals(trop_mul(a.num, b.den), trop_mul(b.num, a.den));
}

TropScalar evaluate(const TropRational& r, const std::vector<Rational>& point) {
  TropScalar n = evaluate(r.num, point);
  TropScalar d = evaluate(r.den, point);
  if (n.is_bottom()) return n;
  return TropScalar(n.value() - d.value());
}

InvExpr InvExpr::gen(Exponent alpha) {
  for (int x : alpha)
    if (x < 0) throw DomainError("negative generator exponent");
  if (alpha.empty()) throw DomainError("empty generator exponent");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Gen;
  node->alpha = std::move(alpha);
  return InvExpr(std::move(node));
}

InvExpr InvExpr::add(std::vector<InvExpr> args) {
  if (args.empty()) throw DomainError("sum needs at least one argument");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Add;
  node->args = std::move(args);
  return InvExpr(std::move(node));
}

InvExpr InvExpr::mul(std::vector<InvExpr> args) {
  if (args.empty()) throw DomainError("product needs at least one argument");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Mul;
  node->args = std::move(args);
  return InvExpr(std::move(node));
}

InvExpr InvExpr::pow(InvExpr base, int exponent) {
  if (exponent < 1) throw DomainError("power must be positive");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pow;
  node->m = exponent;
  node->args.push_back(std::move(base));
  return InvExpr(std::move(node));
}

InvExpr InvExpr::div(InvExpr numerator, InvExpr denominator) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Div;
  node->args.push_back(std::move(numerator));
  node->args.push_back(std::move(denominator));
  return InvExpr(std::move(node));
}

std::size_t InvExpr::node_count() const {
  std::map<const Node*, std::size_t> memo;
  std::function<std::size_t(const InvExpr&)> count =
      [&](const InvExpr& e) -> std::size_t {
    auto it = memo.find(e.node_.get());
    if (it != memo.end()) return it->second;
    std::size_t total = 1;
    for (const auto& a : e.node_->args) total += count(a);
    memo.emplace(e.node_.get(), total);
    return total;
  };
  return count(*this);
}

std::string InvExpr::to_string() const {
  std::ostringstream out;
  std::function<void(const InvExpr&)> walk = [&](const InvExpr& e) {
    switch (e.kind()) {
      case Kind::Gen: {
        out << "T(";
        const Exponent& a = e.exponent();
        for (std::size_t i = 0; i < a.size(); ++i)
          out << (i ? "," : "") << a[i];
        out << ")";
        return;
      }
      case Kind::Add:
      case Kind::Mul: {
        const char* op = e.kind() == Kind::Add ? " (+) " : " (*) ";
        out << "(";
        for (std::size_t i = 0; i < e.args().size(); ++i) {
          if (i) out << op;
          walk(e.args()[i]);
        }
        out << ")";
        return;
      }
      case Kind::Pow:
        walk(e.args()[0]);
        out << "^" << e.power();
        return;
      case Kind::Div:
        walk(e.args()[0]);
        out << " / ";
        walk(e.args()[1]);
        return;
    }
  };
  walk(*this);
  return out.str();
}

namespace {

long long pow_mod(long long base, long long exp, long long mod) {
  long long r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

}  // namespace

PrimeAssignment PrimeAssignment::for_group(const PermGroup& g) {
  PrimeAssignment pa;
  pa.elements = g.elements();
  long long next = 2;
  while (pa.primes.size() < pa.elements.size()) {
    bool prime = true;
    for (long long d = 2; d * d <= next; ++d)
      if (next % d == 0) {
        prime = false;
        break;
      }
    if (prime) {
      // Exponent coordinates are ints, so the product must stay below 2^31.
      if (pa.modulus > (2147483647LL / next))
        throw ResourceError("prime product too large for exponent range");
      pa.primes.push_back(next);
      pa.modulus *= next;
    }
    ++next;
  }
  return pa;
}

Exponent crt_gamma(const PrimeAssignment& pa, const Exponent& beta) {
  const std::size_t k = pa.primes.size();
  if (pa.elements.empty() || pa.elements[0].size() != static_cast<int>(beta.size()))
    throw DimensionError("exponent length differs from group degree");
  std::vector<Exponent> images;
  images.reserve(k);
  for (const auto& s : pa.elements) images.push_back(s.act(beta));
  Exponent gamma(beta.size());
  for (std::size_t j = 0; j < beta.size(); ++j) {
    long long x = 0;
    long long m = 1;
    for (std::size_t i = 0; i < k; ++i) {
      long long p = pa.primes[i];
      long long r = ((-static_cast<long long>(images[i][j])) % p + p) % p;
      long long t = ((r - x) % p + p) % p * pow_mod(m % p, p - 2, p) % p;
      x += m * t;
      m *= p;
    }
    gamma[j] = static_cast<int>(x);
  }
  return gamma;
}

InvExpr rewrite_transfer(const PermGroup& g, const Exponent& beta,
                         std::size_t max_nodes) {
  if (static_cast<int>(beta.size()) != g.n())
    throw DimensionError("exponent length differs from group degree");
  for (int x : beta)
    if (x < 0) throw DomainError("negative exponent entry");
  PrimeAssignment pa = PrimeAssignment::for_group(g);
  const long long n_mod = pa.modulus;
  std::size_t made = 0;
  auto charge = [&](std::size_t nodes) {
    made += nodes;
    if (made > max_nodes) throw ResourceError("rewrite exceeds node budget");
  };
  std::function<InvExpr(const Exponent&)> rewrite =
      [&](const Exponent& b) -> InvExpr {
    if (norm_inf(b) < n_mod) {
      charge(1);
      return InvExpr::gen(b);
    }
    Exponent gamma = crt_gamma(pa, b);
    std::vector<InvExpr> parts;
    parts.reserve(pa.elements.size());
    for (std::size_t i = 0; i < pa.elements.size(); ++i) {
      Exponent img = pa.elements[i].act(b);
      Exponent delta(b.size());
      for (std::size_t j = 0; j < b.size(); ++j) {
        int sum = gamma[j] + img[j];
        // gamma was built so that each coordinate sum is divisible.
        delta[j] = sum / static_cast<int>(pa.primes[i]);
      }
      InvExpr sub = rewrite(delta);
      charge(1);
      parts.push_back(InvExpr::pow(std::move(sub),
                                   static_cast<int>(pa.primes[i])));
    }
    InvExpr numerator = parts.size() == 1
                            ? std::move(parts[0])
                            : (charge(1), InvExpr::add(std::move(parts)));
    charge(2);
    return InvExpr::div(std::move(numerator), InvExpr::gen(gamma));
  };
  return rewrite(beta);
}

Rational expr_eval(const PermGroup& g, const InvExpr& e,
                   const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != g.n())
    throw DimensionError("point length differs from group degree");
  std::function<Rational(const InvExpr&)> eval =
      [&](const InvExpr& x) -> Rational {
    switch (x.kind()) {
      case InvExpr::Kind::Gen: {
        const Exponent& a = x.exponent();
        if (a.size() != point.size())
          throw DimensionError("generator exponent length mismatch");
        bool first = true;
        Rational best(0);
        for (const auto& s : g.elements()) {
          Exponent img = s.act(a);
          Rational v(0);
          for (std::size_t j = 0; j < img.size(); ++j)
            v += Rational(img[j]) * point[j];
          if (first || best < v) best = v;
          first = false;
        }
        return best;
      }
      case InvExpr::Kind::Add: {
        Rational best = eval(x.args()[0]);
        for (std::size_t i = 1; i < x.args().size(); ++i) {
          Rational v = eval(x.args()[i]);
          if (best < v) best = v;
        }
        return best;
      }
      case InvExpr::Kind::Mul: {
        Rational sum(0);
        for (const auto& a : x.args()) sum += eval(a);
        return sum;
      }
      case InvExpr::Kind::Pow:
        return Rational(x.power()) * eval(x.args()[0]);
      case InvExpr::Kind::Div:
        return eval(x.args()[0]) - eval(x.args()[1]);
    }
    throw DomainError("unreachable expression kind");
  };
  return eval(e);
}

TropRational expr_to_rational(const PermGroup& g, const InvExpr& e) {
  std::function<TropRational(const InvExpr&)> build =
      [&](const InvExpr& x) -> TropRational {
    switch (x.kind()) {
      case InvExpr::Kind::Gen:
        return TropRational(
            transfer(g, TropPoly::monomial(g.n(), x.exponent(), Rational(0))),
            TropPoly::one(g.n()));
      case InvExpr::Kind::Add: {
        TropRational acc = build(x.args()[0]);
        for (std::size_t i = 1; i < x.args().size(); ++i) {
          TropRational nxt = build(x.args()[i]);
          acc = TropRational(trop_add(trop_mul(acc.num, nxt.den),
                                      trop_mul(nxt.num, acc.den)),
                             trop_mul(acc.den, nxt.den));
        }
        return acc;
      }
      case InvExpr::Kind::Mul: {
        TropRational acc = build(x.args()[0]);
        for (std::size_t i = 1; i < x.args().size(); ++i) {
          TropRational nxt = build(x.args()[i]);
          acc = TropRational(trop_mul(acc.num, nxt.num),
                             trop_mul(acc.den, nxt.den));
        }
        return acc;
      }
      case InvExpr::Kind::Pow: {
        TropRational base = build(x.args()[0]);
        return TropRational(trop_pow(base.num, x.power()),
                            trop_pow(base.den, x.power()));
      }
      case InvExpr::Kind::Div: {
        TropRational a = build(x.args()[0]);
        TropRational b = build(x.args()[1]);
        if (b.num.is_zero()) throw DomainError("division by zero expression");
        return TropRational(trop_mul(a.num, b.den), trop_mul(a.den, b.num));
      }
    }
    throw DomainError("unreachable expression kind");
  };
  return build(e);
}

std::pair<long, long> factor_boolean_univariate(const TropRational& r) {
  if (r.num.arity() != 1)
    throw DimensionError("factorization needs one variable");
  if (r.num.is_zero()) throw DomainError("zero numerator cannot be factored");
  auto span = [](const TropPoly& f) -> std::pair<long, long> {
    long lo = 0;
    long hi = 0;
    bool first = true;
    for (const auto& [exp, coef] : f.terms()) {
      if (coef != Rational(0))
        throw DomainError("coefficients must all be the tropical unit");
      long e = exp[0];
      if (first || e < lo) lo = e;
      if (first || e > hi) hi = e;
      first = false;
    }
    return {lo, hi};
  };
  auto [nlo, nhi] = span(r.num);
  auto [dlo, dhi] = span(r.den);
  // A canonical Boolean univariate polynomial is x^lo + x^hi: interior
  // support points sit on the chord and are removed.
  if (r.num.terms().size() > 2 || r.den.terms().size() > 2)
    throw DomainError("quotient is not in canonical Boolean form");
  return {nlo - dlo, (nhi - nlo) - (dhi - dlo)};
}

TropRational boolean_univariate(long a, long b) {
  TropPoly x = TropPoly::variable(1, 0);
  TropPoly unit_plus_x = trop_add(TropPoly::one(1), x);
  auto monomial_power = [&](long e) {
    return TropPoly::monomial(1, {static_cast<int>(e)}, Rational(0));
  };
  TropPoly num = TropPoly::one(1);
  TropPoly den = TropPoly::one(1);
  if (a >= 0)
    num = trop_mul(num, monomial_power(a));
  else
    den = trop_mul(den, monomial_power(-a));
  if (b >= 0)
    num = trop_mul(num, trop_pow(unit_plus_x, static_cast<int>(b)));
  else
    den = trop_mul(den, trop_pow(unit_plus_x, static_cast<int>(-b)));
  return TropRational(std::move(num), std::move(den));
}

}  // namespace tropinv
