#include "tropinv/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tropinv/errors.hpp"

namespace tropinv {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const json& field(const json& j, const std::string& where,
                  const std::string& key) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing key '" + key + "'");
  return *it;
}

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(where, "unknown key '" + key + "'");
  }
}

int get_int(const json& j, const std::string& where, long lo, long hi) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  long v = j.get<long>();
  if (v < lo || v > hi) fail(where, "integer out of range");
  return static_cast<int>(v);
}

int get_arity(const json& j, const std::string& where) {
  return get_int(field(j, where, "n"), where + ".n", 1, 64);
}

Exponent get_exponent(const json& j, const std::string& where, int n,
                      int lo = 0) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    fail(where, "expected an array of length n");
  Exponent e;
  e.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    e.push_back(get_int(j[i], where + "[" + std::to_string(i) + "]", lo,
                        1000000000L));
  return e;
}

}  // namespace

json poly_to_json(const TropPoly& f) {
  json terms = json::array();
  for (const auto& [exp, coef] : f.terms())
    terms.push_back(json{{"exp", exp}, {"coef", coef.to_string()}});
  return json{{"n", f.arity()}, {"terms", std::move(terms)}};
}

TropPoly poly_from_json(const json& j) {
  const std::string where = "polynomial";
  check_keys(j, where, {"n", "terms"});
  int n = get_arity(j, where);
  const json& terms = field(j, where, "terms");
  if (!terms.is_array()) fail(where + ".terms", "expected an array");
  TropPoly f(n);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string at = where + ".terms[" + std::to_string(i) + "]";
    const json& t = terms[i];
    check_keys(t, at, {"exp", "coef"});
    Exponent e = get_exponent(field(t, at, "exp"), at + ".exp", n);
    const json& c = field(t, at, "coef");
    if (!c.is_string()) fail(at + ".coef", "expected a rational in a string");
    std::string text = c.get<std::string>();
    if (text == "-inf")
      fail(at + ".coef", "bottom coefficients are not stored; drop the term");
    if (!f.coefficient(e).is_bottom()) fail(at + ".exp", "duplicate exponent");
    f.set_term(std::move(e), TropScalar(Rational::from_string(text)));
  }
  return f;
}

json polytope_to_json(const LatticePolytope& a) {
  json verts = json::array();
  for (const auto& v : a.vertices()) verts.push_back(v);
  return json{{"n", a.dim()}, {"vertices", std::move(verts)}};
}

LatticePolytope polytope_from_json(const json& j) {
  const std::string where = "polytope";
  check_keys(j, where, {"n", "vertices"});
  int n = get_arity(j, where);
  const json& verts = field(j, where, "vertices");
  if (!verts.is_array()) fail(where + ".vertices", "expected an array");
  std::vector<Exponent> pts;
  for (std::size_t i = 0; i < verts.size(); ++i)
    pts.push_back(get_exponent(
        verts[i], where + ".vertices[" + std::to_string(i) + "]", n,
        -1000000000L));
  return LatticePolytope::hull_of(n, std::move(pts));
}

json group_to_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& s : g.generators()) gens.push_back(s.images_1based());
  return json{{"n", g.n()}, {"generators", std::move(gens)}};
}

PermGroup group_from_json(const json& j) {
  const std::string where = "group";
  check_keys(j, where, {"n", "generators"});
  int n = get_arity(j, where);
  const json& gens = field(j, where, "generators");
  if (!gens.is_array()) fail(where + ".generators", "expected an array");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string at = where + ".generators[" + std::to_string(i) + "]";
    const json& g = gens[i];
    try {
      if (g.is_string()) {
        out.push_back(Permutation::from_cycles(n, g.get<std::string>()));
      } else if (g.is_array()) {
        std::vector<int> images;
        for (std::size_t k = 0; k < g.size(); ++k)
          images.push_back(
              get_int(g[k], at + "[" + std::to_string(k) + "]", 1, n));
        out.push_back(Permutation::from_images_1based(images));
      } else {
        fail(at, "expected an image list or a cycle string");
      }
    } catch (const SchemaError&) {
      throw;
    } catch (const ValidationError& e) {
      fail(at, e.what());
    }
    if (out.back().size() != n) fail(at, "wrong degree");
  }
  return PermGroup::enumerate(n, std::move(out));
}

json edecomp_to_json(const EDecomposition& d) {
  return json{{"c", d.exponents}};
}

EDecomposition edecomp_from_json(const json& j) {
  const std::string where = "decomposition";
  check_keys(j, where, {"c"});
  const json& c = field(j, where, "c");
  if (!c.is_array() || c.empty()) fail(where + ".c", "expected a nonempty array");
  EDecomposition d;
  for (std::size_t i = 0; i < c.size(); ++i)
    d.exponents.push_back(
        get_int(c[i], where + ".c[" + std::to_string(i) + "]", 0, 1000000000L));
  return d;
}

json expr_to_json(const InvExpr& e) {
  switch (e.kind()) {
    case InvExpr::Kind::Gen:
      return json{{"gen", e.exponent()}};
    case InvExpr::Kind::Add:
    case InvExpr::Kind::Mul: {
      json args = json::array();
      for (const auto& a : e.args()) args.push_back(expr_to_json(a));
      return json{{"op", e.kind() == InvExpr::Kind::Add ? "add" : "mul"},
                  {"args", std::move(args)}};
    }
    case InvExpr::Kind::Pow:
      return json{{"op", "pow"}, {"m", e.power()},
                  {"arg", expr_to_json(e.args()[0])}};
    case InvExpr::Kind::Div: {
      json args = json::array();
      for (const auto& a : e.args()) args.push_back(expr_to_json(a));
      return json{{"op", "div"}, {"args", std::move(args)}};
    }
  }
  throw DomainError("unreachable expression kind");
}

InvExpr expr_from_json(const json& j) {
  const std::string where = "expression";
  if (!j.is_object()) fail(where, "expected an object");
  if (j.contains("gen")) {
    check_keys(j, where, {"gen"});
    const json& g = j["gen"];
    if (!g.is_array() || g.empty()) fail(where + ".gen", "expected a nonempty array");
    Exponent e;
    for (std::size_t i = 0; i < g.size(); ++i)
      e.push_back(get_int(g[i], where + ".gen[" + std::to_string(i) + "]", 0,
                          1000000000L));
    return InvExpr::gen(std::move(e));
  }
  const json& opj = field(j, where, "op");
  if (!opj.is_string()) fail(where + ".op", "expected a string");
  std::string op = opj.get<std::string>();
  if (op == "pow") {
    check_keys(j, where, {"op", "m", "arg"});
    int m = get_int(field(j, where, "m"), where + ".m", 1, 1000000000L);
    return InvExpr::pow(expr_from_json(field(j, where, "arg")), m);
  }
  check_keys(j, where, {"op", "args"});
  const json& args = field(j, where, "args");
  if (!args.is_array() || args.empty())
    fail(where + ".args", "expected a nonempty array");
  std::vector<InvExpr> parts;
  parts.reserve(args.size());
  for (const auto& a : args) parts.push_back(expr_from_json(a));
  if (op == "add") return InvExpr::add(std::move(parts));
  if (op == "mul") return InvExpr::mul(std::move(parts));
  if (op == "div") {
    if (parts.size() != 2) fail(where + ".args", "div takes two arguments");
    return InvExpr::div(std::move(parts[0]), std::move(parts[1]));
  }
  fail(where + ".op", "unknown operation '" + op + "'");
}

json quotient_to_json(const TropRational& r) {
  return json{{"num", poly_to_json(r.num)}, {"den", poly_to_json(r.den)}};
}

TropRational quotient_from_json(const json& j) {
  const std::string where = "quotient";
  check_keys(j, where, {"num", "den"});
  try {
    return TropRational(poly_from_json(field(j, where, "num")),
                        poly_from_json(field(j, where, "den")));
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

json embedding_to_json(const EmbeddingSpec& spec) {
  json e = json::array();
  for (const auto& p : spec.e_polys) e.push_back(poly_to_json(p));
  json f = json::array();
  for (const auto& p : spec.f_polys) f.push_back(poly_to_json(p));
  return json{{"group", group_to_json(spec.group)},
              {"e", std::move(e)},
              {"f", std::move(f)}};
}

EmbeddingSpec embedding_from_json(const json& j) {
  const std::string where = "embedding";
  check_keys(j, where, {"group", "e", "f"});
  PermGroup g = group_from_json(field(j, where, "group"));
  auto polys = [&](const char* key) {
    const json& arr = field(j, where, key);
    if (!arr.is_array())
      fail(where + "." + key, "expected an array");
    std::vector<TropPoly> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back(poly_from_json(arr[i]));
      if (out.back().arity() != g.n())
        fail(where + "." + key + "[" + std::to_string(i) + "]",
             "arity differs from the group degree");
    }
    return out;
  };
  EmbeddingSpec spec{g, polys("e"), polys("f")};
  if (static_cast<int>(spec.e_polys.size()) != g.n())
    fail(where + ".e", "expected one polynomial per degree 1..n");
  if (g.n() > 12) fail(where, "degree too large for a coset family");
  std::size_t fact = 1;
  for (int i = 2; i <= g.n(); ++i) fact *= static_cast<std::size_t>(i);
  if (spec.f_polys.size() * g.order() != fact)
    fail(where + ".f", "expected one polynomial per coset");
  return spec;
}

json report_to_json(const DistortionReport& r) {
  return json{{"samples", r.samples}, {"used", r.used},
              {"seed", r.seed},       {"c1_sq", r.c1_sq.to_string()},
              {"c2_sq", r.c2_sq.to_string()}, {"c1", r.c1_text},
              {"c2", r.c2_text},      {"ratio", r.ratio_text}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("malformed json");
  return j;
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

}  // namespace tropinv
