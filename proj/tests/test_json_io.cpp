#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "tropinv/errors.hpp"
#include "tropinv/json_io.hpp"

using namespace tropinv;
using nlohmann::json;
using tropinv::testsupport::random_poly;

TEST_CASE("polynomial round trip and exact layout") {
  TropPoly f(2);
  f.set_term({2, 1}, TropScalar{Rational(3)});
  f.set_term({0, 0}, TropScalar{Rational(-1, 2)});
  json j = poly_to_json(f);
  CHECK(dump_json(j) ==
        "{\n"
        "  \"n\": 2,\n"
        "  \"terms\": [\n"
        "    {\n"
        "      \"coef\": \"-1/2\",\n"
        "      \"exp\": [\n"
        "        0,\n"
        "        0\n"
        "      ]\n"
        "    },\n"
        "    {\n"
        "      \"coef\": \"3\",\n"
        "      \"exp\": [\n"
        "        2,\n"
        "        1\n"
        "      ]\n"
        "    }\n"
        "  ]\n"
        "}\n");
  CHECK(poly_from_json(j) == f);
  CHECK(poly_from_json(poly_to_json(TropPoly::zero(3))) == TropPoly::zero(3));
}

TEST_CASE("polynomial schema violations") {
  auto bad = [](const char* text) {
    CHECK_THROWS_AS(poly_from_json(parse_json_text(text)), SchemaError);
  };
  bad(R"({"terms": []})");                                      // missing n
  bad(R"({"n": 0, "terms": []})");                              // bad arity
  bad(R"({"n": 2, "terms": [{"exp": [1], "coef": "0"}]})");     // short exp
  bad(R"({"n": 1, "terms": [{"exp": [-1], "coef": "0"}]})");    // negative
  bad(R"({"n": 1, "terms": [{"exp": [1], "coef": 3}]})");       // number coef
  bad(R"({"n": 1, "terms": [{"exp": [1], "coef": "-inf"}]})");  // bottom
  bad(R"({"n": 1, "terms": [{"exp": [1], "coef": "1/0"}]})");   // zero den
  bad(R"({"n": 1, "terms": [{"exp": [1], "coef": "x"}]})");     // not rational
  bad(R"({"n": 1, "terms": [{"exp": [1], "coef": "0", "z": 1}]})");
  bad(R"({"n": 1, "terms": [{"exp": [1], "coef": "0"},
                            {"exp": [1], "coef": "2"}]})");     // duplicate
  bad(R"([1, 2])");
  CHECK_THROWS_AS(parse_json_text("{"), SchemaError);
}

TEST_CASE("polytope round trip reduces to vertices") {
  json j = parse_json_text(
      R"({"n": 2, "vertices": [[0, 0], [2, 0], [1, 0], [0, -2]]})");
  LatticePolytope a = polytope_from_json(j);
  CHECK(a.vertices() == std::vector<Exponent>{{0, -2}, {0, 0}, {2, 0}});
  CHECK(polytope_from_json(polytope_to_json(a)) == a);
  CHECK_THROWS_AS(
      polytope_from_json(parse_json_text(R"({"n": 2, "vertices": [[1]]})")),
      SchemaError);
}

TEST_CASE("group parsing accepts images and cycle strings") {
  json j = parse_json_text(
      R"x({"n": 4, "generators": [[2, 1, 3, 4], "(3 4)"]})x");
  PermGroup g = group_from_json(j);
  CHECK(g.order() == 4);
  PermGroup back = group_from_json(group_to_json(g));
  CHECK(back.order() == 4);
  CHECK(back.generators().size() == 2);

  CHECK_THROWS_AS(group_from_json(parse_json_text(
                      R"({"n": 2, "generators": [[1, 1]]})")),
                  SchemaError);
  CHECK_THROWS_AS(group_from_json(parse_json_text(
                      R"x({"n": 2, "generators": ["(1 3)"]})x")),
                  SchemaError);
  CHECK_THROWS_AS(group_from_json(parse_json_text(
                      R"({"n": 2, "generators": [7]})")),
                  SchemaError);
  // Valid schema but unreasonable size surfaces as a resource problem.
  CHECK_THROWS_AS(group_from_json(parse_json_text(
                      R"x({"n": 9, "generators": ["(1 2)",
                          "(1 2 3 4 5 6 7 8 9)"]})x")),
                  ResourceError);
}

TEST_CASE("decomposition, expression, and quotient round trips") {
  EDecomposition d{{1, 1, 0}};
  CHECK(edecomp_from_json(edecomp_to_json(d)).exponents == d.exponents);
  CHECK_THROWS_AS(edecomp_from_json(parse_json_text(R"({"c": []})")),
                  SchemaError);
  CHECK_THROWS_AS(edecomp_from_json(parse_json_text(R"({"c": [-1]})")),
                  SchemaError);

  InvExpr e = InvExpr::div(
      InvExpr::add({InvExpr::pow(InvExpr::gen({5, 1}), 2),
                    InvExpr::pow(InvExpr::gen({1, 3}), 3)}),
      InvExpr::gen({3, 2}));
  json je = expr_to_json(e);
  CHECK(je["op"] == "div");
  InvExpr back = expr_from_json(je);
  CHECK(expr_to_json(back) == je);
  CHECK(back.to_string() == e.to_string());
  CHECK_THROWS_AS(expr_from_json(parse_json_text(R"({"op": "neg"})")),
                  SchemaError);
  CHECK_THROWS_AS(expr_from_json(parse_json_text(
                      R"({"op": "div", "args": [{"gen": [1]}]})")),
                  SchemaError);
  CHECK_THROWS_AS(expr_from_json(parse_json_text(
                      R"({"op": "pow", "m": 0, "arg": {"gen": [1]}})")),
                  SchemaError);

  TropPoly x = TropPoly::variable(1, 0);
  TropRational q(trop_mul(x, x), x);
  json jq = quotient_to_json(q);
  CHECK(rat_equals(quotient_from_json(jq), q));
  CHECK_THROWS_AS(quotient_from_json(parse_json_text(
                      R"({"num": {"n": 1, "terms": []},
                          "den": {"n": 1, "terms": []}})")),
                  SchemaError);
}

TEST_CASE("embedding specs round trip") {
  PermGroup c3 =
      PermGroup::enumerate(3, {Permutation::from_cycles(3, "(1 2 3)")});
  EmbeddingSpec spec = separating_set(c3);
  json j = embedding_to_json(spec);
  EmbeddingSpec back = embedding_from_json(j);
  CHECK(back.size() == spec.size());
  CHECK(back.group.order() == 3);
  for (std::size_t i = 0; i < spec.f_polys.size(); ++i)
    CHECK(back.f_polys[i] == spec.f_polys[i]);

  json broken = j;
  broken["f"] = json::array();
  CHECK_THROWS_AS(embedding_from_json(broken), SchemaError);
}

TEST_CASE("distortion report serialization") {
  PermGroup c3 =
      PermGroup::enumerate(3, {Permutation::from_cycles(3, "(1 2 3)")});
  DistortionReport r = distortion_estimate(separating_set(c3), 10, 99);
  json j = report_to_json(r);
  CHECK(j["samples"] == 10);
  CHECK(j["seed"] == 99);
  CHECK(j["used"] == r.used);
  CHECK(j["c1"] == r.c1_text);
  // Canonical dump is byte-stable.
  DistortionReport r2 = distortion_estimate(separating_set(c3), 10, 99);
  CHECK(dump_json(report_to_json(r2)) == dump_json(j));
}

TEST_CASE("random polynomials survive the round trip") {
  Rng rng(466920);
  for (int iter = 0; iter < 60; ++iter) {
    int n = static_cast<int>(rng.uniform(1, 4));
    TropPoly f = random_poly(rng, n, 6, 5, 6);
    CHECK(poly_from_json(poly_to_json(f)) == f);
    CHECK(parse_json_text(dump_json(poly_to_json(f))) == poly_to_json(f));
  }
}
