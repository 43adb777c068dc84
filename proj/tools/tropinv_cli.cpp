// Command-line front end. Batch only: read JSON, compute, emit JSON or text.
//
// Exit codes: 0 success (or true predicate), 1 false predicate, 2 malformed
// input (CLI or JSON schema), 3 resource guard tripped, 4 semantic error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropinv/errors.hpp"
#include "tropinv/invariants.hpp"
#include "tropinv/json_io.hpp"
#include "tropinv/lattice_polytope.hpp"
#include "tropinv/orbit_embed.hpp"
#include "tropinv/perm_group.hpp"
#include "tropinv/rational_inv.hpp"
#include "tropinv/trop_poly.hpp"

namespace {

using namespace tropinv;
using nlohmann::json;

struct Common {
  std::string output = "-";
  std::string format = "json";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("-o,--output", c.output, "Output file ('-' for stdout)");
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
}

void emit(const Common& c, const std::string& text) {
  if (c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw ValidationError("cannot write file: " + c.output);
  out << text;
}

json read_input(const std::string& path) {
  if (path != "-") return parse_json_file(path);
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return parse_json_text(buf.str());
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<Rational> parse_point(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& tok : split_commas(s)) out.push_back(Rational::from_string(tok));
  return out;
}

Exponent parse_ints(const std::string& s) {
  Exponent out;
  for (const auto& tok : split_commas(s)) {
    if (tok.empty() || tok.size() > 7 ||
        tok.find_first_not_of("0123456789") != std::string::npos)
      throw SchemaError("expected a comma-separated list of nonnegative integers, got '" + s + "'");
    long v = std::stol(tok);
    if (v > 1000000) throw SchemaError("entry too large: " + tok);
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string point_text(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

json point_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.to_string());
  return arr;
}

std::string polytope_text(const LatticePolytope& p) {
  std::string s;
  for (const auto& vert : p.vertices()) {
    for (std::size_t i = 0; i < vert.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(vert[i]);
    }
    s += "\n";
  }
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact tropical invariants of permutation groups"};
  app.require_subcommand(1);
  int exit_code = 0;

  // canon [FILE]
  {
    auto* sub = app.add_subcommand("canon", "Canonical form of a tropical polynomial");
    auto common = std::make_shared<Common>();
    auto input = std::make_shared<std::string>("-");
    sub->add_option("file", *input, "Polynomial JSON ('-' for stdin)");
    add_common(sub, *common);
    sub->callback([common, input] {
      TropPoly f = canonicalize(poly_from_json(read_input(*input)));
      emit(*common, common->format == "json" ? dump_json(poly_to_json(f))
                                             : f.to_string() + "\n");
    });
  }

  // equal FILE1 FILE2
  {
    auto* sub = app.add_subcommand("equal", "Function equality of two tropical polynomials");
    auto common = std::make_shared<Common>();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("file1", *a, "First polynomial JSON")->required();
    sub->add_option("file2", *b, "Second polynomial JSON")->required();
    add_common(sub, *common);
    sub->callback([common, a, b, &exit_code] {
      TropPoly f = poly_from_json(read_input(*a));
      TropPoly g = poly_from_json(read_input(*b));
      auto w = witness_point(f, g);
      if (!w) {
        emit(*common, common->format == "json" ? dump_json({{"equal", true}})
                                               : std::string("equal\n"));
        return;
      }
      exit_code = 1;
      TropScalar fv = evaluate(f, *w);
      TropScalar gv = evaluate(g, *w);
      if (common->format == "json") {
        json out = {{"equal", false},
                    {"witness", point_json(*w)},
                    {"lhs", fv.to_string()},
                    {"rhs", gv.to_string()}};
        emit(*common, dump_json(out));
      } else {
        emit(*common, "not equal at " + point_text(*w) + ": " + fv.to_string() +
                          " vs " + gv.to_string() + "\n");
      }
    });
  }

  // eval [FILE] --at v
  {
    auto* sub = app.add_subcommand("eval", "Evaluate a tropical polynomial at a rational point");
    auto common = std::make_shared<Common>();
    auto input = std::make_shared<std::string>("-");
    auto at = std::make_shared<std::string>();
    sub->add_option("file", *input, "Polynomial JSON ('-' for stdin)");
    sub->add_option("--at", *at, "Comma-separated rational coordinates")->required();
    add_common(sub, *common);
    sub->callback([common, input, at] {
      TropPoly f = poly_from_json(read_input(*input));
      TropScalar v = evaluate(f, parse_point(*at));
      emit(*common, common->format == "json"
                        ? dump_json({{"value", v.to_string()}})
                        : v.to_string() + "\n");
    });
  }

  // newton [FILE]
  {
    auto* sub = app.add_subcommand("newton", "Newton polytope of a tropical polynomial");
    auto common = std::make_shared<Common>();
    auto input = std::make_shared<std::string>("-");
    sub->add_option("file", *input, "Polynomial JSON ('-' for stdin)");
    add_common(sub, *common);
    sub->callback([common, input] {
      LatticePolytope p = newton_polytope(poly_from_json(read_input(*input)));
      emit(*common, common->format == "json" ? dump_json(polytope_to_json(p))
                                             : polytope_text(p));
    });
  }

  // transfer [FILE] --group G
  {
    auto* sub = app.add_subcommand("transfer", "Group transfer (orbit max) of a tropical polynomial");
    auto common = std::make_shared<Common>();
    auto input = std::make_shared<std::string>("-");
    auto grp = std::make_shared<std::string>();
    sub->add_option("file", *input, "Polynomial JSON ('-' for stdin)");
    sub->add_option("--group", *grp, "Group JSON file")->required();
    add_common(sub, *common);
    sub->callback([common, input, grp] {
      PermGroup g = group_from_json(parse_json_file(*grp));
      TropPoly f = poly_from_json(read_input(*input));
      TropPoly t = transfer(g, f);
      emit(*common, common->format == "json" ? dump_json(poly_to_json(t))
                                             : t.to_string() + "\n");
    });
  }

  // efun --n N --k K
  {
    auto* sub = app.add_subcommand("efun", "Tropical elementary symmetric polynomial");
    auto common = std::make_shared<Common>();
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    sub->add_option("--n", *n, "Number of variables")->required();
    sub->add_option("--k", *k, "Degree, 1 <= k <= n")->required();
    add_common(sub, *common);
    sub->callback([common, n, k] {
      TropPoly e = elementary_symmetric(*n, *k);
      emit(*common, common->format == "json" ? dump_json(poly_to_json(e))
                                             : e.to_string() + "\n");
    });
  }

  // decompose --gamma 2,1,0
  {
    auto* sub = app.add_subcommand("decompose", "Exponents of the symmetric transfer as a product of elementary symmetric polynomials");
    auto common = std::make_shared<Common>();
    auto gamma = std::make_shared<std::string>();
    sub->add_option("--gamma", *gamma, "Comma-separated exponent, sorted descending")->required();
    add_common(sub, *common);
    sub->callback([common, gamma] {
      EDecomposition d = sn_decompose(parse_ints(*gamma));
      if (common->format == "json") {
        emit(*common, dump_json(edecomp_to_json(d)));
      } else {
        std::string s = "c = (";
        for (std::size_t i = 0; i < d.exponents.size(); ++i) {
          if (i) s += ", ";
          s += std::to_string(d.exponents[i]);
        }
        emit(*common, s + ")\n");
      }
    });
  }

  // generators --group G
  {
    auto* sub = app.add_subcommand("generators", "Finite generating set of the invariant semiring, when one exists");
    auto common = std::make_shared<Common>();
    auto grp = std::make_shared<std::string>();
    sub->add_option("--group", *grp, "Group JSON file")->required();
    add_common(sub, *common);
    sub->callback([common, grp] {
      PermGroup g = group_from_json(parse_json_file(*grp));
      std::vector<TropPoly> gens = finite_generators(g);
      if (common->format == "json") {
        json arr = json::array();
        for (const auto& f : gens) arr.push_back(poly_to_json(f));
        emit(*common, dump_json({{"arity", g.n()}, {"generators", arr}}));
      } else {
        std::string s;
        for (const auto& f : gens) s += f.to_string() + "\n";
        emit(*common, s);
      }
    });
  }

  // separating --group G
  {
    auto* sub = app.add_subcommand("separating", "Separating invariant set as an embedding specification");
    auto common = std::make_shared<Common>();
    auto grp = std::make_shared<std::string>();
    sub->add_option("--group", *grp, "Group JSON file")->required();
    add_common(sub, *common);
    sub->callback([common, grp] {
      PermGroup g = group_from_json(parse_json_file(*grp));
      EmbeddingSpec spec = separating_set(g);
      if (common->format == "json") {
        emit(*common, dump_json(embedding_to_json(spec)));
      } else {
        std::string s;
        for (std::size_t i = 0; i < spec.e_polys.size(); ++i)
          s += "e" + std::to_string(i + 1) + ": " + spec.e_polys[i].to_string() + "\n";
        for (std::size_t i = 0; i < spec.f_polys.size(); ++i)
          s += "f" + std::to_string(i + 1) + ": " + spec.f_polys[i].to_string() + "\n";
        emit(*common, s);
      }
    });
  }

  // embed --spec S --at v
  {
    auto* sub = app.add_subcommand("embed", "Evaluate an embedding specification at a point");
    auto common = std::make_shared<Common>();
    auto specp = std::make_shared<std::string>();
    auto at = std::make_shared<std::string>();
    sub->add_option("--spec", *specp, "Embedding spec JSON file")->required();
    sub->add_option("--at", *at, "Comma-separated rational coordinates")->required();
    add_common(sub, *common);
    sub->callback([common, specp, at] {
      EmbeddingSpec spec = embedding_from_json(parse_json_file(*specp));
      std::vector<Rational> img = embed(spec, parse_point(*at));
      emit(*common, common->format == "json"
                        ? dump_json({{"embedding", point_json(img)}})
                        : point_text(img) + "\n");
    });
  }

  // distance --group G --v ... --w ...
  {
    auto* sub = app.add_subcommand("distance", "Euclidean distance between two orbits");
    auto common = std::make_shared<Common>();
    auto grp = std::make_shared<std::string>();
    auto vs = std::make_shared<std::string>();
    auto ws = std::make_shared<std::string>();
    sub->add_option("--group", *grp, "Group JSON file")->required();
    sub->add_option("--v", *vs, "First point, comma-separated rationals")->required();
    sub->add_option("--w", *ws, "Second point, comma-separated rationals")->required();
    add_common(sub, *common);
    sub->callback([common, grp, vs, ws] {
      PermGroup g = group_from_json(parse_json_file(*grp));
      Rational d2 = orbit_distance_sq(g, parse_point(*vs), parse_point(*ws));
      std::string root = sqrt_decimal(d2);
      if (common->format == "json") {
        emit(*common, dump_json({{"distance_sq", d2.to_string()}, {"distance", root}}));
      } else {
        emit(*common, "distance_sq = " + d2.to_string() + "\ndistance = " + root + "\n");
      }
    });
  }

  // distortion --spec S --samples N --seed K
  {
    auto* sub = app.add_subcommand("distortion", "Empirical bi-Lipschitz constants of an embedding");
    auto common = std::make_shared<Common>();
    auto specp = std::make_shared<std::string>();
    auto samples = std::make_shared<int>(1000);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto box = std::make_shared<SampleBox>();
    sub->add_option("--spec", *specp, "Embedding spec JSON file")->required();
    sub->add_option("--samples", *samples, "Number of sampled pairs");
    sub->add_option("--seed", *seed, "RNG seed");
    sub->add_option("--lo", box->lo, "Sampling box lower bound");
    sub->add_option("--hi", box->hi, "Sampling box upper bound");
    sub->add_option("--max-den", box->max_den, "Largest coordinate denominator");
    add_common(sub, *common);
    sub->callback([common, specp, samples, seed, box] {
      EmbeddingSpec spec = embedding_from_json(parse_json_file(*specp));
      DistortionReport rep = distortion_estimate(spec, *samples, *seed, *box);
      emit(*common, common->format == "json" ? dump_json(report_to_json(rep))
                                             : report_text(rep));
    });
  }

  // rewrite --group G --beta 7,0
  {
    auto* sub = app.add_subcommand("rewrite", "Rewrite a monomial transfer over the bounded-degree generators");
    auto common = std::make_shared<Common>();
    auto grp = std::make_shared<std::string>();
    auto beta = std::make_shared<std::string>();
    auto max_nodes = std::make_shared<long>(100000);
    sub->add_option("--group", *grp, "Group JSON file")->required();
    sub->add_option("--beta", *beta, "Comma-separated exponent of the transferred monomial")->required();
    sub->add_option("--max-nodes", *max_nodes, "Expression size guard");
    add_common(sub, *common);
    sub->callback([common, grp, beta, max_nodes] {
      PermGroup g = group_from_json(parse_json_file(*grp));
      InvExpr e = rewrite_transfer(g, parse_ints(*beta), *max_nodes);
      emit(*common, common->format == "json" ? dump_json(expr_to_json(e))
                                             : e.to_string() + "\n");
    });
  }

  // factor-bx [FILE]
  {
    auto* sub = app.add_subcommand("factor-bx", "Factor a Boolean univariate quotient as x^a * (1 + x^b)");
    auto common = std::make_shared<Common>();
    auto input = std::make_shared<std::string>("-");
    sub->add_option("file", *input, "Quotient JSON ('-' for stdin)");
    add_common(sub, *common);
    sub->callback([common, input] {
      TropRational r = quotient_from_json(read_input(*input));
      auto [a, b] = factor_boolean_univariate(r);
      if (common->format == "json") {
        emit(*common, dump_json({{"a", a}, {"b", b}}));
      } else {
        emit(*common, "a = " + std::to_string(a) + "\nb = " + std::to_string(b) + "\n");
      }
    });
  }

  // census --group G --bound B
  {
    auto* sub = app.add_subcommand("census", "Edge direction counts of transfer Newton polytopes up to a degree bound");
    auto common = std::make_shared<Common>();
    auto grp = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(0);
    sub->add_option("--group", *grp, "Group JSON file")->required();
    sub->add_option("--bound", *bound, "Largest total degree")->required();
    add_common(sub, *common);
    sub->callback([common, grp, bound] {
      PermGroup g = group_from_json(parse_json_file(*grp));
      if (*bound < 0) throw DomainError("negative bound");
      std::vector<int> counts;
      for (int b = 1; b <= *bound; ++b)
        counts.push_back(edge_direction_census(g, b));
      if (common->format == "json") {
        emit(*common, dump_json({{"bound", *bound}, {"counts", counts}}));
      } else {
        std::string s;
        for (int b = 1; b <= *bound; ++b)
          s += std::to_string(b) + " " + std::to_string(counts[static_cast<std::size_t>(b - 1)]) + "\n";
        emit(*common, s);
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tropinv::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tropinv::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    // DimensionError, DomainError, ValidationError and subclasses.
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
