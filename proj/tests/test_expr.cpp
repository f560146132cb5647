#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "cdscope/analysis.hpp"
#include "cdscope/errors.hpp"
#include "cdscope/expr.hpp"
#include "oracle.hpp"

using namespace cdscope;

TEST_CASE("parse named, product and generator expressions") {
  GroupExpr d8 = parse("D(8)");
  CHECK(d8.kind == GroupExpr::Kind::Named);
  CHECK(d8.family == Family::Dihedral);
  CHECK(d8.param == 8);

  GroupExpr prod = parse("S(3) x C(2)");
  REQUIRE(prod.kind == GroupExpr::Kind::Product);
  CHECK(prod.lhs->family == Family::Symmetric);
  CHECK(prod.lhs->param == 3);
  CHECK(prod.rhs->family == Family::Cyclic);
  CHECK(prod.rhs->param == 2);

  GroupExpr gens = parse("perm[(1 2 3), (1 2)]");
  REQUIRE(gens.kind == GroupExpr::Kind::Generators);
  REQUIRE(gens.perms.size() == 2);
  CHECK(gens.perms[0].cycles == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(gens.perms[1].cycles == std::vector<std::vector<int>>{{1, 2}});

  GroupExpr heis = parse("Heis(2,2)");
  CHECK(heis.kind == GroupExpr::Kind::Heisenberg);
  CHECK(heis.p == 2);
  CHECK(heis.n == 2);

  GroupExpr multi = parse("perm[(1 2)(3 4)]");
  REQUIRE(multi.perms.size() == 1);
  CHECK(multi.perms[0].cycles.size() == 2);
}

TEST_CASE("products associate left; parentheses force the right") {
  GroupExpr flat = parse("C(2) x C(3) x C(5)");
  REQUIRE(flat.kind == GroupExpr::Kind::Product);
  CHECK(flat.lhs->kind == GroupExpr::Kind::Product);
  CHECK(flat.rhs->kind == GroupExpr::Kind::Named);

  GroupExpr nested = parse("C(2) x (C(3) x C(5))");
  CHECK(nested.lhs->kind == GroupExpr::Kind::Named);
  CHECK(nested.rhs->kind == GroupExpr::Kind::Product);
  CHECK_FALSE(expr_equal(flat, nested));
}

TEST_CASE("whitespace is insignificant between tokens") {
  CHECK(expr_equal(parse("D(8)"), parse("  D ( 8 )  ")));
  CHECK(expr_equal(parse("S(3)xC(2)"), parse("S(3) x C(2)")));
  CHECK(expr_equal(parse("perm[(1 2 3)]"), parse("perm[ ( 1 2 3 ) ]")));
}

TEST_CASE("parse errors carry positions inside the input") {
  auto check_error = [](const std::string& input) {
    try {
      parse(input);
      FAIL_CHECK("expected a parse error for: " << input);
    } catch (const ParseError& e) {
      CHECK(e.line >= 1);
      CHECK(e.col >= 1);
      CHECK(e.begin >= 0);
      CHECK(e.begin <= static_cast<int>(input.size()));
      CHECK(e.end >= e.begin);
      CHECK(e.end <= static_cast<int>(input.size()) + 1);
    }
  };
  check_error("");
  check_error("D(8");
  check_error("Z(3)");
  check_error("D()");
  check_error("D(8) x");
  check_error("D(8) D(8)");
  check_error("perm[]");
  check_error("perm[(1 2)(2 3)]");  // 2 repeats within one permutation
  check_error("perm[(0 1)]");
  check_error("C(0)");
  check_error("D(8) %");
  check_error("Heis(2)");
}

TEST_CASE("error positions point at the offending token") {
  try {
    parse("S(3) x Z(2)");
    FAIL_CHECK("expected failure");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 8);
  }
  try {
    parse("S(3) x\nW(2)");
    FAIL_CHECK("expected failure");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 1);
  }
}

namespace {

GroupExpr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind_dist(0, depth > 0 ? 3 : 2);
  std::ostringstream os;
  switch (kind_dist(rng)) {
    case 0: {
      const char* fams[] = {"S", "A", "D", "Q", "C"};
      int f = std::uniform_int_distribution<int>(0, 4)(rng);
      int param = 0;
      switch (f) {
        case 0:
        case 1: param = std::uniform_int_distribution<int>(1, 5)(rng); break;
        case 2: param = 2 * std::uniform_int_distribution<int>(1, 8)(rng); break;
        case 3: param = 8 << std::uniform_int_distribution<int>(0, 2)(rng); break;
        default: param = std::uniform_int_distribution<int>(1, 16)(rng); break;
      }
      os << fams[f] << "(" << param << ")";
      break;
    }
    case 1: {
      const std::pair<int, int> specs[] = {{2, 1}, {3, 1}, {5, 1}, {2, 2}};
      auto [p, n] = specs[std::uniform_int_distribution<int>(0, 3)(rng)];
      os << "Heis(" << p << "," << n << ")";
      break;
    }
    case 2: {
      // a couple of disjoint cycles over at most 8 points
      std::vector<int> points = {1, 2, 3, 4, 5, 6, 7, 8};
      std::shuffle(points.begin(), points.end(), rng);
      int n_perms = std::uniform_int_distribution<int>(1, 2)(rng);
      os << "perm[";
      for (int t = 0; t < n_perms; ++t) {
        if (t) os << ", ";
        int len = std::uniform_int_distribution<int>(2, 4)(rng);
        os << "(";
        for (int i = 0; i < len; ++i) {
          if (i) os << " ";
          os << points[i];
        }
        os << ")";
      }
      os << "]";
      break;
    }
    default: {
      GroupExpr lhs = random_expr(rng, depth - 1);
      GroupExpr rhs = random_expr(rng, depth - 1);
      bool paren_rhs = rhs.kind == GroupExpr::Kind::Product;
      os << to_string(lhs) << " x ";
      if (paren_rhs) os << "(";
      os << to_string(rhs);
      if (paren_rhs) os << ")";
      break;
    }
  }
  return parse(os.str());
}

}  // namespace

TEST_CASE("pretty-printing round-trips through the parser") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    GroupExpr e = random_expr(rng, 2);
    std::string printed = to_string(e);
    GroupExpr reparsed = parse(printed);
    CHECK_MESSAGE(expr_equal(e, reparsed), "round trip failed for: " << printed);
    CHECK(to_string(reparsed) == printed);
  }
}

TEST_CASE("evaluate dispatches to the constructors") {
  CHECK(evaluate_text("A(4)").order() == 12);
  CHECK(evaluate_text("D(8) x D(8)").order() == 64);
  CHECK(evaluate_text("perm[(1 2)]").order() == 2);
  CHECK(evaluate_text("Heis(2,2)").order() == 64);
  CHECK(evaluate_text("(C(2) x C(2)) x C(2)").order() == 8);
  CHECK(evaluate_text("C(6)").name() == "C6");
  CHECK(evaluate_text("D(8) x C(3)").name() == "D8 x C3");
}

TEST_CASE("evaluation is deterministic per expression text") {
  auto g1 = evaluate_text("perm[(1 2 3), (1 2)]");
  auto g2 = evaluate_text("perm[(1 2 3), (1 2)]");
  CHECK(g1.labels() == g2.labels());
  for (int a = 0; a < g1.order(); ++a)
    for (int b = 0; b < g1.order(); ++b) CHECK(g1.mul(a, b) == g2.mul(a, b));
}

TEST_CASE("constructor failures carry the source span") {
  CHECK_THROWS_WITH_AS(evaluate_text("D(7)"), doctest::Contains("at 1:1"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(evaluate_text("C(2) x D(7)"), doctest::Contains("1:8"),
                       ValidationError);
  CHECK_THROWS_AS(evaluate_text("S(7)"), SizeError);  // keeps its type
  CHECK_THROWS_AS(evaluate_text("Heis(2,6)"), ValidationError);
}

TEST_CASE("A(4) and its generator presentation have the same measures") {
  auto named = analyze_group(evaluate_text("A(4)"));
  auto gens = analyze_group(evaluate_text("perm[(1 2 3), (2 3 4)]"));
  CHECK(gens.group.order() == 12);
  std::vector<long long> m1 = named.measure.values;
  std::vector<long long> m2 = gens.measure.values;
  std::sort(m1.begin(), m1.end());
  std::sort(m2.begin(), m2.end());
  CHECK(m1 == m2);
}

TEST_CASE("predicted order") {
  Limits limits;
  CHECK(predicted_order(parse("D(8)"), limits) == 8);
  CHECK(predicted_order(parse("S(4)"), limits) == 24);
  CHECK(predicted_order(parse("A(4)"), limits) == 12);
  CHECK(predicted_order(parse("Heis(3,1)"), limits) == 27);
  CHECK(predicted_order(parse("D(8) x D(8)"), limits) == 64);
  CHECK(predicted_order(parse("perm[(1 2)]"), limits) == limits.max_order);
}
