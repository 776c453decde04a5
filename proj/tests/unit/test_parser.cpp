#include <doctest.h>

#include <string>
#include <vector>

#include "core/monomial.hpp"
#include "core/parser.hpp"
#include "support/test_rng.hpp"

using namespace regdef;

namespace {

MonomialIdeal ideal(int vars, std::vector<std::vector<Exp>> rows) {
  std::vector<Monomial> gens;
  for (auto& r : rows) gens.emplace_back(std::move(r));
  return minimalize(vars, gens);
}

}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("simple sums of monomials") {
    CHECK(parse_ideal("x1^2 + x1*x2 + x2^3", 2) ==
          ideal(2, {{2, 0}, {1, 1}, {0, 3}}));
  }

  TEST_CASE("constructors M and MP") {
    CHECK(parse_ideal("MP(3,3,3) + M(4)", 3) ==
          sum(boxed_ideal({3, 3, 3}), max_ideal_power(3, 4)));
    CHECK(parse_ideal("M(2)", 2) == max_ideal_power(2, 2));
  }

  TEST_CASE("powers and parentheses") {
    CHECK(parse_ideal("(x1^2 + x2^2)^2", 2) ==
          ideal(2, {{4, 0}, {2, 2}, {0, 4}}));
    CHECK(parse_ideal("(x1 + x2)^3", 2) == max_ideal_power(2, 3));
    CHECK(parse_ideal("x1^0", 2).is_unit());
    CHECK(parse_ideal("1", 2).is_unit());
  }

  TEST_CASE("products of ideals and monomial products agree") {
    CHECK(parse_ideal("x1^2*x2", 2) == parse_ideal("(x1^2)*(x2)", 2));
    CHECK(parse_ideal("(x1 + x2)*(x1 + x2)", 2) == parse_ideal("(x1+x2)^2", 2));
  }

  TEST_CASE("whitespace and newlines are ignored, positions tracked") {
    CHECK(parse_ideal(" x1^2\n + x2 ", 2) == ideal(2, {{2, 0}, {0, 1}}));
    try {
      parse_ideal("x1 +\n  @", 2);
      FAIL("expected parse error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
      CHECK(std::string(e.what()).find("column 3") != std::string::npos);
    }
  }

  TEST_CASE("error cases") {
    CHECK_THROWS_AS((void)parse_ideal("", 2), Error);
    CHECK_THROWS_AS((void)parse_ideal("x3", 2), Error);          // undeclared variable
    CHECK_THROWS_AS((void)parse_ideal("MP(2,2)", 3), Error);     // arity mismatch
    CHECK_THROWS_AS((void)parse_ideal("M(0)", 2), Error);        // q >= 1
    CHECK_THROWS_AS((void)parse_ideal("x1^", 2), Error);         // missing exponent
    CHECK_THROWS_AS((void)parse_ideal("x1 + ", 2), Error);       // trailing operator
    CHECK_THROWS_AS((void)parse_ideal("(x1", 2), Error);         // unbalanced paren
    CHECK_THROWS_AS((void)parse_ideal("2*x1", 2), Error);        // coefficients unsupported
    CHECK_THROWS_AS((void)parse_ideal("x1^9999999999999999999999", 2), Error);
  }

  TEST_CASE("ideal strings round-trip through the parser") {
    for (const char* text : {"x1^2 + x1*x2 + x2^3", "MP(3,3,3) + M(4)",
                             "(x1^2 + x2^2)^2", "x1^7*x2^2 + x2^8", "1"}) {
      const int vars = 3;
      auto first = parse_ideal(text, vars);
      auto again = parse_ideal(first.str() == "0" ? "1" : first.str(), vars);
      if (!first.is_zero()) CHECK(first == again);
    }
  }

  TEST_CASE("property: format after parse re-parses to the same ideal") {
    testrng::SplitMix64 rng(0x9A95);
    for (int trial = 0; trial < 150; ++trial) {
      const int vars = static_cast<int>(rng.range(1, 4));
      // build a random expression string from the grammar
      std::string text;
      const int terms = static_cast<int>(rng.range(1, 3));
      for (int t = 0; t < terms; ++t) {
        if (t) text += " + ";
        const int factors = static_cast<int>(rng.range(1, 2));
        for (int f = 0; f < factors; ++f) {
          if (f) text += "*";
          switch (rng.range(0, 3)) {
            case 0:
              text += "x" + std::to_string(rng.range(1, vars)) + "^" +
                      std::to_string(rng.range(1, 4));
              break;
            case 1:
              text += "M(" + std::to_string(rng.range(1, 3)) + ")";
              break;
            case 2: {
              text += "MP(";
              for (int i = 0; i < vars; ++i) {
                if (i) text += ",";
                text += std::to_string(rng.range(1, 4));
              }
              text += ")";
              break;
            }
            default:
              text += "(x" + std::to_string(rng.range(1, vars)) + " + x" +
                      std::to_string(rng.range(1, vars)) + ")^" +
                      std::to_string(rng.range(1, 3));
          }
        }
      }
      const IdealExpr expr = parse_expression(text, vars);
      const MonomialIdeal direct = evaluate(expr, vars);
      const std::string printed = format(expr);
      CHECK(parse_ideal(printed, vars) == direct);
      // the canonical generator list is itself grammar-valid
      CHECK(parse_ideal(direct.is_zero() ? "1" : direct.str(), vars) ==
            (direct.is_zero() ? MonomialIdeal::unit(vars) : direct));
    }
  }
}
