#include <doctest.h>

#include "nspair/polynomial.hpp"

using namespace nspair;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
}  // namespace

TEST_CASE("canonical printing orders terms by degree, then reverse-lex") {
  CHECK(parse_polynomial("x^2 + x^2*y + y^3 + z^2*y", XYZ).to_text() ==
        "x^2 + y*x^2 + y^3 + y*z^2");
  CHECK(parse_polynomial("y^2 - x^2", XY).to_text() == "-x^2 + y^2");
  CHECK(parse_polynomial("x^2 - y^2", XY).to_text() == "x^2 - y^2");
  CHECK(parse_polynomial("1 + x + x^2", XY).to_text() == "1 + x + x^2");
  CHECK(parse_polynomial("y + x", XY).to_text() == "x + y");
  CHECK(parse_polynomial("x - x", XY).to_text() == "0");
  CHECK(parse_polynomial("2*x + 3*x", XY).to_text() == "5*x");
  CHECK(parse_polynomial("-(x - y)", XY).to_text() == "-x + y");
  CHECK(parse_polynomial("3/4", XY).to_text() == "3/4");
  CHECK(parse_polynomial("1/2*x - y", XY).to_text() == "1/2*x - y");
}

TEST_CASE("monomial factors print in ascending exponent order") {
  CHECK(parse_polynomial("x^2*y", XY).to_text() == "y*x^2");
  CHECK(parse_polynomial("x*y^2", XY).to_text() == "x*y^2");
  CHECK(parse_polynomial("x*y", XY).to_text() == "x*y");
  CHECK(parse_polynomial("z*y^2*x^3", XYZ).to_text() == "z*y^2*x^3");
}

TEST_CASE("printing round-trips through the parser") {
  for (const char* text : {"x^2 + y*x^2 + y^3 + y*z^2", "-x + y", "0", "x*y*z",
                           "1/2 + 2/3*x - z^4", "5*x^3 - 5*y^3"}) {
    Polynomial p = parse_polynomial(text, XYZ);
    CHECK(p.to_text() == text);
    CHECK(parse_polynomial(p.to_text(), XYZ) == p);
  }
}

TEST_CASE("grammar corners") {
  CHECK(parse_polynomial("(x + y)*(x - y)", XY).to_text() == "x^2 - y^2");
  CHECK(parse_polynomial("x*x*x", XY).to_text() == "x^3");
  CHECK(parse_polynomial("+x", XY).to_text() == "x");
  CHECK(parse_polynomial("- 2 * x", XY).to_text() == "-2*x");
  CHECK(parse_polynomial("  x ^ 2  ", XY).to_text() == "x^2");
  CHECK(parse_polynomial("x^0", XY).to_text() == "1");
  CHECK(parse_polynomial("a1^2", {"a1"}).to_text() == "a1^2");  // names come from the list
}

TEST_CASE("parse errors carry byte positions") {
  auto position_of = [](const char* text, const std::vector<std::string>& vars) {
    try {
      parse_polynomial(text, vars);
    } catch (const ParseError& e) {
      return e.position();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(position_of("", XY) == 0);
  CHECK(position_of("x +", XY) == 3);
  CHECK(position_of("x y", XY) == 2);
  CHECK(position_of("(x", XY) == 2);
  CHECK(position_of("x^", XY) == 2);
  CHECK(position_of("1/0", XY) == 2);
  CHECK(position_of("q + x", XY) == 0);
  CHECK(position_of("x + q", XY) == 4);
  CHECK(position_of("x^5000", XY) == 2);
  CHECK(position_of("x$y", XY) == 1);
}

TEST_CASE("exponent cap admits 4096 and rejects 4097") {
  CHECK_NOTHROW(parse_polynomial("x^4096", XY));
  CHECK_THROWS_AS(parse_polynomial("x^4097", XY), ParseError);
}

TEST_CASE("variable lists are validated") {
  CHECK_THROWS_AS(parse_polynomial("x", {"x", "x"}), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x", {"x", ""}), ParseError);
}

TEST_CASE("germ parsing rejects nonzero constant terms") {
  CHECK_THROWS_AS(parse_germ("x^2 + 1", XY), NotAGermError);
  CHECK_THROWS_AS(parse_germ("1/2", XY), NotAGermError);
  CHECK_NOTHROW(parse_germ("x^2 + x - x", XY));
  CHECK(parse_germ("0", XY).is_zero());
  CHECK_NOTHROW(parse_germ("(x + 1)*(x - 1) + 1", XY));  // constants may cancel
}

TEST_CASE("polynomial queries") {
  Polynomial p = parse_polynomial("x^2 + 2*y - 7", XY);
  CHECK(p.total_degree() == 2);
  CHECK(p.constant_term() == -7);
  CHECK_FALSE(p.is_germ());
  CHECK(p.nvars() == 2);
  CHECK(p.evaluate({Rat(3), Rat(1, 2)}) == Rat(3));
  CHECK(parse_polynomial("0", XY).total_degree() == 0);
}

TEST_CASE("arithmetic identities") {
  Polynomial p = parse_polynomial("x^3 - 2*x*y + 1/3", XY);
  Polynomial q = parse_polynomial("y^2 + 5*x", XY);
  CHECK((p + q) - q == p);
  CHECK(p * q == q * p);
  CHECK(p - p == Polynomial(XY));
  CHECK(-(-p) == p);
  CHECK(p.scaled(Rat(0)).is_zero());
  CHECK(p.scaled(Rat(2)) == p + p);
  Polynomial other_context = parse_polynomial("x", XYZ);
  CHECK_THROWS_AS(p + other_context, DimensionError);
}

TEST_CASE("derivatives and gradients") {
  Polynomial f = parse_polynomial("x^2 + y^2", XY);
  GradientGerm g = gradient(f);
  REQUIRE(g.components.size() == 2);
  CHECK(g.components[0].to_text() == "2*x");
  CHECK(g.components[1].to_text() == "2*y");

  GradientGerm line = gradient(parse_polynomial("x", {"x"}));
  REQUIRE(line.components.size() == 1);
  CHECK(line.components[0].to_text() == "1");

  CHECK(parse_polynomial("x^3*y", XY).derivative(0).to_text() == "3*y*x^2");
  CHECK(parse_polynomial("7", XY).derivative(1).is_zero());
  CHECK_THROWS_AS(parse_polynomial("x", XY).derivative(5), DimensionError);
}

TEST_CASE("substitution composes polynomials") {
  Polynomial f = parse_polynomial("x^2 + y^2", XY);
  std::vector<Polynomial> images{parse_polynomial("x + y", XY), parse_polynomial("x - y", XY)};
  CHECK(f.substitute(images).to_text() == "2*x^2 + 2*y^2");

  Polynomial g = parse_polynomial("x*y", XY);
  std::vector<Polynomial> into_three{parse_polynomial("z", XYZ), parse_polynomial("y + z", XYZ)};
  CHECK(g.substitute(into_three).to_text() == "y*z + z^2");

  CHECK_THROWS_AS(f.substitute({images[0]}), DimensionError);
  std::vector<Polynomial> mixed{parse_polynomial("x", XY), parse_polynomial("x", XYZ)};
  CHECK_THROWS_AS(f.substitute(mixed), DimensionError);
}
