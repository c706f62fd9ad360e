#include "rrcf/radical.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rrcf;
using rrcf::test::close;

TEST_CASE("parse and evaluate") {
  const mpfr_prec_t b = bits_for_digits(120);
  CHECK(close(RadicalExpr::parse("sqrt(2)^2").evaluate(b), Real(2L, b), 100));
  CHECK(close(RadicalExpr::parse("2^(1/4)*2^(3/4)").evaluate(b), Real(2L, b), 100));
  CHECK(close(RadicalExpr::parse("(8472+4875*sqrt(3)-3770*sqrt(5)-2175*sqrt(15))/4").evaluate(b),
              RadicalExpr::parse("2118+4875/4*sqrt(3)-1885/2*sqrt(5)-2175/4*sqrt(15)").evaluate(b), 100));
  CHECK(close(RadicalExpr::parse("-3/6").evaluate(b), Real(-1L, b) / 2L, 100));
}

TEST_CASE("printing round-trips through the parser") {
  for (const char* t : {"((sqrt(5)+1)/2)^(3/2)*((sqrt(13)+3)/2)^(1/2)", "2^(1/4)*((1+sqrt(5))/2)^(1/3)",
                        "-37296+16705*sqrt(5)+2*sqrt(65*(10716449-4792536*sqrt(5)))"}) {
    const RadicalExpr e = RadicalExpr::parse(t);
    CHECK(RadicalExpr::parse(e.to_string()) == e);
    CHECK(RadicalExpr::from_json(e.to_json()) == e);
  }
}

TEST_CASE("builders") {
  const mpfr_prec_t b = 256;
  const RadicalExpr five = RadicalExpr::integer(5);
  const RadicalExpr phi = (five.sqrt() + RadicalExpr::integer(1)) / RadicalExpr::integer(2);
  CHECK(close((phi * phi - phi).evaluate(b), Real(1L, b), 70));
  CHECK(close(phi.pow(-1).evaluate(b), (phi - RadicalExpr::integer(1)).evaluate(b), 70));
}

TEST_CASE("malformed input") {
  CHECK_THROWS(RadicalExpr::parse("sqrt(2"));
  CHECK_THROWS(RadicalExpr::parse("2**3"));
  CHECK_THROWS(RadicalExpr::parse(""));
  CHECK_THROWS(RadicalExpr::parse("1/0").evaluate(128));
}
