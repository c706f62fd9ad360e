#include "rrcf/errors.hpp"
#include "rrcf/qseries.hpp"
#include "rrcf/recognition.hpp"
#include "rrcf/verify.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rrcf;
using rrcf::test::close;

namespace {
const PrecisionCtx kCtx(300);
Real num(long v) { return Real(v, kCtx.working_bits() + 64); }
}  // namespace

TEST_CASE("minimal polynomial of sqrt 2 + sqrt 3") {
  const RealSource x = [](const PrecisionCtx& c) {
    return sqrt(Real(2L, c.working_bits())) + sqrt(Real(3L, c.working_bits()));
  };
  const auto cand = recognize_minpoly(x, 8, 0, kCtx);
  REQUIRE(cand);
  CHECK(cand->poly.to_string() == "x^4-10*x^2+1");
  CHECK(cand->real_root_count == 4);
  CHECK(cand->root_index == 4);
  CHECK(cand->confidence == Confidence::EscalationStable);
  CHECK(cand->to_json()["coeffs"] == nlohmann::json{"1", "0", "-10", "0", "1"});
}

TEST_CASE("lowest degree wins and single precision is provisional") {
  const Real phi = (1L + sqrt(num(5))) / 2L;
  const auto cand = recognize_minpoly(phi, 6, 0, kCtx);
  REQUIRE(cand);
  CHECK(cand->poly.to_string() == "x^2-x-1");
  CHECK(cand->confidence == Confidence::Provisional);
}

TEST_CASE("transcendental input yields no candidate") {
  CHECK_FALSE(recognize_minpoly(pi(kCtx.working_bits()), 6, 0, kCtx));
}

TEST_CASE("precision preconditions") {
  CHECK_THROWS_AS(recognize_minpoly(num(2), 4, 0, PrecisionCtx(150, 50)), PreconditionError);
  CHECK_THROWS_AS(recognize_minpoly(num(2), 8, 40, kCtx), PreconditionError);
}

TEST_CASE("root selection") {
  const IntPoly p = IntPoly::from_descending({"1", "0", "-2"});
  const RootSelection s = select_root(p, sqrt(num(2)), kCtx);
  CHECK(s.root_index == 2);
  CHECK(s.cas_index == 2);
  CHECK_THROWS_AS(select_root(p, num(3) / 2L, kCtx), MismatchError);
}

TEST_CASE("field recognition over Q(sqrt 2, sqrt 3)") {
  const std::vector<long> basis{1, 2, 3, 6};
  const Real x = num(3) / 2L + 2L * sqrt(num(2)) - sqrt(num(6)) / 7L;
  const auto fe = recognize_in_field(x, basis, 1000, kCtx);
  REQUIRE(fe);
  CHECK(fe->to_string() == "3/2+2*sqrt(2)-1/7*sqrt(6)");
  CHECK(*fe == FieldElement::parse("3/2+2*sqrt(2)-1/7*sqrt(6)", basis));
  CHECK(FieldElement::from_json(fe->to_json()) == *fe);
  CHECK_FALSE(recognize_in_field(pi(kCtx.working_bits()), basis, 1000, kCtx));
  CHECK_THROWS(recognize_in_field(x, {2, 3}, 1000, kCtx));
  CHECK_THROWS(recognize_in_field(x, {1, 4}, 1000, kCtx));
}

TEST_CASE("Yi's s at n = 5 maps to R(e^-2pi)^5") {
  const Real s = yi_s(SurdArg(5), kCtx);
  CHECK(close(yi_map(s), pow(eval_R_product(SurdArg(4), kCtx), 5), 290));
}

TEST_CASE("Yi recognition at n = 13/2") {
  const YiResult res = yi_recognize(SurdArg(13, 2), kCtx);
  REQUIRE(res.recognized());
  REQUIRE(res.closed_form);
  CHECK(*res.closed_form == "-37296+16705*sqrt(5)+2*sqrt(65*(10716449-4792536*sqrt(5)))");
  REQUIRE(res.a_field);
  CHECK(res.a_field->to_string() == "208818-93240*sqrt(5)-57825*sqrt(13)+25900*sqrt(65)");
  REQUIRE(res.s_minpoly);
  CHECK(res.s_minpoly->poly.to_string() == "x^4+149184*x^3-17174034*x^2+149184*x+1");
  const Real closed = RadicalExpr::parse(*res.closed_form).evaluate(kCtx);
  CHECK(close(closed, res.s, 290));
}

TEST_CASE("nested form needs a biquadratic field over sqrt 5") {
  CHECK_FALSE(nested_sqrt5_form(FieldElement::parse("1+sqrt(2)", {1, 2})));
}
