#include "rrcf/invariants.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rrcf;
using rrcf::test::close;

namespace {
const PrecisionCtx kCtx(200);
Real num(long v) { return Real(v, kCtx.working_bits()); }
}  // namespace

TEST_CASE("classical singular moduli") {
  CHECK(close(lambda_star(SurdArg(1), kCtx), 1L / sqrt(num(2)), 200));
  CHECK(close(lambda_star(SurdArg(2), kCtx), sqrt(num(2)) - 1L, 200));
  CHECK(close(lambda_star(SurdArg(3), kCtx), (sqrt(num(6)) - sqrt(num(2))) / 4L, 200));
  CHECK(close(lambda_star(SurdArg(4), kCtx), 3L - 2L * sqrt(num(2)), 200));
}

TEST_CASE("lambda*(r)^2 + lambda*(1/r)^2 = 1") {
  const Real a = lambda_star(SurdArg(26, 5), kCtx);
  const Real b = lambda_star(SurdArg(5, 26), kCtx);
  CHECK(close(a * a + b * b, num(1), 200));
}

TEST_CASE("class invariants at small n") {
  CHECK(close(ramanujan_G(SurdArg(1), kCtx), num(1), 200));
  CHECK(close(ramanujan_g(SurdArg(2), kCtx), num(1), 200));
  CHECK(close(ramanujan_G(SurdArg(3), kCtx), root(num(2), 12), 200));
  CHECK(close(ramanujan_G(SurdArg(5), kCtx), root((1L + sqrt(num(5))) / 2L, 4), 200));
}

TEST_CASE("Klein J at i and i sqrt(3)") {
  CHECK(close(klein_J(SurdArg(1), kCtx), num(1), 200));
  // j(i sqrt 3) = 54000.
  CHECK(close(klein_J(SurdArg(3), kCtx), num(54000) / 1728L, 200));
  CHECK(close(evaluate_invariant(InvariantKind::KleinJ, SurdArg(1), kCtx).value, num(1), 200));
}

TEST_CASE("algebraic conversions agree with the theta and product routes") {
  for (auto n : {SurdArg(7), SurdArg(13, 2), SurdArg(130)}) {
    const Real L = lambda_star(n, kCtx);
    const Real G = ramanujan_G(n, kCtx);
    const Real g = ramanujan_g(n, kCtx);
    CHECK(close(lambda_star_from_G(G), L, 190));
    CHECK(close(lambda_star_from_g(g), L, 190));
    CHECK(close(G_from_lambda_star(L), G, 190));
    CHECK(close(g_from_lambda_star(L), g, 190));
    CHECK(close(G_from_g(g), G, 190));
    CHECK(close(g_of_4n(g, G), ramanujan_g(n.scaled(4), kCtx), 190));
    CHECK(close(G_of_4n(G), ramanujan_G(n.scaled(4), kCtx), 190));
    CHECK(close(quadrupling_constant(G), 2L * pow(ramanujan_g(n.scaled(4), kCtx), 8), 190));
  }
}

TEST_CASE("quarter-argument lambda* by both routes") {
  const Real L = lambda_star(SurdArg(48, 5), kCtx);
  const Real quarter = lambda_star(SurdArg(12, 5), kCtx);
  CHECK(close(lambda_star_quarter(L), quarter, 190));
  CHECK(close(lambda_star_quarter_landen(L), quarter, 190));
}

TEST_CASE("order-25 modulus of G_n is lambda*(n)^2") {
  const Real L = lambda_star(SurdArg(26, 5), kCtx);
  CHECK(close(order25_modulus(G_from_lambda_star(L)), L * L, 190));
  CHECK(close(order25_modulus(ramanujan_G(SurdArg(130), kCtx)), pow(lambda_star(SurdArg(130), kCtx), 2), 190));
}

TEST_CASE("invariant kind names") {
  for (auto k : {InvariantKind::LambdaStar, InvariantKind::Lambda, InvariantKind::KleinJ, InvariantKind::G,
                 InvariantKind::g}) {
    CHECK(invariant_kind_from_string(to_string(k)) == k);
  }
}

TEST_CASE("g_n exceeds 1 past n = 2") {
  for (auto n : {SurdArg(3), SurdArg(13, 2), SurdArg(130)}) CHECK(ramanujan_g(n, kCtx) > 1L);
  CHECK(close(ramanujan_g(SurdArg(4, 7), kCtx) * ramanujan_g(SurdArg(7), kCtx), num(1), 190));
}
