#include "rrcf/errors.hpp"
#include "rrcf/real.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rrcf;
using rrcf::test::close;

TEST_CASE("pi against a published 60-digit expansion") {
  const Real p = pi(bits_for_digits(80));
  CHECK(close(p, test::dec("3.14159265358979323846264338327950288419716939937510582097494", 60), 58));
}

TEST_CASE("arithmetic identities at 200 digits") {
  const PrecisionCtx ctx(200);
  const mpfr_prec_t b = ctx.working_bits();
  const Real two(2L, b);
  CHECK(close(sqrt(two) * sqrt(two), two, 200));
  CHECK(close(exp(log(Real(7L, b))), Real(7L, b), 200));
  CHECK(close(pow(root(two, 5), 5), two, 200));
  CHECK(close(pow(two, 3, 4) * pow(two, 1, 4), two, 200));
  CHECK(pow10(-3, b) * 1000L == Real(1L, b));
}

TEST_CASE("decimal parsing and printing") {
  const Real x("0.25", 128);
  CHECK(x.to_fixed(3) == "0.250");
  CHECK(Real("1e-3", 128).to_sci(3) == "1.00e-3");
  CHECK(Real(0L, 64).to_sci(4) == "0");
  CHECK(Real("-17", 64).round_to_mpz() == -17);
}

TEST_CASE("precision context") {
  const PrecisionCtx ctx(300, 50);
  CHECK(ctx.working_digits() == 350);
  CHECK(ctx.doubled().digits == 600);
  CHECK(ctx.doubled().guard == 50);
  CHECK(ctx.working_bits() >= 350 * 3.32);
}
