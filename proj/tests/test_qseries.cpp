#include "rrcf/errors.hpp"
#include "rrcf/qseries.hpp"
#include "support.hpp"

#include <doctest.h>

#include <mpfr.h>

using namespace rrcf;
using rrcf::test::close;

namespace {

// prod_{n>=1} (1 - q^n), multiplied out term by term until the factors are 1.
Real naive_euler_product(const Real& q, const PrecisionCtx& ctx) {
  const mpfr_prec_t b = ctx.working_bits();
  const Real eps = pow10(-(ctx.working_digits() + 5), b);
  Real acc(1L, b);
  Real qn = q.with_bits(b);
  while (qn > eps) {
    acc *= 1L - qn;
    qn *= q;
  }
  return acc;
}

Real gamma_of(const Real& x) {
  Real out(x.bits());
  mpfr_gamma(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

TEST_CASE("SurdArg parsing") {
  CHECK(SurdArg::parse("26/5") == SurdArg(26, 5));
  CHECK(SurdArg::parse("4") == SurdArg(4, 1));
  CHECK(SurdArg::parse("8/2") == SurdArg(4, 1));
  CHECK(SurdArg(48, 5).scaled(1, 4) == SurdArg(12, 5));
  CHECK_THROWS(SurdArg::parse("0"));
  CHECK_THROWS(SurdArg::parse("x/3"));
  CHECK_THROWS(SurdArg::parse("-2/3"));
}

TEST_CASE("pentagonal f(-q) against the naive product") {
  const PrecisionCtx ctx(150);
  for (const char* t : {"0.001", "0.3", "0.6", "0.9"}) {
    const Real q(std::string(t), ctx.working_bits());
    CHECK(close(eval_f_neg_q(q, ctx), naive_euler_product(q, ctx), 150));
  }
}

TEST_CASE("theta3(e^-pi) = pi^(1/4) / Gamma(3/4)") {
  const PrecisionCtx ctx(200);
  const mpfr_prec_t b = ctx.working_bits();
  const Real expected = root(pi(b), 4) / gamma_of(Real(3L, b) / 4L);
  CHECK(close(eval_theta3(nome(SurdArg(1), ctx), ctx), expected, 200));
}

TEST_CASE("Jacobi: theta3^4 = theta2^4 + theta4^4 with theta4(q) = f(-q)^2 / f(-q^2)") {
  const PrecisionCtx ctx(120);
  const Real q("0.37", ctx.working_bits());
  const Real t2 = eval_theta2(q, ctx);
  const Real t3 = eval_theta3(q, ctx);
  const Real t4 = pow(eval_f_neg_q(q, ctx), 2) / eval_f_neg_q(q * q, ctx);
  CHECK(close(pow(t3, 4), pow(t2, 4) + pow(t4, 4), 120));
}

TEST_CASE("R by continued fraction agrees with the product formula") {
  const PrecisionCtx ctx(200);
  for (const char* t : {"0.001", "0.1", "0.5", "0.6"}) {
    const Real q(std::string(t), ctx.working_bits());
    CHECK(close(eval_R_cf(q, ctx), eval_R_product(q, ctx), 200));
  }
  CHECK(close(eval_R_cf(SurdArg(26, 5), ctx), eval_R_product(SurdArg(26, 5), ctx), 200));
}

TEST_CASE("R(e^-2pi) closed form") {
  const PrecisionCtx ctx(300);
  const mpfr_prec_t b = ctx.working_bits();
  const Real s5 = sqrt(Real(5L, b));
  const Real closed = sqrt((5L + s5) / 2L) - (s5 + 1L) / 2L;
  CHECK(close(eval_R_product(SurdArg(4), ctx), closed, 300));
}

TEST_CASE("domain and convergence errors") {
  const PrecisionCtx ctx(100);
  CHECK_THROWS_AS(eval_R_product(Real(1L, 256), ctx), DomainError);
  CHECK_THROWS_AS(eval_f_neg_q(Real(-1L, 256) / 2L, ctx), DomainError);
  // 1 - 1e-15 needs more than kMaxTerms pentagonal terms.
  CHECK_THROWS_AS(eval_f_neg_q(Real(std::string("0.999999999999999"), 512), ctx), ConvergenceError);
}
