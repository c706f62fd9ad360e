#include "rrcf/errors.hpp"
#include "rrcf/invariants.hpp"
#include "rrcf/verify.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rrcf;

namespace {

ResidualFn constant(const char* value) {
  return [value](const PrecisionCtx&) -> Residuals { return {{"c", Real(std::string(value), 64)}}; };
}

}  // namespace

TEST_CASE("verdict rules") {
  const PrecisionCtx ctx(100, 20);
  const Certificate exact = certify("zero", constant("0"), ctx);
  CHECK(exact.verdict == Verdict::Certified);
  CHECK(exact.digits_lo == 100);
  CHECK(exact.digits_hi == 200);

  CHECK(certify("big", constant("1e-3"), ctx).verdict == Verdict::Refuted);

  // Small but not shrinking: inconclusive after one escalation.
  const Certificate stuck = certify("stuck", constant("1e-70"), ctx);
  CHECK(stuck.verdict == Verdict::Inconclusive);
  CHECK(stuck.digits_lo == 200);
  CHECK(stuck.artifacts.back()["escalated"] == true);
}

TEST_CASE("certificate JSON round-trips") {
  const Certificate c = certify("zero", constant("0"), PrecisionCtx(60, 20));
  const nlohmann::json j = c.to_json();
  for (const char* k : {"claim_id", "digits_lo", "digits_hi", "residual_lo", "residual_hi", "verdict", "artifacts",
                        "wall_time_ms"}) {
    CHECK(j.contains(k));
  }
  CHECK(nlohmann::json::parse(j.dump()) == j);
  CHECK(verdict_from_string(j["verdict"]) == Verdict::Certified);
}

TEST_CASE("companion identities and recursions at sample nomes") {
  const PrecisionCtx ctx(120);
  for (const char* t : {"0.002", "0.25", "0.59"}) {
    const Real q(std::string(t), ctx.working_bits());
    CHECK(check_companion(q, ctx).verdict == Verdict::Certified);
    CHECK(check_recursions(q, ctx).verdict == Verdict::Certified);
  }
  CHECK_THROWS_AS(check_recursions(Real(2L, 64), ctx), DomainError);
}

TEST_CASE("order 25: both orientations and perturbation") {
  const PrecisionCtx ctx(200);
  auto [alpha, beta] = order25_sources(130);
  CHECK(check_order25(alpha, beta, ctx).verdict == Verdict::Certified);
  CHECK(check_order25(beta, alpha, ctx).verdict == Verdict::Certified);
  const RealSource bent = [beta](const PrecisionCtx& c) {
    const Real b = beta(c);
    return b + b * pow10(-20, b.bits());
  };
  CHECK(check_order25(alpha, bent, ctx).verdict == Verdict::Refuted);
  CHECK(check_order25(bent, alpha, ctx).verdict == Verdict::Refuted);
  CHECK_THROWS_AS(Order25Instance::make(Real(1L, 64), Real(1L, 64) / 4L), DomainError);
  CHECK_THROWS_AS(order25_sources(131), DomainError);
}

TEST_CASE("icosahedral equation at r = 26/5") {
  const PrecisionCtx ctx(200);
  const RealSource r = [](const PrecisionCtx& c) { return eval_R_product(SurdArg(26, 5), c); };
  const RealSource lam = [](const PrecisionCtx& c) { return lambda_of_tau(SurdArg(13, 10), c); };
  CHECK(check_icosahedral(r, lam, ctx).verdict == Verdict::Certified);
  const RealSource off = [r](const PrecisionCtx& c) {
    const Real v = r(c);
    return v + v * pow10(-10, v.bits());
  };
  CHECK(check_icosahedral(off, lam, ctx).verdict == Verdict::Refuted);
  CHECK_THROWS_AS(icosahedral_residual(Real(0L, 64), Real(1L, 64) / 2L), DomainError);
}

TEST_CASE("Yi map at a = 0") {
  CHECK(r5_from_a(Real(0L, 128)) == Real(1L, 128));
  // Large positive a: sqrt(a^2+1) - a ~ 1/(2a) without cancellation.
  const Real a = pow10(40, 256);
  CHECK(test::close(r5_from_a(a) * a * 2L, Real(1L, 256), 60));
}

TEST_CASE("theorem ids and data") {
  for (TheoremId id : all_theorems()) CHECK(theorem_id_from_string(to_string(id)) == id);
  CHECK_THROWS_AS(theorem_id_from_string("thm9"), DomainError);
  CHECK(theorem_data(TheoremId::Thm4_48_5).lambda_poly.size() == 17);
  CHECK(lemma1_polynomial().size() == 17);
}

TEST_CASE("r = 26/5 pipeline at 250 digits") {
  const TheoremBundle b = reproduce_theorem(TheoremId::Thm2_26_5, PrecisionCtx(250));
  CHECK(b.verdict == Verdict::Certified);
  CHECK(b.failing_stage.empty());
  CHECK(b.stages.size() == 7);
  REQUIRE(b.final_residual);
  CHECK(*b.final_residual < pow10(-150, 64));
}

TEST_CASE("conjecture pipeline is capped") {
  const TheoremBundle b = reproduce_theorem(TheoremId::Conj_16_15, PrecisionCtx(250));
  CHECK(b.verdict == Verdict::NumericallySupported);
  for (const auto& c : b.stages) CHECK(c.verdict == Verdict::NumericallySupported);
}
