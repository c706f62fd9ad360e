#pragma once

// q-series primitives: Euler's f(-q), the Jacobi thetas at z = 0, and the
// Rogers-Ramanujan continued fraction R(q) by product and by continued
// fraction.
//
// Truncation indices come from explicit tail inequalities so that the dropped
// tail is below 10^-(digits + guard). Every routine throws ConvergenceError
// rather than exceed kMaxTerms terms.

#include "rrcf/real.hpp"

#include <cstdint>
#include <string>

namespace rrcf {

inline constexpr std::int64_t kMaxTerms = 10'000'000;

/// Exact positive rational r designating q = exp(-pi sqrt(r)) and tau = i sqrt(r).
class SurdArg {
 public:
  SurdArg(std::int64_t num, std::int64_t den = 1);

  /// Parses "num/den" or "num".
  static SurdArg parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  mpq_class value() const { return mpq_class(mpz_class(num_), mpz_class(den_)); }

  SurdArg scaled(std::int64_t mul, std::int64_t div = 1) const;

  std::string str() const;
  friend bool operator==(const SurdArg&, const SurdArg&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// sqrt(r) at the given precision.
Real sqrt_of(const SurdArg& r, mpfr_prec_t bits);
/// q = exp(-pi sqrt(r)) at the ctx working precision.
Real nome(const SurdArg& r, const PrecisionCtx& ctx);

/// f(-q) = (q;q)_inf via the pentagonal number theorem.
Real eval_f_neg_q(const Real& q, const PrecisionCtx& ctx);
Real eval_f_neg_q(const SurdArg& r, const PrecisionCtx& ctx);

/// theta_2(0, q) = 2 q^{1/4} sum_{n>=0} q^{n(n+1)}.
Real eval_theta2(const Real& q, const PrecisionCtx& ctx);
/// theta_3(0, q) = 1 + 2 sum_{n>=1} q^{n^2}.
Real eval_theta3(const Real& q, const PrecisionCtx& ctx);

/// R(q) from the Rogers product.
Real eval_R_product(const Real& q, const PrecisionCtx& ctx);
Real eval_R_product(const SurdArg& r, const PrecisionCtx& ctx);

/// R(q) from the continued fraction by backward recurrence with depth doubling.
Real eval_R_cf(const Real& q, const PrecisionCtx& ctx);
Real eval_R_cf(const SurdArg& r, const PrecisionCtx& ctx);

namespace detail {

/// -log10(q) for q in (0,1), in double precision; throws DomainError otherwise.
double neg_log10_nome(const Real& q);

/// Smallest N >= 1 with q^{N(3N-1)/2} * 2/(1-q) below 10^-target (pentagonal tail).
std::int64_t pentagonal_terms(double neg_log10_q, double one_minus_q, double target);

}  // namespace detail

}  // namespace rrcf
