#include "rrcf/qseries.hpp"

#include "rrcf/errors.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace rrcf {

SurdArg::SurdArg(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) {
    throw DomainError("SurdArg requires a positive rational, got " + std::to_string(num) + "/" +
                      std::to_string(den));
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

SurdArg SurdArg::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      const std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return SurdArg(n, 1);
    }
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    const std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const std::int64_t d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return SurdArg(n, d);
  } catch (const std::logic_error&) {
    throw DomainError("cannot parse rational argument '" + text + "' (expected num/den)");
  }
}

SurdArg SurdArg::scaled(std::int64_t mul, std::int64_t div) const {
  const std::int64_t g1 = std::gcd(mul, den_);
  const std::int64_t g2 = std::gcd(num_, div);
  return SurdArg((num_ / g2) * (mul / g1), (den_ / g1) * (div / g2));
}

std::string SurdArg::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Real sqrt_of(const SurdArg& r, mpfr_prec_t bits) { return sqrt(Real(r.value(), bits)); }

Real nome(const SurdArg& r, const PrecisionCtx& ctx) {
  // exp amplifies the absolute error of its argument; carry a few extra bits.
  const mpfr_prec_t bits = ctx.working_bits() + 16;
  Real q = exp(-(pi(bits) * sqrt_of(r, bits)));
  q = q.with_bits(ctx.working_bits());
  q.set_at_digits(ctx.digits);
  return q;
}

namespace detail {

double neg_log10_nome(const Real& q) {
  if (!(q > 0L) || !(q < 1L)) {
    throw DomainError("nome must lie in (0,1), got " + q.to_sci(12));
  }
  const double l = -q.log10_abs();
  if (!(l > 0.0)) {
    throw ConvergenceError("nome too close to 1 for a finite truncation");
  }
  return l;
}

std::int64_t pentagonal_terms(double neg_log10_q, double one_minus_q, double target) {
  // Need (N+1)(3N+2)/2 * L > target + log10(2/(1-q)).
  const double need = (target + std::log10(2.0 / one_minus_q)) / neg_log10_q;
  if (!std::isfinite(need) || need > 1.5 * static_cast<double>(kMaxTerms) * kMaxTerms) {
    throw ConvergenceError("pentagonal series would exceed the term cap");
  }
  auto n = static_cast<std::int64_t>(std::max(0.0, std::floor(std::sqrt(2.0 * need / 3.0)) - 2));
  while (0.5 * static_cast<double>(n + 1) * static_cast<double>(3 * n + 2) <= need) ++n;
  if (n > kMaxTerms) throw ConvergenceError("pentagonal series would exceed the term cap");
  return n;
}

}  // namespace detail

namespace {

double one_minus(const Real& q) { return 1.0 - q.to_double(); }

void finish(Real& x, const PrecisionCtx& ctx) { x.set_at_digits(ctx.digits); }

}  // namespace

Real eval_f_neg_q(const Real& q_in, const PrecisionCtx& ctx) {
  const double l = detail::neg_log10_nome(q_in);
  const double target = ctx.working_digits() + 2;
  const std::int64_t n_max = detail::pentagonal_terms(l, std::max(one_minus(q_in), 1e-300), target);

  const mpfr_prec_t bits = ctx.working_bits();
  const Real q = q_in.with_bits(bits);
  const Real q3 = q * q * q;
  // term = q^{n(3n-1)/2}; step = q^{3n+1} moves term from n to n+1; qn = q^n.
  Real sum(1L, bits);
  Real term(1L, bits);
  Real step = q;
  Real qn(1L, bits);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    term *= step;   // q^{n(3n-1)/2}
    step *= q3;
    qn *= q;
    const Real pair = term + term * qn;  // n and -n
    if (n % 2 == 0) {
      sum += pair;
    } else {
      sum -= pair;
    }
  }
  finish(sum, ctx);
  return sum;
}

Real eval_f_neg_q(const SurdArg& r, const PrecisionCtx& ctx) {
  return eval_f_neg_q(nome(r, ctx), ctx);
}

Real eval_theta2(const Real& q_in, const PrecisionCtx& ctx) {
  const double l = detail::neg_log10_nome(q_in);
  const double target = ctx.working_digits() + 2 + std::log10(1.0 / std::max(one_minus(q_in), 1e-300));
  // smallest N with N(N+1) L > target: terms n = 0..N-1 kept.
  const double need = target / l;
  if (need > static_cast<double>(kMaxTerms) * kMaxTerms) throw ConvergenceError("theta2 term cap exceeded");
  auto n_max = static_cast<std::int64_t>(std::floor(std::sqrt(need)));
  while (static_cast<double>(n_max) * static_cast<double>(n_max + 1) <= need) ++n_max;
  if (n_max > kMaxTerms) throw ConvergenceError("theta2 term cap exceeded");

  const mpfr_prec_t bits = ctx.working_bits();
  const Real q = q_in.with_bits(bits);
  const Real q2 = q * q;
  // term_n = q^{n(n+1)}, ratio q^{2n+2}.
  Real sum(1L, bits);
  Real term(1L, bits);
  Real ratio = q2;
  for (std::int64_t n = 1; n < n_max; ++n) {
    term *= ratio;
    ratio *= q2;
    sum += term;
  }
  Real out = 2L * root(q, 4) * sum;
  finish(out, ctx);
  return out;
}

Real eval_theta3(const Real& q_in, const PrecisionCtx& ctx) {
  const double l = detail::neg_log10_nome(q_in);
  const double target =
      ctx.working_digits() + 2 + std::log10(2.0 / std::max(one_minus(q_in), 1e-300));
  // omitted n > N: need (N+1)^2 L > target.
  const double need = target / l;
  if (need > static_cast<double>(kMaxTerms) * kMaxTerms) throw ConvergenceError("theta3 term cap exceeded");
  auto n_max = static_cast<std::int64_t>(std::floor(std::sqrt(need)));
  while (static_cast<double>(n_max + 1) * static_cast<double>(n_max + 1) <= need) ++n_max;
  if (n_max > kMaxTerms) throw ConvergenceError("theta3 term cap exceeded");

  const mpfr_prec_t bits = ctx.working_bits();
  const Real q = q_in.with_bits(bits);
  const Real q2 = q * q;
  // term_n = q^{n^2}, ratio q^{2n+1}.
  Real sum(0L, bits);
  Real term(1L, bits);
  Real ratio = q;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    term *= ratio;
    ratio *= q2;
    sum += term;
  }
  Real out = 1L + 2L * sum;
  finish(out, ctx);
  return out;
}

Real eval_R_product(const Real& q_in, const PrecisionCtx& ctx) {
  const double l = detail::neg_log10_nome(q_in);
  const double omq = std::max(one_minus(q_in), 1e-300);
  // |log of omitted factors| <= q^{5N+1} / (1-q)^2.
  const double need = (ctx.working_digits() + 2 + 2.0 * std::log10(1.0 / omq)) / l;
  const double n_real = std::ceil((need - 1.0) / 5.0);
  if (!(n_real < static_cast<double>(kMaxTerms))) throw ConvergenceError("Rogers product term cap exceeded");
  const auto n_max = std::max<std::int64_t>(1, static_cast<std::int64_t>(n_real));

  const mpfr_prec_t bits = ctx.working_bits();
  const Real q = q_in.with_bits(bits);
  const Real q5 = pow(q, 5);
  Real p1 = q;           // q^{5n-4}
  Real p2 = q * q;       // q^{5n-3}
  Real p3 = p2 * q;      // q^{5n-2}
  Real p4 = p3 * q;      // q^{5n-1}
  Real num(1L, bits);
  Real den(1L, bits);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    num *= (1L - p4) * (1L - p1);
    den *= (1L - p3) * (1L - p2);
    p1 *= q5;
    p2 *= q5;
    p3 *= q5;
    p4 *= q5;
  }
  Real out = root(q, 5) * num / den;
  finish(out, ctx);
  return out;
}

Real eval_R_product(const SurdArg& r, const PrecisionCtx& ctx) {
  return eval_R_product(nome(r, ctx), ctx);
}

Real eval_R_cf(const Real& q_in, const PrecisionCtx& ctx) {
  detail::neg_log10_nome(q_in);
  const mpfr_prec_t bits = ctx.working_bits();
  const Real q = q_in.with_bits(bits);
  const double tol_log10 = -(ctx.digits + ctx.guard / 2.0);

  std::vector<Real> powers;  // powers[k-1] = q^k
  powers.reserve(64);
  auto ensure_powers = [&](std::int64_t depth) {
    if (powers.empty()) powers.push_back(q);
    while (static_cast<std::int64_t>(powers.size()) < depth) powers.push_back(powers.back() * q);
  };
  auto tail_value = [&](std::int64_t depth) {
    ensure_powers(depth);
    Real x(1L, bits);  // unit tail
    for (std::int64_t k = depth; k >= 1; --k) {
      x = 1L + powers[static_cast<size_t>(k - 1)] / x;
    }
    return x;
  };

  std::int64_t depth = 8;
  Real prev = tail_value(depth);
  for (;;) {
    if (2 * depth > kMaxTerms) throw ConvergenceError("continued fraction depth cap exceeded");
    depth *= 2;
    Real cur = tail_value(depth);
    const Real diff = relative_difference(cur, prev);
    if (diff.is_zero() || diff.log10_abs() < tol_log10) {
      Real out = root(q, 5) / cur;
      finish(out, ctx);
      return out;
    }
    prev = std::move(cur);
  }
}

Real eval_R_cf(const SurdArg& r, const PrecisionCtx& ctx) { return eval_R_cf(nome(r, ctx), ctx); }

}  // namespace rrcf
