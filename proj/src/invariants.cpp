#include "rrcf/invariants.hpp"

#include "rrcf/errors.hpp"

#include <cmath>

namespace rrcf {

std::string to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::LambdaStar:
      return "lambda_star";
    case InvariantKind::Lambda:
      return "lambda";
    case InvariantKind::KleinJ:
      return "kleinJ";
    case InvariantKind::G:
      return "G";
    case InvariantKind::g:
      return "g";
  }
  return "?";
}

InvariantKind invariant_kind_from_string(const std::string& name) {
  if (name == "lambda_star" || name == "lambda-star") return InvariantKind::LambdaStar;
  if (name == "lambda") return InvariantKind::Lambda;
  if (name == "kleinJ" || name == "J") return InvariantKind::KleinJ;
  if (name == "G") return InvariantKind::G;
  if (name == "g") return InvariantKind::g;
  throw DomainError("unknown invariant '" + name + "'");
}

Real lambda_star(const SurdArg& r, const PrecisionCtx& ctx) {
  const Real q = nome(r, ctx);
  const Real t2 = eval_theta2(q, ctx);
  const Real t3 = eval_theta3(q, ctx);
  Real out = (t2 * t2) / (t3 * t3);
  out.set_at_digits(ctx.digits);
  return out;
}

Real lambda_of_tau(const SurdArg& r, const PrecisionCtx& ctx) {
  const Real ls = lambda_star(r, ctx);
  return ls * ls;
}

Real klein_J_from_lambda(const Real& l) {
  if (!(l > 0L) || !(l < 1L)) {
    throw DomainError("klein_J: lambda must lie strictly between 0 and 1");
  }
  const Real one_minus = 1L - l;
  const Real poly = 1L - l + l * l;
  return 4L * pow(poly, 3) / (27L * l * l * one_minus * one_minus);
}

Real klein_J(const SurdArg& r, const PrecisionCtx& ctx) {
  return klein_J_from_lambda(lambda_of_tau(r, ctx));
}

namespace {

// 2^{-1/4} e^{pi sqrt(n)/24} prod_{j>=0} (1 + sign q^{2j+1}).
Real class_invariant(const SurdArg& n, int sign, const PrecisionCtx& ctx) {
  const mpfr_prec_t bits = ctx.working_bits();
  const Real q = nome(n, ctx);
  const double l = detail::neg_log10_nome(q);
  const double omq = std::max(1.0 - q.to_double(), 1e-300);
  // |log of omitted factors| <= q^{2J+1} / (1-q)^2.
  const double need = (ctx.working_digits() + 2 + 2.0 * std::log10(1.0 / omq)) / l;
  const double j_real = std::ceil((need - 1.0) / 2.0);
  if (!(j_real < static_cast<double>(kMaxTerms))) throw ConvergenceError("class invariant term cap exceeded");
  const auto j_max = std::max<std::int64_t>(1, static_cast<std::int64_t>(j_real));

  const Real q2 = q * q;
  Real power = q;
  Real prod(1L, bits);
  for (std::int64_t j = 0; j < j_max; ++j) {
    if (sign > 0) {
      prod *= 1L + power;
    } else {
      prod *= 1L - power;
    }
    power *= q2;
  }
  // e^{pi sqrt(n)/24} = q^{-1/24}
  Real out = prod / (root(q, 24) * root(Real(2L, bits), 4));
  out.set_at_digits(ctx.digits);
  return out;
}

Real two_pow(long p, unsigned long q, mpfr_prec_t bits) { return pow(Real(2L, bits), p, q); }

}  // namespace

Real ramanujan_G(const SurdArg& n, const PrecisionCtx& ctx) { return class_invariant(n, +1, ctx); }

Real ramanujan_g(const SurdArg& n, const PrecisionCtx& ctx) { return class_invariant(n, -1, ctx); }

InvariantValue evaluate_invariant(InvariantKind kind, const SurdArg& arg, const PrecisionCtx& ctx) {
  switch (kind) {
    case InvariantKind::LambdaStar:
      return {kind, arg, lambda_star(arg, ctx)};
    case InvariantKind::Lambda:
      return {kind, arg, lambda_of_tau(arg, ctx)};
    case InvariantKind::KleinJ:
      return {kind, arg, klein_J(arg, ctx)};
    case InvariantKind::G:
      return {kind, arg, ramanujan_G(arg, ctx)};
    case InvariantKind::g:
      return {kind, arg, ramanujan_g(arg, ctx)};
  }
  throw DomainError("unknown invariant kind");
}

Real lambda_star_from_G(const Real& G) {
  if (G < 1L) throw DomainError("lambda_star_from_G requires G_n >= 1");
  // (1/2)(sqrt(1+e) - sqrt(1-e)) = e / (sqrt(1+e) + sqrt(1-e)) with e = G^-12.
  const Real e = pow(G, -12);
  return e / (sqrt(1L + e) + sqrt(1L - e));
}

Real lambda_star_from_g(const Real& g) {
  if (!(g > 0L)) throw DomainError("lambda_star_from_g requires g_n > 0");
  // g^6 (sqrt(g^12 + g^-12) - g^6) = sqrt(u^2 + 1) - u with u = g^12.
  const Real u = pow(g, 12);
  return 1L / (sqrt(u * u + 1L) + u);
}

Real G_from_g(const Real& g) {
  if (!(g > 0L)) throw DomainError("G_from_g requires g_n > 0");
  const Real g8 = pow(g, 8);
  const Real inner = (g8 + sqrt(g8 * (1L + pow(g, 24))) / g8) / 2L;
  return root(inner, 8);
}

Real g_of_4n(const Real& gn, const Real& Gn) { return two_pow(1, 4, gn.bits()) * gn * Gn; }

Real G_from_lambda_star(const Real& l) {
  if (!(l > 0L) || !(l < 1L)) throw DomainError("lambda* must lie in (0,1)");
  const Real l2 = l * l;
  return 1L / (two_pow(1, 12, l.bits()) * root(l2 - l2 * l2, 24));
}

Real g_from_lambda_star(const Real& l) {
  if (!(l > 0L) || !(l < 1L)) throw DomainError("lambda* must lie in (0,1)");
  return root((1L / l - l) / 2L, 12);
}

Real order25_modulus(const Real& G) {
  if (G < 1L) throw DomainError("order-25 modulus requires G >= 1");
  // (1 - sqrt(1 - e))/2 = e / (2 (1 + sqrt(1 - e))), e = G^-24.
  const Real e = pow(G, -24);
  return e / (2L * (1L + sqrt(1L - e)));
}

Real quadrupling_constant(const Real& Gn) {
  if (Gn < 1L) throw DomainError("quadrupling constant requires G_n >= 1");
  const Real x = pow(Gn, 8);
  return 4L * x * (x + sqrt(x * x - 1L / x));
}

Real G_of_4n_from_constant(const Real& C) {
  if (!(C > 0L)) throw DomainError("quadrupling constant must be positive");
  const Real inner = C + sqrt(pow(C, 3) + 8L) / sqrt(C);
  return root(inner, 8) / two_pow(1, 4, C.bits());
}

Real G_of_4n(const Real& Gn) { return G_of_4n_from_constant(quadrupling_constant(Gn)); }

Real lambda_star_quarter(const Real& L) {
  if (!(L > 0L) || !(L < 1L)) throw DomainError("lambda* must lie in (0,1)");
  const Real d = 1L / L - L;
  const Real c = d * d / 4L;
  // 2 (sqrt(1 + c) - 1) / c = 2 / (sqrt(1 + c) + 1)
  return sqrt(2L / (sqrt(1L + c) + 1L));
}

Real lambda_star_quarter_landen(const Real& L) {
  if (!(L > 0L) || !(L < 1L)) throw DomainError("lambda* must lie in (0,1)");
  return 2L * sqrt(L) / (1L + L);
}

}  // namespace rrcf
