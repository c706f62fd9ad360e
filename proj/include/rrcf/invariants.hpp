#pragma once

// Modular-function layer: the singular modulus lambda*, lambda(tau), Klein's
// J, Ramanujan's class invariants G_n and g_n, and the algebraic relations
// that convert between them.

#include "rrcf/qseries.hpp"
#include "rrcf/real.hpp"

#include <string>

namespace rrcf {

enum class InvariantKind { LambdaStar, Lambda, KleinJ, G, g };

std::string to_string(InvariantKind kind);
InvariantKind invariant_kind_from_string(const std::string& name);

struct InvariantValue {
  InvariantKind kind;
  SurdArg arg;
  Real value;
};

/// lambda*(r) = theta_2^2 / theta_3^2 at q = exp(-pi sqrt(r)).
Real lambda_star(const SurdArg& r, const PrecisionCtx& ctx);
/// lambda(i sqrt(r)) = theta_2^4 / theta_3^4 at q = exp(-pi sqrt(r)).
Real lambda_of_tau(const SurdArg& r, const PrecisionCtx& ctx);
/// Klein's absolute invariant J(i sqrt(r)) (normalised so J(i) = 1).
Real klein_J(const SurdArg& r, const PrecisionCtx& ctx);
/// J as a function of lambda: (4/27)(1 - l + l^2)^3 / (l^2 (1 - l)^2).
Real klein_J_from_lambda(const Real& lambda);

/// G_n = 2^{-1/4} e^{pi sqrt(n)/24} prod_{j>=0} (1 + e^{-(2j+1) pi sqrt(n)}).
Real ramanujan_G(const SurdArg& n, const PrecisionCtx& ctx);
/// g_n = 2^{-1/4} e^{pi sqrt(n)/24} prod_{j>=0} (1 - e^{-(2j+1) pi sqrt(n)}).
Real ramanujan_g(const SurdArg& n, const PrecisionCtx& ctx);

InvariantValue evaluate_invariant(InvariantKind kind, const SurdArg& arg, const PrecisionCtx& ctx);

/// (1/2)(sqrt(1 + G^-12) - sqrt(1 - G^-12)); requires G >= 1.
Real lambda_star_from_G(const Real& G);
/// g^6 (sqrt(g^12 + g^-12) - g^6); requires g > 0.
Real lambda_star_from_g(const Real& g);
/// ((1/2)(g^8 + sqrt(g^8 (1 + g^24)) / g^8))^{1/8}.
Real G_from_g(const Real& g);
/// g_{4n} = 2^{1/4} g_n G_n.
Real g_of_4n(const Real& gn, const Real& Gn);

/// Inverse of lambda_star_from_G: G = 2^{-1/12} (l^2 - l^4)^{-1/24}.
Real G_from_lambda_star(const Real& lambda_star);
/// Inverse of lambda_star_from_g: g^12 = (1/l - l) / 2.
Real g_from_lambda_star(const Real& lambda_star);

/// The order-25 modulus (1/2)(1 - sqrt(G^24 - 1)/G^12), taken in (0, 1/2).
Real order25_modulus(const Real& G);

/// C = 4 G^8 (G^8 + sqrt(G^16 - G^-8)) built from G_n; equals 2 g_{4n}^8.
Real quadrupling_constant(const Real& Gn);
/// G_{4n} = (C + sqrt(C^3 + 8)/sqrt(C))^{1/8} / 2^{1/4}.
Real G_of_4n_from_constant(const Real& C);
/// Convenience: G_{4n} from G_n.
Real G_of_4n(const Real& Gn);

/// lambda*(r/4) from L = lambda*(r) through g_{4n} = 2^{1/4} g_n G_n:
/// with c = (1/L - L)^2 / 4, lambda*(r/4)^2 = 2 (sqrt(1 + c) - 1) / c.
Real lambda_star_quarter(const Real& L);
/// lambda*(r/4) from lambda*(r) by the Landen transformation: 2 sqrt(L) / (1 + L).
Real lambda_star_quarter_landen(const Real& L);

}  // namespace rrcf
