#pragma once

// Numeric certification: residuals of identities at two precision levels,
// verdicts, and the end-to-end reproduction pipelines.

#include "rrcf/poly.hpp"
#include "rrcf/qseries.hpp"
#include "rrcf/real.hpp"
#include "rrcf/recognition.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rrcf {

enum class Verdict { Certified, Refuted, Inconclusive, NumericallySupported };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct Certificate {
  std::string claim_id;
  int digits_lo = 0;
  int digits_hi = 0;
  int guard = 0;
  Real residual_lo;
  Real residual_hi;
  Verdict verdict = Verdict::Inconclusive;
  nlohmann::json artifacts = nlohmann::json::array();
  double wall_time_ms = 0;

  bool passed() const { return verdict == Verdict::Certified || verdict == Verdict::NumericallySupported; }

  /// {claim_id, digits_lo, digits_hi, residual_lo, residual_hi, verdict, artifacts, wall_time_ms}
  nlohmann::json to_json() const;
};

/// Named relative residuals of one claim at one precision.
using Residuals = std::vector<std::pair<std::string, Real>>;
using ResidualFn = std::function<Residuals(const PrecisionCtx&)>;

/// Evaluates the residuals at ctx and at doubled digits and assigns a verdict:
///   certified     residual_lo < 10^-(lo - 2 guard), residual_hi < 10^-(hi - 2 guard),
///                 and residual_hi <= residual_lo * 10^-(hi - lo - guard)
///   refuted       both residuals > 10^-guard
///   inconclusive  otherwise, after one automatic doubling of both levels.
/// Residuals below 10^-(digits + guard) are clamped to that floor. The claim
/// residual is the largest named component.
Certificate certify(const std::string& claim_id, const ResidualFn& fn, const PrecisionCtx& ctx);

/// |a - b| / max(|a|, |b|, 10^-(bits)).
Real relative_residual(const Real& a, const Real& b);

/// A value known exactly (decimal input, say) promoted to any precision.
RealSource exact_value(const Real& x);

/// 1/R - 1 - R = f(-q^{1/5}) / (q^{1/5} f(-q^5)) and
/// 1/R^5 - 11 - R^5 = f^6(-q) / (q f^6(-q^5)).
Certificate check_companion(const RealSource& q, const PrecisionCtx& ctx, const std::string& claim_id = "companion");
Certificate check_companion(const Real& q, const PrecisionCtx& ctx);

/// The q^2 and q^3 modular relations and the R(q)^5 in terms of R(q^5) formula.
Certificate check_recursions(const RealSource& q, const PrecisionCtx& ctx,
                             const std::string& claim_id = "recursions");
Certificate check_recursions(const Real& q, const PrecisionCtx& ctx);

struct Order25Instance {
  Real alpha;
  Real beta;
  Real P;
  Real Q;

  /// Validates alpha, beta in (0, 1/2) and builds P, Q.
  static Order25Instance make(const Real& alpha, const Real& beta);
  /// |Q + 1/Q + 2 (P - 1/P)| relative to the magnitudes of both sides.
  Real residual() const;
};

/// Order-25 relation Q + 1/Q = -2 (P - 1/P) for the given moduli.
Certificate check_order25(const RealSource& alpha, const RealSource& beta, const PrecisionCtx& ctx,
                          const std::string& claim_id = "order25");

/// (r^20 - 228 r^15 + 494 r^10 + 228 r^5 + 1)^3 l^2 (1 - l)^2
///   = 256 r^5 (r^10 + 11 r^5 - 1)^5 (l - l^2 - 1)^3, with l = lambda(tau).
Real icosahedral_residual(const Real& r, const Real& lam);
Certificate check_icosahedral(const RealSource& rval, const RealSource& lam, const PrecisionCtx& ctx,
                              const std::string& claim_id = "icosahedral");

/// R^5 = sqrt(a^2 + 1) - a with a = (5 sqrt(5) s + 11) / 2.
Real yi_map(const Real& s);
/// sqrt(a^2 + 1) - a without cancellation for large positive a.
Real r5_from_a(const Real& a);

// ---------------------------------------------------------------------------
// Reproduction pipelines

enum class TheoremId { Thm2_26_5, Thm3_38_5, Lemma1, Thm4_48_5, Conj_16_15 };

std::string to_string(TheoremId id);
TheoremId theorem_id_from_string(const std::string& s);
std::vector<TheoremId> all_theorems();

struct TheoremBundle {
  TheoremId id;
  std::vector<Certificate> stages;
  Verdict verdict = Verdict::Inconclusive;
  /// Empty when every stage passed.
  std::string failing_stage;
  /// |R^5 (product) - (sqrt(a^2+1) - a)| at the requested digits, when the
  /// pipeline has a final evaluation.
  std::optional<Real> final_residual;

  nlohmann::json to_json() const;
};

TheoremBundle reproduce_theorem(TheoremId id, const PrecisionCtx& ctx);

/// Data behind a pipeline, shared with tests and the command-line tool.
struct TheoremData {
  TheoremId id;
  SurdArg r{1};               ///< q = exp(-pi sqrt(r)) for R
  std::int64_t n_order25 = 0; ///< n in the order-25 relation (0 if absent)
  SurdArg tau_r{1};           ///< tau = i sqrt(tau_r) in the icosahedral equation
  std::vector<std::string> lambda_poly;  ///< printed minimal polynomial of lambda*(r), descending
  int lambda_root_index = 0;             ///< ascending real-root index of lambda*(r)
  std::string a_value;                   ///< printed a, R^5 = sqrt(a^2+1) - a
  std::vector<long> a_basis;
  SurdArg yi_n{1};                       ///< Yi's n with 4n/5 = r
};

const TheoremData& theorem_data(TheoremId id);

/// Minimal polynomial (descending) of the order-25 modulus alpha at n = 240 and
/// the index of alpha among its real roots.
const std::vector<std::string>& lemma1_polynomial();
inline constexpr int kLemma1RootIndex = 1;

/// alpha from the G_15 -> G_60 -> G_240 chain.
Real alpha_240_from_chain(const PrecisionCtx& ctx);

/// (alpha, beta) for the order-25 relation at n in {130, 190, 240}: alpha from
/// the g_n closed form (the degree-16 root for 240), beta from the designated
/// root of the printed lambda* polynomial.
std::pair<RealSource, RealSource> order25_sources(std::int64_t n);

/// Digits needed to recover a polynomial with the default height cap.
int recognition_digits_for(const IntPoly& p, int guard);

}  // namespace rrcf
