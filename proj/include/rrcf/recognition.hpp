#pragma once

// Algebraic recognition of high-precision reals: minimal polynomials by
// lattice reduction, coefficients over square-root bases, and real-root
// selection.

#include "rrcf/poly.hpp"
#include "rrcf/qseries.hpp"
#include "rrcf/radical.hpp"
#include "rrcf/real.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rrcf {

/// Recomputes a value at a requested precision. Recognition uses it for the
/// doubled-precision re-check.
using RealSource = std::function<Real(const PrecisionCtx&)>;

enum class Confidence { Provisional, EscalationStable };
std::string to_string(Confidence c);

struct RootSelection {
  int root_index = 0;  ///< 1-based, ascending real roots
  Real refined;
  int real_root_count = 0;
  /// Index under a CAS convention that lists real roots first in ascending
  /// order; equal to root_index.
  int cas_index = 0;
};

/// Nearest real root of `p` to `target`, refined to the ctx working precision.
/// Throws MismatchError when no real root lies within 10^-guard of target.
RootSelection select_root(const IntPoly& p, const Real& target, const PrecisionCtx& ctx);

struct AlgebraicCandidate {
  IntPoly poly;
  int root_index = 0;
  int real_root_count = 0;
  int cas_index = 0;
  Real witness;
  Confidence confidence = Confidence::Provisional;

  /// {coeffs (descending strings), root_index, witness_digits, confidence}.
  nlohmann::json to_json() const;
};

/// Lowest-degree integer polynomial (degree <= degree_max) vanishing at x.
/// height_digits <= 0 selects the default cap (digits - 4 guard)/(d + 1) per
/// degree. Returns nullopt when nothing is found within the bounds.
std::optional<AlgebraicCandidate> recognize_minpoly(const RealSource& x, int degree_max, int height_digits,
                                                    const PrecisionCtx& ctx);
/// Single-precision variant; results are marked provisional.
std::optional<AlgebraicCandidate> recognize_minpoly(const Real& x, int degree_max, int height_digits,
                                                    const PrecisionCtx& ctx);

/// sum_i c_i sqrt(b_i) with rational c_i over distinct squarefree b_i.
struct FieldElement {
  std::vector<long> basis;
  std::vector<mpq_class> coeffs;

  Real evaluate(mpfr_prec_t bits) const;
  /// e.g. "2118+1885/2*sqrt(5)+4875/4*sqrt(3)+2175/4*sqrt(15)"; parseable as a RadicalExpr.
  std::string to_string() const;
  RadicalExpr to_expr() const;
  nlohmann::json to_json() const;
  static FieldElement from_json(const nlohmann::json& j);
  /// Parses "u+v*sqrt(b)+..." with integer or p/q coefficients.
  static FieldElement parse(const std::string& text, std::vector<long> basis);

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Rationals c_i with x = sum c_i sqrt(b_i). The basis must contain 1 and
/// distinct squarefree positive integers; denominators are capped by denom_cap.
std::optional<FieldElement> recognize_in_field(const RealSource& x, const std::vector<long>& basis,
                                               long denom_cap, const PrecisionCtx& ctx);
std::optional<FieldElement> recognize_in_field(const Real& x, const std::vector<long>& basis, long denom_cap,
                                               const PrecisionCtx& ctx);

/// s_n = f^6(-q) / (5 sqrt(5) q f^6(-q^5)) at q = exp(-2 pi sqrt(n/5)).
Real yi_s(const SurdArg& n, const PrecisionCtx& ctx);
/// a = (5 sqrt(5) s + 11) / 2.
Real yi_a_from_s(const Real& s);

struct YiResult {
  SurdArg n{1};
  Real s;
  Real a;
  std::optional<FieldElement> s_field;
  std::optional<FieldElement> a_field;
  std::optional<AlgebraicCandidate> s_minpoly;
  /// s written as u + v sqrt(5) + k sqrt(m (X + Y sqrt(5))) when s lies in a
  /// biquadratic field containing sqrt(5).
  std::optional<std::string> closed_form;

  bool recognized() const { return s_field.has_value() || s_minpoly.has_value(); }
  nlohmann::json to_json() const;
};

/// Computes s_n and tries to recognise it (and a) over the biquadratic fields
/// Q(sqrt 5, sqrt p) for small primes p and the primes dividing n, and by
/// minimal polynomial up to degree 8. Absence of a result is not an error.
YiResult yi_recognize(const SurdArg& n, const PrecisionCtx& ctx);

/// Nested rendering of a field element over {1, 5, p, 5p}.
std::optional<std::string> nested_sqrt5_form(const FieldElement& s);

}  // namespace rrcf
