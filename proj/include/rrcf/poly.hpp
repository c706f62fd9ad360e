#pragma once

// Integer polynomials: exact real-root isolation (Sturm), root refinement,
// complex roots (Aberth-Ehrlich) and an irreducibility test over Q.

#include "rrcf/real.hpp"

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace rrcf {

class IntPoly {
 public:
  IntPoly() = default;
  /// Coefficients in ascending order of degree; trailing zeros are trimmed.
  explicit IntPoly(std::vector<mpz_class> ascending);
  static IntPoly from_descending(const std::vector<std::string>& coeffs);
  static IntPoly from_ascending(const std::vector<std::string>& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
  const mpz_class& leading() const { return coeffs_.back(); }

  /// Largest absolute coefficient.
  mpz_class height() const;
  mpz_class content() const;
  /// Content removed, positive leading coefficient.
  IntPoly primitive() const;
  IntPoly derivative() const;
  IntPoly scaled(const mpz_class& k) const;

  Real eval(const Real& x) const;
  /// sum |c_i x^i|, the natural scale for |p(x)|.
  Real eval_abs_terms(const Real& x) const;
  mpq_class eval(const mpq_class& x) const;

  /// Descending, e.g. "x^8+14999688*x^7-280560666*x^4+1".
  std::string to_string() const;
  std::vector<std::string> descending_strings() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Exact isolating intervals (lo, hi] for the distinct real roots, ascending.
/// A degenerate interval lo == hi marks an exact rational root.
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const IntPoly& p);

/// Number of distinct real roots.
int count_real_roots(const IntPoly& p);

/// Refines the unique root in an isolating interval to `bits` of precision.
Real refine_root(const IntPoly& p, const std::pair<mpq_class, mpq_class>& interval, mpfr_prec_t bits);

/// All distinct real roots, ascending, at `bits` precision.
std::vector<Real> real_roots(const IntPoly& p, mpfr_prec_t bits);

struct ComplexRoot {
  Real re;
  Real im;
};

/// All complex roots (with multiplicity) by Aberth-Ehrlich iteration.
std::vector<ComplexRoot> complex_roots(const IntPoly& p, mpfr_prec_t bits);

/// True when p (degree >= 1) has no factor over Q of degree in [1, deg/2].
/// Candidate factors come from subsets of the numeric roots; every candidate
/// is confirmed by exact division before p is declared reducible.
bool is_irreducible(const IntPoly& p);

/// Exact: does d divide p over Q?
bool divides(const IntPoly& d, const IntPoly& p);

}  // namespace rrcf
