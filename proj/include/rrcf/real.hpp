#pragma once

// Arbitrary-precision real numbers on top of MPFR.
//
// Every Real owns its own mantissa precision. Binary operations produce a
// result at the larger of the two operand precisions, and the reported
// precision (at_digits) is the smaller of the two.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace rrcf {

/// Working precision of an evaluation.
///
/// Operations compute internally at digits + guard decimal digits and report
/// results at digits.
struct PrecisionCtx {
  int digits = 300;
  int guard = 50;

  PrecisionCtx() = default;
  PrecisionCtx(int digits_, int guard_ = 50);

  int working_digits() const { return digits + guard; }
  mpfr_prec_t working_bits() const;
  /// Same guard, doubled digits.
  PrecisionCtx doubled() const { return PrecisionCtx(2 * digits, guard); }
  PrecisionCtx with_digits(int d) const { return PrecisionCtx(d, guard); }

  friend bool operator==(const PrecisionCtx&, const PrecisionCtx&) = default;
};

mpfr_prec_t bits_for_digits(int digits);

class Real {
 public:
  Real();
  explicit Real(mpfr_prec_t bits);
  Real(long value, mpfr_prec_t bits);
  Real(const mpz_class& value, mpfr_prec_t bits);
  Real(const mpq_class& value, mpfr_prec_t bits);
  /// Parses a decimal literal ("0.25", "1e-3", "-17").
  Real(const std::string& decimal, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  int at_digits() const { return at_digits_; }
  void set_at_digits(int d) { at_digits_ = d; }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  /// Copy of this value rounded (or exactly extended) to `bits`.
  Real with_bits(mpfr_prec_t bits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Approximate log10|x|; -inf for zero.
  double log10_abs() const;
  /// Nearest integer.
  mpz_class round_to_mpz() const;
  mpz_class floor_to_mpz() const;

  /// Scientific notation with `sig` significant digits, e.g. "1.2345e-7".
  std::string to_sci(int sig) const;
  /// Fixed notation with `frac` digits after the point (no exponent).
  std::string to_fixed(int frac) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator-(const Real& a);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend bool operator==(const Real& a, long b);

 private:
  mpfr_t value_;
  int at_digits_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
/// k-th real root; requires x >= 0 for even k.
Real root(const Real& x, unsigned long k);
Real pow(const Real& x, long n);
/// x^(p/q), principal real branch; x > 0 unless q == 1.
Real pow(const Real& x, long p, unsigned long q);
Real pow(const Real& x, const Real& y);
Real pi(mpfr_prec_t bits);
/// 10^e at the given precision.
Real pow10(long e, mpfr_prec_t bits);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// True when |a - b| < 10^-(min(at_digits) - guard).
bool agrees(const Real& a, const Real& b, int guard);

/// |a - b| / max(|a|, |b|); zero when both vanish.
Real relative_difference(const Real& a, const Real& b);

}  // namespace rrcf
