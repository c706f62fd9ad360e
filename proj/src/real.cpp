#include "rrcf/real.hpp"

#include "rrcf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <utility>

namespace rrcf {

namespace {

constexpr double kLog2of10 = 3.321928094887362;

int digits_for_bits(mpfr_prec_t bits) {
  return static_cast<int>(static_cast<double>(bits) / kLog2of10);
}

mpfr_prec_t max_bits(const Real& a, const Real& b) {
  return std::max(a.bits(), b.bits());
}

Real make_result(const Real& a, const Real& b) {
  Real r(max_bits(a, b));
  r.set_at_digits(std::min(a.at_digits(), b.at_digits()));
  return r;
}

Real make_result(const Real& a) {
  Real r(a.bits());
  r.set_at_digits(a.at_digits());
  return r;
}

}  // namespace

PrecisionCtx::PrecisionCtx(int digits_, int guard_) : digits(digits_), guard(guard_) {
  if (digits < 50) {
    throw PreconditionError("precision: digits must be >= 50 (got " + std::to_string(digits) + ")");
  }
  if (guard < 20) {
    throw PreconditionError("precision: guard must be >= 20 (got " + std::to_string(guard) + ")");
  }
}

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2of10)) + 8;
}

mpfr_prec_t PrecisionCtx::working_bits() const { return bits_for_digits(working_digits()); }

Real::Real() : Real(static_cast<mpfr_prec_t>(64)) {}

Real::Real(mpfr_prec_t bits) : at_digits_(digits_for_bits(bits)) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(const mpz_class& value, mpfr_prec_t bits) : Real(bits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, mpfr_prec_t bits) : Real(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, mpfr_prec_t bits) : Real(bits) {
  char* end = nullptr;
  mpfr_strtofr(value_, decimal.c_str(), &end, 10, MPFR_RNDN);
  if (decimal.empty() || end == decimal.c_str() || *end != '\0') {
    throw DomainError("not a decimal number: '" + decimal + "'");
  }
}

Real::Real(const Real& other) : at_digits_(other.at_digits_) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : at_digits_(other.at_digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
    at_digits_ = other.at_digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(at_digits_, other.at_digits_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_bits(mpfr_prec_t b) const {
  Real r(b);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  r.at_digits_ = std::min(at_digits_, digits_for_bits(b));
  return r;
}

double Real::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) / kLog2of10;
}

mpz_class Real::round_to_mpz() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDN);
  return z;
}

mpz_class Real::floor_to_mpz() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDD);
  return z;
}

std::string Real::to_sci(int sig) const {
  if (is_zero()) return "0";
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(std::max(sig, 1)), value_, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string out;
  if (digits[0] == '-') {
    out = "-";
    digits.erase(0, 1);
  }
  out += digits.substr(0, 1);
  if (digits.size() > 1) {
    out += "." + digits.substr(1);
  }
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

std::string Real::to_fixed(int frac) const {
  if (!is_finite()) return to_sci(5);
  // Round to `frac` decimals exactly via scaled integer.
  Real scaled = *this * pow10(frac, bits() + 64);
  mpz_class z = scaled.round_to_mpz();
  const bool neg = z < 0;
  if (neg) z = -z;
  std::string d = z.get_str();
  if (static_cast<int>(d.size()) <= frac) d.insert(0, static_cast<size_t>(frac) + 1 - d.size(), '0');
  std::string out = d.substr(0, d.size() - static_cast<size_t>(frac));
  if (frac > 0) out += "." + d.substr(d.size() - static_cast<size_t>(frac));
  return neg ? "-" + out : out;
}

Real& Real::operator+=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(value_, o.bits(), MPFR_RNDN);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  at_digits_ = std::min(at_digits_, o.at_digits_);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(value_, o.bits(), MPFR_RNDN);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  at_digits_ = std::min(at_digits_, o.at_digits_);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(value_, o.bits(), MPFR_RNDN);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  at_digits_ = std::min(at_digits_, o.at_digits_);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(value_, o.bits(), MPFR_RNDN);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  at_digits_ = std::min(at_digits_, o.at_digits_);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(value_, value_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(value_, value_, o, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& a) {
  Real r = make_result(a);
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r = make_result(a, b);
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r = make_result(a, b);
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r = make_result(a, b);
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r = make_result(a, b);
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r = make_result(a);
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r = make_result(a);
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r = make_result(a);
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r = make_result(a);
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator+(long a, const Real& b) { return b + a; }

Real operator-(long a, const Real& b) {
  Real r = make_result(b);
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(long a, const Real& b) {
  Real r = make_result(b);
  mpfr_si_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, long b) {
  return !mpfr_nan_p(a.value_) && mpfr_cmp_si(a.value_, b) == 0;
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.to_sci(std::min(x.at_digits(), 40));
}

Real abs(const Real& x) {
  Real r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  Real r(x);
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x);
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log of a non-positive number");
  Real r(x);
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real root(const Real& x, unsigned long k) {
  if (k == 0) throw DomainError("zeroth root");
  if (x.sign() < 0 && k % 2 == 0) throw DomainError("even root of a negative number");
  Real r(x);
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x);
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long p, unsigned long q) {
  if (q == 1) return pow(x, p);
  if (x.sign() <= 0) throw DomainError("fractional power of a non-positive number");
  return pow(root(x, q), p);
}

Real pow(const Real& x, const Real& y) {
  if (x.sign() <= 0) throw DomainError("real power of a non-positive number");
  Real r = x.bits() >= y.bits() ? Real(x) : x.with_bits(y.bits());
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  r.set_at_digits(std::min(x.at_digits(), y.at_digits()));
  return r;
}

Real pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real pow10(long e, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ui(r.get(), 10, MPFR_RNDN);
  mpfr_pow_si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

bool agrees(const Real& a, const Real& b, int guard) {
  const int d = std::min(a.at_digits(), b.at_digits()) - guard;
  const Real diff = abs(a - b);
  if (diff.is_zero()) return true;
  return diff.log10_abs() < -static_cast<double>(d);
}

Real relative_difference(const Real& a, const Real& b) {
  const Real scale = max(abs(a), abs(b));
  if (scale.is_zero()) return Real(scale.bits());
  return abs(a - b) / scale;
}

}  // namespace rrcf
