#pragma once

#include "rrcf/real.hpp"
#include "rrcf/verify.hpp"

namespace rrcf::test {

/// True when a and b agree to `digits` significant digits.
inline bool close(const Real& a, const Real& b, int digits) {
  return relative_residual(a, b) < pow10(-digits, 64);
}

inline Real dec(const char* text, int digits) { return Real(std::string(text), bits_for_digits(digits + 20)); }

}  // namespace rrcf::test
