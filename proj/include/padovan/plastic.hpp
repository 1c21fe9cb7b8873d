#pragma once

// The plastic number ψ, the real root of x^3 = x + 1, in scaled-integer
// fixed point. Two independent routes: Cardano's radicals and Newton's method.

#include <string>

#include "padovan/sequence.hpp"

namespace padovan {

inline constexpr int kPlasticDigitCap = 10000;
inline constexpr int kGuardDigits = 10;

/// floor-ish ψ·10^scale from the Cardano radical expression (error of a few ulps).
BigInt plastic_cardano_scaled(int scale);
/// floor(ψ·10^scale), exact, by Newton iteration on x^3 - x - 1.
BigInt plastic_newton_scaled(int scale);

/// ψ rounded to `digits` significant digits, always with at least one
/// decimal ("1.3" for digits = 1, "1.324718" for digits = 7).
/// Both routes must agree; throws PrecisionCapExceeded above kPlasticDigitCap.
std::string plastic_number(int digits);
std::string plastic_number_cardano(int digits);
std::string plastic_number_newton(int digits);

/// A non-negative value as mantissa · 10^exponent with 1 <= mantissa < 10.
struct Scientific {
  double mantissa = 0.0;
  i64 exponent = 0;
  double value() const;
  std::string str(int precision = 6) const;
};

/// |T_{n+1}/T_n - ψ| with at least 30 significant digits of working precision
/// beyond the magnitude of the result. n >= 5.
Scientific ratio_error(i64 n);

}  // namespace padovan
