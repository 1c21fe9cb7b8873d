#include "padovan/plastic.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "padovan/errors.hpp"

namespace padovan {

namespace {

BigInt pow10(long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

BigInt isqrt_big(const BigInt& v) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// floor(cbrt(c)) for c >= 0 by integer Newton iteration on y^3 = c.
BigInt icbrt(const BigInt& c) {
  if (c < 2) return c;
  // Start above the root: 2^ceil(bits/3).
  BigInt y = 1;
  y <<= static_cast<mp_bitcnt_t>((mpz_sizeinbase(c.get_mpz_t(), 2) + 2) / 3);
  while (true) {
    BigInt next = (2 * y + c / (y * y)) / 3;
    if (next >= y) break;
    y = next;
  }
  while (y * y * y > c) --y;
  while ((y + 1) * (y + 1) * (y + 1) <= c) ++y;
  return y;
}

int decimals_for(int digits) { return digits > 1 ? digits - 1 : 1; }

std::string round_scaled(const BigInt& scaled, int decimals, int guard) {
  BigInt half = 5 * pow10(guard - 1);
  BigInt rounded = (scaled + half) / pow10(guard);
  std::string s = rounded.get_str();
  if (static_cast<int>(s.size()) <= decimals) s.insert(0, static_cast<size_t>(decimals) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<size_t>(decimals), 1, '.');
  return s;
}

void check_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be at least 1");
  if (digits > kPlasticDigitCap) {
    throw PrecisionCapExceeded("requested " + std::to_string(digits) + " digits; cap is " +
                               std::to_string(kPlasticDigitCap));
  }
}

}  // namespace

BigInt plastic_cardano_scaled(int scale) {
  const BigInt s = pow10(scale);
  // sqrt(23/3) and the two radicands 1/2 ± sqrt(23/3)/6, all scaled by s.
  const BigInt root = isqrt_big(23 * s * s / 3);
  const BigInt plus = s / 2 + root / 6;
  const BigInt minus = s / 2 - root / 6;
  return icbrt(plus * s * s) + icbrt(minus * s * s);
}

BigInt plastic_newton_scaled(int scale) {
  const BigInt s = pow10(scale);
  const BigInt s2 = s * s;
  const BigInt s3 = s2 * s;
  auto f = [&](const BigInt& y) -> BigInt { return y * y * y - y * s2 - s3; };

  BigInt y;
  if (scale >= 16) {
    y = BigInt(1324717957244746L) * pow10(scale - 15);
  } else {
    y = 2 * s;
  }
  for (int i = 0; i < 200; ++i) {
    BigInt step = f(y) / (3 * y * y - s2);
    if (step == 0) break;
    y -= step;
  }
  while (f(y) > 0) --y;
  while (f(y + 1) <= 0) ++y;
  return y;
}

std::string plastic_number_cardano(int digits) {
  check_digits(digits);
  const int decimals = decimals_for(digits);
  return round_scaled(plastic_cardano_scaled(decimals + kGuardDigits), decimals, kGuardDigits);
}

std::string plastic_number_newton(int digits) {
  check_digits(digits);
  const int decimals = decimals_for(digits);
  return round_scaled(plastic_newton_scaled(decimals + kGuardDigits), decimals, kGuardDigits);
}

std::string plastic_number(int digits) {
  check_digits(digits);
  const int decimals = decimals_for(digits);
  for (int guard = kGuardDigits; guard <= 4 * kGuardDigits; guard *= 2) {
    std::string a = round_scaled(plastic_cardano_scaled(decimals + guard), decimals, guard);
    std::string b = round_scaled(plastic_newton_scaled(decimals + guard), decimals, guard);
    if (a == b) return a;
  }
  throw std::logic_error("Cardano and Newton evaluations of the plastic number disagree");
}

double Scientific::value() const { return mantissa * std::pow(10.0, static_cast<double>(exponent)); }

std::string Scientific::str(int precision) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*fe%lld", precision, mantissa, static_cast<long long>(exponent));
  return buf;
}

Scientific ratio_error(i64 n) {
  if (n < 5) throw IndexOutOfRange("ratio_error needs n >= 5");
  // |T_{n+1}/T_n - ψ| shrinks like 10^(-0.183 n); pad the scale to keep 30 digits.
  const int scale = 40 + static_cast<int>(std::ceil(0.2 * static_cast<double>(n)));
  PadovanTable table(n + 1);
  const BigInt s = pow10(scale);
  BigInt ratio = table[n + 1] * s / table[n];
  BigInt diff = abs(ratio - plastic_newton_scaled(scale));
  Scientific out;
  if (diff == 0) return out;
  std::string digits = diff.get_str();
  out.exponent = static_cast<i64>(digits.size()) - 1 - scale;
  std::string lead = digits.substr(0, 17);
  out.mantissa = std::stod(lead) / std::pow(10.0, static_cast<double>(lead.size() - 1));
  return out;
}

}  // namespace padovan
