#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "padovan/errors.hpp"
#include "padovan/plastic.hpp"

using namespace padovan;

namespace {

BigInt pow10(int k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

// f(y) = y^3 - y S^2 - S^3 for the scaled value y = ψ·S.
BigInt scaled_cubic(const BigInt& y, const BigInt& s) { return y * y * y - y * s * s - s * s * s; }

}  // namespace

TEST_CASE("decimal expansions") {
  CHECK(plastic_number(7) == "1.324718");
  CHECK(plastic_number(1) == "1.3");
  CHECK(plastic_number(2) == "1.3");
  CHECK(plastic_number(3) == "1.32");
  // Frozen from an independent 120-digit root finder.
  CHECK(plastic_number(50) == "1.3247179572447460259609088544780973407344040569017");
  CHECK_THROWS_AS(plastic_number(kPlasticDigitCap + 1), PrecisionCapExceeded);
  CHECK_THROWS_AS(plastic_number(0), std::invalid_argument);
}

TEST_CASE("the two routes agree") {
  for (int d : {1, 5, 17, 100, 1000}) {
    CHECK(plastic_number_cardano(d) == plastic_number_newton(d));
  }
  for (int scale : {20, 100, 1000}) {
    const BigInt n = plastic_newton_scaled(scale);
    const BigInt c = plastic_cardano_scaled(scale);
    BigInt diff = abs(n - c);
    CHECK(diff <= 10);
  }
}

TEST_CASE("Newton value is the exact floor") {
  for (int scale : {1, 10, 60, 500}) {
    const BigInt s = pow10(scale);
    const BigInt y = plastic_newton_scaled(scale);
    CHECK(scaled_cubic(y, s) <= 0);
    CHECK(scaled_cubic(y + 1, s) > 0);
    CHECK(y > s);
    CHECK(y < 2 * s);
  }
}

TEST_CASE("ratio error") {
  CHECK(ratio_error(5).value() == doctest::Approx(0.1752820428).epsilon(1e-8));
  CHECK(ratio_error(16).value() == doctest::Approx(0.001812655).epsilon(1e-6));
  const Scientific e200 = ratio_error(200);
  CHECK(e200.exponent == -37);
  CHECK(e200.mantissa == doctest::Approx(4.926989938).epsilon(1e-8));
  CHECK(e200.value() < 1e-10);
  CHECK(ratio_error(50).value() > ratio_error(100).value());
  CHECK(ratio_error(100).value() > e200.value());
  CHECK_THROWS_AS(ratio_error(4), IndexOutOfRange);
}
