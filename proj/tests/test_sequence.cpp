#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "padovan/errors.hpp"
#include "padovan/sequence.hpp"

using namespace padovan;

namespace {

const RecurrenceSpec kPad = RecurrenceSpec::padovan();

// T_{-3} .. T_{20}, OEIS A000931 with the backward extension.
const std::vector<long> kTable = {0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7,
                                  9, 12, 16, 21, 28, 37, 49, 65, 86, 114, 151};

// Power-series division of num by (1 - X^2 - X^3), coefficient by coefficient.
std::vector<BigInt> series_oracle(const std::array<long, 3>& num, int n) {
  std::vector<BigInt> q(n);
  for (int k = 0; k < n; ++k) {
    BigInt c = k < 3 ? num[k] : 0;
    if (k >= 2) c += q[k - 2];
    if (k >= 3) c += q[k - 3];
    q[k] = c;
  }
  return q;
}

}  // namespace

TEST_CASE("table of initial values") {
  for (i64 n = -3; n <= 20; ++n) CHECK(term(kPad, n) == kTable[n + 3]);
  CHECK(term(kPad, 10) == 9);
  CHECK(term(kPad, 30) == 2513);
  CHECK(term(RecurrenceSpec::perrin(), 5) == 5);
  CHECK(term(RecurrenceSpec::perrin(), 0) == 3);
}

TEST_CASE("index bounds and backward steps") {
  CHECK_THROWS_AS(term(kPad, -4), IndexOutOfRange);
  RecurrenceSpec bad{{0, 1, 2}, {0, 1, 1}, "custom"};
  CHECK_THROWS_AS(term(bad, -1), BackwardUndefined);
  CHECK(term(bad, 4) == 3);
  // Tribonacci: x_{-1} = x_2 - x_1 - x_0.
  CHECK(term(RecurrenceSpec::tribonacci(), -1) == 0);
  CHECK(term(RecurrenceSpec::tribonacci(), 6) == 13);
  CHECK_THROWS_AS(RecurrenceSpec::preset("fibonacci"), std::invalid_argument);
}

TEST_CASE("matrix power agrees with iteration") {
  for (const auto& spec : {RecurrenceSpec::padovan(), RecurrenceSpec::perrin(), RecurrenceSpec::tribonacci()}) {
    for (i64 n = 0; n <= 300; ++n) REQUIRE(term_fast(spec, n) == term(spec, n));
  }
}

TEST_CASE("term_mod examples") {
  CHECK(term_mod(kPad, 13, 7) == 0);
  CHECK(term_mod(kPad, 19, 3) == 0);
  CHECK(term_mod(kPad, 0, 5) == 0);
  CHECK_THROWS_AS(term_mod(kPad, 100, 1), std::invalid_argument);
}

TEST_CASE("term_mod agrees with exact values and with iteration") {
  std::mt19937_64 rng(11);
  PadovanTable table(10000);
  for (int i = 0; i < 1000; ++i) {
    const i64 n = static_cast<i64>(rng() % 10001);
    const u64 m = 2 + rng() % 999'999'999ULL;
    const BigInt r = table[n] % BigInt(static_cast<unsigned long>(m));
    REQUIRE(term_mod(kPad, n, m) == r.get_ui());
  }
  for (int i = 0; i < 20; ++i) {
    const u64 n = rng() % 1'000'001;
    const u64 m = 2 + rng() % ((1ULL << 62) - 2);
    REQUIRE(term_mod(kPad, n, m) == term_mod_iterative(kPad, n, m));
    REQUIRE(term_mod(RecurrenceSpec::perrin(), n, m) == term_mod_iterative(RecurrenceSpec::perrin(), n, m));
  }
}

TEST_CASE("window residues") {
  for (i64 n = -1; n <= 200; ++n) {
    auto w = padovan_window_mod(n, 1009);
    for (int k = 0; k < 3; ++k) {
      BigInt t = term(kPad, n - 2 + k) % 1009;
      REQUIRE(w[k] == t.get_ui());
    }
  }
}

TEST_CASE("recurrence holds on the exact table") {
  PadovanTable t(500);
  CHECK(t.max_index() == 500);
  for (i64 n = -3; n <= 497; ++n) REQUIRE(t[n + 3] == t[n + 1] + t[n]);
}

TEST_CASE("generating series") {
  for (int n : {3, 24, 1000}) {
    const auto num = generating_series_numerator(n);
    REQUIRE(num.size() == static_cast<size_t>(n));
    CHECK(num[0] == 0);
    CHECK(num[1] == 1);
    CHECK(num[2] == 1);
    CHECK(std::all_of(num.begin() + 3, num.end(), [](const BigInt& c) { return c == 0; }));
    CHECK_FALSE(generating_series_check(n));
  }
  CHECK_THROWS_AS(generating_series_numerator(2), std::invalid_argument);

  // Long division of X + X^2 reproduces the table; 1 - X gives the sequence shifted by six.
  PadovanTable t(999);
  const auto q = series_oracle({0, 1, 1}, 1000);
  for (int k = 0; k < 1000; ++k) REQUIRE(q[k] == t[k]);
  const auto shifted = series_oracle({1, -1, 0}, 1000);
  // The backward extension continues as T_{-4} = 1, T_{-5} = -1, T_{-6} = 1.
  CHECK(shifted[0] == 1);
  CHECK(shifted[1] == -1);
  CHECK(shifted[2] == 1);
  for (int k = 3; k < 1000; ++k) REQUIRE(shifted[k] == t[k - 6]);
}

TEST_CASE("addition formula") {
  CHECK(addition_formula(2, 2) == std::pair<BigInt, BigInt>{2, 2});
  CHECK(addition_formula(3, 4) == std::pair<BigInt, BigInt>{4, 4});
  CHECK(addition_formula(15, 15) == std::pair<BigInt, BigInt>{2513, 2513});
  CHECK_THROWS_AS(addition_formula(-3, 5), IndexOutOfRange);

  PadovanTable table(10002);
  for (i64 m = 0; m <= 300; ++m)
    for (i64 n = 0; n <= 300; ++n) {
      auto [lhs, rhs] = addition_formula(table, m, n);
      REQUIRE(lhs == rhs);
    }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const i64 m = static_cast<i64>(rng() % 5001), n = static_cast<i64>(rng() % 5001);
    auto [lhs, rhs] = addition_formula(table, m, n);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("cubic identity") {
  CHECK(cubic_identity(2) == 1);
  CHECK(cubic_identity(0) == 1);
  CHECK(cubic_identity(500) == 1);
  PadovanTable t(2000);
  for (i64 n = -1; n <= 2000; ++n) REQUIRE(cubic_identity(t[n], t[n - 1], t[n - 2]) == 1);
}

TEST_CASE("Perrin numbers are divisible by primes at prime index") {
  for (u64 q : primes_up_to(10000)) REQUIRE(term_mod(RecurrenceSpec::perrin(), q, q) == 0);
}
