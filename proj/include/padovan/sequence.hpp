#pragma once

// Third-order integer recurrences x_{n+3} = c1 x_{n+2} + c2 x_{n+1} + c3 x_n.
// The Padovan sequence (OEIS A000931) is the default: coefficients (0, 1, 1),
// initial values (0, 1, 1), extended backward to T_{-3}.

#include <gmpxx.h>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "padovan/modular.hpp"

namespace padovan {

using BigInt = mpz_class;

/// Lowest index any sequence is evaluated at.
inline constexpr i64 kMinIndex = -3;

struct RecurrenceSpec {
  std::array<i64, 3> coeffs;  // (c1, c2, c3)
  std::array<i64, 3> init;    // (x0, x1, x2)
  std::string name;

  static RecurrenceSpec padovan() { return {{0, 1, 1}, {0, 1, 1}, "padovan"}; }
  static RecurrenceSpec perrin() { return {{0, 1, 1}, {3, 0, 2}, "perrin"}; }
  /// Initial values (0, 1, 1) are a convention; Tribonacci output is exploratory.
  static RecurrenceSpec tribonacci() { return {{1, 1, 1}, {0, 1, 1}, "tribonacci"}; }
  /// Looks up a preset by name; throws std::invalid_argument otherwise.
  static RecurrenceSpec preset(const std::string& name);

  bool backward_defined() const { return coeffs[2] == 1 || coeffs[2] == -1; }
};

/// x_n by stepwise iteration (backward steps for n < 0).
/// Throws BackwardUndefined or IndexOutOfRange (n < -3).
BigInt term(const RecurrenceSpec& spec, i64 n);

/// x_n through powers of the 3x3 companion matrix over Z; n >= 0.
BigInt term_fast(const RecurrenceSpec& spec, i64 n);

/// x_n mod m via companion-matrix exponentiation, O(log n) ring operations.
u64 term_mod(const RecurrenceSpec& spec, u64 n, u64 m);

/// Stepwise x_n mod m, O(n); the reference for term_mod.
u64 term_mod_iterative(const RecurrenceSpec& spec, u64 n, u64 m);

/// Padovan residues (T_{n-2}, T_{n-1}, T_n) mod m for any n >= -1.
std::array<u64, 3> padovan_window_mod(i64 n, u64 m);

/// Exact Padovan values T_{-3} .. T_max held contiguously.
class PadovanTable {
 public:
  explicit PadovanTable(i64 max_index);
  const BigInt& operator[](i64 n) const;
  i64 max_index() const { return static_cast<i64>(values_.size()) + kMinIndex - 1; }

 private:
  std::vector<BigInt> values_;
};

/// (1 - X^2 - X^3) * (T_0 + T_1 X + ... + T_{N-1} X^{N-1}) truncated below
/// degree N. With T_0 = 0 this is X + X^2.
std::vector<BigInt> generating_series_numerator(int N);
/// The truncated product compared against 1 - X. Always false for the
/// Padovan initial values: (1 - X)/(1 - X^2 - X^3) expands to T_{n-6}.
bool generating_series_check(int N);

/// (T_{m+n}, T_{m-1}T_n + T_m T_{n-1} + (T_{m+1} - T_{m-1}) T_{n-2}).
/// Throws IndexOutOfRange if an index falls below -3.
std::pair<BigInt, BigInt> addition_formula(i64 m, i64 n);
std::pair<BigInt, BigInt> addition_formula(const PadovanTable& table, i64 m, i64 n);

/// The homogeneous cubic form in (T_n, T_{n-1}, T_{n-2}); always 1.
BigInt cubic_identity(i64 n);
BigInt cubic_identity(const BigInt& tn, const BigInt& tn1, const BigInt& tn2);

}  // namespace padovan
