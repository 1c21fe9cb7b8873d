#include "padovan/sequence.hpp"

#include <stdexcept>

#include "padovan/errors.hpp"

namespace padovan {

RecurrenceSpec RecurrenceSpec::preset(const std::string& name) {
  if (name == "padovan") return padovan();
  if (name == "perrin") return perrin();
  if (name == "tribonacci") return tribonacci();
  throw std::invalid_argument("unknown sequence preset '" + name + "'");
}

namespace {

void check_index(const RecurrenceSpec& spec, i64 n) {
  if (n < kMinIndex) {
    throw IndexOutOfRange("index " + std::to_string(n) + " is below " + std::to_string(kMinIndex));
  }
  if (n < 0 && !spec.backward_defined()) {
    throw BackwardUndefined("backward extension of '" + spec.name + "' needs |c3| = 1");
  }
}

template <typename T>
using Mat3 = std::array<std::array<T, 3>, 3>;

Mat3<BigInt> mat_mul(const Mat3<BigInt>& a, const Mat3<BigInt>& b) {
  Mat3<BigInt> c;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      BigInt s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  }
  return c;
}

Mat3<u64> mat_mul_mod(const Mat3<u64>& a, const Mat3<u64>& b, u64 m) {
  Mat3<u64> c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      u64 s = 0;
      for (int k = 0; k < 3; ++k) s = add_mod(s, mul_mod(a[i][k], b[k][j], m), m);
      c[i][j] = s;
    }
  }
  return c;
}

// Companion matrix acting on (x_{n+2}, x_{n+1}, x_n).
Mat3<u64> companion_mod(const RecurrenceSpec& spec, u64 m) {
  Mat3<u64> c{};
  for (int j = 0; j < 3; ++j) c[0][j] = reduce(spec.coeffs[j], m);
  c[1][0] = 1 % m;
  c[2][1] = 1 % m;
  return c;
}

Mat3<u64> mat_pow_mod(Mat3<u64> base, u64 e, u64 m) {
  Mat3<u64> result{};
  for (int i = 0; i < 3; ++i) result[i][i] = 1 % m;
  while (e > 0) {
    if (e & 1) result = mat_mul_mod(result, base, m);
    base = mat_mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

BigInt term(const RecurrenceSpec& spec, i64 n) {
  check_index(spec, n);
  const auto [c1, c2, c3] = spec.coeffs;
  if (n >= 0) {
    BigInt a = spec.init[0], b = spec.init[1], c = spec.init[2];
    for (i64 i = 0; i < n; ++i) {
      BigInt next = c1 * c + c2 * b + c3 * a;
      a = std::move(b);
      b = std::move(c);
      c = std::move(next);
    }
    return a;
  }
  // x_k = (x_{k+3} - c1 x_{k+2} - c2 x_{k+1}) / c3, exact since |c3| = 1.
  BigInt x0 = spec.init[0], x1 = spec.init[1], x2 = spec.init[2];
  for (i64 k = -1; k >= n; --k) {
    BigInt prev = (x2 - c1 * x1 - c2 * x0) * c3;
    x2 = std::move(x1);
    x1 = std::move(x0);
    x0 = std::move(prev);
  }
  return x0;
}

BigInt term_fast(const RecurrenceSpec& spec, i64 n) {
  if (n < 0) return term(spec, n);
  Mat3<BigInt> result, base;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      result[i][j] = (i == j) ? 1 : 0;
      base[i][j] = 0;
    }
  }
  for (int j = 0; j < 3; ++j) base[0][j] = spec.coeffs[j];
  base[1][0] = 1;
  base[2][1] = 1;
  for (u64 e = static_cast<u64>(n); e > 0; e >>= 1) {
    if (e & 1) result = mat_mul(result, base);
    base = mat_mul(base, base);
  }
  // Bottom row picks x_n out of M^n (x2, x1, x0).
  return result[2][0] * spec.init[2] + result[2][1] * spec.init[1] + result[2][2] * spec.init[0];
}

u64 term_mod(const RecurrenceSpec& spec, u64 n, u64 m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  Mat3<u64> pw = mat_pow_mod(companion_mod(spec, m), n, m);
  const u64 x2 = reduce(spec.init[2], m), x1 = reduce(spec.init[1], m), x0 = reduce(spec.init[0], m);
  u64 s = mul_mod(pw[2][0], x2, m);
  s = add_mod(s, mul_mod(pw[2][1], x1, m), m);
  return add_mod(s, mul_mod(pw[2][2], x0, m), m);
}

u64 term_mod_iterative(const RecurrenceSpec& spec, u64 n, u64 m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  const u64 c1 = reduce(spec.coeffs[0], m), c2 = reduce(spec.coeffs[1], m), c3 = reduce(spec.coeffs[2], m);
  u64 a = reduce(spec.init[0], m), b = reduce(spec.init[1], m), c = reduce(spec.init[2], m);
  for (u64 i = 0; i < n; ++i) {
    u64 next = add_mod(add_mod(mul_mod(c1, c, m), mul_mod(c2, b, m), m), mul_mod(c3, a, m), m);
    a = b;
    b = c;
    c = next;
  }
  return a;
}

std::array<u64, 3> padovan_window_mod(i64 n, u64 m) {
  if (n < -1) throw IndexOutOfRange("window below T_{-3}");
  // T_{-3} .. T_2
  static constexpr std::array<u64, 6> head = {0, 0, 1, 0, 1, 1};
  if (n <= 2) {
    const auto i = static_cast<size_t>(n + 3);
    return {head[i - 2] % m, head[i - 1] % m, head[i] % m};
  }
  Mat3<u64> pw = mat_pow_mod(companion_mod(RecurrenceSpec::padovan(), m), static_cast<u64>(n - 2), m);
  // Rows of M^(n-2) applied to (T_2, T_1, T_0) = (1, 1, 0).
  auto row = [&](int i) { return add_mod(pw[i][0], pw[i][1], m); };
  return {row(2), row(1), row(0)};
}

PadovanTable::PadovanTable(i64 max_index) {
  if (max_index < 2) max_index = 2;
  values_.reserve(static_cast<size_t>(max_index - kMinIndex + 1));
  for (int v : {0, 0, 1, 0, 1, 1}) values_.emplace_back(v);
  for (i64 n = 3; n <= max_index; ++n) {
    const size_t i = values_.size();
    values_.push_back(values_[i - 2] + values_[i - 3]);
  }
}

const BigInt& PadovanTable::operator[](i64 n) const {
  if (n < kMinIndex || n > max_index()) throw IndexOutOfRange("index " + std::to_string(n) + " outside table");
  return values_[static_cast<size_t>(n - kMinIndex)];
}

std::vector<BigInt> generating_series_numerator(int N) {
  if (N < 3) throw std::invalid_argument("generating series needs N >= 3");
  PadovanTable table(N);
  std::vector<BigInt> out(N);
  // Coefficient k of (1 - X^2 - X^3) * sum T_n X^n.
  for (int k = 0; k < N; ++k) {
    out[k] = table[k];
    if (k >= 2) out[k] -= table[k - 2];
    if (k >= 3) out[k] -= table[k - 3];
  }
  return out;
}

bool generating_series_check(int N) {
  const std::vector<BigInt> c = generating_series_numerator(N);
  for (int k = 0; k < N; ++k) {
    const int expected = (k == 0) ? 1 : (k == 1 ? -1 : 0);
    if (c[k] != expected) return false;
  }
  return true;
}

std::pair<BigInt, BigInt> addition_formula(const PadovanTable& table, i64 m, i64 n) {
  for (i64 idx : {m - 1, n - 2, m + n}) {
    if (idx < kMinIndex) throw IndexOutOfRange("addition formula references T_" + std::to_string(idx));
  }
  BigInt rhs = table[m - 1] * table[n] + table[m] * table[n - 1] + (table[m + 1] - table[m - 1]) * table[n - 2];
  return {table[m + n], rhs};
}

std::pair<BigInt, BigInt> addition_formula(i64 m, i64 n) {
  for (i64 idx : {m - 1, n - 2, m + n}) {
    if (idx < kMinIndex) throw IndexOutOfRange("addition formula references T_" + std::to_string(idx));
  }
  PadovanTable table(std::max({m + n, m + 1, n}));
  return addition_formula(table, m, n);
}

BigInt cubic_identity(const BigInt& a, const BigInt& b, const BigInt& c) {
  // a = T_n, b = T_{n-1}, c = T_{n-2}
  return a * a * a + b * b * b + c * c * c - a * b * b - a * a * c + b * b * c + 2 * b * c * c - 3 * a * b * c;
}

BigInt cubic_identity(i64 n) {
  if (n < -1) throw IndexOutOfRange("cubic identity needs n >= -1");
  const auto spec = RecurrenceSpec::padovan();
  return cubic_identity(term(spec, n), term(spec, n - 1), term(spec, n - 2));
}

}  // namespace padovan
