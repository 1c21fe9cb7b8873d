#include "padovan/modular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "padovan/errors.hpp"

namespace padovan {

u64 reduce(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  // -(a + 1) avoids overflow at INT64_MIN.
  u64 r = static_cast<u64>(-(a + 1)) % m;
  return m - 1 - r;
}

u64 pow_mod(u64 base, u128 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw DivisionByZero("inverse of zero modulo " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : small) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set for n < 3.3e24.
  for (u64 a : small) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<char> composite(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

int legendre(i64 a, u64 p) {
  u64 r = reduce(a, p);
  if (r == 0) return 0;
  if (p == 2) return 1;
  u64 e = pow_mod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

std::optional<std::pair<u64, u64>> sqrt_mod(i64 a, u64 p) {
  u64 n = reduce(a, p);
  if (n == 0) return std::pair<u64, u64>{0, 0};
  if (p == 2) return std::pair<u64, u64>{1, 1};
  if (legendre(static_cast<i64>(n), p) != 1) return std::nullopt;

  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (legendre(static_cast<i64>(z), p) != -1) ++z;

  u64 m = static_cast<u64>(s);
  u64 c = pow_mod(z, q, p);
  u64 t = pow_mod(n, q, p);
  u64 r = pow_mod(n, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  u64 other = p - r;
  return std::pair<u64, u64>{std::min(r, other), std::max(r, other)};
}

namespace {

u64 pollard_brent(u64 n, u64 c) {
  auto f = [&](u64 x) { return add_mod(mul_mod(x, x, n), c, n); };
  u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
  const u64 batch = 128;
  u64 r = 1;
  do {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    do {
      ys = y;
      for (u64 i = 0; i < std::min(batch, r - k); ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += batch;
    } while (k < r && g == 1);
    r <<= 1;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (u64 c = 1;; ++c) {
    u64 d = pollard_brent(n, c);
    if (d != n && d != 1) {
      factor_rec(d, out);
      factor_rec(n / d, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> factorize(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  for (u64 d = 2; d <= 100000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) factor_rec(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<u64, int>> factor_powers(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 q : factorize(n)) {
    if (!out.empty() && out.back().first == q) {
      ++out.back().second;
    } else {
      out.emplace_back(q, 1);
    }
  }
  return out;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 lcm128(u128 a, u128 b) { return a / gcd128(a, b) * b; }

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p >= (u64{1} << 63) || !is_prime(p)) {
    throw NotPrime(std::to_string(p) + " is not a prime below 2^63");
  }
}

}  // namespace padovan
