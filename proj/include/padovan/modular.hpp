#pragma once

// Arithmetic in Z/mZ on 64-bit words, primality, square roots and
// factorization. Products go through unsigned __int128.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace padovan {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

/// Least non-negative residue of a signed value.
u64 reduce(i64 a, u64 m);

u64 pow_mod(u64 base, u128 exp, u64 m);

/// Inverse modulo a prime (Fermat). Throws DivisionByZero for a ≡ 0.
u64 inv_mod(u64 a, u64 p);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(u64 n);

/// All primes <= limit, ascending.
std::vector<u64> primes_up_to(u64 limit);

/// Euler criterion: -1, 0 or +1. For p = 2 returns a mod 2.
int legendre(i64 a, u64 p);

/// Square roots {s, p - s} with s <= p - s via Tonelli-Shanks; {0, 0} when
/// a ≡ 0; nullopt for non-residues.
std::optional<std::pair<u64, u64>> sqrt_mod(i64 a, u64 p);

/// Prime factors with multiplicity, ascending. Trial division to 1e5 then
/// Brent's variant of Pollard rho with a fixed constant schedule.
std::vector<u64> factorize(u64 n);

/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<u64, int>> factor_powers(u64 n);

u64 isqrt(u64 n);
u128 gcd128(u128 a, u128 b);
u128 lcm128(u128 a, u128 b);
std::string to_string(u128 v);

/// A validated prime modulus below 2^63.
class PrimeField {
 public:
  explicit PrimeField(u64 p);
  u64 p() const { return p_; }

 private:
  u64 p_;
};

}  // namespace padovan
