#include "padovan/diophantine.hpp"

#include "padovan/splitting.hpp"

namespace padovan {

namespace {

constexpr u64 kD = 23;

bool square_root_of(u64 v, u64& root) {
  root = isqrt(v);
  return root * root == v;
}

}  // namespace

Representation represent(u64 p) {
  PrimeField checked(p);
  Representation rep{p, 0, 0, false};
  if (p == kD) return {p, 0, 1, true};
  if (p < kD) {
    // y must be 0, and a prime is never a square.
    return rep;
  }
  auto roots = sqrt_mod(-static_cast<i64>(kD), p);
  if (!roots) return rep;

  // Euclid on (p, r0) with r0 > p/2, stopped at the first remainder below sqrt(p).
  u64 a = p;
  u64 b = roots->second;
  const u64 bound = isqrt(p);
  while (b > bound) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  const u64 rest = p - b * b;
  if (rest % kD != 0) return rep;
  u64 y;
  if (!square_root_of(rest / kD, y)) return rep;
  return {p, b, y, true};
}

Representation represent_bruteforce(u64 p) {
  for (u64 y = 0; kD * y * y <= p; ++y) {
    u64 x;
    if (square_root_of(p - kD * y * y, x)) return {p, x, y, true};
  }
  return {p, 0, 0, false};
}

bool check_equivalence(u64 p) { return (split(p).r == 1) == represent(p).found; }

}  // namespace padovan
