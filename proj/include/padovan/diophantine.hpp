#pragma once

// Representations p = x^2 + 23 y^2.

#include "padovan/modular.hpp"

namespace padovan {

struct Representation {
  u64 p = 0;
  u64 x = 0;
  u64 y = 0;
  bool found = false;

  bool operator==(const Representation&) const = default;
};

/// Cornacchia's algorithm seeded by sqrt(-23) mod p. Canonical output has
/// x, y >= 0. Throws NotPrime.
Representation represent(u64 p);

/// Exhaustive search over y <= sqrt(p / 23), smallest y first.
Representation represent_bruteforce(u64 p);

/// (r_p = 1) == represent(p).found
bool check_equivalence(u64 p);

}  // namespace padovan
