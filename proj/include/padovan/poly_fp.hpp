#pragma once

// Dense polynomials over F_p, little-endian coefficients, no trailing zeros.
// Sized for the cubic root-finding machinery, not for large degrees.

#include <vector>

#include "padovan/modular.hpp"

namespace padovan::poly {

using Poly = std::vector<u64>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial

Poly sub(const Poly& f, const Poly& g, u64 p);
Poly mul(const Poly& f, const Poly& g, u64 p);
/// Quotient and remainder; g must be non-zero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, u64 p);
Poly mod(const Poly& f, const Poly& g, u64 p);
Poly make_monic(Poly f, u64 p);
/// Monic gcd (zero polynomial when both inputs are zero).
Poly gcd(Poly f, Poly g, u64 p);
/// base^exp mod modulus.
Poly powmod(const Poly& base, u128 exp, const Poly& modulus, u64 p);
u64 eval(const Poly& f, u64 x, u64 p);

/// Distinct roots of f in F_p, ascending. Uses gcd(X^p - X, f) and
/// Cantor-Zassenhaus splitting with shifts a = 0, 1, 2, ... (p odd), or
/// direct evaluation for p = 2.
std::vector<u64> roots(const Poly& f, u64 p);

}  // namespace padovan::poly
