#pragma once

// Splitting of T(X) = X^3 - X - 1 over F_p: the roots α, β, γ in the
// splitting field F_{p^r}, δ = (α-β)(β-γ)(γ-α), and the Binet-type formulas
// that express T_n through powers of the roots.

#include <optional>
#include <string>

#include "padovan/ext_field.hpp"

namespace padovan {

enum class SplitCase { Case1, Case2, Case3, P23 };

std::string to_string(SplitCase c);

struct BinetCoefficients {
  ExtElement c_alpha, c_beta, c_gamma;
};

/// Root ordering: r = 1 ascending residues; r = 2 α in F_p and β the
/// conjugate with the smaller u-coefficient in F_p[u]/(u^2 + 23);
/// r = 3 α = u in F_p[u]/(T), β = α^p, γ = α^(p^2).
struct SplittingReport {
  u64 p;
  int r;
  SplitCase kind;
  ExtElement alpha, beta, gamma;
  ExtElement delta;
  std::optional<BinetCoefficients> binet;  // absent for p = 23
};

/// Throws NotPrime.
SplittingReport split(u64 p);

/// Degree of the splitting field of X^3 - c1 X^2 - c2 X - c3 over F_p.
int splitting_degree(const std::array<i64, 3>& coeffs, u64 p);

/// β, γ = ½[-α ± αδ/(2α+3)] for a root α and a square root δ of -23 (p ∤ 46).
std::pair<ExtElement, ExtElement> conjugate_roots(const ExtElement& alpha, const ExtElement& delta);

/// p mod 23 is a non-zero square mod 23 (p ≠ 23).
bool classify_via_reciprocity(u64 p);

/// T_n mod p from -δT_n = (β-γ)α^{n+3} + (γ-α)β^{n+3} + (α-β)γ^{n+3}.
/// Throws DegenerateDiscriminant for p = 23.
u64 binet_eval(const SplittingReport& report, u64 n);
/// T_n mod p from c_α α^n + c_β β^n + c_γ γ^n.
u64 binet_eval_coefficients(const SplittingReport& report, u64 n);

/// z^n = (z^2 - 1)T_n + T_{n-1} + (1 + z - z^2)T_{n-2} for every root z.
bool power_identity_check(const SplittingReport& report, u64 n);

}  // namespace padovan
