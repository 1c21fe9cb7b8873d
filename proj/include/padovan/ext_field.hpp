#pragma once

// F_{p^r} for r in {1, 2, 3} as F_p[u] / (m(u)) with m monic and irreducible.

#include <array>
#include <compare>

#include "padovan/modular.hpp"
#include "padovan/poly_fp.hpp"

namespace padovan {

class ExtElement;

class ExtField {
 public:
  /// modulus_low holds m_0 .. m_{r-1} of m(u) = u^r + m_{r-1} u^{r-1} + ... + m_0.
  /// Throws NotPrime or std::invalid_argument (reducible modulus).
  ExtField(u64 p, int degree, std::array<u64, 3> modulus_low);

  static ExtField prime(u64 p);
  /// F_p[u] / (u^2 - n) for a non-residue n.
  static ExtField quadratic(u64 p, i64 nonresidue);
  /// F_p[u] / (u^3 - u - 1); requires X^3 - X - 1 irreducible mod p.
  static ExtField padovan_cubic(u64 p);

  u64 p() const { return p_; }
  int degree() const { return r_; }
  const std::array<u64, 3>& modulus_low() const { return low_; }
  /// p^r - 1; degree 3 requires p < 2^32 so that p^2 + p + 1 fits a word.
  u128 group_order() const;
  /// Factorization of p^r - 1 assembled from (p-1), (p+1), (p^2+p+1).
  std::vector<std::pair<u64, int>> group_order_factors() const;

  ExtElement zero() const;
  ExtElement one() const;
  ExtElement from_int(i64 v) const;
  /// The adjoined generator u (the residue class of X).
  ExtElement gen() const;
  ExtElement make(std::array<u64, 3> coeffs) const;

  bool operator==(const ExtField&) const = default;

 private:
  u64 p_;
  int r_;
  std::array<u64, 3> low_;
};

class ExtElement {
 public:
  ExtElement(const ExtField& field, std::array<u64, 3> coeffs);

  const ExtField& field() const { return field_; }
  const std::array<u64, 3>& coeffs() const { return c_; }
  u64 operator[](int i) const { return c_[i]; }

  bool is_zero() const;
  bool in_prime_subfield() const;
  /// Constant term; only meaningful when in_prime_subfield().
  u64 prime_value() const { return c_[0]; }

  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-(const ExtElement& o) const;
  ExtElement operator-() const;
  ExtElement operator*(const ExtElement& o) const;
  ExtElement operator/(const ExtElement& o) const { return *this * o.inv(); }
  ExtElement& operator+=(const ExtElement& o) { return *this = *this + o; }
  ExtElement& operator-=(const ExtElement& o) { return *this = *this - o; }
  ExtElement& operator*=(const ExtElement& o) { return *this = *this * o; }

  /// Throws DivisionByZero for zero.
  ExtElement inv() const;
  ExtElement pow(u128 k) const;
  ExtElement frobenius() const { return pow(field_.p()); }

  bool operator==(const ExtElement& o) const { return field_ == o.field_ && c_ == o.c_; }

 private:
  void check_same(const ExtElement& o) const;

  ExtField field_;
  std::array<u64, 3> c_;
};

/// Least k >= 1 with x^k = 1, found by stripping prime factors from p^r - 1.
u128 multiplicative_order(const ExtElement& x);

}  // namespace padovan
