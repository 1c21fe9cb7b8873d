#include "padovan/splitting.hpp"

#include <algorithm>
#include <stdexcept>

#include "padovan/errors.hpp"
#include "padovan/sequence.hpp"

namespace padovan {

std::string to_string(SplitCase c) {
  switch (c) {
    case SplitCase::Case1: return "CASE1";
    case SplitCase::Case2: return "CASE2";
    case SplitCase::Case3: return "CASE3";
    case SplitCase::P23: return "P23";
  }
  return "?";
}

namespace {

poly::Poly cubic_poly(const std::array<i64, 3>& coeffs, u64 p) {
  poly::Poly f = {reduce(-coeffs[2], p), reduce(-coeffs[1], p), reduce(-coeffs[0], p), 1};
  poly::trim(f);
  return f;
}

const std::array<i64, 3> kPadovanCoeffs = {0, 1, 1};

bool is_root(const ExtElement& z) { return (z * z * z - z - z.field().one()).is_zero(); }

ExtElement discriminant_product(const ExtElement& a, const ExtElement& b, const ExtElement& c) {
  return (a - b) * (b - c) * (c - a);
}

BinetCoefficients binet_coefficients(const ExtElement& a, const ExtElement& b, const ExtElement& c) {
  const ExtElement one = a.field().one();
  return {(a + one) / ((a - b) * (a - c)), (b + one) / ((b - a) * (b - c)), (c + one) / ((c - a) * (c - b))};
}

}  // namespace

std::pair<ExtElement, ExtElement> conjugate_roots(const ExtElement& alpha, const ExtElement& delta) {
  const ExtField& f = alpha.field();
  const ExtElement half = f.from_int(2).inv();
  const ExtElement shift = alpha * delta / (f.from_int(2) * alpha + f.from_int(3));
  return {half * (-alpha + shift), half * (-alpha - shift)};
}

int splitting_degree(const std::array<i64, 3>& coeffs, u64 p) {
  PrimeField field(p);
  poly::Poly f = cubic_poly(coeffs, p);
  std::vector<u64> rts = poly::roots(f, p);
  if (rts.empty()) return 3;
  poly::Poly q = poly::divmod(f, poly::Poly{sub_mod(0, rts[0], p), 1}, p).first;
  return poly::roots(q, p).empty() ? 2 : 1;
}

SplittingReport split(u64 p) {
  PrimeField checked(p);
  const poly::Poly t = cubic_poly(kPadovanCoeffs, p);
  const std::vector<u64> rts = poly::roots(t, p);

  if (rts.size() == 3) {
    const ExtField fp = ExtField::prime(p);
    const ExtElement a = fp.from_int(static_cast<i64>(rts[0]));
    ExtElement b = fp.from_int(static_cast<i64>(rts[1]));
    ExtElement c = fp.from_int(static_cast<i64>(rts[2]));
    if (p != 2) {
      auto sq = sqrt_mod(-23, p);
      if (!sq) throw std::logic_error("CASE1 prime without sqrt(-23)");
      auto [b4, c4] = conjugate_roots(a, fp.from_int(static_cast<i64>(sq->first)));
      std::array<u64, 2> formula = {b4.prime_value(), c4.prime_value()};
      std::sort(formula.begin(), formula.end());
      if (formula[0] != rts[1] || formula[1] != rts[2]) {
        throw std::logic_error("conjugate root formula disagrees with factorization mod " + std::to_string(p));
      }
    }
    ExtElement d = discriminant_product(a, b, c);
    return {p, 1, SplitCase::Case1, a, b, c, d, binet_coefficients(a, b, c)};
  }

  if (rts.size() == 2) {
    // Only p = 23: T = (X - 3)(X - 10)^2. The double root also kills T' = 3X^2 - 1.
    const ExtField fp = ExtField::prime(p);
    u64 simple = rts[0], dbl = rts[1];
    if (poly::eval({p - 1, 0, 3}, simple, p) == 0) std::swap(simple, dbl);
    const ExtElement a = fp.from_int(static_cast<i64>(simple));
    const ExtElement b = fp.from_int(static_cast<i64>(dbl));
    return {p, 1, SplitCase::P23, a, b, b, discriminant_product(a, b, b), std::nullopt};
  }

  if (rts.size() == 1) {
    const ExtField f2 = ExtField::quadratic(p, -23);
    const ExtElement a = f2.from_int(static_cast<i64>(rts[0]));
    auto [b, c] = conjugate_roots(a, f2.gen());
    if (!is_root(b) || !is_root(c)) {
      throw std::logic_error("conjugate roots fail T(z) = 0 in F_" + std::to_string(p) + "^2");
    }
    if (c[1] < b[1]) std::swap(b, c);
    ExtElement d = discriminant_product(a, b, c);
    return {p, 2, SplitCase::Case2, a, b, c, d, binet_coefficients(a, b, c)};
  }

  const ExtField f3 = ExtField::padovan_cubic(p);
  const ExtElement a = f3.gen();
  const ExtElement b = a.frobenius();
  const ExtElement c = b.frobenius();
  ExtElement d = discriminant_product(a, b, c);
  return {p, 3, SplitCase::Case3, a, b, c, d, binet_coefficients(a, b, c)};
}

bool classify_via_reciprocity(u64 p) {
  static constexpr std::array<u64, 11> squares = {1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18};
  return std::find(squares.begin(), squares.end(), p % 23) != squares.end();
}

u64 binet_eval(const SplittingReport& rep, u64 n) {
  if (rep.kind == SplitCase::P23) throw DegenerateDiscriminant("δ = 0 for p = 23");
  const auto& [a, b, c] = std::tie(rep.alpha, rep.beta, rep.gamma);
  ExtElement s = (b - c) * a.pow(u128{n} + 3) + (c - a) * b.pow(u128{n} + 3) + (a - b) * c.pow(u128{n} + 3);
  ExtElement t = -s / rep.delta;
  if (!t.in_prime_subfield()) throw std::logic_error("Binet value left the prime field");
  return t.prime_value();
}

u64 binet_eval_coefficients(const SplittingReport& rep, u64 n) {
  if (!rep.binet) throw DegenerateDiscriminant("Binet coefficients undefined for p = 23");
  const auto& k = *rep.binet;
  ExtElement t = k.c_alpha * rep.alpha.pow(n) + k.c_beta * rep.beta.pow(n) + k.c_gamma * rep.gamma.pow(n);
  if (!t.in_prime_subfield()) throw std::logic_error("Binet value left the prime field");
  return t.prime_value();
}

bool power_identity_check(const SplittingReport& rep, u64 n) {
  const auto [t2, t1, t0] = padovan_window_mod(static_cast<i64>(n), rep.p);
  const ExtField& f = rep.alpha.field();
  const ExtElement tn = f.from_int(static_cast<i64>(t0));
  const ExtElement tn1 = f.from_int(static_cast<i64>(t1));
  const ExtElement tn2 = f.from_int(static_cast<i64>(t2));
  const ExtElement one = f.one();
  for (const ExtElement* z : {&rep.alpha, &rep.beta, &rep.gamma}) {
    const ExtElement z2 = *z * *z;
    const ExtElement rhs = (z2 - one) * tn + tn1 + (one + *z - z2) * tn2;
    if (!(z->pow(n) == rhs)) return false;
  }
  return true;
}

}  // namespace padovan
