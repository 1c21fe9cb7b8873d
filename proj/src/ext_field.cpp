#include "padovan/ext_field.hpp"

#include <map>
#include <stdexcept>

#include "padovan/errors.hpp"

namespace padovan {

namespace {

poly::Poly modulus_poly(u64 /*p*/, int r, const std::array<u64, 3>& low) {
  poly::Poly m(low.begin(), low.begin() + r);
  m.push_back(1);
  return m;
}

}  // namespace

ExtField::ExtField(u64 p, int degree, std::array<u64, 3> modulus_low)
    : p_(PrimeField(p).p()), r_(degree), low_{} {
  if (degree < 1 || degree > 3) throw std::invalid_argument("extension degree must be 1, 2 or 3");
  for (int i = 0; i < degree; ++i) low_[i] = modulus_low[i] % p;
  if (degree > 1 && !poly::roots(modulus_poly(p_, r_, low_), p_).empty()) {
    throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
  }
  if (degree == 3 && p_ >= (u64{1} << 32)) {
    throw std::invalid_argument("cubic extensions require p < 2^32");
  }
}

ExtField ExtField::prime(u64 p) { return ExtField(p, 1, {0, 0, 0}); }

ExtField ExtField::quadratic(u64 p, i64 nonresidue) {
  return ExtField(p, 2, {reduce(-nonresidue, p), 0, 0});
}

ExtField ExtField::padovan_cubic(u64 p) { return ExtField(p, 3, {p - 1, p - 1, 0}); }

u128 ExtField::group_order() const {
  u128 q = 1;
  for (int i = 0; i < r_; ++i) q *= p_;
  return q - 1;
}

std::vector<std::pair<u64, int>> ExtField::group_order_factors() const {
  std::vector<u64> pieces{p_ - 1};
  if (r_ == 2) pieces.push_back(p_ + 1);
  if (r_ == 3) pieces.push_back(p_ * p_ + p_ + 1);
  std::map<u64, int> merged;
  for (u64 piece : pieces) {
    for (auto [q, e] : factor_powers(piece)) merged[q] += e;
  }
  return {merged.begin(), merged.end()};
}

ExtElement ExtField::zero() const { return ExtElement(*this, {0, 0, 0}); }
ExtElement ExtField::one() const { return ExtElement(*this, {1, 0, 0}); }
ExtElement ExtField::from_int(i64 v) const { return ExtElement(*this, {reduce(v, p_), 0, 0}); }

ExtElement ExtField::gen() const {
  if (r_ == 1) return ExtElement(*this, {sub_mod(0, low_[0], p_), 0, 0});
  return ExtElement(*this, {0, 1, 0});
}

ExtElement ExtField::make(std::array<u64, 3> coeffs) const { return ExtElement(*this, coeffs); }

ExtElement::ExtElement(const ExtField& field, std::array<u64, 3> coeffs) : field_(field), c_{} {
  for (int i = 0; i < field_.degree(); ++i) c_[i] = coeffs[i] % field_.p();
}

void ExtElement::check_same(const ExtElement& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("operands live in different fields");
}

bool ExtElement::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

bool ExtElement::in_prime_subfield() const { return c_[1] == 0 && c_[2] == 0; }

ExtElement ExtElement::operator+(const ExtElement& o) const {
  check_same(o);
  const u64 p = field_.p();
  ExtElement r = *this;
  for (int i = 0; i < 3; ++i) r.c_[i] = add_mod(c_[i], o.c_[i], p);
  return r;
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
  check_same(o);
  const u64 p = field_.p();
  ExtElement r = *this;
  for (int i = 0; i < 3; ++i) r.c_[i] = sub_mod(c_[i], o.c_[i], p);
  return r;
}

ExtElement ExtElement::operator-() const { return field_.zero() - *this; }

ExtElement ExtElement::operator*(const ExtElement& o) const {
  check_same(o);
  const u64 p = field_.p();
  const int r = field_.degree();
  std::array<u64, 5> prod{};
  for (int i = 0; i < r; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < r; ++j) prod[i + j] = add_mod(prod[i + j], mul_mod(c_[i], o.c_[j], p), p);
  }
  // u^r = -(m_0 + m_1 u + ... + m_{r-1} u^{r-1})
  const auto& low = field_.modulus_low();
  for (int i = 2 * r - 2; i >= r; --i) {
    u64 c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < r; ++j) prod[i - r + j] = sub_mod(prod[i - r + j], mul_mod(c, low[j], p), p);
  }
  ExtElement out = *this;
  out.c_ = {prod[0], r > 1 ? prod[1] : 0, r > 2 ? prod[2] : 0};
  return out;
}

ExtElement ExtElement::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in F_" + std::to_string(field_.p()) + "^" +
                                      std::to_string(field_.degree()));
  const u64 p = field_.p();
  const int r = field_.degree();
  // Extended Euclid on (m, a): track s with s * a ≡ remainder (mod m).
  poly::Poly m = modulus_poly(p, r, field_.modulus_low());
  poly::Poly a(c_.begin(), c_.begin() + r);
  poly::trim(a);
  poly::Poly r0 = m, r1 = a, s0{}, s1{1};
  while (poly::degree(r1) > 0) {
    auto [q, rem] = poly::divmod(r0, r1, p);
    poly::Poly s2 = poly::sub(s0, poly::mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a non-zero constant since m is irreducible.
  u64 k = inv_mod(r1[0], p);
  std::array<u64, 3> out{};
  for (size_t i = 0; i < s1.size() && i < 3; ++i) out[i] = mul_mod(s1[i], k, p);
  return ExtElement(field_, out);
}

ExtElement ExtElement::pow(u128 k) const {
  ExtElement result = field_.one();
  ExtElement base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

u128 multiplicative_order(const ExtElement& x) {
  if (x.is_zero()) throw DivisionByZero("zero has no multiplicative order");
  const ExtField& f = x.field();
  u128 order = f.group_order();
  const ExtElement one = f.one();
  for (auto [q, e] : f.group_order_factors()) {
    for (int i = 0; i < e && order % q == 0; ++i) {
      if (x.pow(order / q) == one) {
        order /= q;
      } else {
        break;
      }
    }
  }
  return order;
}

}  // namespace padovan
