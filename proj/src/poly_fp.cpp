#include "padovan/poly_fp.hpp"

#include <algorithm>

#include "padovan/errors.hpp"

namespace padovan::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly sub(const Poly& f, const Poly& g, u64 p) {
  Poly h(std::max(f.size(), g.size()), 0);
  for (size_t i = 0; i < f.size(); ++i) h[i] = f[i];
  for (size_t i = 0; i < g.size(); ++i) h[i] = sub_mod(h[i], g[i], p);
  trim(h);
  return h;
}

Poly mul(const Poly& f, const Poly& g, u64 p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = 0; j < g.size(); ++j) {
      h[i + j] = add_mod(h[i + j], mul_mod(f[i], g[j], p), p);
    }
  }
  trim(h);
  return h;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, u64 p) {
  if (g.empty()) throw DivisionByZero("polynomial division by zero");
  Poly r = f;
  trim(r);
  const int dg = degree(g);
  if (degree(r) < dg) return {{}, r};
  Poly q(r.size() - g.size() + 1, 0);
  const u64 lead_inv = inv_mod(g.back(), p);
  for (int i = degree(r); i >= dg; --i) {
    u64 c = mul_mod(r[i], lead_inv, p);
    q[i - dg] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      r[i - dg + j] = sub_mod(r[i - dg + j], mul_mod(c, g[j], p), p);
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly mod(const Poly& f, const Poly& g, u64 p) { return divmod(f, g, p).second; }

Poly make_monic(Poly f, u64 p) {
  trim(f);
  if (f.empty()) return f;
  u64 inv = inv_mod(f.back(), p);
  for (u64& c : f) c = mul_mod(c, inv, p);
  return f;
}

Poly gcd(Poly f, Poly g, u64 p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return make_monic(f, p);
}

Poly powmod(const Poly& base, u128 exp, const Poly& modulus, u64 p) {
  Poly result = mod(Poly{1}, modulus, p);
  Poly b = mod(base, modulus, p);
  while (exp > 0) {
    if (exp & 1) result = mod(mul(result, b, p), modulus, p);
    b = mod(mul(b, b, p), modulus, p);
    exp >>= 1;
  }
  return result;
}

u64 eval(const Poly& f, u64 x, u64 p) {
  u64 acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p), f[i], p);
  return acc;
}

namespace {

// f is monic, squarefree and splits into linear factors over F_p.
void split_linear(const Poly& f, u64 p, std::vector<u64>& out) {
  const int d = degree(f);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(sub_mod(0, f[0], p));
    return;
  }
  for (u64 a = 0; a < p; ++a) {
    // gcd((X + a)^((p-1)/2) - 1, f) separates roots r by the character of r + a.
    Poly h = powmod(Poly{a, 1}, (p - 1) / 2, f, p);
    h = sub(h, Poly{1}, p);
    Poly g = gcd(f, h, p);
    int dg = degree(g);
    if (dg > 0 && dg < d) {
      split_linear(g, p, out);
      split_linear(divmod(f, g, p).first, p, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> roots(const Poly& f_in, u64 p) {
  Poly f = make_monic(f_in, p);
  std::vector<u64> out;
  if (degree(f) <= 0) return out;
  if (p == 2) {
    for (u64 x = 0; x < 2; ++x) {
      if (eval(f, x, p) == 0) out.push_back(x);
    }
    return out;
  }
  Poly xp = powmod(Poly{0, 1}, p, f, p);
  Poly g = gcd(f, sub(xp, Poly{0, 1}, p), p);
  split_linear(g, p, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace padovan::poly
