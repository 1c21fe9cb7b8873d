#include "padovan/period.hpp"

#include <algorithm>

#include "padovan/sequence.hpp"

namespace padovan {

u64 period_direct(u64 p, u64 cap) { return period_direct(RecurrenceSpec::padovan(), p, cap); }

u64 period_direct(const RecurrenceSpec& spec, u64 p, u64 cap) {
  PrimeField checked(p);
  const u64 c1 = reduce(spec.coeffs[0], p), c2 = reduce(spec.coeffs[1], p), c3 = reduce(spec.coeffs[2], p);
  const u64 x0 = reduce(spec.init[0], p), x1 = reduce(spec.init[1], p), x2 = reduce(spec.init[2], p);
  u64 a = x0, b = x1, c = x2;
  for (u64 n = 1; n <= cap; ++n) {
    u64 next = add_mod(add_mod(mul_mod(c1, c, p), mul_mod(c2, b, p), p), mul_mod(c3, a, p), p);
    a = b;
    b = c;
    c = next;
    if (a == x0 && b == x1 && c == x2) return n;
  }
  throw CapExceeded("no period within " + std::to_string(cap) + " steps mod " + std::to_string(p));
}

RootOrders root_orders(const SplittingReport& rep) {
  return {multiplicative_order(rep.alpha), multiplicative_order(rep.beta), multiplicative_order(rep.gamma)};
}

u128 period_algebraic(const SplittingReport& rep) {
  const RootOrders o = root_orders(rep);
  u128 l = lcm128(lcm128(o.a, o.b), o.c);
  if (rep.kind == SplitCase::P23) l *= rep.p;
  return l;
}

u128 period_algebraic(u64 p) { return period_algebraic(split(p)); }

Apparition apparition(u64 p, u64 budget) {
  PrimeField checked(p);
  Apparition out;
  // Rolling (T_n, T_{n+1}, T_{n+2}); Padovan steps need only one addition.
  u64 a = 0, b = 1 % p, c = 1 % p;
  for (u64 n = 1; n <= budget; ++n) {
    u64 next = a + b;
    if (next >= p) next -= p;
    a = b;
    b = c;
    c = next;
    if (a == 0) {
      out.zeros.push_back(n);
      if (b == 1 % p && c == 1 % p) {
        out.period = n;
        out.omega = out.zeros.front();
        return out;
      }
    }
  }
  if (!out.zeros.empty()) out.omega = out.zeros.front();
  throw BudgetExceeded("apparition scan mod " + std::to_string(p) + " exceeded " + std::to_string(budget) + " steps",
                       std::move(out), budget);
}

bool omega_membership(u64 n, const Apparition& app) {
  if (n == 0 || app.period == 0) return false;
  u64 v = n % app.period;
  if (v == 0) v = app.period;
  return std::binary_search(app.zeros.begin(), app.zeros.end(), v);
}

bool omega_membership(u64 n, u64 p) { return omega_membership(n, apparition(p)); }

bool TheoremChecks::all_hold() const {
  for (const auto* f : {&last_three, &omega_bound, &divides_group_order, &period_match, &case2_b_eq_c, &case2_b_div,
                        &case2_omega_bound, &case3_all_equal, &case3_div, &equiv}) {
    if (f->has_value() && !**f) return false;
  }
  return true;
}

PeriodReport verify_theorem(const SplittingReport& sp, const Representation& rep, u64 budget) {
  const u64 p = sp.p;
  PeriodReport out;
  out.p = p;
  out.r = sp.r;
  out.orders = root_orders(sp);
  out.t = period_algebraic(sp);
  out.delta_in_fp = sqrt_mod(-23, p);
  const u128 t = out.t;
  u128 pr = 1;
  for (int i = 0; i < sp.r; ++i) pr *= p;
  const u128 p3 = u128{p} * p * p;

  auto& ck = out.checks;
  if (sp.kind == SplitCase::P23) {
    ck.divides_group_order = (t == u128{p} * (p - 1));
  } else {
    ck.divides_group_order = ((pr - 1) % t == 0);
  }

  try {
    Apparition app = apparition(p, budget);
    out.omega = app.omega;
    ck.period_match = (u128{app.period} == t);
    ck.last_three = t >= 3 && omega_membership(static_cast<u64>(t - 3), app) &&
                    omega_membership(static_cast<u64>(t - 2), app) && omega_membership(static_cast<u64>(t), app);
    out.apparition = std::move(app.zeros);
  } catch (const BudgetExceeded& e) {
    out.partial = true;
    if (!e.partial().zeros.empty()) out.omega = e.partial().omega;
  }

  if (out.omega) {
    const u128 w = *out.omega;
    bool ok = w + 3 <= t && w + 4 <= p3;
    if (sp.kind != SplitCase::P23) ok = ok && t + 1 <= pr;
    ck.omega_bound = ok;
  }

  const RootOrders& o = out.orders;
  if (sp.r == 2) {
    ck.case2_b_eq_c = (t == o.b && o.b == o.c);
    ck.case2_b_div = ((u128{p} + 1) * o.a % o.b == 0);
    const u128 m = multiplicative_order(sp.alpha.pow(3));
    const u128 idx = (u128{p} + 1) * m - 3;
    bool member = term_mod(RecurrenceSpec::padovan(), static_cast<u64>(idx), p) == 0;
    if (out.omega) member = member && u128{*out.omega} <= idx;
    ck.case2_omega_bound = member;
  }
  if (sp.r == 3) {
    ck.case3_all_equal = (o.a == o.b && o.b == o.c && o.c == t);
    ck.case3_div = ((u128{p} * p + p + 1) % t == 0);
  }
  ck.equiv = ((sp.r == 1) == rep.found);
  return out;
}

PeriodReport verify_theorem(u64 p, u64 budget) { return verify_theorem(split(p), represent(p), budget); }

DoubleDivisibility double_divisibility(const SplittingReport& rep, u64 n) {
  if (rep.kind == SplitCase::P23) throw DegenerateDiscriminant("double divisibility needs p ≠ 23");
  if (n < 3) throw IndexOutOfRange("double divisibility needs n >= 3");
  DoubleDivisibility out;
  const ExtElement an = rep.alpha.pow(n);
  out.powers_equal = (an == rep.beta.pow(n) && an == rep.gamma.pow(n));
  if (out.powers_equal) out.common_power = an;
  const auto [tn4, tn3, tn2] = padovan_window_mod(static_cast<i64>(n) - 2, rep.p);
  (void)tn4;
  out.divides_both = (tn3 == 0 && tn2 == 0);
  return out;
}

DoubleDivisibility double_divisibility(u64 p, u64 n) { return double_divisibility(split(p), n); }

u64 closed_form_23(u64 n) {
  if (n < 1) throw IndexOutOfRange("closed form needs n >= 1");
  constexpr u64 p = 23;
  const u64 inv3 = inv_mod(3, p);
  u64 v = mul_mod(4, pow_mod(3, n, p), p);
  v = sub_mod(v, mul_mod(4, pow_mod(10, n, p), p), p);
  v = add_mod(v, mul_mod(mul_mod(8, n % p, p), pow_mod(10, n - 1, p), p), p);
  return mul_mod(inv3, v, p);
}

std::vector<u64> closed_form_23_zeros(u64 limit) {
  std::vector<u64> out;
  for (u64 n = 1; n <= limit; ++n) {
    if (pow_mod(23 - 2, n, 23) == (9 * (n % 23) + 1) % 23) out.push_back(n);
  }
  return out;
}

}  // namespace padovan
