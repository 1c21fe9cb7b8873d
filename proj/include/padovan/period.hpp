#pragma once

// Period t_p, rank of apparition ω_p, the zero set A_p within one period,
// the root orders (a, b, c), and the divisibility theorems tying them to the
// splitting degree r_p.

#include <optional>
#include <vector>

#include "padovan/diophantine.hpp"
#include "padovan/errors.hpp"
#include "padovan/sequence.hpp"
#include "padovan/splitting.hpp"

namespace padovan {

inline constexpr u64 kDefaultPeriodCap = 10'000'000;
inline constexpr u64 kDefaultApparitionBudget = 100'000'000;

struct Apparition {
  u64 omega = 0;
  std::vector<u64> zeros;  // A_p, ascending, representatives in [1, t_p]
  u64 period = 0;          // t_p as seen by the scan
};

/// A rolling scan ran out of steps; carries the zeros found so far.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, Apparition partial, u64 steps)
      : Error(what), partial_(std::move(partial)), steps_(steps) {}
  const Apparition& partial() const { return partial_; }
  u64 steps() const { return steps_; }

 private:
  Apparition partial_;
  u64 steps_;
};

struct RootOrders {
  u128 a = 0, b = 0, c = 0;
};

/// Iterates (T_n, T_{n+1}, T_{n+2}) mod p from (0, 1, 1) until it recurs.
/// Throws CapExceeded.
u64 period_direct(u64 p, u64 cap = kDefaultPeriodCap);

/// Period of any preset recurrence mod p by the same iteration, returning
/// to the sequence's own initial triple.
u64 period_direct(const RecurrenceSpec& spec, u64 p, u64 cap = kDefaultPeriodCap);

RootOrders root_orders(const SplittingReport& rep);

/// lcm(a, b, c) for p ≠ 23; for p = 23 the double root 10 contributes the
/// factor p through n·10^(n-1), giving p · lcm(o(3), o(10)).
u128 period_algebraic(u64 p);
u128 period_algebraic(const SplittingReport& rep);

/// One full-period scan. Throws BudgetExceeded with partial data.
Apparition apparition(u64 p, u64 budget = kDefaultApparitionBudget);

/// n ∈ Ω_p via the reduction of n into [1, t_p].
bool omega_membership(u64 n, const Apparition& app);
bool omega_membership(u64 n, u64 p);

struct TheoremChecks {
  std::optional<bool> last_three;
  std::optional<bool> omega_bound;
  std::optional<bool> divides_group_order;
  std::optional<bool> period_match;
  std::optional<bool> case2_b_eq_c;
  std::optional<bool> case2_b_div;
  std::optional<bool> case2_omega_bound;
  std::optional<bool> case3_all_equal;
  std::optional<bool> case3_div;
  std::optional<bool> equiv;

  /// Every evaluated flag holds.
  bool all_hold() const;
};

struct PeriodReport {
  u64 p = 0;
  int r = 0;
  u128 t = 0;
  std::optional<u64> omega;
  std::optional<std::vector<u64>> apparition;
  RootOrders orders;
  std::optional<std::pair<u64, u64>> delta_in_fp;
  TheoremChecks checks;
  bool partial = false;  // apparition scan exceeded its budget
};

/// Evaluates every applicable clause for p. Apparition-based flags are left
/// unset (and partial is raised) when the scan exceeds the budget.
PeriodReport verify_theorem(const SplittingReport& split, const Representation& rep,
                            u64 budget = kDefaultApparitionBudget);
PeriodReport verify_theorem(u64 p, u64 budget = kDefaultApparitionBudget);

struct DoubleDivisibility {
  bool powers_equal = false;     // α^n = β^n = γ^n
  bool divides_both = false;     // p | T_{n-3} and p | T_{n-2}
  std::optional<ExtElement> common_power;
};

/// p ≠ 23, n >= 3. Throws DegenerateDiscriminant for p = 23.
DoubleDivisibility double_divisibility(const SplittingReport& rep, u64 n);
DoubleDivisibility double_divisibility(u64 p, u64 n);

/// T_n mod 23 from 3T_n = 4·3^n - 4·10^n + 8n·10^(n-1), n >= 1.
u64 closed_form_23(u64 n);

/// n in [1, limit] with (-2)^n ≡ 9n + 1 (mod 23): the zeros of the closed form.
std::vector<u64> closed_form_23_zeros(u64 limit);

}  // namespace padovan
