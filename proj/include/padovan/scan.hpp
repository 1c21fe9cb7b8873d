#pragma once

// Batch kernels behind the explorer commands. Each kernel has an
// OpenMP-parallel form and a serial reference with the same contract; the
// parallel form always returns its results in ascending key order.

#include <optional>
#include <vector>

#include "padovan/period.hpp"
#include "padovan/sequence.hpp"

namespace padovan {

inline constexpr u64 kMaxScanPrime = 1'000'000;
inline constexpr i64 kMaxExceptionIndex = 10'000;
inline constexpr i64 kMaxPrimeTermIndex = 5'000;
inline constexpr i64 kMaxSquareIndex = 100'000;
inline constexpr u64 kMaxPerrinN = 10'000'000;

/// Raised when a scan argument exceeds its hard cap.
class ScanCapExceeded : public Error {
 public:
  using Error::Error;
};

struct ScanOptions {
  bool theorem = true;
  bool q1 = true;
  bool q2 = true;
  bool q3 = true;
  bool equiv = true;
  u64 budget = kDefaultApparitionBudget;
  int threads = 0;  // 0: OpenMP default
};

enum class ConjectureId { Q1, Q2, Q3 };

/// One reported data point for an open question. Never an assertion.
struct ConjectureFinding {
  ConjectureId id;
  u64 p;
  bool holds;
  int r;
  RootOrders witness;
};

/// Q1 (r = 1, p ≠ 23): the orders are {o, 2o, 2o} in some labeling.
/// Q2 (r = 2): b = c = (p + 1)a.  Q3 (r = 3): a = 1 + p + p^2.
std::optional<ConjectureFinding> evaluate_conjecture(ConjectureId id, const PeriodReport& report);

struct ScanRecord {
  PeriodReport report;
  Representation representation;
  std::optional<bool> q1, q2, q3;
  std::optional<bool> equiv;
  std::optional<bool> theorem;  // all theorem flags hold

  bool violation() const { return (theorem && !*theorem) || (equiv && !*equiv); }
};

ScanRecord scan_prime(u64 p, const ScanOptions& opts);
std::vector<ScanRecord> scan_primes(u64 max_p, const ScanOptions& opts);
std::vector<ScanRecord> scan_primes_serial(u64 max_p, const ScanOptions& opts);

/// Composite n <= max_n with n | P_n.
std::vector<u64> perrin_pseudoprimes(u64 max_n, int threads = 0);
std::vector<u64> perrin_pseudoprimes_serial(u64 max_n);

/// n <= max_index with T_n > 1 such that every prime factor of T_n divides
/// some earlier T_m > 1. Decided with gcds against the product of earlier
/// terms, so no term is ever factored.
std::vector<i64> primitive_divisor_exceptions(i64 max_index, int threads = 0);
std::vector<i64> primitive_divisor_exceptions_serial(i64 max_index);

struct PrimeTerm {
  i64 index;
  bool proven;  // T_n < 2^64, deterministic test; otherwise BPSW + 40 Miller-Rabin bases

  bool operator==(const PrimeTerm&) const = default;
};

std::vector<PrimeTerm> prime_terms(i64 max_index, int threads = 0);
std::vector<PrimeTerm> prime_terms_serial(i64 max_index);

struct SquareTerm {
  i64 index;
  BigInt value;
  BigInt root;
  std::optional<i64> root_index;  // least m >= 1 with T_m = root

  bool operator==(const SquareTerm&) const = default;
};

/// Perfect squares T_n > 1, n <= max_index.
std::vector<SquareTerm> square_terms(i64 max_index, int threads = 0);
std::vector<SquareTerm> square_terms_serial(i64 max_index);

/// Least m >= 1 with T_m = v, if any.
std::optional<i64> padovan_index_of(const BigInt& v);

}  // namespace padovan
