#include "padovan/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

namespace padovan {

namespace {

void check_cap(bool ok, const std::string& what) {
  if (!ok) throw ScanCapExceeded(what);
}

int thread_count(int requested) { return requested > 0 ? requested : omp_get_max_threads(); }

// Rethrows the first exception captured inside a parallel region.
class ExceptionSlot {
 public:
  void capture() {
#pragma omp critical(padovan_exception_slot)
    if (!eptr_) eptr_ = std::current_exception();
  }
  void rethrow() const {
    if (eptr_) std::rethrow_exception(eptr_);
  }

 private:
  std::exception_ptr eptr_;
};

std::vector<char> composite_sieve(u64 limit) {
  std::vector<char> composite(limit + 1, 0);
  for (u64 i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return composite;
}

// P_n mod n for n < 2^32: every product fits a 64-bit word.
u64 perrin_residue_small(u64 n) {
  using M = std::array<u64, 9>;
  auto mul = [n](const M& a, const M& b) {
    M c{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        c[3 * i + j] = (a[3 * i] * b[j] % n + a[3 * i + 1] * b[3 + j] % n + a[3 * i + 2] * b[6 + j] % n) % n;
      }
    }
    return c;
  };
  M result = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  M base = {0, 1, 1, 1, 0, 0, 0, 1, 0};
  for (u64 e = n; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  // Bottom row against (P_2, P_1, P_0) = (2, 0, 3).
  return (result[6] * 2 + result[8] * 3) % n;
}

bool strip_shared_primes_to_one(const BigInt& tn, const BigInt& residue) {
  BigInt rest = tn, g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), residue.get_mpz_t());
    if (g == 1) break;
    rest /= g;
  }
  return rest == 1;
}

bool prime_term(const BigInt& v, bool& proven) {
  if (v < 2) return false;
  if (mpz_fits_ulong_p(v.get_mpz_t())) {
    proven = true;
    return is_prime(v.get_ui());
  }
  proven = false;
  // BPSW plus (64 - 24) = 40 extra Miller-Rabin bases.
  return mpz_probab_prime_p(v.get_mpz_t(), 64) > 0;
}

}  // namespace

std::optional<ConjectureFinding> evaluate_conjecture(ConjectureId id, const PeriodReport& rep) {
  const RootOrders& o = rep.orders;
  const u128 p = rep.p;
  switch (id) {
    case ConjectureId::Q1: {
      if (rep.r != 1 || rep.p == 23) return std::nullopt;
      std::array<u128, 3> s = {o.a, o.b, o.c};
      std::sort(s.begin(), s.end());
      return ConjectureFinding{id, rep.p, s[1] == s[2] && s[2] == 2 * s[0], rep.r, o};
    }
    case ConjectureId::Q2:
      if (rep.r != 2) return std::nullopt;
      return ConjectureFinding{id, rep.p, o.b == o.c && o.b == (p + 1) * o.a, rep.r, o};
    case ConjectureId::Q3:
      if (rep.r != 3) return std::nullopt;
      return ConjectureFinding{id, rep.p, o.a == o.b && o.b == o.c && o.a == 1 + p + p * p, rep.r, o};
  }
  return std::nullopt;
}

ScanRecord scan_prime(u64 p, const ScanOptions& opts) {
  ScanRecord rec;
  const SplittingReport sp = split(p);
  rec.representation = represent(p);
  rec.report = verify_theorem(sp, rec.representation, opts.theorem ? opts.budget : 0);
  if (!opts.theorem) rec.report.partial = false;

  auto status = [&](bool wanted, ConjectureId id) -> std::optional<bool> {
    if (!wanted) return std::nullopt;
    auto f = evaluate_conjecture(id, rec.report);
    return f ? std::optional<bool>(f->holds) : std::nullopt;
  };
  rec.q1 = status(opts.q1, ConjectureId::Q1);
  rec.q2 = status(opts.q2, ConjectureId::Q2);
  rec.q3 = status(opts.q3, ConjectureId::Q3);
  if (opts.equiv) rec.equiv = rec.report.checks.equiv;
  if (opts.theorem) {
    TheoremChecks c = rec.report.checks;
    c.equiv.reset();
    rec.theorem = c.all_hold();
  }
  return rec;
}

std::vector<ScanRecord> scan_primes_serial(u64 max_p, const ScanOptions& opts) {
  check_cap(max_p <= kMaxScanPrime, "scan limit above " + std::to_string(kMaxScanPrime));
  std::vector<ScanRecord> out;
  for (u64 p : primes_up_to(max_p)) out.push_back(scan_prime(p, opts));
  return out;
}

std::vector<ScanRecord> scan_primes(u64 max_p, const ScanOptions& opts) {
  check_cap(max_p <= kMaxScanPrime, "scan limit above " + std::to_string(kMaxScanPrime));
  const std::vector<u64> primes = primes_up_to(max_p);
  std::vector<ScanRecord> out(primes.size());
  ExceptionSlot slot;
  const auto count = static_cast<i64>(primes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(opts.threads))
  for (i64 i = 0; i < count; ++i) {
    try {
      out[i] = scan_prime(primes[i], opts);
    } catch (...) {
      slot.capture();
    }
  }
  slot.rethrow();
  return out;
}

std::vector<u64> perrin_pseudoprimes_serial(u64 max_n) {
  check_cap(max_n <= kMaxPerrinN, "pseudoprime limit above " + std::to_string(kMaxPerrinN));
  std::vector<u64> out;
  const auto perrin = RecurrenceSpec::perrin();
  for (u64 n = 4; n <= max_n; ++n) {
    if (!is_prime(n) && term_mod(perrin, n, n) == 0) out.push_back(n);
  }
  return out;
}

std::vector<u64> perrin_pseudoprimes(u64 max_n, int threads) {
  check_cap(max_n <= kMaxPerrinN, "pseudoprime limit above " + std::to_string(kMaxPerrinN));
  std::vector<u64> out;
  if (max_n < 4) return out;
  const std::vector<char> composite = composite_sieve(max_n);
  const auto last = static_cast<i64>(max_n);
#pragma omp parallel num_threads(thread_count(threads))
  {
    std::vector<u64> local;
#pragma omp for schedule(dynamic, 4096) nowait
    for (i64 n = 4; n <= last; ++n) {
      if (composite[n] && perrin_residue_small(static_cast<u64>(n)) == 0) local.push_back(static_cast<u64>(n));
    }
#pragma omp critical(padovan_perrin_merge)
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<i64> primitive_divisor_exceptions_serial(i64 max_index) {
  check_cap(max_index <= kMaxExceptionIndex, "exception index above " + std::to_string(kMaxExceptionIndex));
  std::vector<i64> out;
  const auto spec = RecurrenceSpec::padovan();
  BigInt a = 0, b = 1, c = 1;  // T_n, T_{n+1}, T_{n+2}
  BigInt product = 1;          // product of earlier terms > 1
  for (i64 n = 0; n <= max_index; ++n) {
    if (n > 0 && a > 1) {
      BigInt residue = product % a;
      if (strip_shared_primes_to_one(a, residue)) out.push_back(n);
      product *= a;
    }
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return out;
}

std::vector<i64> primitive_divisor_exceptions(i64 max_index, int threads) {
  check_cap(max_index <= kMaxExceptionIndex, "exception index above " + std::to_string(kMaxExceptionIndex));
  std::vector<i64> out;
  if (max_index < 1) return out;
  const PadovanTable table(max_index);
  std::vector<char> flag(static_cast<size_t>(max_index) + 1, 0);
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(threads))
  for (i64 n = max_index; n >= 1; --n) {
    try {
      const BigInt& tn = table[n];
      if (tn <= 1) continue;
      // Product of earlier terms reduced modulo T_n; gcds with it equal gcds with the full product.
      BigInt residue = 1;
      for (i64 m = 1; m < n; ++m) {
        if (table[m] <= 1) continue;
        residue *= table[m];
        residue %= tn;
      }
      flag[n] = strip_shared_primes_to_one(tn, residue) ? 1 : 0;
    } catch (...) {
      slot.capture();
    }
  }
  slot.rethrow();
  for (i64 n = 1; n <= max_index; ++n) {
    if (flag[n]) out.push_back(n);
  }
  return out;
}

std::vector<PrimeTerm> prime_terms_serial(i64 max_index) {
  check_cap(max_index <= kMaxPrimeTermIndex, "prime-term index above " + std::to_string(kMaxPrimeTermIndex));
  std::vector<PrimeTerm> out;
  BigInt a = 0, b = 1, c = 1;
  for (i64 n = 0; n <= max_index; ++n) {
    bool proven = false;
    if (n >= 1 && prime_term(a, proven)) out.push_back({n, proven});
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return out;
}

std::vector<PrimeTerm> prime_terms(i64 max_index, int threads) {
  check_cap(max_index <= kMaxPrimeTermIndex, "prime-term index above " + std::to_string(kMaxPrimeTermIndex));
  std::vector<PrimeTerm> out;
  if (max_index < 1) return out;
  const PadovanTable table(max_index);
  std::vector<signed char> state(static_cast<size_t>(max_index) + 1, -1);  // -1 not prime, 0 probable, 1 proven
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_count(threads))
  for (i64 n = 1; n <= max_index; ++n) {
    try {
      bool proven = false;
      if (prime_term(table[n], proven)) state[n] = proven ? 1 : 0;
    } catch (...) {
      slot.capture();
    }
  }
  slot.rethrow();
  for (i64 n = 1; n <= max_index; ++n) {
    if (state[n] >= 0) out.push_back({n, state[n] == 1});
  }
  return out;
}

std::optional<i64> padovan_index_of(const BigInt& v) {
  BigInt a = 0, b = 1, c = 1;
  for (i64 n = 0; a <= v || n < 3; ++n) {
    if (n >= 1 && a == v) return n;
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return std::nullopt;
}

namespace {

void check_square(i64 n, const BigInt& v, std::vector<SquareTerm>& out) {
  if (v <= 1 || !mpz_perfect_square_p(v.get_mpz_t())) return;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  out.push_back({n, v, root, std::nullopt});
}

void annotate_roots(std::vector<SquareTerm>& squares) {
  for (auto& s : squares) s.root_index = padovan_index_of(s.root);
}

}  // namespace

std::vector<SquareTerm> square_terms_serial(i64 max_index) {
  check_cap(max_index <= kMaxSquareIndex, "square index above " + std::to_string(kMaxSquareIndex));
  std::vector<SquareTerm> out;
  BigInt a = 0, b = 1, c = 1;
  for (i64 n = 0; n <= max_index; ++n) {
    if (n >= 1) check_square(n, a, out);
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  annotate_roots(out);
  return out;
}

std::vector<SquareTerm> square_terms(i64 max_index, int threads) {
  check_cap(max_index <= kMaxSquareIndex, "square index above " + std::to_string(kMaxSquareIndex));
  std::vector<SquareTerm> out;
  if (max_index < 1) return out;
  // Chunks are seeded independently by companion-matrix powers, then iterated.
  constexpr i64 kChunk = 2048;
  const i64 chunks = (max_index + kChunk) / kChunk;
  std::vector<std::vector<SquareTerm>> found(static_cast<size_t>(chunks));
  const auto spec = RecurrenceSpec::padovan();
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(threads))
  for (i64 k = 0; k < chunks; ++k) {
    try {
      const i64 lo = std::max<i64>(1, k * kChunk);
      const i64 hi = std::min(max_index, (k + 1) * kChunk - 1);
      BigInt a = term_fast(spec, lo), b = term_fast(spec, lo + 1), c = term_fast(spec, lo + 2);
      for (i64 n = lo; n <= hi; ++n) {
        check_square(n, a, found[k]);
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(c);
        c = std::move(next);
      }
    } catch (...) {
      slot.capture();
    }
  }
  slot.rethrow();
  for (auto& f : found) {
    for (auto& s : f) out.push_back(std::move(s));
  }
  annotate_roots(out);
  return out;
}

}  // namespace padovan
