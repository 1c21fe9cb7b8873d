#include <set>

#include "doctest.h"
#include "padovan/report.hpp"
#include "padovan/scan.hpp"

using namespace padovan;

namespace {

// Factor every T_n with 64-bit trial division plus rho and track primes seen so far.
std::vector<i64> exceptions_by_factoring(i64 max_index) {
  std::vector<i64> out;
  std::set<u64> seen;
  u64 a = 0, b = 1, c = 1;  // T_n, T_{n+1}, T_{n+2}
  for (i64 n = 0; n <= max_index; ++n) {
    if (a > 1) {
      bool fresh = false;
      for (u64 q : factorize(a)) fresh = seen.insert(q).second || fresh;
      if (!fresh) out.push_back(n);
    }
    const u64 d = a + b;
    a = b;
    b = c;
    c = d;
  }
  return out;
}

}  // namespace

TEST_CASE("conjecture evaluation") {
  const auto r59 = verify_theorem(59);
  auto q1 = evaluate_conjecture(ConjectureId::Q1, r59);
  REQUIRE(q1);
  CHECK(q1->holds);
  CHECK_FALSE(evaluate_conjecture(ConjectureId::Q2, r59));

  for (u64 p : {7, 11}) {
    auto q2 = evaluate_conjecture(ConjectureId::Q2, verify_theorem(p));
    REQUIRE(q2);
    CHECK(q2->holds);
  }
  auto q3 = evaluate_conjecture(ConjectureId::Q3, verify_theorem(3));
  REQUIRE(q3);
  CHECK(q3->holds);
  CHECK_FALSE(evaluate_conjecture(ConjectureId::Q1, verify_theorem(7)));
  CHECK_FALSE(evaluate_conjecture(ConjectureId::Q1, verify_theorem(23)));
}

TEST_CASE("parallel scan matches the serial reference") {
  ScanOptions opts;
  opts.threads = 4;
  const auto par = scan_primes(600, opts);
  const auto ser = scan_primes_serial(600, opts);
  REQUIRE(par.size() == ser.size());
  for (size_t i = 0; i < par.size(); ++i) {
    CHECK(to_json(par[i]).dump() == to_json(ser[i]).dump());
    if (i > 0) CHECK(par[i - 1].report.p < par[i].report.p);
    CHECK_FALSE(par[i].violation());
  }
  CHECK_THROWS_AS(scan_primes(kMaxScanPrime + 1, opts), ScanCapExceeded);
}

TEST_CASE("Perrin pseudoprimes in small ranges") {
  CHECK(perrin_pseudoprimes(1000).empty());
  CHECK(perrin_pseudoprimes(1).empty());
  CHECK(perrin_pseudoprimes(20000, 4) == perrin_pseudoprimes_serial(20000));
  CHECK_THROWS_AS(perrin_pseudoprimes(kMaxPerrinN + 1), ScanCapExceeded);
}

TEST_CASE("primitive divisor exceptions") {
  CHECK(primitive_divisor_exceptions(4).empty());
  CHECK(primitive_divisor_exceptions(22) == std::vector<i64>{5, 7, 10, 11, 12, 13, 14, 16, 21});
  // T_33 = 2 * 23 * 127 introduces 127, so 33 is not an exception.
  CHECK(primitive_divisor_exceptions(50) == std::vector<i64>{5, 7, 10, 11, 12, 13, 14, 16, 21, 23, 32, 45});
  const auto oracle = exceptions_by_factoring(150);
  CHECK(primitive_divisor_exceptions(150, 4) == oracle);
  CHECK(primitive_divisor_exceptions_serial(150) == oracle);
  CHECK(primitive_divisor_exceptions(1200, 4) == primitive_divisor_exceptions_serial(1200));
  CHECK_THROWS_AS(primitive_divisor_exceptions(kMaxExceptionIndex + 1), ScanCapExceeded);
}

TEST_CASE("prime terms") {
  auto idx = [](const std::vector<PrimeTerm>& v) {
    std::vector<i64> out;
    for (const auto& t : v) out.push_back(t.index);
    return out;
  };
  CHECK(idx(prime_terms(10)) == std::vector<i64>{4, 5, 6, 8, 9});
  CHECK(idx(prime_terms(40)) == std::vector<i64>{4, 5, 6, 8, 9, 15, 20, 31, 38});
  CHECK(prime_terms(3).empty());
  for (const auto& t : prime_terms(40)) CHECK(t.proven);
  CHECK(prime_terms(600, 4) == prime_terms_serial(600));
}

TEST_CASE("square terms") {
  const auto sq = square_terms(20);
  REQUIRE(sq.size() == 4);
  const std::vector<std::pair<i64, long>> want = {{7, 2}, {10, 3}, {12, 4}, {16, 7}};
  const std::vector<i64> root_index = {4, 6, 7, 9};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(sq[i].index == want[i].first);
    CHECK(sq[i].root == want[i].second);
    CHECK(sq[i].value == want[i].second * want[i].second);
    REQUIRE(sq[i].root_index);
    CHECK(*sq[i].root_index == root_index[i]);
  }
  CHECK(square_terms(9).size() == 1);
  const auto big = square_terms(10000, 4);
  CHECK(big == square_terms_serial(10000));
  CHECK(big.size() >= 4);
  CHECK_FALSE(padovan_index_of(BigInt(6)));
  CHECK(*padovan_index_of(BigInt(1)) == 1);
}
