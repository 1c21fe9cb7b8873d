// Serial reference vs OpenMP kernels. Usage: bench_kernels [threads]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "padovan/scan.hpp"

using namespace padovan;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, const std::function<void()>& serial, const std::function<void()>& parallel) {
  double s = seconds(serial);
  double p = seconds(parallel);
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx\n", name, s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  std::printf("threads: %d\n", threads);

  ScanOptions opts;
  opts.threads = threads;
  row("scan primes <= 3000", [&] { scan_primes_serial(3000, opts); }, [&] { scan_primes(3000, opts); });
  row("perrin pseudoprimes <= 3e5", [] { perrin_pseudoprimes_serial(300000); },
      [&] { perrin_pseudoprimes(300000, threads); });
  row("exceptions n <= 1500", [] { primitive_divisor_exceptions_serial(1500); },
      [&] { primitive_divisor_exceptions(1500, threads); });
  row("prime terms n <= 2000", [] { prime_terms_serial(2000); }, [&] { prime_terms(2000, threads); });
  row("squares n <= 20000", [] { square_terms_serial(20000); }, [&] { square_terms(20000, threads); });
  return 0;
}
