#include "ordsplit/combinatorics.hpp"

#include <omp.h>

#include "ordsplit/exec.hpp"

namespace ordsplit {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > UINT64_MAX) throw std::overflow_error("binomial: result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::overflow_error("factorial: argument outside [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void set_thread_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace ordsplit
