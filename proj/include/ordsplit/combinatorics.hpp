#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ordsplit {

// C(n, k) in 64 bits; throws std::overflow_error when the value does not fit.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

std::uint64_t factorial(int n);

// Calls f(const std::vector<int>&) for every k-subset of {lo, ..., hi} in
// lexicographic order. Stops early when f returns false.
template <typename F>
void for_each_combination(int lo, int hi, int k, F&& f) {
  if (k < 0 || hi - lo + 1 < k) return;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = lo + i;
  while (true) {
    if (!f(static_cast<const std::vector<int>&>(c))) return;
    int i = k - 1;
    while (i >= 0 && c[i] == hi - (k - 1 - i)) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

inline bool is_power_of_two(std::int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace ordsplit
