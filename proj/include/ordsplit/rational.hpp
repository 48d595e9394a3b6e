#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordsplit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Returns the integer value of x when x is integral and fits in an int.
inline std::optional<int> as_small_integer(double x) {
  if (!std::isfinite(x) || x != std::floor(x) || std::abs(x) > 1e9) {
    return std::nullopt;
  }
  return static_cast<int>(x);
}

}  // namespace ordsplit
