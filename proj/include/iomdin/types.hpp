#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace iomdin {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an input is well-formed but violates the combinatorial
/// constraints of the calculus (non-integral decorations, broken covering
/// axioms, inadmissible k, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

template <typename... Rest>
Int gcd(Int a, Int b, Rest... rest) {
  return gcd(std::gcd(a, b), rest...);
}

inline Int lcm(Int a, Int b) { return std::lcm(a, b); }

}  // namespace iomdin
