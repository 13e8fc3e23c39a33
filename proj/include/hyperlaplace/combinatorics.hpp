#pragma once

#include <cstdint>
#include <optional>

namespace hyperlaplace {

// Factorials are exact in 64-bit integers up to 20!; beyond that the
// floating-point helpers switch to Gamma-function evaluation.
inline constexpr int kExactFactorialLimit = 20;

/// n! as a double. Exact for n <= kExactFactorialLimit, tgamma above.
double factorial(int n);

/// Binomial coefficient C(n, k) as an exact integer, or nullopt on overflow.
std::optional<std::uint64_t> binomial_exact(std::int64_t n, std::int64_t k);

/// C(n, k) as a double: exact when it fits in 64 bits, log-Gamma otherwise.
double binomial(int n, int k);

}  // namespace hyperlaplace
