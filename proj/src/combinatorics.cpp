#include "hyperlaplace/combinatorics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hyperlaplace {

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  if (n <= kExactFactorialLimit) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return static_cast<double>(f);
  }
  return std::tgamma(static_cast<double>(n) + 1.0);
}

std::optional<std::uint64_t> binomial_exact(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i, with the division folded in first via gcd so the
    // intermediate stays as small as possible.
    auto num = static_cast<std::uint64_t>(n - k + i);
    auto den = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(result, den);
    result /= g;
    den /= g;
    num /= den;  // den now divides num because C(n-k+i, i) is integral
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(result, num, &next)) return std::nullopt;
    result = next;
  }
  return result;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (auto exact = binomial_exact(n, k)) return static_cast<double>(*exact);
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace hyperlaplace
