#include "primcycle/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace primcycle {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> result;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0)
      continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    result.emplace_back(d, e);
  }
  if (n > 1)
    result.emplace_back(n, 1u);
  return result;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2)
    return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1)
    return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0)
      continue;
    result.push_back(d);
    if (d != n / d)
      result.push_back(n / d);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i)
    r = checked_mul(r, base);
  return r;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0)
    return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

std::optional<std::uint64_t> factorial(unsigned n) {
  if (n > 20)
    return std::nullopt;
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

} // namespace primcycle
