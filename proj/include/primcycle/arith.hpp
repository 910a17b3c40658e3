#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace primcycle {

// Small exact integer helpers shared by the field, engine and classifier.

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, ascending (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned e;
};

/// n = p^e with p prime and e >= 1, if it exists.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Throws std::overflow_error on overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

/// n! when it fits in 64 bits (n <= 20).
std::optional<std::uint64_t> factorial(unsigned n);

} // namespace primcycle
