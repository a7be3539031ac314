#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ordtype {

bool is_prime(std::uint64_t n);

// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Returns p when n = p^k with k >= 1.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

bool is_power_of(std::uint64_t n, std::uint64_t p);

std::uint64_t euler_phi(std::uint64_t n);

// Smallest m >= 1 with a^m = 1 (mod n); requires gcd(a, n) = 1.
std::uint64_t multiplicative_order(std::int64_t a, std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::uint64_t factorial(unsigned n);

}  // namespace ordtype
