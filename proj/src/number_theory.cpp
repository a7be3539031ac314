#include "ordtype/number_theory.hpp"

#include <algorithm>
#include <numeric>

#include "ordtype/errors.hpp"

namespace ordtype {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, k] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front().first;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (const auto& [p, k] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t multiplicative_order(std::int64_t a, std::uint64_t n) {
  if (n == 0) throw BadParameter("multiplicative order modulo 0");
  const auto m = static_cast<std::int64_t>(n);
  const auto base = static_cast<std::uint64_t>(((a % m) + m) % m);
  if (std::gcd(base, n) != 1) throw BadParameter("multiplicative order of a non-unit");
  if (n == 1) return 1;
  std::uint64_t x = base;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * base % n;
    ++k;
  }
  return k;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace ordtype
