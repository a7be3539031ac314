#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordtype/finite_group.hpp"

namespace ordtype {

// n -> s_n, the number of elements of order n. Orders with no elements are
// absent.
struct OrderSpectrum {
  std::uint64_t group_order = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t count(std::uint64_t n) const {
    auto it = counts.find(n);
    return it == counts.end() ? 0 : it->second;
  }
  std::string to_string() const;  // "{1:1, 2:3, 3:2}"
};

// tau_e(G): the distinct spectrum counts, strictly increasing.
struct SameOrderType {
  std::vector<std::uint64_t> sizes;

  std::size_t size() const noexcept { return sizes.size(); }
  bool operator==(const SameOrderType&) const = default;
  std::string to_string() const;  // "{1, 2, 3}"
};

OrderSpectrum order_spectrum(const FiniteGroup& g);
SameOrderType same_order_type(const OrderSpectrum& spectrum);

// c_n computed as s_n / phi(n) and by enumerating the distinct subgroups <x>
// of order n. Throws InternalInconsistency if the two disagree.
std::uint64_t cyclic_subgroup_count(const FiniteGroup& g, std::uint64_t n);

struct IndexedCheck {
  std::uint64_t n = 0;
  bool ok = false;
};

// Executable form of the classical element-count lemmas.
struct AuditReport {
  std::vector<IndexedCheck> frobenius;              // n | sum_{m|n} s_m, per divisor n of |G|
  std::vector<IndexedCheck> sylow_congruence;       // s_p = -1 (mod p), per prime p | |G|
  std::vector<IndexedCheck> totient_divisibility;   // phi(n) | s_n, per order n present
  std::uint64_t max_class_size = 0;                 // s, the largest spectrum count
  bool bound_applicable = false;                    // |G| > 2
  bool bound_ok = true;                             // |G| <= s(s^2 - 1)
  // s_p != s_q for distinct primes p, q; set only when |G| is odd and |tau_e| = 3.
  std::optional<bool> distinct_prime_counts_ok;

  bool all_ok() const;
  std::vector<std::string> failures() const;
};

AuditReport divisibility_audit(const FiniteGroup& g);
AuditReport divisibility_audit(const OrderSpectrum& spectrum);

}  // namespace ordtype
