#include "ordtype/order_stats.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ordtype/errors.hpp"
#include "ordtype/number_theory.hpp"

namespace ordtype {

std::string OrderSpectrum::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [n, s] : counts) {
    os << (first ? "" : ", ") << n << ':' << s;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string SameOrderType::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? ", " : "") << sizes[i];
  os << '}';
  return os.str();
}

OrderSpectrum order_spectrum(const FiniteGroup& g) {
  OrderSpectrum s;
  s.group_order = g.order();
  for (ElementId x = 0; x < g.size(); ++x) ++s.counts[element_order(g, x)];
  return s;
}

SameOrderType same_order_type(const OrderSpectrum& spectrum) {
  SameOrderType t;
  for (const auto& [n, c] : spectrum.counts) t.sizes.push_back(c);
  std::sort(t.sizes.begin(), t.sizes.end());
  t.sizes.erase(std::unique(t.sizes.begin(), t.sizes.end()), t.sizes.end());
  return t;
}

std::uint64_t cyclic_subgroup_count(const FiniteGroup& g, std::uint64_t n) {
  if (n == 0) throw BadParameter("cyclic subgroups of order 0");
  std::uint64_t s_n = 0;
  std::set<Subset> subgroups;
  for (ElementId x = 0; x < g.size(); ++x) {
    if (element_order(g, x) != n) continue;
    ++s_n;
    Subset cyc;
    ElementId y = g.identity();
    do {
      cyc.push_back(y);
      y = g.mul(y, x);
    } while (y != g.identity());
    std::sort(cyc.begin(), cyc.end());
    subgroups.insert(std::move(cyc));
  }
  const auto phi = euler_phi(n);
  if (s_n % phi != 0 || s_n / phi != subgroups.size()) {
    throw InternalInconsistency("c_" + std::to_string(n) + " of " + g.label() + ": s_n/phi(n) = " +
                                std::to_string(s_n) + "/" + std::to_string(phi) +
                                " but enumeration found " + std::to_string(subgroups.size()));
  }
  return subgroups.size();
}

AuditReport divisibility_audit(const OrderSpectrum& spectrum) {
  AuditReport r;
  const auto order = spectrum.group_order;
  for (auto n : divisors(order)) {
    std::uint64_t sum = 0;
    for (auto m : divisors(n)) sum += spectrum.count(m);
    r.frobenius.push_back({n, sum % n == 0});
  }
  const auto primes = prime_divisors(order);
  for (auto p : primes) r.sylow_congruence.push_back({p, (spectrum.count(p) + 1) % p == 0});
  for (const auto& [n, s] : spectrum.counts) {
    r.totient_divisibility.push_back({n, s % euler_phi(n) == 0});
    r.max_class_size = std::max(r.max_class_size, s);
  }
  // The bound fails for C_2 (s = 1), the one group with |G| >= 2 and s(s^2-1) = 0.
  r.bound_applicable = order > 2;
  if (r.bound_applicable) {
    const auto s = r.max_class_size;
    r.bound_ok = order <= s * (s * s - 1);
  }
  if (order % 2 == 1 && same_order_type(spectrum).size() == 3) {
    bool distinct = true;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        distinct = distinct && spectrum.count(primes[i]) != spectrum.count(primes[j]);
      }
    }
    r.distinct_prime_counts_ok = distinct;
  }
  return r;
}

AuditReport divisibility_audit(const FiniteGroup& g) { return divisibility_audit(order_spectrum(g)); }

bool AuditReport::all_ok() const { return failures().empty(); }

std::vector<std::string> AuditReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : frobenius) {
    if (!c.ok) out.push_back("frobenius divisibility fails at n=" + std::to_string(c.n));
  }
  for (const auto& c : sylow_congruence) {
    if (!c.ok) out.push_back("s_p != -1 mod p at p=" + std::to_string(c.n));
  }
  for (const auto& c : totient_divisibility) {
    if (!c.ok) out.push_back("phi(n) does not divide s_n at n=" + std::to_string(c.n));
  }
  if (!bound_ok) out.push_back("|G| > s(s^2-1) with s=" + std::to_string(max_class_size));
  if (distinct_prime_counts_ok == false) out.push_back("s_p = s_q for distinct primes p, q");
  return out;
}

}  // namespace ordtype
