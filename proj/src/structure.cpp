#include "ordtype/structure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ordtype/errors.hpp"
#include "ordtype/number_theory.hpp"

namespace ordtype {

namespace {

std::vector<char> membership(const FiniteGroup& g, std::span<const ElementId> subset) {
  std::vector<char> in(g.size(), 0);
  for (auto x : subset) {
    if (!g.contains(x)) throw BadParameter("element " + std::to_string(x) + " out of range");
    in[x] = 1;
  }
  return in;
}

std::vector<ElementId> dedupe(std::vector<ElementId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Subset subgroup_generated(const FiniteGroup& g, std::span<const ElementId> seeds) {
  const auto gens = dedupe({seeds.begin(), seeds.end()});
  std::vector<char> in(g.size(), 0);
  Subset members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (auto s : gens) {
      auto y = g.mul(members[k], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const FiniteGroup& g, std::span<const ElementId> subset) {
  if (subset.empty()) return false;
  auto in = membership(g, subset);
  if (!in[g.identity()]) return false;
  for (auto a : subset) {
    if (!in[g.inverse(a)]) return false;
    for (auto b : subset) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, std::span<const ElementId> subset) {
  if (!is_subgroup(g, subset)) return false;
  auto in = membership(g, subset);
  for (ElementId x = 0; x < g.size(); ++x) {
    const auto xi = g.inverse(x);
    for (auto n : subset) {
      if (!in[g.mul(g.mul(x, n), xi)]) return false;
    }
  }
  return true;
}

Subset center(const FiniteGroup& g) {
  Subset z;
  for (ElementId a = 0; a < g.size(); ++a) {
    bool central = true;
    for (ElementId b = 0; b < g.size() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

bool is_abelian(const FiniteGroup& g) { return center(g).size() == g.size(); }

Subset commutator_subgroup(const FiniteGroup& g, std::span<const ElementId> a,
                           std::span<const ElementId> b) {
  std::vector<char> seen(g.size(), 0);
  std::vector<ElementId> comms;
  for (auto x : a) {
    for (auto y : b) {
      auto c = g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  }
  return subgroup_generated(g, comms);
}

Subset derived_subgroup(const FiniteGroup& g) {
  Subset all(g.size());
  std::iota(all.begin(), all.end(), ElementId{0});
  return commutator_subgroup(g, all, all);
}

std::vector<Subset> derived_series(const FiniteGroup& g) {
  Subset current(g.size());
  std::iota(current.begin(), current.end(), ElementId{0});
  std::vector<Subset> series{current};
  for (;;) {
    auto next = commutator_subgroup(g, current, current);
    if (next.size() == current.size()) break;
    series.push_back(next);
    current = std::move(next);
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().size() == 1; }

bool is_nilpotent(const FiniteGroup& g) {
  std::vector<std::uint64_t> orders(g.size());
  for (ElementId x = 0; x < g.size(); ++x) orders[x] = element_order(g, x);
  for (auto p : prime_divisors(g.order())) {
    std::vector<ElementId> members;
    std::vector<char> in(g.size(), 0);
    for (ElementId x = 0; x < g.size(); ++x) {
      if (is_power_of(orders[x], p) || orders[x] == 1) {
        members.push_back(x);
        in[x] = 1;
      }
    }
    for (auto a : members) {
      for (auto b : members) {
        if (!in[g.mul(a, b)]) return false;
      }
    }
  }
  return true;
}

FiniteGroup quotient(const FiniteGroup& g, std::span<const ElementId> normal) {
  const auto n = dedupe({normal.begin(), normal.end()});
  if (!is_subgroup(g, n)) throw NotASubgroup("quotient of " + g.label());
  if (!is_normal_subgroup(g, n)) throw NotNormal("quotient of " + g.label());

  constexpr auto kUnassigned = static_cast<ElementId>(-1);
  std::vector<ElementId> coset_of(g.size(), kUnassigned);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.size(); ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const auto id = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (auto m : n) coset_of[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<ElementId> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset_of[g.mul(reps[i], reps[j])];
  }
  return FiniteGroup::from_cayley_table(std::move(table), q, g.label() + " / N",
                                        CheckLevel::structural);
}

StructuralProfile structural_profile(const FiniteGroup& g) {
  StructuralProfile p;
  const auto z = center(g);
  p.center_size = z.size();
  p.is_abelian = z.size() == g.size();
  p.is_nilpotent = is_nilpotent(g);
  p.is_solvable = is_solvable(g);
  if (g.order() > 1) p.p_group_prime = prime_power_base(g.order());
  p.prime_divisors = prime_divisors(g.order());
  for (ElementId x = 0; x < g.size(); ++x) {
    const auto o = element_order(g, x);
    p.exponent = std::lcm(p.exponent, o);
    if (o == 2) ++p.c2;
  }
  return p;
}

}  // namespace ordtype
