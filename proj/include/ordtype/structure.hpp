#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ordtype/finite_group.hpp"

namespace ordtype {

// Closure of seeds and the identity; always a subgroup.
Subset subgroup_generated(const FiniteGroup& g, std::span<const ElementId> seeds);

bool is_subgroup(const FiniteGroup& g, std::span<const ElementId> subset);
bool is_normal_subgroup(const FiniteGroup& g, std::span<const ElementId> subset);

Subset center(const FiniteGroup& g);

// <[a, b] : a in A, b in B> with [a, b] = a^-1 b^-1 a b.
Subset commutator_subgroup(const FiniteGroup& g, std::span<const ElementId> a,
                           std::span<const ElementId> b);

Subset derived_subgroup(const FiniteGroup& g);

// G = G^(0) > G^(1) > ... up to the first repeated term.
std::vector<Subset> derived_series(const FiniteGroup& g);

bool is_solvable(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

// True iff for every prime p dividing |G| the p-power-order elements are
// closed under multiplication, i.e. every Sylow subgroup is normal.
bool is_nilpotent(const FiniteGroup& g);

// G/N with cosets indexed by increasing minimal representative.
// Throws NotASubgroup or NotNormal.
FiniteGroup quotient(const FiniteGroup& g, std::span<const ElementId> normal);

struct StructuralProfile {
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::optional<std::uint64_t> p_group_prime;
  std::uint64_t exponent = 1;
  std::uint64_t center_size = 1;
  std::uint64_t c2 = 0;
  std::vector<std::uint64_t> prime_divisors;

  bool is_two_group_with_many_involutions() const {
    return p_group_prime == 2U && c2 > 1;
  }
};

StructuralProfile structural_profile(const FiniteGroup& g);

}  // namespace ordtype
