#include <numeric>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "ordtype/constructors.hpp"
#include "ordtype/corpus.hpp"
#include "ordtype/errors.hpp"
#include "ordtype/finite_group.hpp"
#include "ordtype/group_expr.hpp"
#include "ordtype/structure.hpp"

using namespace ordtype;

namespace {

// Order-5 loop: Latin square with identity 0 and every element self-inverse,
// hence not associative.
const std::vector<std::vector<ElementId>> kLoop5 = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};

std::vector<FiniteGroup> corpus_groups(std::uint64_t max_order) {
  std::vector<FiniteGroup> out;
  for (const auto& e : builtin_corpus(max_order)) out.push_back(eval_expr(e));
  return out;
}

}  // namespace

TEST_CASE("from_cayley_table builds the trivial group and C_2") {
  const auto trivial = FiniteGroup::from_cayley_table({{0}}, "1");
  CHECK(trivial.size() == 1);
  CHECK(trivial.identity() == 0);

  const auto c2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}}, "C2");
  CHECK(c2.identity() == 0);
  CHECK(c2.inverse(1) == 1);
}

TEST_CASE("identity is detected wherever it sits") {
  // C_3 with the identity stored at index 2.
  const auto g = FiniteGroup::from_cayley_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, "C3");
  CHECK(g.identity() == 2);
  CHECK(g.inverse(0) == 1);
}

TEST_CASE("from_cayley_table rejects non-groups") {
  SUBCASE("mutated S_3 entry") {
    const auto s3 = symmetric(3);
    std::vector<ElementId> t(s3.table().begin(), s3.table().end());
    t[3 * 6 + 4] = (t[3 * 6 + 4] + 1) % 6;
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table(t, 6, "bad"), NotAGroup);
  }
  SUBCASE("no identity") {
    // x o y = -x - y over Z/3.
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}, "x"), NotAGroup);
  }
  SUBCASE("non-associative loop") {
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table(kLoop5, "loop", CheckLevel::full), NotAGroup);
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table(kLoop5, "loop", CheckLevel::generators), NotAGroup);
    const auto loop = FiniteGroup::from_cayley_table(kLoop5, "loop", CheckLevel::structural);
    CHECK_FALSE(is_associative(loop));
  }
  SUBCASE("one-sided inverse") {
    // Latin with identity 0, but 1*2 = 0 while 2*1 = 4.
    const std::vector<std::vector<ElementId>> bad = {
        {0, 1, 2, 3, 4}, {1, 2, 0, 4, 3}, {2, 4, 3, 1, 0}, {3, 0, 4, 2, 1}, {4, 3, 1, 0, 2}};
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table(bad, "bad", CheckLevel::structural), NotAGroup);
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {1}}, "x"), BadParameter);
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 2}, {2, 0}}, "x"), BadParameter);
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table(std::vector<ElementId>{}, 0, "x"), BadParameter);
  }
  SUBCASE("full check refused above 1024") {
    const std::size_t n = 1025;
    std::vector<ElementId> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<ElementId>((i + j) % n);
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table(t, n, "C1025", CheckLevel::full), BadParameter);
    CHECK(FiniteGroup::from_cayley_table(t, n, "C1025", CheckLevel::structural).size() == n);
  }
}

TEST_CASE("power and element_order") {
  const auto c6 = cyclic(6);
  for (ElementId x = 0; x < 6; ++x) CHECK(power(c6, x, 0) == c6.identity());
  CHECK(power(c6, 1, 6) == c6.identity());

  const auto s3 = symmetric(3);
  for (ElementId x = 0; x < 6; ++x) {
    if (oracle::naive_order(s3, x) == 2) CHECK(power(s3, x, 3) == x);
  }

  const auto c12 = cyclic(12);
  CHECK(element_order(c12, c12.identity()) == 1);
  for (ElementId u : {1, 5, 7, 11}) CHECK(element_order(c12, u) == 12);

  // y = b sits right after the 8 powers of a.
  const auto q16 = generalized_quaternion(16);
  CHECK(element_order(q16, 8) == 4);
  CHECK(oracle::naive_order(q16, 8) == 4);
}

TEST_CASE("order properties on corpus groups up to 64") {
  for (const auto& g : corpus_groups(64)) {
    CAPTURE(g.label());
    for (ElementId x = 0; x < g.size(); ++x) {
      const auto o = element_order(g, x);
      REQUIRE(g.order() % o == 0);
      for (std::uint64_t k = 0; k <= g.order(); k += 1 + g.order() / 16) {
        REQUIRE(element_order(g, power(g, x, k)) == o / std::gcd(o, k));
        REQUIRE(power(g, x, k) == oracle::naive_power(g, x, k));
      }
    }
  }
}

TEST_CASE("subgroup_generated") {
  const auto c8 = cyclic(8);
  CHECK(subgroup_generated(c8, {}) == Subset{c8.identity()});
  const std::vector<ElementId> gen{1};
  CHECK(subgroup_generated(c8, gen).size() == 8);

  const auto s3 = symmetric(3);
  for (ElementId x = 0; x < 6; ++x) {
    if (oracle::naive_order(s3, x) != 3) continue;
    const std::vector<ElementId> seed{x};
    const auto h = subgroup_generated(s3, seed);
    const auto o = oracle::pairwise_closure(s3, seed);
    CHECK(h.size() == 3);
    CHECK(Subset(o.begin(), o.end()) == h);
  }
}

TEST_CASE("center") {
  CHECK(center(cyclic(10)).size() == 10);
  CHECK(center(elementary_abelian(3, 2)).size() == 9);
  CHECK(center(symmetric(3)) == Subset{symmetric(3).identity()});
  CHECK(center(dihedral(16)).size() == 2);
  CHECK(is_normal_subgroup(dihedral(16), center(dihedral(16))));
}

TEST_CASE("derived subgroup and solvability") {
  CHECK(derived_subgroup(cyclic(12)).size() == 1);
  CHECK(is_solvable(cyclic(12)));
  CHECK(derived_subgroup(symmetric(3)).size() == 3);
  CHECK(is_solvable(symmetric(3)));
  CHECK(derived_subgroup(alternating(5)).size() == 60);
  CHECK_FALSE(is_solvable(alternating(5)));
  CHECK_FALSE(is_solvable(sl2(5)));
  CHECK(is_solvable(sl2(3)));
}

TEST_CASE("derived series length is at most log2 |G| for solvable groups") {
  for (const auto& g : corpus_groups(128)) {
    if (!is_solvable(g)) continue;
    CAPTURE(g.label());
    const auto steps = derived_series(g).size() - 1;
    CHECK((std::uint64_t{1} << steps) <= g.order());
  }
}

TEST_CASE("is_nilpotent") {
  CHECK(is_nilpotent(generalized_quaternion(8)));
  CHECK_FALSE(is_nilpotent(symmetric(3)));
  CHECK(is_nilpotent(direct_product(cyclic(7), generalized_quaternion(8))));
  CHECK(is_nilpotent(cyclic(1)));
  for (const auto& g : corpus_groups(64)) {
    CAPTURE(g.label());
    CHECK(is_nilpotent(g) == oracle::lower_central_nilpotent(g));
  }
}

TEST_CASE("quotient") {
  const auto s3 = symmetric(3);
  const auto same = quotient(s3, Subset{s3.identity()});
  CHECK(std::equal(same.table().begin(), same.table().end(), s3.table().begin()));

  Subset all(6);
  std::iota(all.begin(), all.end(), ElementId{0});
  CHECK(quotient(s3, all).size() == 1);

  const auto c8 = cyclic(8);
  const auto q = quotient(c8, Subset{0, 4});
  CHECK(q.size() == 4);
  bool has_order_four = false;
  for (ElementId x = 0; x < 4; ++x) has_order_four |= oracle::naive_order(q, x) == 4;
  CHECK(has_order_four);

  ElementId transposition = 0;
  while (oracle::naive_order(s3, transposition) != 2) ++transposition;
  CHECK_THROWS_AS(quotient(s3, Subset{s3.identity(), transposition}), NotNormal);
  CHECK_THROWS_AS(quotient(c8, Subset{0, 1}), NotASubgroup);
}

TEST_CASE("quotient by the center is a group for every corpus group") {
  for (const auto& g : corpus_groups(128)) {
    CAPTURE(g.label());
    const auto z = center(g);
    const auto q = quotient(g, z);
    CHECK(q.order() * z.size() == g.order());
    if (q.size() <= 64) CHECK(is_associative(q));
  }
}

TEST_CASE("structural_profile") {
  const auto c2 = structural_profile(cyclic(2));
  CHECK(c2.is_abelian);
  CHECK(c2.is_nilpotent);
  CHECK(c2.exponent == 2);
  CHECK(c2.c2 == 1);
  CHECK(c2.p_group_prime == 2U);

  const auto hol = structural_profile(holomorph_cyclic(8));
  CHECK(hol.p_group_prime == 2U);
  std::uint64_t involutions = 0;
  const auto h = holomorph_cyclic(8);
  for (ElementId x = 0; x < h.size(); ++x) involutions += oracle::naive_order(h, x) == 2;
  CHECK(hol.c2 == involutions);
  CHECK(hol.is_two_group_with_many_involutions());

  const auto s3 = structural_profile(symmetric(3));
  CHECK_FALSE(s3.is_nilpotent);
  CHECK(s3.is_solvable);
  CHECK(s3.exponent == 6);
  CHECK(s3.prime_divisors == std::vector<std::uint64_t>{2, 3});
  CHECK_FALSE(s3.p_group_prime.has_value());

  CHECK_FALSE(structural_profile(cyclic(1)).p_group_prime.has_value());
}

TEST_CASE("profile invariants hold across the corpus") {
  for (const auto& g : corpus_groups(128)) {
    const auto p = structural_profile(g);
    CAPTURE(g.label());
    CHECK(g.order() % p.exponent == 0);
    if (p.is_abelian) CHECK(p.is_nilpotent);
    if (p.is_nilpotent) CHECK(p.is_solvable);
    if (p.p_group_prime) CHECK(p.is_nilpotent);
  }
}

TEST_CASE("concurrent reads of one group agree with sequential results") {
  const auto g = sl2(5);
  std::vector<std::uint64_t> expected(g.size());
  for (ElementId x = 0; x < g.size(); ++x) expected[x] = element_order(g, x);
  std::vector<std::vector<std::uint64_t>> got(4, std::vector<std::uint64_t>(g.size()));
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < got.size(); ++w) {
      workers.emplace_back([&, w] {
        for (ElementId x = 0; x < g.size(); ++x) got[w][x] = element_order(g, x);
      });
    }
  }
  for (const auto& v : got) CHECK(v == expected);
}
