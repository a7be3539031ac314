#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ordtype/constructors.hpp"
#include "ordtype/corpus.hpp"
#include "ordtype/errors.hpp"
#include "ordtype/group_expr.hpp"
#include "ordtype/number_theory.hpp"
#include "ordtype/order_stats.hpp"

using namespace ordtype;
using Spectrum = std::map<std::uint64_t, std::uint64_t>;

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  for (unsigned k = 1; k < 20; ++k) CHECK(euler_phi(std::uint64_t{1} << k) == (std::uint64_t{1} << (k - 1)));
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    CAPTURE(n);
    CHECK(euler_phi(n) == oracle::naive_phi(n));
  }
}

TEST_CASE("order_spectrum") {
  CHECK(order_spectrum(symmetric(3)).counts == Spectrum{{1, 1}, {2, 3}, {3, 2}});
  CHECK(order_spectrum(generalized_quaternion(16)).counts == Spectrum{{1, 1}, {2, 1}, {4, 10}, {8, 4}});
  CHECK(order_spectrum(cyclic(1)).counts == Spectrum{{1, 1}});
  CHECK(order_spectrum(symmetric(3)).group_order == 6);
  CHECK(order_spectrum(symmetric(3)).to_string() == "{1:1, 2:3, 3:2}");
  CHECK(order_spectrum(symmetric(3)).count(6) == 0);
}

TEST_CASE("same_order_type") {
  CHECK(same_order_type(order_spectrum(generalized_quaternion(16))) == SameOrderType{{1, 4, 10}});
  CHECK(same_order_type(order_spectrum(direct_product(cyclic(2), symmetric(3)))) == SameOrderType{{1, 2, 7}});
  CHECK(same_order_type(order_spectrum(cyclic(2))) == SameOrderType{{1}});
  CHECK(same_order_type(order_spectrum(cyclic(1))) == SameOrderType{{1}});
  CHECK(same_order_type(order_spectrum(cyclic(8))).to_string() == "{1, 2, 4}");
}

TEST_CASE("cyclic_subgroup_count") {
  CHECK(cyclic_subgroup_count(elementary_abelian(2, 3), 2) == 7);
  CHECK(cyclic_subgroup_count(generalized_quaternion(8), 4) == 3);
  CHECK(cyclic_subgroup_count(symmetric(3), 6) == 0);
  for (std::uint64_t n = 8; n <= 256; n *= 2) {
    CAPTURE(n);
    CHECK(cyclic_subgroup_count(dihedral(n), 4) % 2 == 1);
  }
}

TEST_CASE("divisibility_audit examples") {
  const auto s3 = divisibility_audit(symmetric(3));
  CHECK(s3.all_ok());
  bool saw_six = false;
  for (const auto& c : s3.frobenius)
    if (c.n == 6) {
      saw_six = true;
      CHECK(c.ok);
    }
  CHECK(saw_six);
  CHECK(s3.frobenius.size() == 4);
  CHECK(s3.sylow_congruence.size() == 2);
  CHECK(s3.bound_applicable);
  CHECK_FALSE(s3.distinct_prime_counts_ok.has_value());

  const auto a5 = divisibility_audit(alternating(5));
  CHECK(a5.max_class_size == 24);
  CHECK(a5.bound_ok);
  CHECK(a5.all_ok());

  for (const auto& expr : {"C(3)", "C(9)", "Sym(3)", "SL2(3)", "EA(3, 3)", "FrobF(7, 1, 3)"}) {
    const auto spec = order_spectrum(eval_expr(expr));
    CAPTURE(expr);
    CHECK(spec.count(3) % 3 == 2);
  }

  const auto c2 = divisibility_audit(cyclic(2));
  CHECK_FALSE(c2.bound_applicable);
  CHECK(c2.all_ok());

  const auto f21 = divisibility_audit(frobenius_field(7, 1, 3));
  REQUIRE(f21.distinct_prime_counts_ok.has_value());
  CHECK(*f21.distinct_prime_counts_ok);
}

TEST_CASE("divisibility_audit reports failures on a forged spectrum") {
  OrderSpectrum forged;
  forged.group_order = 6;
  forged.counts = {{1, 1}, {2, 2}, {3, 3}};
  const auto report = divisibility_audit(forged);
  CHECK_FALSE(report.all_ok());
  CHECK_FALSE(report.failures().empty());
}

TEST_CASE("audit and spectrum invariants over the corpus") {
  for (const auto& e : builtin_corpus(128)) {
    const auto g = eval_expr(e);
    CAPTURE(g.label());
    const auto spec = order_spectrum(g);
    std::uint64_t total = 0;
    for (const auto& [n, c] : spec.counts) {
      total += c;
      CHECK(g.order() % n == 0);
      CHECK(c % euler_phi(n) == 0);
      if (n >= 3) CHECK(c % 2 == 0);
      CHECK(cyclic_subgroup_count(g, n) == c / euler_phi(n));
    }
    CHECK(total == g.order());
    CHECK(spec.count(1) == 1);
    CHECK(spec.counts == oracle::naive_spectrum(g));
    const auto tau = same_order_type(spec);
    CHECK(tau.sizes.front() == 1);
    CHECK(std::is_sorted(tau.sizes.begin(), tau.sizes.end()));
    CHECK(std::adjacent_find(tau.sizes.begin(), tau.sizes.end()) == tau.sizes.end());
    CHECK(divisibility_audit(g).all_ok());
  }
}

TEST_CASE("same_order_type is invariant under relabeling") {
  std::mt19937 rng(20261014);
  const auto corpus = builtin_corpus(48);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = eval_expr(corpus[rng() % corpus.size()]);
    CAPTURE(g.label());
    auto shuffled = FiniteGroup::from_cayley_table(oracle::shuffled_table(g, rng), g.size(), "shuffled",
                                                   CheckLevel::full);
    CHECK(same_order_type(order_spectrum(shuffled)) == same_order_type(order_spectrum(g)));
    CHECK(order_spectrum(shuffled).counts == order_spectrum(g).counts);
  }
}
