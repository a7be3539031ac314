#include "doctest.h"
#include "ordtype/ap_classify.hpp"
#include "ordtype/constructors.hpp"
#include "ordtype/corpus.hpp"
#include "ordtype/errors.hpp"
#include "ordtype/group_expr.hpp"

using namespace ordtype;

namespace {

APVerdict ap(std::vector<std::uint64_t> sizes) { return is_arithmetic_progression(SameOrderType{std::move(sizes)}); }

FindingStatus status_of(const ClassificationRecord& r, std::string_view id) {
  const auto* f = r.finding(id);
  REQUIRE(f != nullptr);
  return f->status;
}

}  // namespace

TEST_CASE("is_arithmetic_progression") {
  CHECK(ap({1, 2, 3}) == APVerdict{true, 1});
  CHECK(ap({1, 2, 4}) == APVerdict{false, std::nullopt});
  CHECK(ap({1}) == APVerdict{true, 0});
  CHECK(ap({1, 15, 20, 24}) == APVerdict{false, std::nullopt});
  CHECK(ap({1, 6}) == APVerdict{true, 5});
  CHECK(ap({1, 8, 15}) == APVerdict{true, 7});
  CHECK(ap({1, 4, 7, 10}) == APVerdict{true, 3});
  CHECK(ap({1, 4, 7, 11}) == APVerdict{false, std::nullopt});
}

TEST_CASE("synthetic progressions") {
  for (std::uint64_t r = 1; r <= 100; ++r)
    for (std::uint64_t k = 1; k <= 3; ++k) {
      std::vector<std::uint64_t> sizes;
      for (std::uint64_t i = 0; i <= k; ++i) sizes.push_back(1 + i * r);
      CAPTURE(r);
      CAPTURE(k);
      CHECK(ap(sizes) == APVerdict{true, r});
      if (k >= 2) {
        sizes.back() += 1;
        CHECK_FALSE(ap(sizes).is_ap);
      }
    }
}

TEST_CASE("to_string(FindingStatus)") {
  CHECK(to_string(FindingStatus::consistent) == "consistent");
  CHECK(to_string(FindingStatus::violated) == "violated");
  CHECK(to_string(FindingStatus::not_applicable) == "not-applicable");
}

TEST_CASE("classify S_3") {
  const auto r = classify(symmetric(3));
  CHECK(r.tau == SameOrderType{{1, 2, 3}});
  CHECK(r.verdict == APVerdict{true, 1});
  CHECK(r.tau_size == 3);
  CHECK(status_of(r, theorem::kS3Unique) == FindingStatus::consistent);
  CHECK(status_of(r, theorem::kTauThree) == FindingStatus::consistent);
  CHECK(status_of(r, theorem::kApLength) == FindingStatus::consistent);
  CHECK_FALSE(r.has_violation());
  CHECK_NOTHROW(enforce(r));
}

TEST_CASE("classify Hol(8)") {
  const auto r = classify(holomorph_cyclic(8));
  CHECK(r.tau == SameOrderType{{1, 8, 15}});
  CHECK(r.verdict == APVerdict{true, 7});
  CHECK(r.profile.is_two_group_with_many_involutions());
  CHECK(status_of(r, theorem::kS3Unique) == FindingStatus::not_applicable);
  CHECK_FALSE(r.has_violation());
}

TEST_CASE("classify SL(2,3)") {
  const auto r = classify(sl2(3));
  CHECK(r.tau == SameOrderType{{1, 6, 8}});
  CHECK_FALSE(r.verdict.is_ap);
  CHECK(status_of(r, theorem::kS3Unique) == FindingStatus::not_applicable);
  CHECK(status_of(r, theorem::kTauThree) == FindingStatus::consistent);
  CHECK_FALSE(r.has_violation());
}

TEST_CASE("classify groups with two classes") {
  for (const auto* expr : {"C(4)", "Q(8)", "EA(3, 2)", "C(2) x EA(3, 1)", "C(2) x EA(5, 2)", "C(3)"}) {
    CAPTURE(expr);
    const auto r = classify(eval_expr(expr));
    CHECK(r.tau_size == 2);
    CHECK(r.profile.is_nilpotent);
    CHECK(status_of(r, theorem::kTauTwo) == FindingStatus::consistent);
  }
  CHECK(status_of(classify(symmetric(3)), theorem::kTauTwo) == FindingStatus::not_applicable);
}

TEST_CASE("classify four-class groups") {
  const auto a5 = classify(alternating(5));
  CHECK(a5.tau_size == 4);
  CHECK_FALSE(a5.verdict.is_ap);
  CHECK(status_of(a5, theorem::kOpenProblem) == FindingStatus::consistent);
  CHECK(status_of(a5, theorem::kNilpotent) == FindingStatus::not_applicable);
  CHECK(status_of(a5, theorem::kPrimePower) == FindingStatus::not_applicable);
}

TEST_CASE("enforce throws on a violated finding") {
  auto r = classify(symmetric(3));
  r.findings.push_back({std::string(theorem::kOpenProblem), FindingStatus::violated, "forged"});
  CHECK(r.has_violation());
  try {
    enforce(r);
    FAIL("enforce did not throw");
  } catch (const TheoremViolation& e) {
    CHECK(e.theorem() == theorem::kOpenProblem);
    CHECK(e.group() == r.label);
  }
}

TEST_CASE("corpus classification") {
  for (const auto& e : builtin_corpus(128)) {
    const auto r = classify(eval_expr(e));
    CAPTURE(r.label);
    CHECK_FALSE(r.has_violation());
    CHECK(r.tau_size == r.tau.size());
    if (r.verdict.is_ap) CHECK(r.tau_size <= 4);
    CHECK(r.tau != SameOrderType{{1, 2, 3, 4}});
    CHECK(r.tau != SameOrderType{{1, 4, 7, 10}});
    if (r.tau_size == 3) CHECK(r.profile.is_solvable);
    if (r.tau_size == 3 && r.verdict.is_ap && !r.profile.is_two_group_with_many_involutions()) {
      CHECK(r.order == 6);
      CHECK_FALSE(r.profile.is_abelian);
    }
    for (const auto& [n, c] : r.spectrum.counts)
      if (n >= 3) CHECK(c % 2 == 0);
  }
}
