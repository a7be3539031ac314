#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordtype/finite_group.hpp"
#include "ordtype/order_stats.hpp"
#include "ordtype/structure.hpp"

namespace ordtype {

struct APVerdict {
  bool is_ap = false;
  std::optional<std::uint64_t> ratio;  // present iff is_ap

  bool operator==(const APVerdict&) const = default;
};

// Singletons are progressions of ratio 0; pairs always are, with their
// difference as ratio; longer sets need equal positive steps.
APVerdict is_arithmetic_progression(const SameOrderType& tau);

enum class FindingStatus { consistent, violated, not_applicable };

std::string_view to_string(FindingStatus s);

// Identifiers used in TheoremFinding::theorem.
namespace theorem {
inline constexpr std::string_view kTauTwo = "thm11";          // |tau|=2 => nilpotent, known shapes
inline constexpr std::string_view kTauThree = "thm12";        // |tau|=3 => solvable
inline constexpr std::string_view kApLength = "prop22";       // AP => |tau| <= 4
inline constexpr std::string_view kS3Unique = "thm23";        // the S_3 witness check
inline constexpr std::string_view kOddOrder = "lemma24";      // odd |G|, |tau|=4 => not AP
inline constexpr std::string_view kPrimePower = "prop25";     // p-group, |tau|=4 => not AP
inline constexpr std::string_view kNilpotent = "thm26";       // nilpotent, |tau|=4 => not AP
inline constexpr std::string_view kRatioParity = "ratio-parity";
inline constexpr std::string_view kExcludedTypes = "excluded-types";
inline constexpr std::string_view kOpenProblem = "open-problem";  // non-nilpotent 4-term AP
}  // namespace theorem

struct TheoremFinding {
  std::string theorem;
  FindingStatus status = FindingStatus::not_applicable;
  std::string note;
};

struct ClassificationRecord {
  std::string label;
  std::uint64_t order = 0;
  OrderSpectrum spectrum;
  SameOrderType tau;
  APVerdict verdict;
  std::size_t tau_size = 0;
  StructuralProfile profile;
  std::vector<TheoremFinding> findings;

  const TheoremFinding* finding(std::string_view theorem) const;
  bool has_violation() const;
};

ClassificationRecord classify(const FiniteGroup& g);

// Throws TheoremViolation for the first violated finding.
void enforce(const ClassificationRecord& record);

}  // namespace ordtype
