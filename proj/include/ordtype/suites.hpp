#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordtype/ap_classify.hpp"
#include "ordtype/corpus.hpp"
#include "ordtype/errors.hpp"
#include "ordtype/order_stats.hpp"

namespace ordtype {

enum class Suite { audit, thm11, thm23, prop25, thm26, prop22, search4, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);

// Groups up to this order also get the two-way c_n cross-check in the audit.
inline constexpr std::uint64_t kCyclicCrossCheckOrder = 128;

struct GroupEvaluation {
  std::string label;
  std::uint64_t order = 0;
  std::optional<ClassificationRecord> record;  // empty if construction failed
  AuditReport audit;
  std::vector<std::string> errors;             // construction or cross-check failures
};

// Evaluates every corpus group, possibly on several threads; the result is
// ordered by (order, label) regardless of scheduling.
std::vector<GroupEvaluation> evaluate_corpus(std::uint64_t max_order, unsigned threads,
                                             bool cyclic_cross_check);

struct GroupFinding {
  std::string label;
  std::uint64_t order = 0;
  SameOrderType tau;
  APVerdict verdict;
  std::vector<std::pair<std::string, FindingStatus>> statuses;
};

struct SuiteFailureEntry {
  std::string group;
  std::string check;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::size_t groups_checked = 0;
  std::vector<GroupFinding> findings;
  std::vector<SuiteFailureEntry> failures;
  std::chrono::milliseconds wall_time{0};

  bool ok() const noexcept { return failures.empty(); }
};

struct SuiteOptions {
  std::uint64_t max_order = kDefaultMaxOrder;
  unsigned threads = 0;  // 0: THREADS from the environment, else hardware concurrency
};

VerificationReport run_suite(Suite suite, const SuiteOptions& options);

// Schema: {suite, groupsChecked, findings[], failures[], wallTimeMs}.
std::string to_json_text(const VerificationReport& report);

class SuiteFailure : public Error {
 public:
  explicit SuiteFailure(VerificationReport report)
      : Error("suite " + report.suite + " failed with " + std::to_string(report.failures.size()) +
              " failure(s)"),
        report_(std::move(report)) {}

  const VerificationReport& report() const noexcept { return report_; }

 private:
  VerificationReport report_;
};

// Throws SuiteFailure when the report carries failures.
void require_pass(const VerificationReport& report);

unsigned resolve_thread_count(unsigned requested);

}  // namespace ordtype
