#include "ordtype/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "json.hpp"

#include "ordtype/group_expr.hpp"

namespace ordtype {

namespace {

namespace th = theorem;

constexpr std::string_view kAuditId = "lemma21";

struct SuiteSpec {
  Suite suite;
  std::string_view name;
  std::vector<std::string_view> theorems;
  bool audit;
};

const std::vector<SuiteSpec>& suite_specs() {
  static const std::vector<SuiteSpec> specs = {
      {Suite::audit, "audit", {}, true},
      {Suite::thm11, "thm11", {th::kTauTwo}, false},
      {Suite::thm23, "thm23", {th::kS3Unique, th::kTauThree}, false},
      {Suite::prop25, "prop25", {th::kPrimePower, th::kOddOrder}, false},
      {Suite::thm26, "thm26", {th::kNilpotent}, false},
      {Suite::prop22, "prop22", {th::kApLength, th::kExcludedTypes, th::kRatioParity}, false},
      {Suite::search4, "search4", {th::kOpenProblem, th::kS3Unique}, false},
      {Suite::all,
       "all",
       {th::kTauTwo, th::kTauThree, th::kApLength, th::kS3Unique, th::kOddOrder, th::kPrimePower,
        th::kNilpotent, th::kRatioParity, th::kExcludedTypes, th::kOpenProblem},
       true},
  };
  return specs;
}

const SuiteSpec& spec_for(Suite s) {
  for (const auto& spec : suite_specs()) {
    if (spec.suite == s) return spec;
  }
  return suite_specs().back();
}

// Which groups a suite reports individually.
bool reported(Suite s, const ClassificationRecord& r) {
  const bool four = r.tau_size == 4;
  switch (s) {
    case Suite::audit:
    case Suite::all: return true;
    case Suite::thm11: return r.tau_size == 2;
    case Suite::thm23: return r.tau_size == 3;
    case Suite::prop25: return four && (r.profile.p_group_prime || r.order % 2 == 1);
    case Suite::thm26: return four && r.profile.is_nilpotent;
    case Suite::prop22: return r.verdict.is_ap;
    case Suite::search4: return four && r.verdict.is_ap;
  }
  return false;
}

GroupEvaluation evaluate_one(const GroupExpr& e, bool cyclic_cross_check) {
  GroupEvaluation ev;
  ev.label = render(e);
  ev.order = predicted_order(e).value_or(0);
  try {
    const auto g = eval_expr(e);
    ev.order = g.order();
    ev.record = classify(g);
    ev.audit = divisibility_audit(ev.record->spectrum);
    if (cyclic_cross_check && g.order() <= kCyclicCrossCheckOrder) {
      for (auto n : g.order_divisors()) cyclic_subgroup_count(g, n);
    }
  } catch (const Error& err) {
    ev.errors.emplace_back(err.what());
  }
  return ev;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& spec : suite_specs()) {
    if (spec.name == name) return spec.suite;
  }
  return std::nullopt;
}

std::string_view to_string(Suite s) { return spec_for(s).name; }

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<GroupEvaluation> evaluate_corpus(std::uint64_t max_order, unsigned threads,
                                             bool cyclic_cross_check) {
  const auto corpus = builtin_corpus(max_order);
  std::vector<GroupEvaluation> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
      results[i] = evaluate_one(corpus[i], cyclic_cross_check);
    }
  };
  const unsigned n = std::min<std::size_t>(resolve_thread_count(threads), std::max<std::size_t>(corpus.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }
  std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
    return std::tie(a.order, a.label) < std::tie(b.order, b.label);
  });
  return results;
}

VerificationReport run_suite(Suite suite, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto& spec = spec_for(suite);
  const auto evaluations = evaluate_corpus(options.max_order, options.threads, spec.audit);

  VerificationReport report;
  report.suite = std::string(spec.name);
  report.groups_checked = evaluations.size();
  bool s3_witness = false;

  for (const auto& ev : evaluations) {
    for (const auto& err : ev.errors) report.failures.push_back({ev.label, "evaluation", err});
    if (!ev.record) continue;
    const auto& rec = *ev.record;

    GroupFinding finding{ev.label, ev.order, rec.tau, rec.verdict, {}};
    if (spec.audit) {
      const auto problems = ev.audit.failures();
      finding.statuses.emplace_back(std::string(kAuditId),
                                    problems.empty() ? FindingStatus::consistent : FindingStatus::violated);
      for (const auto& p : problems) report.failures.push_back({ev.label, std::string(kAuditId), p});
    }
    for (auto id : spec.theorems) {
      const auto* f = rec.finding(id);
      if (!f) continue;
      finding.statuses.emplace_back(f->theorem, f->status);
      if (f->status == FindingStatus::violated) report.failures.push_back({ev.label, f->theorem, f->note});
    }
    const auto* s3 = rec.finding(th::kS3Unique);
    if (s3 && s3->status == FindingStatus::consistent) s3_witness = true;
    if (reported(suite, rec)) report.findings.push_back(std::move(finding));
  }

  const bool needs_witness = suite == Suite::thm23 || suite == Suite::search4 || suite == Suite::all;
  if (needs_witness && options.max_order >= 6 && !s3_witness) {
    report.failures.push_back({"Sym(3)", std::string(th::kS3Unique), "no S_3 witness found in the corpus"});
  }
  report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::string to_json_text(const VerificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["suite"] = report.suite;
  j["groupsChecked"] = report.groups_checked;
  auto& findings = j["findings"] = ordered_json::array();
  for (const auto& f : report.findings) {
    ordered_json item;
    item["group"] = f.label;
    item["order"] = f.order;
    item["tau"] = f.tau.sizes;
    item["isAP"] = f.verdict.is_ap;
    item["ratio"] = f.verdict.ratio ? ordered_json(*f.verdict.ratio) : ordered_json(nullptr);
    auto& statuses = item["statuses"] = ordered_json::object();
    for (const auto& [id, status] : f.statuses) statuses[id] = std::string(to_string(status));
    findings.push_back(std::move(item));
  }
  auto& failures = j["failures"] = ordered_json::array();
  for (const auto& f : report.failures) {
    failures.push_back(ordered_json{{"group", f.group}, {"check", f.check}, {"note", f.note}});
  }
  j["wallTimeMs"] = report.wall_time.count();
  return j.dump(2) + "\n";
}

void require_pass(const VerificationReport& report) {
  if (!report.ok()) throw SuiteFailure(report);
}

}  // namespace ordtype
