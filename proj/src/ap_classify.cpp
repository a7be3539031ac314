#include "ordtype/ap_classify.hpp"

#include "ordtype/errors.hpp"
#include "ordtype/number_theory.hpp"

namespace ordtype {

namespace {

TheoremFinding check(std::string_view id, bool applicable, bool holds, std::string note) {
  TheoremFinding f{std::string(id), FindingStatus::not_applicable, ""};
  if (applicable) {
    f.status = holds ? FindingStatus::consistent : FindingStatus::violated;
    f.note = std::move(note);
  }
  return f;
}

// Shapes allowed for |tau_e| = 2: exponent-p p-groups, Q_8, C_4, C_2 x P.
bool matches_tau_two_shape(const ClassificationRecord& r) {
  const auto& pr = r.profile;
  if (pr.p_group_prime && r.order >= 3 && pr.exponent == *pr.p_group_prime) return true;
  if (r.order == 8 && !pr.is_abelian && pr.c2 == 1) return true;
  if (r.order == 4 && pr.exponent == 4) return true;
  if (r.order % 2 == 0 && pr.is_nilpotent && pr.c2 == 1) {
    const auto odd = prime_power_base(r.order / 2);
    if (odd && *odd != 2 && pr.exponent == 2 * *odd) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(FindingStatus s) {
  switch (s) {
    case FindingStatus::consistent: return "consistent";
    case FindingStatus::violated: return "violated";
    case FindingStatus::not_applicable: return "not-applicable";
  }
  return "unknown";
}

APVerdict is_arithmetic_progression(const SameOrderType& tau) {
  const auto& s = tau.sizes;
  if (s.empty()) return {};
  if (s.size() == 1) return {true, 0};
  if (s[1] <= s[0]) return {};
  const auto r = s[1] - s[0];
  for (std::size_t i = 2; i < s.size(); ++i) {
    if (s[i] <= s[i - 1] || s[i] - s[i - 1] != r) return {};
  }
  return {true, r};
}

const TheoremFinding* ClassificationRecord::finding(std::string_view theorem) const {
  for (const auto& f : findings) {
    if (f.theorem == theorem) return &f;
  }
  return nullptr;
}

bool ClassificationRecord::has_violation() const {
  for (const auto& f : findings) {
    if (f.status == FindingStatus::violated) return true;
  }
  return false;
}

ClassificationRecord classify(const FiniteGroup& g) {
  ClassificationRecord r;
  r.label = g.label();
  r.order = g.order();
  r.spectrum = order_spectrum(g);
  r.tau = same_order_type(r.spectrum);
  r.tau_size = r.tau.size();
  r.verdict = is_arithmetic_progression(r.tau);
  r.profile = structural_profile(g);

  const bool ap = r.verdict.is_ap;
  const bool four = r.tau_size == 4;
  const auto& pr = r.profile;
  namespace th = theorem;

  r.findings.push_back(check(th::kTauTwo, r.tau_size == 2, pr.is_nilpotent && matches_tau_two_shape(r),
                             "|tau_e| = 2 but the group is not one of the nilpotent shapes"));
  r.findings.push_back(check(th::kTauThree, r.tau_size == 3, pr.is_solvable,
                             "|tau_e| = 3 but the group is not solvable"));
  r.findings.push_back(check(th::kApLength, ap, r.tau_size <= 4,
                             "arithmetic progression with more than 4 terms"));

  // S_3 is the only group of order 6 that is nonabelian; check both directions
  // outside the excluded 2-groups.
  const bool s3 = r.order == 6 && !pr.is_abelian;
  const bool eligible = r.tau_size == 3 && !pr.is_two_group_with_many_involutions();
  r.findings.push_back(check(th::kS3Unique, (eligible && ap) || s3,
                             s3 ? (r.tau_size == 3 && ap) : false,
                             s3 ? "S_3 must have a 3-term progression as tau_e"
                                : "3-term progression from a group other than S_3"));

  r.findings.push_back(check(th::kOddOrder, four && r.order % 2 == 1, !ap,
                             "odd order group with a 4-term progression"));
  r.findings.push_back(check(th::kPrimePower, four && pr.p_group_prime.has_value(), !ap,
                             "p-group with a 4-term progression"));
  r.findings.push_back(check(th::kNilpotent, four && pr.is_nilpotent, !ap,
                             "nilpotent group with a 4-term progression"));
  r.findings.push_back(check(th::kRatioParity, four && ap,
                             r.verdict.ratio && *r.verdict.ratio % 2 == 1 && *r.verdict.ratio > 3,
                             "4-term progression with even ratio or ratio <= 3"));

  const bool excluded = r.tau == SameOrderType{{1, 2, 3, 4}} || r.tau == SameOrderType{{1, 4, 7, 10}};
  r.findings.push_back(check(th::kExcludedTypes, true, !excluded,
                             "observed an excluded same-order type " + r.tau.to_string()));

  // A non-nilpotent 4-term progression would settle an open question; report
  // it as a violation so it is never missed.
  r.findings.push_back(check(th::kOpenProblem, four && !pr.is_nilpotent, !ap,
                             "non-nilpotent group with a 4-term progression"));
  return r;
}

void enforce(const ClassificationRecord& record) {
  for (const auto& f : record.findings) {
    if (f.status == FindingStatus::violated) throw TheoremViolation(f.theorem, record.label, f.note);
  }
}

}  // namespace ordtype
