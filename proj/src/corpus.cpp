#include "ordtype/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ordtype/errors.hpp"
#include "ordtype/number_theory.hpp"

namespace ordtype {

namespace {

using Kind = GroupExpr::Kind;

class Collector {
 public:
  explicit Collector(std::uint64_t max_order) : max_(max_order) {}

  bool add(const GroupExpr& e) {
    const auto order = predicted_order(e);
    if (!order || *order > max_) return false;
    return entries_.emplace(std::make_pair(*order, render(e)), e).second;
  }

  std::vector<GroupExpr> take() const {
    std::vector<GroupExpr> out;
    out.reserve(entries_.size());
    for (const auto& [key, e] : entries_) out.push_back(e);
    return out;
  }

 private:
  std::uint64_t max_;
  std::map<std::pair<std::uint64_t, std::string>, GroupExpr> entries_;
};

GroupExpr atom(Kind k, std::vector<std::int64_t> params, std::string text = {}) {
  return GroupExpr::atom(k, std::move(params), std::move(text));
}

std::int64_t s(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::vector<GroupExpr> family_atoms(std::uint64_t max) {
  std::vector<GroupExpr> out;
  for (std::uint64_t n = 1; n <= max; ++n) out.push_back(atom(Kind::cyclic, {s(n)}));
  for (std::uint64_t n = 4; n <= max; n += 2) out.push_back(atom(Kind::dihedral, {s(n)}));
  for (std::uint64_t n = 8; n <= max; n *= 2) out.push_back(atom(Kind::quaternion, {s(n)}));
  for (std::uint64_t n = 16; n <= max; n *= 2) out.push_back(atom(Kind::semidihedral, {s(n)}));
  for (std::uint64_t p = 2; p <= max; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned t = 1; q <= max; ++t, q *= p) {
      out.push_back(atom(Kind::elementary_abelian, {s(p), t}));
      if (p != 2) {
        out.push_back(atom(Kind::frobenius_inversion, {s(p), t}, "c2"));
        out.push_back(atom(Kind::frobenius_inversion, {s(p), t}, "c4"));
      }
      for (std::uint64_t r = 2; r <= q - 1; ++r) {
        if (is_prime(r) && (q - 1) % r == 0) out.push_back(atom(Kind::frobenius_field, {s(p), t, s(r)}));
      }
    }
  }
  for (std::int64_t n = 1; n <= 5; ++n) {
    out.push_back(atom(Kind::symmetric, {n}));
    out.push_back(atom(Kind::alternating, {n}));
  }
  for (std::int64_t p : {2, 3, 5}) out.push_back(atom(Kind::sl2, {p}));
  for (std::int64_t n = 1; n <= 16; ++n) out.push_back(atom(Kind::holomorph, {n}));
  for (std::uint64_t n = 2; n <= 24; ++n) {
    for (std::uint64_t a = 2; a < n; ++a) {
      if (std::gcd(a, n) == 1) out.push_back(atom(Kind::affine, {s(n), s(a)}));
    }
  }
  return out;
}

}  // namespace

std::vector<GroupExpr> builtin_corpus(std::uint64_t max_order) {
  if (max_order > kMaxCorpusOrder) {
    throw BadParameter("corpus order bound " + std::to_string(max_order) + " exceeds " +
                       std::to_string(kMaxCorpusOrder));
  }
  Collector corpus(max_order);
  const auto atoms = family_atoms(max_order);
  for (const auto& a : atoms) corpus.add(a);

  const auto c2 = atom(Kind::cyclic, {2});
  const auto cp = GroupExpr::central(atom(Kind::dihedral, {8}), atom(Kind::dihedral, {16}));
  corpus.add(cp);
  corpus.add(GroupExpr::product(atom(Kind::cyclic, {7}), atom(Kind::quaternion, {8})));

  // C(2) x ... x C(2) x W for the 2-group progression witnesses.
  for (const auto& witness : {atom(Kind::holomorph, {8}), cp}) {
    GroupExpr prefix = c2;
    for (int t = 1; t <= 4; ++t) {
      corpus.add(GroupExpr::product(prefix, witness));
      prefix = GroupExpr::product(prefix, c2);
    }
  }

  for (const auto& a : atoms) {
    if (predicted_order(a).value_or(0) > 1) corpus.add(GroupExpr::product(c2, a));
  }

  std::vector<const GroupExpr*> small;
  for (const auto& a : atoms) {
    const auto o = predicted_order(a).value_or(0);
    if (o >= 2 && o <= 16 && a.kind != Kind::affine) small.push_back(&a);
  }
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      corpus.add(GroupExpr::product(*small[i], *small[j]));
    }
  }
  return corpus.take();
}

}  // namespace ordtype
