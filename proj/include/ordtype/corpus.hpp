#pragma once

#include <cstdint>
#include <vector>

#include "ordtype/group_expr.hpp"

namespace ordtype {

inline constexpr std::uint64_t kDefaultMaxOrder = 256;
inline constexpr std::uint64_t kMaxCorpusOrder = 512;

// Deterministic list of named-family groups of order <= max_order, sorted by
// (order, label) with no repeated labels:
//   C(n); D(2n); Q(2^k); SD(2^k); EA(p, t); Sym(n), Alt(n) for n <= 5;
//   SL2(p) for p <= 5; Hol(n) for n <= 16; Aff(n, a) for n <= 24;
//   every valid FrobInv and FrobF; CP(D(8), D(16)); C(7) x Q(8);
//   C(2)^t padded Hol(8) and CP(D(8), D(16));
//   C(2) x H for each atom H above; A x B for atoms of order 2..16.
// Throws BadParameter if max_order exceeds kMaxCorpusOrder.
std::vector<GroupExpr> builtin_corpus(std::uint64_t max_order);

}  // namespace ordtype
