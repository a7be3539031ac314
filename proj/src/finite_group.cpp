#include "ordtype/finite_group.hpp"

#include <algorithm>
#include <string>

#include "ordtype/errors.hpp"
#include "ordtype/number_theory.hpp"

namespace ordtype {

namespace {

void check_latin(const std::vector<ElementId>& t, std::size_t n) {
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ++stamp;
    for (std::size_t j = 0; j < n; ++j) {
      auto v = t[i * n + j];
      if (seen[v] == stamp) {
        throw NotAGroup("row " + std::to_string(i) + " repeats element " + std::to_string(v));
      }
      seen[v] = stamp;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    ++stamp;
    for (std::size_t i = 0; i < n; ++i) {
      auto v = t[i * n + j];
      if (seen[v] == stamp) {
        throw NotAGroup("column " + std::to_string(j) + " repeats element " + std::to_string(v));
      }
      seen[v] = stamp;
    }
  }
}

ElementId find_identity(const std::vector<ElementId>& t, std::size_t n) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      ok = t[e * n + j] == j && t[j * n + e] == j;
    }
    if (ok) return static_cast<ElementId>(e);
  }
  throw NotAGroup("no two-sided identity");
}

std::vector<ElementId> find_inverses(const std::vector<ElementId>& t, std::size_t n,
                                     ElementId e) {
  std::vector<ElementId> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    // The row is a permutation, so exactly one right inverse exists.
    std::size_t j = 0;
    while (t[i * n + j] != e) ++j;
    if (t[j * n + i] != e) {
      throw NotAGroup("element " + std::to_string(i) + " has no two-sided inverse");
    }
    inv[i] = static_cast<ElementId>(j);
  }
  return inv;
}

// Picks generators greedily until right-multiplication closure from the
// identity covers every element.
std::vector<ElementId> greedy_generators(const std::vector<ElementId>& t, std::size_t n,
                                         ElementId e) {
  std::vector<ElementId> gens;
  std::vector<char> reached(n, 0);
  std::vector<ElementId> members{e};
  reached[e] = 1;
  for (std::size_t cand = 0; cand < n && members.size() < n; ++cand) {
    if (reached[cand]) continue;
    gens.push_back(static_cast<ElementId>(cand));
    // Re-close from scratch with the enlarged generator list.
    std::fill(reached.begin(), reached.end(), 0);
    members.assign(1, e);
    reached[e] = 1;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (auto g : gens) {
        auto y = t[members[k] * n + g];
        if (!reached[y]) {
          reached[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

// The set of g with (xg)y = x(gy) for all x, y is closed under products, so
// checking a generating set of the table proves associativity.
void check_associative_on_generators(const std::vector<ElementId>& t, std::size_t n,
                                     ElementId e) {
  for (auto g : greedy_generators(t, n, e)) {
    for (std::size_t x = 0; x < n; ++x) {
      const auto xg = t[x * n + g];
      const ElementId* row_x = &t[x * n];
      const ElementId* row_xg = &t[xg * n];
      const ElementId* row_g = &t[static_cast<std::size_t>(g) * n];
      for (std::size_t y = 0; y < n; ++y) {
        if (row_xg[y] != row_x[row_g[y]]) {
          throw NotAGroup("associativity fails at (" + std::to_string(x) + ", " +
                          std::to_string(g) + ", " + std::to_string(y) + ")");
        }
      }
    }
  }
}

bool associative_scan(std::span<const ElementId> t, std::size_t n, std::size_t* bad) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = t[i * n + j];
      const ElementId* row_ij = &t[ij * n];
      const ElementId* row_i = &t[i * n];
      const ElementId* row_j = &t[j * n];
      for (std::size_t k = 0; k < n; ++k) {
        if (row_ij[k] != row_i[row_j[k]]) {
          if (bad) {
            bad[0] = i;
            bad[1] = j;
            bad[2] = k;
          }
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(std::vector<ElementId> table, std::size_t n,
                                           std::string label, CheckLevel level) {
  if (n == 0) throw BadParameter("empty Cayley table");
  if (table.size() != n * n) {
    throw BadParameter("table has " + std::to_string(table.size()) + " entries, expected " +
                       std::to_string(n * n));
  }
  if (level == CheckLevel::full && n > kMaxFullCheckOrder) {
    throw BadParameter("full associativity check refused for order " + std::to_string(n) +
                       " (limit " + std::to_string(kMaxFullCheckOrder) + ")");
  }
  for (auto v : table) {
    if (v >= n) throw BadParameter("table entry " + std::to_string(v) + " out of range");
  }
  check_latin(table, n);
  const ElementId e = find_identity(table, n);
  auto inv = find_inverses(table, n, e);
  if (level == CheckLevel::full) {
    std::size_t bad[3];
    if (!associative_scan(table, n, bad)) {
      throw NotAGroup("associativity fails at (" + std::to_string(bad[0]) + ", " +
                      std::to_string(bad[1]) + ", " + std::to_string(bad[2]) + ")");
    }
  } else if (level == CheckLevel::generators) {
    check_associative_on_generators(table, n, e);
  }

  FiniteGroup g;
  g.size_ = n;
  g.table_ = std::move(table);
  g.identity_ = e;
  g.inverses_ = std::move(inv);
  g.divisors_ = divisors(n);
  g.label_ = std::move(label);
  return g;
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<ElementId>>& rows,
                                           std::string label, CheckLevel level) {
  const std::size_t n = rows.size();
  std::vector<ElementId> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw BadParameter("Cayley table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_cayley_table(std::move(flat), n, std::move(label), level);
}

FiniteGroup FiniteGroup::relabeled(std::string label) const {
  FiniteGroup g = *this;
  g.label_ = std::move(label);
  return g;
}

bool is_associative(const FiniteGroup& g) {
  return associative_scan(g.table(), g.size(), nullptr);
}

ElementId power(const FiniteGroup& g, ElementId x, std::uint64_t k) {
  ElementId result = g.identity();
  ElementId base = x;
  while (k > 0) {
    if (k & 1U) result = g.mul(result, base);
    base = g.mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::uint64_t element_order(const FiniteGroup& g, ElementId x) {
  for (auto d : g.order_divisors()) {
    if (power(g, x, d) == g.identity()) return d;
  }
  throw InternalInconsistency("no divisor of |G| annihilates element " + std::to_string(x));
}

}  // namespace ordtype
