#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ordtype {

// Index of an element inside a specific FiniteGroup; only meaningful together
// with the group that produced it.
using ElementId = std::uint32_t;

// Sorted set of element indices.
using Subset = std::vector<ElementId>;

enum class CheckLevel {
  full,        // Latin square, identity, inverses and the O(n^3) associativity scan
  structural,  // Latin square, identity and inverses only
  generators,  // structural plus associativity against a generating set, O(n^2 |S|)
};

// Tables larger than this are refused at CheckLevel::full.
inline constexpr std::size_t kMaxFullCheckOrder = 1024;

// Finite group stored as a dense multiplication table. Immutable once built;
// every accessor is safe to call concurrently.
class FiniteGroup {
 public:
  // `table` is row-major with n*n entries: table[i*n + j] = x_i x_j.
  // Throws NotAGroup on an axiom failure, BadParameter on malformed input.
  static FiniteGroup from_cayley_table(std::vector<ElementId> table, std::size_t n,
                                       std::string label,
                                       CheckLevel level = CheckLevel::full);
  static FiniteGroup from_cayley_table(const std::vector<std::vector<ElementId>>& rows,
                                       std::string label,
                                       CheckLevel level = CheckLevel::full);

  std::size_t size() const noexcept { return size_; }
  std::uint64_t order() const noexcept { return size_; }

  ElementId mul(ElementId a, ElementId b) const noexcept { return table_[a * size_ + b]; }
  ElementId inverse(ElementId a) const noexcept { return inverses_[a]; }
  ElementId identity() const noexcept { return identity_; }
  bool contains(ElementId a) const noexcept { return a < size_; }

  std::span<const ElementId> row(ElementId a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * size_, size_};
  }
  std::span<const ElementId> table() const noexcept { return table_; }
  std::span<const ElementId> inverses() const noexcept { return inverses_; }

  // Divisors of |G| in increasing order.
  std::span<const std::uint64_t> order_divisors() const noexcept { return divisors_; }

  const std::string& label() const noexcept { return label_; }
  FiniteGroup relabeled(std::string label) const;

 private:
  FiniteGroup() = default;

  std::size_t size_ = 0;
  std::vector<ElementId> table_;
  ElementId identity_ = 0;
  std::vector<ElementId> inverses_;
  std::vector<std::uint64_t> divisors_;
  std::string label_;
};

// Runs the O(n^3) associativity scan; returns false on the first defect.
bool is_associative(const FiniteGroup& g);

// x^k by square-and-multiply.
ElementId power(const FiniteGroup& g, ElementId x, std::uint64_t k);

// o(x): the smallest divisor d of |G| with x^d = e.
std::uint64_t element_order(const FiniteGroup& g, ElementId x);

}  // namespace ordtype
