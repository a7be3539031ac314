#pragma once

#include <cstdint>
#include <vector>

namespace ordtype {

// GF(p^t) realized as Z/p[x]/(f) with f the smallest monic irreducible of
// degree t. Elements are encoded as sum c_i p^i for the residue
// c_0 + c_1 x + ... + c_{t-1} x^{t-1}, so the additive group matches the
// indexing of elementary_abelian(p, t).
class PrimePowerField {
 public:
  PrimePowerField(std::uint64_t p, unsigned t);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return t_; }
  std::uint64_t size() const noexcept { return q_; }

  // Coefficients of f, constant term first, leading 1 included.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const;

  // Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(std::uint64_t a) const;

  // Smallest encoding that generates the multiplicative group.
  std::uint64_t smallest_primitive_element() const;

 private:
  std::vector<std::uint64_t> digits(std::uint64_t a) const;
  std::uint64_t encode(const std::vector<std::uint64_t>& c) const;

  std::uint64_t p_;
  unsigned t_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

// Smallest monic irreducible polynomial of degree t over Z/p; polynomials are
// ordered by the encoding sum c_i p^i of their non-leading coefficients,
// which is lexicographic from the x^{t-1} coefficient down.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned t);

}  // namespace ordtype
