#pragma once

#include <cstdint>
#include <vector>

#include "ordtype/finite_group.hpp"

namespace ordtype {

// Largest table any constructor will produce.
inline constexpr std::size_t kMaxConstructedOrder = 512;

// For each element h of an acting group H, the permutation of N's element
// indices by which h acts. Validated by semidirect_product.
struct ActionTable {
  std::vector<std::vector<ElementId>> images;  // images[h][n] = alpha_h(n)
};

enum class Extension { c2, c4 };

// Every constructor returns a group labelled with its expression notation
// (e.g. "D(16)", "Hol(8)") and throws BadParameter outside its preconditions.

FiniteGroup cyclic(std::uint64_t n);

// r^i s^j at index j*(order/2) + i, with s r s = r^-1.
FiniteGroup dihedral(std::uint64_t order);

// a^i b^j with b^2 = a^(order/4) and b a b^-1 = a^-1; order = 2^k, k >= 3.
FiniteGroup generalized_quaternion(std::uint64_t order);

// x^i y^j with y^2 = 1 and y x y = x^(order/4 - 1); order = 2^k, k >= 4.
FiniteGroup semidihedral(std::uint64_t order);

// Permutations of {0..n-1} in lexicographic one-line order, (st)(i) = s(t(i)).
FiniteGroup symmetric(unsigned n);
FiniteGroup alternating(unsigned n);

// Determinant-one 2x2 matrices over Z/p, lexicographic on (a, b, c, d).
FiniteGroup sl2(std::uint64_t p);

// Z/p^t; index sum v_i p^i.
FiniteGroup elementary_abelian(std::uint64_t p, unsigned t);

// (a, b) at index a*|B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// (n, h) at index n*|H| + h, (n1, h1)(n2, h2) = (n1 alpha_h1(n2), h1 h2).
// Throws InvalidAction when the action is not a homomorphism into Aut(N).
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const ActionTable& action);

// C_p^t by C_2 (inverting) or by C_4 acting through its order-2 quotient.
FiniteGroup frobenius_inversion(std::uint64_t p, unsigned t, Extension ext);

// Additive group of GF(p^t) by C_q, the generator multiplying by g^((p^t-1)/q)
// for the smallest primitive element g.
FiniteGroup frobenius_field(std::uint64_t p, unsigned t, std::uint64_t q);

// Group of units of Z/n under multiplication, elements in increasing order.
FiniteGroup unit_group(std::uint64_t n);

// C_n by its automorphism group (Z/n)^*.
FiniteGroup holomorph_cyclic(std::uint64_t n);

// (A x B) / <(z_A, z_B)> for the unique central involutions z_A, z_B.
// Throws AmbiguousCenter when either center has zero or several involutions.
FiniteGroup central_product(const FiniteGroup& a, const FiniteGroup& b);

// C_n by C_m, m the order of a mod n, the generator acting by x -> a x.
FiniteGroup affine_cyclic(std::uint64_t n, std::int64_t a);

}  // namespace ordtype
