#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordtype/finite_group.hpp"

namespace ordtype {

// Syntax tree for the group-spec language:
//
//   expr := term ('x' term)*        left-associative direct product
//   term := atom | '(' expr ')'
//   atom := C(n) | D(n) | Q(n) | SD(n) | Sym(n) | Alt(n) | SL2(p) | EA(p, t)
//         | Hol(n) | FrobInv(p, t, c2|c4) | FrobF(p, t, q) | Aff(n, a)
//         | CP(expr, expr) | file("path")
struct GroupExpr {
  enum class Kind {
    cyclic,
    dihedral,
    quaternion,
    semidihedral,
    symmetric,
    alternating,
    sl2,
    elementary_abelian,
    holomorph,
    frobenius_inversion,
    frobenius_field,
    affine,
    central_product,
    file,
    direct_product,
  };

  Kind kind = Kind::cyclic;
  std::vector<std::int64_t> params;
  std::string text;                 // "c2"/"c4" for FrobInv, the path for file
  std::vector<GroupExpr> children;  // two operands for CP and direct_product

  static GroupExpr atom(Kind kind, std::vector<std::int64_t> params, std::string text = {});
  static GroupExpr product(GroupExpr lhs, GroupExpr rhs);
  static GroupExpr central(GroupExpr lhs, GroupExpr rhs);

  bool operator==(const GroupExpr&) const = default;
};

// Throws SyntaxError with the byte offset of the offending token.
GroupExpr parse_group_expr(std::string_view text);

// Canonical text; parse_group_expr(render(e)) == e.
std::string render(const GroupExpr& e);

// Order predicted from the parameters without building the group; empty for
// file atoms and invalid parameters.
std::optional<std::uint64_t> predicted_order(const GroupExpr& e);

// Builds the group; the label is render(e). Constructor errors propagate.
FiniteGroup eval_expr(const GroupExpr& e);
FiniteGroup eval_expr(std::string_view text);

}  // namespace ordtype
