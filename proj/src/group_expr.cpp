#include "ordtype/group_expr.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "ordtype/cayley_io.hpp"
#include "ordtype/constructors.hpp"
#include "ordtype/errors.hpp"
#include "ordtype/number_theory.hpp"

namespace ordtype {

namespace {

using Kind = GroupExpr::Kind;

struct AtomSpec {
  Kind kind;
  const char* name;
  std::size_t int_params;  // integer parameters (FrobInv's extension is counted separately)
};

constexpr AtomSpec kAtoms[] = {
    {Kind::cyclic, "C", 1},
    {Kind::dihedral, "D", 1},
    {Kind::quaternion, "Q", 1},
    {Kind::semidihedral, "SD", 1},
    {Kind::symmetric, "Sym", 1},
    {Kind::alternating, "Alt", 1},
    {Kind::sl2, "SL2", 1},
    {Kind::elementary_abelian, "EA", 2},
    {Kind::holomorph, "Hol", 1},
    {Kind::frobenius_inversion, "FrobInv", 2},
    {Kind::frobenius_field, "FrobF", 3},
    {Kind::affine, "Aff", 2},
    {Kind::central_product, "CP", 0},
    {Kind::file, "file", 0},
};

const AtomSpec& spec_of(Kind k) {
  for (const auto& a : kAtoms) {
    if (a.kind == k) return a;
  }
  throw BadParameter("direct product has no atom name");
}

enum class Tok { ident, integer, string, lparen, rparen, comma, times, end };

struct Token {
  Tok type = Tok::end;
  std::string text;
  std::int64_t value = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    Token t;
    t.pos = i_;
    if (i_ == s_.size()) return t;
    const char c = s_[i_];
    // 'x' never starts or appears in an atom name, so it always multiplies.
    if (c == 'x' || c == '*') {
      ++i_;
      t.type = Tok::times;
      return t;
    }
    if (c == '(' || c == ')' || c == ',') {
      ++i_;
      t.type = c == '(' ? Tok::lparen : c == ')' ? Tok::rparen : Tok::comma;
      return t;
    }
    if (c == '"') {
      const auto close = s_.find('"', i_ + 1);
      if (close == std::string_view::npos) throw SyntaxError(i_, "closing '\"'");
      t.type = Tok::string;
      t.text = std::string(s_.substr(i_ + 1, close - i_ - 1));
      i_ = close + 1;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::size_t j = i_ + (c == '-' ? 1 : 0);
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      auto [ptr, ec] = std::from_chars(s_.data() + i_, s_.data() + j, t.value);
      if (ec != std::errc() || ptr != s_.data() + j) throw SyntaxError(i_, "an integer");
      t.type = Tok::integer;
      i_ = j;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j])) && s_[j] != 'x') ++j;
      t.type = Tok::ident;
      t.text = std::string(s_.substr(i_, j - i_));
      i_ = j;
      return t;
    }
    throw SyntaxError(i_, "a group atom, '(' or 'x'");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { advance(); }

  GroupExpr parse() {
    auto e = expr();
    if (cur_.type != Tok::end) throw SyntaxError(cur_.pos, "end of input or 'x'");
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect(Tok t, const char* what) {
    if (cur_.type != t) throw SyntaxError(cur_.pos, what);
    advance();
  }

  GroupExpr expr() {
    auto lhs = term();
    while (cur_.type == Tok::times) {
      advance();
      lhs = GroupExpr::product(std::move(lhs), term());
    }
    return lhs;
  }

  GroupExpr term() {
    if (cur_.type == Tok::lparen) {
      advance();
      auto e = expr();
      expect(Tok::rparen, "')'");
      return e;
    }
    if (cur_.type != Tok::ident) throw SyntaxError(cur_.pos, "a group atom or '('");
    return atom();
  }

  std::int64_t integer() {
    if (cur_.type != Tok::integer) throw SyntaxError(cur_.pos, "an integer");
    const auto v = cur_.value;
    advance();
    return v;
  }

  GroupExpr atom() {
    const auto name_tok = cur_;
    const AtomSpec* spec = nullptr;
    for (const auto& a : kAtoms) {
      if (name_tok.text == a.name) spec = &a;
    }
    if (!spec) throw SyntaxError(name_tok.pos, "a known group atom (C, D, Q, SD, Sym, Alt, SL2, EA, Hol, FrobInv, FrobF, Aff, CP, file)");
    advance();
    expect(Tok::lparen, "'('");

    GroupExpr e;
    if (spec->kind == Kind::central_product) {
      auto lhs = expr();
      expect(Tok::comma, "','");
      auto rhs = expr();
      e = GroupExpr::central(std::move(lhs), std::move(rhs));
    } else if (spec->kind == Kind::file) {
      if (cur_.type != Tok::string) throw SyntaxError(cur_.pos, "a quoted path");
      e = GroupExpr::atom(Kind::file, {}, cur_.text);
      advance();
    } else {
      std::vector<std::int64_t> params;
      for (std::size_t i = 0; i < spec->int_params; ++i) {
        if (i > 0) expect(Tok::comma, "','");
        params.push_back(integer());
      }
      std::string text;
      if (spec->kind == Kind::frobenius_inversion) {
        expect(Tok::comma, "','");
        if (cur_.type == Tok::ident && (cur_.text == "c2" || cur_.text == "c4")) {
          text = cur_.text;
        } else if (cur_.type == Tok::integer && (cur_.value == 2 || cur_.value == 4)) {
          text = cur_.value == 2 ? "c2" : "c4";
        } else {
          throw SyntaxError(cur_.pos, "extension c2 or c4");
        }
        advance();
      }
      e = GroupExpr::atom(spec->kind, std::move(params), std::move(text));
    }
    expect(Tok::rparen, "')'");
    return e;
  }

  Lexer lex_;
  Token cur_;
};

std::uint64_t positive(std::int64_t v, const char* what) {
  if (v < 0) throw BadParameter(std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

unsigned small(std::int64_t v, const char* what) {
  if (v < 0 || v > 64) throw BadParameter(std::string(what) + " out of range");
  return static_cast<unsigned>(v);
}

}  // namespace

GroupExpr GroupExpr::atom(Kind kind, std::vector<std::int64_t> params, std::string text) {
  GroupExpr e;
  e.kind = kind;
  e.params = std::move(params);
  e.text = std::move(text);
  return e;
}

GroupExpr GroupExpr::product(GroupExpr lhs, GroupExpr rhs) {
  GroupExpr e;
  e.kind = Kind::direct_product;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

GroupExpr GroupExpr::central(GroupExpr lhs, GroupExpr rhs) {
  GroupExpr e = product(std::move(lhs), std::move(rhs));
  e.kind = Kind::central_product;
  return e;
}

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const GroupExpr& e) {
  switch (e.kind) {
    case Kind::direct_product: {
      const auto& rhs = e.children[1];
      const auto r = render(rhs);
      return render(e.children[0]) + " x " +
             (rhs.kind == Kind::direct_product ? "(" + r + ")" : r);
    }
    case Kind::central_product:
      return "CP(" + render(e.children[0]) + ", " + render(e.children[1]) + ")";
    case Kind::file:
      return "file(\"" + e.text + "\")";
    default:
      break;
  }
  std::string out = spec_of(e.kind).name;
  out += '(';
  for (std::size_t i = 0; i < e.params.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(e.params[i]);
  }
  if (e.kind == Kind::frobenius_inversion) out += ", " + e.text;
  out += ')';
  return out;
}

std::optional<std::uint64_t> predicted_order(const GroupExpr& e) {
  const auto& p = e.params;
  auto arg = [&](std::size_t i) -> std::optional<std::uint64_t> {
    if (i >= p.size() || p[i] < 0) return std::nullopt;
    return static_cast<std::uint64_t>(p[i]);
  };
  switch (e.kind) {
    case Kind::cyclic:
    case Kind::dihedral:
    case Kind::quaternion:
    case Kind::semidihedral:
      return arg(0);
    case Kind::symmetric:
      if (auto n = arg(0); n && *n <= 20) return factorial(static_cast<unsigned>(*n));
      return std::nullopt;
    case Kind::alternating:
      if (auto n = arg(0); n && *n <= 20) return *n < 2 ? 1 : factorial(static_cast<unsigned>(*n)) / 2;
      return std::nullopt;
    case Kind::sl2:
      if (auto q = arg(0); q && *q < 100000) return *q * (*q * *q - 1);
      return std::nullopt;
    case Kind::elementary_abelian:
      if (auto b = arg(0), t = arg(1); b && t && *t <= 40) return ipow(*b, static_cast<unsigned>(*t));
      return std::nullopt;
    case Kind::holomorph:
      if (auto n = arg(0); n && *n >= 1) return *n * euler_phi(*n);
      return std::nullopt;
    case Kind::frobenius_inversion:
      if (auto b = arg(0), t = arg(1); b && t && *t <= 40) return ipow(*b, static_cast<unsigned>(*t)) * (e.text == "c2" ? 2 : 4);
      return std::nullopt;
    case Kind::frobenius_field:
      if (auto b = arg(0), t = arg(1), q = arg(2); b && t && q && *t <= 40) return ipow(*b, static_cast<unsigned>(*t)) * *q;
      return std::nullopt;
    case Kind::affine: {
      auto n = arg(0);
      if (!n || *n == 0) return std::nullopt;
      try {
        return *n * multiplicative_order(p[1], *n);
      } catch (const BadParameter&) {
        return std::nullopt;
      }
    }
    case Kind::central_product:
    case Kind::direct_product: {
      auto a = predicted_order(e.children[0]);
      auto b = predicted_order(e.children[1]);
      if (!a || !b) return std::nullopt;
      return e.kind == Kind::direct_product ? *a * *b : *a * *b / 2;
    }
    case Kind::file:
      return std::nullopt;
  }
  return std::nullopt;
}

FiniteGroup eval_expr(const GroupExpr& e) {
  const auto& p = e.params;
  FiniteGroup g = [&] {
    switch (e.kind) {
      case Kind::cyclic: return cyclic(positive(p[0], "C(n)"));
      case Kind::dihedral: return dihedral(positive(p[0], "D(n)"));
      case Kind::quaternion: return generalized_quaternion(positive(p[0], "Q(n)"));
      case Kind::semidihedral: return semidihedral(positive(p[0], "SD(n)"));
      case Kind::symmetric: return symmetric(small(p[0], "Sym(n)"));
      case Kind::alternating: return alternating(small(p[0], "Alt(n)"));
      case Kind::sl2: return sl2(positive(p[0], "SL2(p)"));
      case Kind::elementary_abelian:
        return elementary_abelian(positive(p[0], "EA(p, t)"), small(p[1], "EA(p, t)"));
      case Kind::holomorph: return holomorph_cyclic(positive(p[0], "Hol(n)"));
      case Kind::frobenius_inversion:
        return frobenius_inversion(positive(p[0], "FrobInv"), small(p[1], "FrobInv"),
                                   e.text == "c2" ? Extension::c2 : Extension::c4);
      case Kind::frobenius_field:
        return frobenius_field(positive(p[0], "FrobF"), small(p[1], "FrobF"), positive(p[2], "FrobF"));
      case Kind::affine: return affine_cyclic(positive(p[0], "Aff(n, a)"), p[1]);
      case Kind::central_product:
        return central_product(eval_expr(e.children[0]), eval_expr(e.children[1]));
      case Kind::direct_product:
        return direct_product(eval_expr(e.children[0]), eval_expr(e.children[1]));
      case Kind::file: return ingest(e.text);
    }
    throw BadParameter("unknown expression kind");
  }();
  return g.relabeled(render(e));
}

FiniteGroup eval_expr(std::string_view text) { return eval_expr(parse_group_expr(text)); }

}  // namespace ordtype
