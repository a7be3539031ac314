#include "ordtype/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ordtype/errors.hpp"
#include "ordtype/finite_field.hpp"
#include "ordtype/number_theory.hpp"
#include "ordtype/structure.hpp"

namespace ordtype {

namespace {

void require_size(std::uint64_t order, const std::string& what) {
  if (order > kMaxConstructedOrder) {
    throw BadParameter(what + " has order " + std::to_string(order) + ", above the limit of " +
                       std::to_string(kMaxConstructedOrder));
  }
}

FiniteGroup build(std::vector<ElementId> table, std::size_t n, std::string label) {
  return FiniteGroup::from_cayley_table(std::move(table), n, std::move(label),
                                        CheckLevel::generators);
}

// True when a top-level " x " appears outside parentheses.
bool is_product_label(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s[i] == 'x' && i > 0 && s[i - 1] == ' ' && i + 1 < s.size() &&
        s[i + 1] == ' ') {
      return true;
    }
  }
  return false;
}

// a^i b^j at index j*m + i with b a b^-1 = a^r and b^e = a^s.
FiniteGroup cyclic_extension(std::uint64_t m, std::uint64_t e, std::uint64_t r,
                             std::uint64_t s, std::string label) {
  const std::uint64_t n = m * e;
  std::vector<std::uint64_t> rpow(e, 1 % m);
  for (std::uint64_t j = 1; j < e; ++j) rpow[j] = rpow[j - 1] * r % m;
  std::vector<ElementId> t(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t i = x % m, j = x / m;
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t k = y % m, l = y / m;
      std::uint64_t a = (i + k * rpow[j]) % m;
      std::uint64_t b = j + l;
      if (b >= e) {
        b -= e;
        a = (a + s) % m;
      }
      t[x * n + y] = static_cast<ElementId>(b * m + a);
    }
  }
  return build(std::move(t), n, std::move(label));
}

unsigned two_exponent(std::uint64_t n) {
  unsigned k = 0;
  while (n > 1 && n % 2 == 0) {
    n /= 2;
    ++k;
  }
  return n == 1 ? k : 0;
}

FiniteGroup permutation_group(unsigned n, bool even_only, std::string label) {
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0U);
  do {
    if (even_only) {
      unsigned inversions = 0;
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) inversions += p[i] > p[j];
      }
      if (inversions % 2 != 0) continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<unsigned>, ElementId> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<ElementId>(i));
  const std::size_t sz = perms.size();
  std::vector<ElementId> t(sz * sz);
  std::vector<unsigned> c(n);
  for (std::size_t a = 0; a < sz; ++a) {
    for (std::size_t b = 0; b < sz; ++b) {
      for (unsigned i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a * sz + b] = index.at(c);
    }
  }
  return build(std::move(t), sz, std::move(label));
}

// p^t, saturating just above the size cap.
std::uint64_t capped_power(std::uint64_t p, unsigned t) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < t; ++i) {
    r *= p;
    if (r > kMaxConstructedOrder) return kMaxConstructedOrder + 1;
  }
  return r;
}

std::string render_ext(Extension ext) { return ext == Extension::c2 ? "c2" : "c4"; }

}  // namespace

FiniteGroup cyclic(std::uint64_t n) {
  if (n == 0) throw BadParameter("C(n) requires n >= 1");
  require_size(n, "C(" + std::to_string(n) + ")");
  std::vector<ElementId> t(n * n);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) t[i * n + j] = static_cast<ElementId>((i + j) % n);
  }
  return FiniteGroup::from_cayley_table(std::move(t), n, "C(" + std::to_string(n) + ")",
                                        CheckLevel::structural);
}

FiniteGroup dihedral(std::uint64_t order) {
  const auto label = "D(" + std::to_string(order) + ")";
  if (order < 4 || order % 2 != 0) throw BadParameter(label + " requires an even order >= 4");
  require_size(order, label);
  const auto m = order / 2;
  return cyclic_extension(m, 2, m - 1, 0, label);
}

FiniteGroup generalized_quaternion(std::uint64_t order) {
  const auto label = "Q(" + std::to_string(order) + ")";
  if (two_exponent(order) < 3) throw BadParameter(label + " requires order 2^k with k >= 3");
  require_size(order, label);
  const auto m = order / 2;
  return cyclic_extension(m, 2, m - 1, m / 2, label);
}

FiniteGroup semidihedral(std::uint64_t order) {
  const auto label = "SD(" + std::to_string(order) + ")";
  if (two_exponent(order) < 4) throw BadParameter(label + " requires order 2^k with k >= 4");
  require_size(order, label);
  const auto m = order / 2;
  return cyclic_extension(m, 2, m / 2 - 1, 0, label);
}

FiniteGroup symmetric(unsigned n) {
  const auto label = "Sym(" + std::to_string(n) + ")";
  if (n < 1 || n > 7) throw BadParameter(label + " requires 1 <= n <= 7");
  require_size(factorial(n), label);
  return permutation_group(n, false, label);
}

FiniteGroup alternating(unsigned n) {
  const auto label = "Alt(" + std::to_string(n) + ")";
  if (n < 1 || n > 7) throw BadParameter(label + " requires 1 <= n <= 7");
  require_size(n < 2 ? 1 : factorial(n) / 2, label);
  return permutation_group(n, true, label);
}

FiniteGroup sl2(std::uint64_t p) {
  const auto label = "SL2(" + std::to_string(p) + ")";
  if (!is_prime(p) || p > 7) throw BadParameter(label + " requires a prime p <= 7");
  struct Mat {
    std::uint64_t a, b, c, d;
    auto operator<=>(const Mat&) const = default;
  };
  std::vector<Mat> mats;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d)
          if ((a * d + p * p - b * c % p) % p == 1) mats.push_back({a, b, c, d});
  std::map<Mat, ElementId> index;
  for (std::size_t i = 0; i < mats.size(); ++i) index.emplace(mats[i], static_cast<ElementId>(i));
  const std::size_t n = mats.size();
  std::vector<ElementId> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = mats[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto& y = mats[j];
      const Mat z{(x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p,
                  (x.c * y.a + x.d * y.c) % p, (x.c * y.b + x.d * y.d) % p};
      t[i * n + j] = index.at(z);
    }
  }
  return build(std::move(t), n, label);
}

FiniteGroup elementary_abelian(std::uint64_t p, unsigned t) {
  const auto label = "EA(" + std::to_string(p) + ", " + std::to_string(t) + ")";
  if (!is_prime(p) || t < 1) throw BadParameter(label + " requires a prime p and t >= 1");
  const auto n = capped_power(p, t);
  require_size(n, label);
  std::vector<ElementId> tab(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      std::uint64_t a = x, b = y, sum = 0, place = 1;
      for (unsigned i = 0; i < t; ++i) {
        sum += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
      }
      tab[x * n + y] = static_cast<ElementId>(sum);
    }
  }
  return FiniteGroup::from_cayley_table(std::move(tab), n, label, CheckLevel::structural);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto rhs = is_product_label(b.label()) ? "(" + b.label() + ")" : b.label();
  const auto label = a.label() + " x " + rhs;
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  require_size(n, label);
  std::vector<ElementId> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<ElementId>(x / nb), xb = static_cast<ElementId>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<ElementId>(y / nb), yb = static_cast<ElementId>(y % nb);
      t[x * n + y] = static_cast<ElementId>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  return FiniteGroup::from_cayley_table(std::move(t), n, label, CheckLevel::structural);
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const ActionTable& action) {
  const std::size_t nn = n.size(), nh = h.size(), total = nn * nh;
  const auto label = n.label() + " : " + h.label();
  require_size(total, label);
  const auto& img = action.images;
  if (img.size() != nh) throw InvalidAction("expected one permutation per element of H");
  for (std::size_t x = 0; x < nh; ++x) {
    const auto& a = img[x];
    if (a.size() != nn) throw InvalidAction("permutation " + std::to_string(x) + " has wrong length");
    std::vector<char> seen(nn, 0);
    for (auto v : a) {
      if (v >= nn || seen[v]) throw InvalidAction("image of " + std::to_string(x) + " is not a permutation");
      seen[v] = 1;
    }
    for (ElementId u = 0; u < nn; ++u) {
      for (ElementId v = 0; v < nn; ++v) {
        if (a[n.mul(u, v)] != n.mul(a[u], a[v])) {
          throw InvalidAction("alpha_" + std::to_string(x) + " is not an automorphism of N");
        }
      }
    }
  }
  for (ElementId u = 0; u < nn; ++u) {
    if (img[h.identity()][u] != u) throw InvalidAction("identity of H acts nontrivially");
  }
  for (ElementId x = 0; x < nh; ++x) {
    for (ElementId y = 0; y < nh; ++y) {
      const auto& xy = img[h.mul(x, y)];
      for (ElementId u = 0; u < nn; ++u) {
        if (xy[u] != img[x][img[y][u]]) throw InvalidAction("h -> alpha_h is not a homomorphism");
      }
    }
  }
  std::vector<ElementId> t(total * total);
  for (std::size_t x = 0; x < total; ++x) {
    const auto xn = static_cast<ElementId>(x / nh), xh = static_cast<ElementId>(x % nh);
    const auto& ax = img[xh];
    for (std::size_t y = 0; y < total; ++y) {
      const auto yn = static_cast<ElementId>(y / nh), yh = static_cast<ElementId>(y % nh);
      t[x * total + y] = static_cast<ElementId>(n.mul(xn, ax[yn]) * nh + h.mul(xh, yh));
    }
  }
  return FiniteGroup::from_cayley_table(std::move(t), total, label, CheckLevel::structural);
}

FiniteGroup frobenius_inversion(std::uint64_t p, unsigned t, Extension ext) {
  const auto label = "FrobInv(" + std::to_string(p) + ", " + std::to_string(t) + ", " +
                     render_ext(ext) + ")";
  if (!is_prime(p) || p == 2 || t < 1) throw BadParameter(label + " requires an odd prime p and t >= 1");
  const std::uint64_t m = ext == Extension::c2 ? 2 : 4;
  require_size(capped_power(p, t) * m, label);
  const auto kernel = elementary_abelian(p, t);
  const auto top = cyclic(m);
  ActionTable action;
  for (std::uint64_t k = 0; k < m; ++k) {
    std::vector<ElementId> perm(kernel.size());
    for (ElementId u = 0; u < kernel.size(); ++u) perm[u] = k % 2 == 0 ? u : kernel.inverse(u);
    action.images.push_back(std::move(perm));
  }
  return semidirect_product(kernel, top, action).relabeled(label);
}

FiniteGroup frobenius_field(std::uint64_t p, unsigned t, std::uint64_t q) {
  const auto label = "FrobF(" + std::to_string(p) + ", " + std::to_string(t) + ", " +
                     std::to_string(q) + ")";
  if (!is_prime(p) || !is_prime(q) || t < 1) throw BadParameter(label + " requires primes p, q and t >= 1");
  require_size(q, label);
  const auto size = capped_power(p, t);
  require_size(size * q, label);
  if ((size - 1) % q != 0) throw BadParameter(label + " requires q | p^t - 1");
  const PrimePowerField field(p, t);
  const auto w = field.pow(field.smallest_primitive_element(), (size - 1) / q);
  const auto kernel = elementary_abelian(p, t);
  const auto top = cyclic(q);
  ActionTable action;
  std::uint64_t scale = 1;
  for (std::uint64_t k = 0; k < q; ++k) {
    std::vector<ElementId> perm(size);
    for (std::uint64_t u = 0; u < size; ++u) perm[u] = static_cast<ElementId>(field.mul(scale, u));
    action.images.push_back(std::move(perm));
    scale = field.mul(scale, w);
  }
  return semidirect_product(kernel, top, action).relabeled(label);
}

FiniteGroup unit_group(std::uint64_t n) {
  if (n == 0) throw BadParameter("units modulo 0");
  std::vector<std::uint64_t> units;
  for (std::uint64_t u = 0; u < n; ++u) {
    if (std::gcd(u, n) == 1) units.push_back(u);
  }
  const std::size_t m = units.size();
  std::vector<ElementId> where(n, 0);
  for (std::size_t i = 0; i < m; ++i) where[units[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> t(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = where[units[i] * units[j] % n];
  }
  return FiniteGroup::from_cayley_table(std::move(t), m, "U(" + std::to_string(n) + ")",
                                        CheckLevel::structural);
}

FiniteGroup holomorph_cyclic(std::uint64_t n) {
  const auto label = "Hol(" + std::to_string(n) + ")";
  if (n < 1 || n > 64) throw BadParameter(label + " requires 1 <= n <= 64");
  require_size(n * euler_phi(n), label);
  const auto base = cyclic(n);
  const auto units = unit_group(n);
  ActionTable action;
  for (std::uint64_t u = 0; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    std::vector<ElementId> perm(n);
    for (std::uint64_t x = 0; x < n; ++x) perm[x] = static_cast<ElementId>(x * u % n);
    action.images.push_back(std::move(perm));
  }
  return semidirect_product(base, units, action).relabeled(label);
}

FiniteGroup central_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto label = "CP(" + a.label() + ", " + b.label() + ")";
  auto central_involution = [&](const FiniteGroup& g) {
    std::vector<ElementId> found;
    for (auto z : center(g)) {
      if (element_order(g, z) == 2) found.push_back(z);
    }
    if (found.size() != 1) {
      throw AmbiguousCenter(g.label() + " has " + std::to_string(found.size()) +
                            " central involutions");
    }
    return found.front();
  };
  const auto za = central_involution(a);
  const auto zb = central_involution(b);
  if (a.size() * b.size() / 2 > kMaxConstructedOrder) require_size(a.size() * b.size() / 2, label);
  // The intermediate direct product may exceed the cap, so build it here.
  const std::size_t nb = b.size(), n = a.size() * nb;
  std::vector<ElementId> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t[x * n + y] = static_cast<ElementId>(
          a.mul(static_cast<ElementId>(x / nb), static_cast<ElementId>(y / nb)) * nb +
          b.mul(static_cast<ElementId>(x % nb), static_cast<ElementId>(y % nb)));
    }
  }
  const auto prod = FiniteGroup::from_cayley_table(std::move(t), n, label, CheckLevel::structural);
  const std::vector<ElementId> kernel{prod.identity(),
                                      static_cast<ElementId>(za * nb + zb)};
  return quotient(prod, kernel).relabeled(label);
}

FiniteGroup affine_cyclic(std::uint64_t n, std::int64_t a) {
  const auto label = "Aff(" + std::to_string(n) + ", " + std::to_string(a) + ")";
  if (n < 1) throw BadParameter(label + " requires n >= 1");
  const auto sn = static_cast<std::int64_t>(n);
  const auto r = static_cast<std::uint64_t>(((a % sn) + sn) % sn);
  if (std::gcd(r, n) != 1) throw BadParameter(label + " requires gcd(a, n) = 1");
  const auto m = multiplicative_order(a, n);
  require_size(n * m, label);
  return cyclic_extension(n, m, r, 0, label);
}

}  // namespace ordtype
