#include "ordtype/finite_field.hpp"

#include "ordtype/errors.hpp"
#include "ordtype/number_theory.hpp"

namespace ordtype {

namespace {

using Poly = std::vector<std::uint64_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b, coefficients mod p.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly monic_from_code(std::uint64_t code, unsigned degree, std::uint64_t p) {
  Poly f(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    f[i] = code % p;
    code /= p;
  }
  f[degree] = 1;
  return f;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const unsigned degree = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= degree; ++d) {
    const auto count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned t) {
  if (!is_prime(p)) throw BadParameter("field characteristic " + std::to_string(p) + " is not prime");
  if (t == 0) throw BadParameter("field degree must be positive");
  const auto count = ipow(p, t);
  for (std::uint64_t code = 0; code < count; ++code) {
    auto f = monic_from_code(code, t, p);
    if (is_irreducible(f, p)) return f;
  }
  throw InternalInconsistency("no irreducible polynomial found");
}

PrimePowerField::PrimePowerField(std::uint64_t p, unsigned t)
    : p_(p), t_(t), q_(0), modulus_(smallest_irreducible(p, t)) {
  q_ = ipow(p, t);
}

std::vector<std::uint64_t> PrimePowerField::digits(std::uint64_t a) const {
  std::vector<std::uint64_t> c(t_, 0);
  for (unsigned i = 0; i < t_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint64_t PrimePowerField::encode(const std::vector<std::uint64_t>& c) const {
  std::uint64_t a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + c[i];
  return a;
}

std::uint64_t PrimePowerField::add(std::uint64_t a, std::uint64_t b) const {
  auto x = digits(a);
  const auto y = digits(b);
  for (unsigned i = 0; i < t_; ++i) x[i] = (x[i] + y[i]) % p_;
  return encode(x);
}

std::uint64_t PrimePowerField::mul(std::uint64_t a, std::uint64_t b) const {
  const auto x = digits(a);
  const auto y = digits(b);
  Poly prod(2 * t_, 0);
  for (unsigned i = 0; i < t_; ++i) {
    for (unsigned j = 0; j < t_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  }
  return encode(poly_mod(std::move(prod), modulus_, p_));
}

std::uint64_t PrimePowerField::pow(std::uint64_t a, std::uint64_t k) const {
  std::uint64_t r = 1;
  while (k > 0) {
    if (k & 1U) r = mul(r, a);
    a = mul(a, a);
    k >>= 1U;
  }
  return r;
}

std::uint64_t PrimePowerField::multiplicative_order(std::uint64_t a) const {
  if (a == 0 || a >= q_) throw BadParameter("multiplicative order of a non-unit field element");
  std::uint64_t x = a;
  std::uint64_t k = 1;
  while (x != 1) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::uint64_t PrimePowerField::smallest_primitive_element() const {
  for (std::uint64_t a = 1; a < q_; ++a) {
    if (multiplicative_order(a) == q_ - 1) return a;
  }
  throw InternalInconsistency("field has no primitive element");
}

}  // namespace ordtype
