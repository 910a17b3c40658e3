#include "primcycle/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "primcycle/arith.hpp"

namespace primcycle {

namespace {

using Poly = std::vector<std::uint32_t>; // coefficients, constant term first

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t n = p - 2; n; n >>= 1) {
    if (n & 1)
      r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly &m, std::uint32_t p) {
  trim(a);
  std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - factor) * m[i]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly &a, const Poly &b, const Poly &m, std::uint32_t p) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i])
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly &m, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (n) {
    if (n & 1)
      r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    n >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly sub_x(Poly a, std::uint32_t p) {
  if (a.size() < 2)
    a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
  Poly c(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    c[i] = code % p;
    code /= p;
  }
  trim(c);
  return c;
}

std::uint32_t encode(const Poly &c, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;)
    code = code * p + c[i];
  return code;
}

} // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2)
    return false;
  std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
  if (e == 1)
    return true;
  // Rabin: x^(p^e) = x mod f, and gcd(x^(p^(e/r)) - x, f) = 1 for primes r | e.
  auto frob_power = [&](std::uint32_t times) {
    Poly x{0, 1};
    for (std::uint32_t i = 0; i < times; ++i)
      x = poly_powmod(x, p, f, p);
    return x;
  };
  Poly full = sub_x(frob_power(e), p);
  if (!full.empty())
    return false;
  for (auto [r, _] : factorize(e)) {
    Poly g = poly_gcd(f, sub_x(frob_power(e / static_cast<std::uint32_t>(r)), p), p);
    if (g.size() != 1)
      return false;
  }
  return true;
}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t e, std::uint64_t size_cap) {
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  if (e == 0)
    throw std::invalid_argument("field extension degree must be at least 1");
  std::uint64_t q = 0;
  try {
    q = checked_pow(p, e);
  } catch (const std::overflow_error &) {
    throw std::length_error("field size overflows");
  }
  if (q > size_cap)
    throw std::length_error("field size " + std::to_string(q) + " exceeds cap " +
                            std::to_string(size_cap));

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<std::uint32_t>(q);

  // Lexicographic order with the constant term most significant.
  Poly modulus;
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Poly f(e + 1);
    std::uint64_t v = idx;
    for (std::uint32_t i = e; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[e] = 1;
    if (is_irreducible_mod_p(f, p)) {
      modulus = std::move(f);
      break;
    }
  }
  t->modulus = modulus;

  std::uint64_t group_order = q - 1;
  auto primes = factorize(group_order);
  std::uint32_t generator = 1;
  if (q > 2) {
    for (std::uint32_t code = 2; code < q; ++code) {
      Poly g = decode(code, p, e);
      bool primitive = true;
      for (auto [r, _] : primes) {
        Poly h = poly_powmod(g, group_order / r, modulus, p);
        if (h.size() == 1 && h[0] == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = code;
        break;
      }
    }
  }

  t->exp.resize(group_order);
  t->log.assign(q, 0);
  Poly g = decode(generator, p, e);
  Poly cur{1};
  for (std::uint64_t i = 0; i < group_order; ++i) {
    std::uint32_t code = encode(cur, p);
    t->exp[i] = code;
    t->log[code] = static_cast<std::uint32_t>(i);
    cur = poly_mulmod(cur, g, modulus, p);
  }
  return FiniteField(std::move(t));
}

FieldElement FiniteField::element(std::uint32_t code) const {
  if (code >= t_->q)
    throw std::out_of_range("field element code " + std::to_string(code) +
                            " out of range");
  return FieldElement(code);
}

FieldElement FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > t_->e)
    throw std::invalid_argument("too many coefficients for field");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= t_->p)
      throw std::invalid_argument("coefficient not reduced mod p");
    code = code * t_->p + coeffs[i];
  }
  return FieldElement(code);
}

std::vector<std::uint32_t> FiniteField::coefficients(FieldElement x) const {
  std::vector<std::uint32_t> c(t_->e);
  std::uint32_t code = x.code();
  for (auto &ci : c) {
    ci = code % t_->p;
    code /= t_->p;
  }
  return c;
}

FieldElement FiniteField::from_integer(std::int64_t n) const {
  std::int64_t p = t_->p;
  return FieldElement(static_cast<std::uint32_t>(((n % p) + p) % p));
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const noexcept {
  const std::uint32_t p = t_->p;
  if (p == 2)
    return FieldElement(a.code() ^ b.code());
  std::uint32_t x = a.code(), y = b.code(), r = 0, place = 1;
  for (std::uint32_t i = 0; i < t_->e; ++i) {
    r += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return FieldElement(r);
}

FieldElement FiniteField::neg(FieldElement a) const noexcept {
  const std::uint32_t p = t_->p;
  if (p == 2)
    return a;
  std::uint32_t x = a.code(), r = 0, place = 1;
  for (std::uint32_t i = 0; i < t_->e; ++i) {
    r += ((p - x % p) % p) * place;
    x /= p;
    place *= p;
  }
  return FieldElement(r);
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const noexcept {
  return add(a, neg(b));
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const noexcept {
  if (a.is_zero() || b.is_zero())
    return zero();
  std::uint64_t s = std::uint64_t{t_->log[a.code()]} + t_->log[b.code()];
  return FieldElement(t_->exp[s % (t_->q - 1)]);
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.is_zero())
    throw std::domain_error("inverse of zero");
  std::uint32_t l = t_->log[a.code()];
  return FieldElement(t_->exp[l == 0 ? 0 : (t_->q - 1) - l]);
}

FieldElement FiniteField::div(FieldElement a, FieldElement b) const {
  return mul(a, inv(b));
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t n) const noexcept {
  if (n == 0)
    return one();
  if (a.is_zero())
    return zero();
  unsigned __int128 s = static_cast<unsigned __int128>(t_->log[a.code()]) * n;
  return FieldElement(t_->exp[static_cast<std::uint64_t>(s % (t_->q - 1))]);
}

std::uint64_t FiniteField::multiplicative_order(FieldElement a) const {
  if (a.is_zero())
    throw std::domain_error("zero has no multiplicative order");
  std::uint64_t n = t_->q - 1;
  return n / std::gcd<std::uint64_t>(n, t_->log[a.code()]);
}

std::uint32_t FiniteField::log(FieldElement a) const {
  if (a.is_zero())
    throw std::domain_error("log of zero");
  return t_->log[a.code()];
}

FieldElement FiniteField::exp(std::uint64_t i) const noexcept {
  return FieldElement(t_->exp[i % (t_->q - 1)]);
}

FieldElement FiniteField::frobenius(FieldElement x, std::uint32_t f) const noexcept {
  f %= t_->e;
  if (x.is_zero() || f == 0)
    return x;
  std::uint64_t m = t_->q - 1, k = 1;
  for (std::uint32_t i = 0; i < f; ++i)
    k = k * t_->p % m;
  return FieldElement(t_->exp[(std::uint64_t{t_->log[x.code()]} * k) % m]);
}

bool FiniteField::is_square(FieldElement x) const {
  if (t_->p == 2)
    throw std::domain_error("is_square: no residue split in even characteristic");
  if (x.is_zero())
    throw std::domain_error("is_square: zero has no residue class");
  return t_->log[x.code()] % 2 == 0;
}

std::string FiniteField::to_string(FieldElement x) const {
  if (t_->e == 1)
    return std::to_string(x.code());
  std::string out;
  auto c = coefficients(x);
  for (std::size_t i = c.size(); i-- > 0;) {
    if (!c[i])
      continue;
    if (!out.empty())
      out += '+';
    if (i == 0 || c[i] != 1)
      out += std::to_string(c[i]);
    if (i >= 1)
      out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Matrix::Matrix(FiniteField field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), entries_(dim * dim) {}

Matrix Matrix::identity(const FiniteField &field, std::size_t dim) {
  Matrix m(field, dim);
  for (std::size_t i = 0; i < dim; ++i)
    m(i, i) = field.one();
  return m;
}

Matrix Matrix::operator*(const Matrix &o) const {
  Matrix r(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      FieldElement a = (*this)(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < dim_; ++j)
        r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
    }
  return r;
}

Matrix Matrix::pow(std::uint64_t n) const {
  Matrix r = identity(field_, dim_);
  Matrix b = *this;
  while (n) {
    if (n & 1)
      r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

FieldElement Matrix::determinant() const {
  Matrix a = *this;
  FieldElement det = field_.one();
  for (std::size_t c = 0; c < dim_; ++c) {
    std::size_t pivot = c;
    while (pivot < dim_ && a(pivot, c).is_zero())
      ++pivot;
    if (pivot == dim_)
      return field_.zero();
    if (pivot != c) {
      for (std::size_t j = 0; j < dim_; ++j)
        std::swap(a(pivot, j), a(c, j));
      det = field_.neg(det);
    }
    det = field_.mul(det, a(c, c));
    FieldElement inv = field_.inv(a(c, c));
    for (std::size_t r = c + 1; r < dim_; ++r) {
      FieldElement f = field_.mul(a(r, c), inv);
      if (f.is_zero())
        continue;
      for (std::size_t j = c; j < dim_; ++j)
        a(r, j) = field_.sub(a(r, j), field_.mul(f, a(c, j)));
    }
  }
  return det;
}

std::vector<FieldElement> Matrix::apply(std::span<const FieldElement> v) const {
  std::vector<FieldElement> r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      r[i] = field_.add(r[i], field_.mul((*this)(i, j), v[j]));
  return r;
}

bool Matrix::is_identity() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if ((*this)(i, j).code() != (i == j ? 1u : 0u))
        return false;
  return true;
}

std::uint64_t matrix_order_dividing(const Matrix &m, std::uint64_t exponent) {
  std::uint64_t order = exponent;
  for (auto [r, _] : factorize(exponent))
    while (order % r == 0 && m.pow(order / r).is_identity())
      order /= r;
  return order;
}

Matrix singer_matrix(const FiniteField &field, std::size_t d) {
  if (d == 0)
    throw std::invalid_argument("singer_matrix: dimension must be positive");
  if (d == 1) {
    Matrix m(field, 1);
    m(0, 0) = field.primitive_element();
    return m;
  }
  const std::uint64_t q = field.size();
  const std::uint64_t target = checked_pow(q, static_cast<unsigned>(d)) - 1;
  auto primes = factorize(target);
  std::vector<std::uint32_t> coeffs(d, 0);
  const std::uint64_t count = checked_pow(q, static_cast<unsigned>(d));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t i = d; i-- > 0;) {
      coeffs[i] = static_cast<std::uint32_t>(v % q);
      v /= q;
    }
    if (coeffs[0] == 0)
      continue;
    Matrix c(field, d);
    for (std::size_t i = 0; i + 1 < d; ++i)
      c(i + 1, i) = field.one();
    for (std::size_t i = 0; i < d; ++i)
      c(i, d - 1) = field.neg(FieldElement(coeffs[i]));
    if (!c.pow(target).is_identity())
      continue;
    bool full = true;
    for (auto [r, _] : primes)
      if (c.pow(target / r).is_identity()) {
        full = false;
        break;
      }
    if (full)
      return c;
  }
  throw std::logic_error("no primitive polynomial found");
}

std::uint64_t gl_order(std::uint64_t q, unsigned d) {
  std::uint64_t qd = checked_pow(q, d);
  std::uint64_t r = 1, qi = 1;
  for (unsigned i = 0; i < d; ++i) {
    r = checked_mul(r, qd - qi);
    qi *= q;
  }
  return r;
}

} // namespace primcycle
