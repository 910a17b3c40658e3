#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace primcycle {

/// Default upper bound on the number of field elements.
inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

/// An element of GF(p^e) in the polynomial basis. The encoding is the
/// coefficient vector read as a base-p integer, constant term least
/// significant. Meaningful only together with its FiniteField.
class FieldElement {
public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const noexcept { return code_; }
  constexpr bool is_zero() const noexcept { return code_ == 0; }

  constexpr bool operator==(const FieldElement &) const = default;
  constexpr auto operator<=>(const FieldElement &) const = default;

private:
  std::uint32_t code_ = 0;
};

/// GF(p^e) = GF(p)[x] / (modulus). Construction is deterministic: the modulus
/// is the lexicographically smallest monic irreducible of degree e, comparing
/// coefficient sequences constant term first. Copies share immutable tables.
class FiniteField {
public:
  /// Throws std::invalid_argument if p is not prime or e == 0, and
  /// std::length_error if p^e exceeds `size_cap`.
  static FiniteField make(std::uint32_t p, std::uint32_t e,
                          std::uint64_t size_cap = kDefaultFieldCap);

  std::uint32_t characteristic() const noexcept { return t_->p; }
  std::uint32_t degree() const noexcept { return t_->e; }
  std::uint32_t size() const noexcept { return t_->q; }

  /// Monic modulus, coefficients from the constant term up (length e + 1).
  std::span<const std::uint32_t> modulus() const noexcept { return t_->modulus; }

  FieldElement zero() const noexcept { return FieldElement(0); }
  FieldElement one() const noexcept { return FieldElement(1); }
  FieldElement element(std::uint32_t code) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coefficients(FieldElement x) const;
  /// Image of the integer n under Z -> GF(p).
  FieldElement from_integer(std::int64_t n) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg(FieldElement a) const noexcept;
  FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  /// Throws std::domain_error for zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t n) const noexcept;

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(FieldElement a) const;

  /// The nonzero element of smallest encoding with multiplicative order q-1.
  FieldElement primitive_element() const noexcept {
    return FieldElement(t_->exp[t_->exp.size() > 1 ? 1 : 0]);
  }

  /// Discrete log to the base primitive_element(); a must be nonzero.
  std::uint32_t log(FieldElement a) const;
  FieldElement exp(std::uint64_t i) const noexcept;

  /// x^(p^f).
  FieldElement frobenius(FieldElement x, std::uint32_t f) const noexcept;

  /// True iff x is a nonzero square. Throws std::domain_error when q is even
  /// or x is zero.
  bool is_square(FieldElement x) const;

  std::string to_string(FieldElement x) const;

  bool operator==(const FiniteField &o) const noexcept {
    return t_->p == o.t_->p && t_->e == o.t_->e;
  }

private:
  struct Tables {
    std::uint32_t p = 0, e = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp; // exp[i] = g^i, length q-1
    std::vector<std::uint32_t> log; // log[x] for x != 0
  };
  explicit FiniteField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

inline FiniteField make_field(std::uint32_t p, std::uint32_t e,
                              std::uint64_t size_cap = kDefaultFieldCap) {
  return FiniteField::make(p, e, size_cap);
}

/// Irreducibility over GF(p) of a monic polynomial (coefficients constant
/// term first). Exposed for tests.
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p);

/// Dense d x d matrix over a finite field.
class Matrix {
public:
  Matrix(FiniteField field, std::size_t dim);
  static Matrix identity(const FiniteField &field, std::size_t dim);

  const FiniteField &field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }

  FieldElement operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * dim_ + c];
  }
  FieldElement &operator()(std::size_t r, std::size_t c) noexcept {
    return entries_[r * dim_ + c];
  }

  Matrix operator*(const Matrix &o) const;
  Matrix pow(std::uint64_t n) const;
  FieldElement determinant() const;

  /// Column-vector action v -> M v.
  std::vector<FieldElement> apply(std::span<const FieldElement> v) const;

  bool is_identity() const noexcept;
  bool operator==(const Matrix &o) const noexcept { return entries_ == o.entries_; }

private:
  FiniteField field_;
  std::size_t dim_;
  std::vector<FieldElement> entries_;
};

/// Companion matrix of the smallest monic degree-d polynomial over GF(q)
/// whose companion has multiplicative order q^d - 1 (a Singer cycle).
/// For d = 1 this is the 1x1 matrix [primitive_element()].
Matrix singer_matrix(const FiniteField &field, std::size_t d);

/// Order of an invertible matrix known to divide `exponent`.
std::uint64_t matrix_order_dividing(const Matrix &m, std::uint64_t exponent);

/// |GL_d(q)|; throws std::overflow_error when it does not fit.
std::uint64_t gl_order(std::uint64_t q, unsigned d);

} // namespace primcycle
