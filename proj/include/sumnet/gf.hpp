#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "sumnet/error.hpp"

namespace sumnet {

/// Raw canonical representative in [0, p). Hot loops work on these directly
/// through PrimeField; FieldElement is the checked value type.
using Elem = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// GF(p) for a prime p. Cheap to copy.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxPrime = 65521;

  /// Throws Error(InvalidField) unless p is a prime no larger than kMaxPrime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Elem reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws Error(DivisionByZero) for a == 0.
  Elem inv(Elem a) const;
  Elem minus_one() const noexcept { return p_ - 1; }

  /// Elements in canonical order 0, 1, ..., p-1.
  std::vector<Elem> elements() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// An element of a specific prime field. Mixing fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(PrimeField field, std::int64_t value)
      : field_(field), value_(field.reduce(value)) {}

  const PrimeField& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }
  FieldElement inverse() const { return {field_, field_.inv(value_)}; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  PrimeField field_;
  Elem value_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

struct Theorem2Constants {
  FieldElement beta;   // (1 - alpha)^-1
  FieldElement gamma;  // 1 - alpha^-1
};

/// Constants of the alpha/beta/gamma scheme that is valid for every field
/// other than GF(2). Throws Error(InvalidAlpha) when alpha is 0 or 1, which
/// covers every alpha of GF(2).
Theorem2Constants theorem2_constants(const PrimeField& field,
                                     const FieldElement& alpha);

/// Smallest admissible alpha, i.e. 2. Throws InvalidAlpha over GF(2).
FieldElement default_alpha(const PrimeField& field);

}  // namespace sumnet
