#include "sumnet/gf.hpp"

#include <ostream>
#include <string>

namespace sumnet {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField,
                "field order " + std::to_string(p) + " is not a supported prime");
  }
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p_;
    base = base * base % p_;
    e >>= 1U;
  }
  return static_cast<Elem>(result);
}

std::vector<Elem> PrimeField::elements() const {
  std::vector<Elem> out(p_);
  for (Elem v = 0; v < p_; ++v) out[v] = v;
  return out;
}

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::FieldMismatch,
                "GF(" + std::to_string(a.field().p()) + ") vs GF(" +
                    std::to_string(b.field().p()) + ")");
  }
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(*this, o);
  return {field_, field_.add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(*this, o);
  return {field_, field_.sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(*this, o);
  return {field_, field_.mul(value_, o.value_)};
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement neg(const FieldElement& a) { return -a; }
FieldElement inv(const FieldElement& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << a.value();
}

Theorem2Constants theorem2_constants(const PrimeField& field,
                                     const FieldElement& alpha) {
  if (alpha.field() != field) {
    throw Error(ErrorCode::FieldMismatch, "alpha belongs to another field");
  }
  if (field.p() == 2 || alpha.value() == 0 || alpha.value() == 1) {
    throw Error(ErrorCode::InvalidAlpha,
                "alpha must lie outside {0, 1}; GF(2) has no such element");
  }
  const FieldElement one(field, 1);
  return {(one - alpha).inverse(), one - alpha.inverse()};
}

FieldElement default_alpha(const PrimeField& field) {
  if (field.p() == 2) {
    throw Error(ErrorCode::InvalidAlpha, "GF(2) has no element outside {0, 1}");
  }
  return {field, 2};
}

}  // namespace sumnet
