#pragma once

#include <optional>
#include <vector>

#include "sumnet/gf.hpp"

namespace sumnet {

/// Dense row-major matrix of raw field values; the field is supplied to
/// every operation.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static Matrix identity(std::size_t n);
  /// [I_k; 0] with n rows (n >= k) or the first n rows of I_k (n < k).
  static Matrix embedding(std::size_t n, std::size_t k);

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
/// a += b, same shape.
void accumulate(const PrimeField& f, Matrix& a, const Matrix& b);
/// Rows of `top` followed by rows of `bottom`.
Matrix stack_rows(const Matrix& top, const Matrix& bottom);

std::size_t rank(const PrimeField& f, Matrix a);

/// Some X with X * a == b (every row of b in the row space of a), or nullopt.
/// Free variables are set to zero, so the answer is deterministic.
std::optional<Matrix> solve_left(const PrimeField& f, const Matrix& a, const Matrix& b);

}  // namespace sumnet
