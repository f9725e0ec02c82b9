#include "sumnet/matrix.hpp"

#include <algorithm>
#include <utility>

namespace sumnet {

Matrix Matrix::identity(std::size_t n) { return embedding(n, n); }

Matrix Matrix::embedding(std::size_t n, std::size_t k) {
  Matrix m(n, k);
  for (std::size_t i = 0; i < std::min(n, k); ++i) m.at(i, i) = 1;
  return m;
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in multiply");
  Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
      }
    }
  }
  return out;
}

void accumulate(const PrimeField& f, Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in accumulate");
  }
  for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] = f.add(a.data[i], b.data[i]);
}

Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
  if (top.rows == 0) return bottom;
  if (bottom.rows == 0) return top;
  if (top.cols != bottom.cols) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in stack");
  Matrix out = top;
  out.rows += bottom.rows;
  out.data.insert(out.data.end(), bottom.data.begin(), bottom.data.end());
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns (among the first
// `limit` columns).
std::vector<std::size_t> reduce(const PrimeField& f, Matrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(row, c));
    }
    const Elem scale = f.inv(m.at(row, col));
    for (std::size_t c = 0; c < m.cols; ++c) m.at(row, c) = f.mul(m.at(row, c), scale);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Elem factor = m.at(r, col);
      for (std::size_t c = 0; c < m.cols; ++c) {
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const PrimeField& f, Matrix a) { return reduce(f, a, a.cols).size(); }

std::optional<Matrix> solve_left(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch in solve");
  // Solve a^T x^T = b^T for all rows of b at once: augmented [a^T | b^T].
  Matrix aug(a.cols, a.rows + b.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug.at(j, i) = a.at(i, j);
  }
  for (std::size_t i = 0; i < b.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) aug.at(j, a.rows + i) = b.at(i, j);
  }
  const auto pivots = reduce(f, aug, a.rows);
  for (std::size_t r = pivots.size(); r < aug.rows; ++r) {
    for (std::size_t c = a.rows; c < aug.cols; ++c) {
      if (aug.at(r, c) != 0) return std::nullopt;
    }
  }
  Matrix x(b.rows, a.rows);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t i = 0; i < b.rows; ++i) x.at(i, pivots[r]) = aug.at(r, a.rows + i);
  }
  return x;
}

}  // namespace sumnet
