#pragma once

#include <vector>

#include "covbound/field.hpp"

namespace covbound {

// Dense row-major matrix over a finite field.
struct Matrix {
  FieldPtr f;
  int rows = 0, cols = 0;
  std::vector<Fel> a;

  Matrix() = default;
  Matrix(FieldPtr field, int r, int c)
      : f(std::move(field)), rows(r), cols(c), a(size_t(r) * c, 0) {}

  Fel& at(int r, int c) { return a[size_t(r) * cols + c]; }
  Fel at(int r, int c) const { return a[size_t(r) * cols + c]; }

  static Matrix identity(FieldPtr field, int n);
};

bool operator==(const Matrix& x, const Matrix& y);

Matrix transpose(const Matrix& m);
Matrix matmul(const Matrix& x, const Matrix& y);

// Reduced row echelon form via deterministic Gaussian elimination: pivots are
// chosen leftmost-column first, lowest row index first.  Rank is written to
// *rank when given.
Matrix rref(const Matrix& m, int* rank = nullptr);

int rank_of(const Matrix& m);

// Basis of the right kernel {x : m x^T = 0}, one basis vector per row,
// cols - rank rows total.  Deterministic (derived from rref).
Matrix nullspace(const Matrix& m);

// Rows of y stacked under rows of x (same field, same column count).
Matrix vstack(const Matrix& x, const Matrix& y);

}  // namespace covbound
