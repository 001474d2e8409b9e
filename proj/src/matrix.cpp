#include "covbound/matrix.hpp"

#include "covbound/errors.hpp"

namespace covbound {

Matrix Matrix::identity(FieldPtr field, int n) {
  Matrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool operator==(const Matrix& x, const Matrix& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a &&
         (!x.f || !y.f || x.f->q() == y.f->q());
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.f, m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows || x.f->q() != y.f->q())
    fail(Errc::length_mismatch, "matmul shape mismatch");
  const Field& f = *x.f;
  Matrix z(x.f, x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int i = 0; i < x.cols; ++i) {
      Fel v = x.at(r, i);
      if (v == 0) continue;
      for (int c = 0; c < y.cols; ++c)
        z.at(r, c) = f.add(z.at(r, c), f.mul(v, y.at(i, c)));
    }
  return z;
}

Matrix rref(const Matrix& m, int* rank) {
  Matrix r = m;
  const Field& f = *m.f;
  int pr = 0;  // next pivot row
  for (int pc = 0; pc < r.cols && pr < r.rows; ++pc) {
    int sel = -1;
    for (int i = pr; i < r.rows; ++i)
      if (r.at(i, pc) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int c = 0; c < r.cols; ++c) std::swap(r.at(sel, c), r.at(pr, c));
    Fel piv = r.at(pr, pc);
    if (piv != 1) {
      Fel pinv = f.inv(piv);
      for (int c = 0; c < r.cols; ++c) r.at(pr, c) = f.mul(r.at(pr, c), pinv);
    }
    for (int i = 0; i < r.rows; ++i) {
      if (i == pr) continue;
      Fel v = r.at(i, pc);
      if (v == 0) continue;
      for (int c = 0; c < r.cols; ++c)
        r.at(i, c) = f.sub(r.at(i, c), f.mul(v, r.at(pr, c)));
    }
    ++pr;
  }
  if (rank) *rank = pr;
  return r;
}

int rank_of(const Matrix& m) {
  int rk = 0;
  rref(m, &rk);
  return rk;
}

Matrix nullspace(const Matrix& m) {
  int rk = 0;
  Matrix r = rref(m, &rk);
  const Field& f = *m.f;

  std::vector<int> pivot_col;  // pivot column of each pivot row
  std::vector<bool> is_pivot(m.cols, false);
  for (int row = 0, col = 0; row < rk; ++row) {
    while (col < r.cols && r.at(row, col) == 0) ++col;
    pivot_col.push_back(col);
    is_pivot[col] = true;
  }

  Matrix basis(m.f, m.cols - rk, m.cols);
  int out = 0;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    basis.at(out, free) = 1;
    for (int row = 0; row < rk; ++row)
      basis.at(out, pivot_col[row]) = f.neg(r.at(row, free));
    ++out;
  }
  return basis;
}

Matrix vstack(const Matrix& x, const Matrix& y) {
  if (x.cols != y.cols || x.f->q() != y.f->q())
    fail(Errc::length_mismatch, "vstack shape mismatch");
  Matrix z(x.f, x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), z.a.begin());
  std::copy(y.a.begin(), y.a.end(), z.a.begin() + x.a.size());
  return z;
}

}  // namespace covbound
