#include "lrc/linalg.hpp"

#include <utility>

namespace lrc {

Matrix row_reduce(const FieldContext& f, Matrix m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  if (m.empty()) return m;
  const int cols = static_cast<int>(m.front().size());
  const int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    const Element inv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Element factor = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  m.resize(r);
  return m;
}

int rank(const FieldContext& f, const Matrix& m) { return static_cast<int>(row_reduce(f, m).size()); }

Matrix null_space(const FieldContext& f, const Matrix& m, int ncols) {
  std::vector<int> pivots;
  const Matrix r = row_reduce(f, m, &pivots);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Row v(ncols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) v[pivots[i]] = f.neg(r[i][free]);
    basis.push_back(std::move(v));
  }
  return row_reduce(f, std::move(basis));
}

Matrix transpose(const Matrix& m, int ncols) {
  Matrix t(ncols, Row(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace lrc
