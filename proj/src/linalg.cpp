#include "lef/linalg.hpp"

#include <stdexcept>

namespace lef {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0));
}

namespace {
// Gauss-Jordan elimination; returns pivot columns. Mutates m into RREF.
std::vector<int> rref_in_place(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = c; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) /= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}
} // namespace

int rank(QMatrix m) { return static_cast<int>(rref_in_place(m).size()); }

QMatrix row_space_basis(QMatrix m) {
  int rk = static_cast<int>(rref_in_place(m).size());
  QMatrix out(rk, m.cols());
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

} // namespace lef
