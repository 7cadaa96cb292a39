#ifndef LEF_LINALG_HPP
#define LEF_LINALG_HPP

#include "lef/rational.hpp"

#include <vector>

namespace lef {

/// Dense matrix over the rationals, row-major.
class QMatrix {
public:
  QMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

int rank(QMatrix m); // by value: eliminates in place

// Reduced row echelon form with zero rows dropped: a canonical basis of the
// row space, so equal row spaces compare equal.
QMatrix row_space_basis(QMatrix m);

} // namespace lef

#endif
