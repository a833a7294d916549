#ifndef CBNEF_MATRIX_HPP
#define CBNEF_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbnef/rational.hpp"

namespace cbnef {

/// Dense exact-rational matrix.  Value type: every operation returns a
/// fresh matrix, nothing is mutated in place after construction.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("RatMatrix: entry count does not match shape");
  }

  /// Row-major construction from integer literals, for tests and fixtures.
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rat& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("RatMatrix: index out of range");
    return entries_[i * cols_ + j];
  }
  Rat& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("RatMatrix: index out of range");
    return entries_[i * cols_ + j];
  }

  RatMatrix transpose() const;

  /// New matrix with the given row removed.
  RatMatrix without_row(std::size_t i) const;
  /// New matrix with the given column removed.
  RatMatrix without_col(std::size_t j) const;
  /// Submatrix on the given rows and columns, in the order listed.
  RatMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;

  std::string str() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> entries_;
};

/// Exact matrix product.  Throws on a dimension mismatch.
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

/// Exact rank via rational Gaussian elimination.
std::size_t rank(const RatMatrix& a);

/// Exact determinant.  The empty 0x0 matrix has determinant 1.
/// Throws if the matrix is not square.
Rat det(const RatMatrix& a);

/// Exact inverse.  Throws if not square or singular.
RatMatrix invert(const RatMatrix& a);

/// Exact solution x of a*x = rhs for square nonsingular a.
std::vector<Rat> solve(const RatMatrix& a, const std::vector<Rat>& rhs);

}  // namespace cbnef

#endif
