#include "cbnef/matrix.hpp"

#include <sstream>
#include <utility>

namespace cbnef {

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Rat> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c)
      throw std::invalid_argument("RatMatrix: ragged rows");
    for (long v : row) entries.emplace_back(v);
  }
  return RatMatrix(r, c, std::move(entries));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::without_row(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("RatMatrix: row out of range");
  RatMatrix m(rows_ - 1, cols_);
  for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0; c < cols_; ++c) m.at(rr, c) = at(r, c);
    ++rr;
  }
  return m;
}

RatMatrix RatMatrix::without_col(std::size_t j) const {
  if (j >= cols_) throw std::out_of_range("RatMatrix: column out of range");
  RatMatrix m(rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
      if (c == j) continue;
      m.at(r, cc++) = at(r, c);
    }
  return m;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
  RatMatrix m(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c)
      m.at(r, c) = at(row_idx[r], col_idx[c]);
  return m;
}

std::string RatMatrix::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << at(i, j).str();
    }
    out << '\n';
  }
  return out.str();
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: inner dimensions do not match");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

namespace {

// Row-echelon reduction on a working copy with exact rational pivoting;
// each pivot row is normalized to a leading 1 before elimination.
// Returns (rank, determinant-if-square).  The determinant accumulates the
// pivot values and row-swap signs, so no column may be skipped when square.
struct EchelonResult {
  std::size_t rank = 0;
  Rat det = Rat(1);
};

EchelonResult echelon(RatMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  EchelonResult res;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = lead;
    while (piv < rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == rows) {
      res.det = Rat(0);
      continue;
    }
    if (piv != lead) {
      for (std::size_t c = col; c < cols; ++c)
        std::swap(m.at(piv, c), m.at(lead, c));
      res.det = -res.det;
    }
    res.det *= m.at(lead, col);
    Rat inv = Rat(1) / m.at(lead, col);
    for (std::size_t c = col; c < cols; ++c) m.at(lead, c) *= inv;
    for (std::size_t r = lead + 1; r < rows; ++r) {
      Rat f = m.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < cols; ++c)
        m.at(r, c) -= f * m.at(lead, c);
    }
    ++lead;
  }
  res.rank = lead;
  return res;
}

}  // namespace

std::size_t rank(const RatMatrix& a) { return echelon(a).rank; }

Rat det(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("det: matrix is not square");
  if (a.rows() == 0) return Rat(1);
  EchelonResult res = echelon(a);
  return res.rank == a.rows() ? res.det : Rat(0);
}

RatMatrix invert(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("invert: matrix is not square");
  const std::size_t n = a.rows();
  // Gauss-Jordan on [a | I].
  RatMatrix w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, n + i) = Rat(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("invert: matrix is singular");
    if (piv != col)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(w.at(piv, c), w.at(col, c));
    Rat inv = Rat(1) / w.at(col, col);
    for (std::size_t c = 0; c < 2 * n; ++c) w.at(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = w.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < 2 * n; ++c) w.at(r, c) -= f * w.at(col, c);
    }
  }
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = w.at(i, n + j);
  return out;
}

std::vector<Rat> solve(const RatMatrix& a, const std::vector<Rat>& rhs) {
  if (!a.is_square()) throw std::invalid_argument("solve: matrix is not square");
  const std::size_t n = a.rows();
  if (rhs.size() != n) throw std::invalid_argument("solve: rhs length mismatch");
  RatMatrix w(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, n) = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("solve: matrix is singular");
    if (piv != col)
      for (std::size_t c = col; c <= n; ++c) std::swap(w.at(piv, c), w.at(col, c));
    Rat inv = Rat(1) / w.at(col, col);
    for (std::size_t c = col; c <= n; ++c) w.at(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = w.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t c = col; c <= n; ++c) w.at(r, c) -= f * w.at(col, c);
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = w.at(i, n);
  return x;
}

}  // namespace cbnef
