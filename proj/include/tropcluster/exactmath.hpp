#ifndef TROPCLUSTER_EXACTMATH_HPP
#define TROPCLUSTER_EXACTMATH_HPP

// Exact integer/rational linear algebra. Everything here is dense and meant
// for matrices with a few dozen rows and columns at most.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tropcluster/errors.hpp"

namespace tropcluster {

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;
using Exponent = std::vector<int>;

/// Parses "3", "-7/2", " 4 / 6 " into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Row-major dense matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw Error(ErrorCode::InvalidArgument, "matrix entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& entries() const noexcept { return data_; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix operator-() const {
    Matrix n(*this);
    for (auto& x : n.data_) x = -x;
    return n;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;
using IntMatrix = Matrix<std::int64_t>;

QMatrix to_rational(const IntMatrix& m);
QMatrix to_rational(const ZMatrix& m);
/// Converts a matrix whose entries are all integral; throws otherwise.
IntMatrix to_int(const QMatrix& m);

std::size_t rank(const QMatrix& m);
Rational determinant(const QMatrix& m);

/// Exact inverse; throws SingularMatrix.
QMatrix invert(const QMatrix& m);

/// Basis of the right kernel, in reduced-echelon form (free variable = 1).
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Solves m x = b; returns false when inconsistent. Free variables are set to 0.
bool solve(const QMatrix& m, const QVector& b, QVector& x);

struct SmithForm {
  ZMatrix U;  // unimodular, rows x rows
  ZMatrix D;  // diagonal, d_1 | d_2 | ...
  ZMatrix V;  // unimodular, cols x cols
};

/// U * m * V = D.
SmithForm smith_normal_form(const ZMatrix& m);

struct IntLattice {
  std::vector<ZVector> generators;
};

/// True iff (lattice tensor Q) intersected with Z^ambient_dim equals the lattice.
bool is_saturated(const IntLattice& lattice, std::size_t ambient_dim);

/// Clears denominators: returns the primitive integer multiple with the same sign.
ZVector primitive_integer_vector(const QVector& v);

QVector negated(QVector v);

}  // namespace tropcluster

#endif  // TROPCLUSTER_EXACTMATH_HPP
