#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "eislat/eisint.hpp"

namespace eislat {

using EVec = std::vector<EisInt>;

/// Dense row-major matrix. Column-vector convention: M·v.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw MathError("Matrix: data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw MathError("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }
  /// Rows given as vectors.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw MathError("Matrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
    return from_rows(cols).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw MathError("Matrix: product dimension mismatch");
    Matrix p(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (is_zero_entry(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += xik * y(k, j);
      }
    return p;
  }
  friend std::vector<T> operator*(const Matrix& x, const std::vector<T>& v) {
    if (x.cols_ != v.size()) throw MathError("Matrix: vector dimension mismatch");
    std::vector<T> r(x.rows_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k)
        if (!is_zero_entry(x(i, k))) r[i] += x(i, k) * v[k];
    return r;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    check_same(x, y);
    for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] += y.data_[i];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    check_same(x, y);
    for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] -= y.data_[i];
    return x;
  }
  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& e : r.data_) e = s * e;
    return r;
  }
  Matrix operator-() const { return scaled(T(-1L)); }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  bool is_identity() const { return *this == identity(rows_) && square(); }

  std::span<const T> data() const { return data_; }

 private:
  static bool is_zero_entry(const T& t) {
    if constexpr (requires { t.is_zero(); }) return t.is_zero();
    else return t == T(0L);
  }
  static void check_same(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw MathError("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using EMat = Matrix<EisInt>;
using IntMat = Matrix<Int>;

/// Entrywise complex conjugate of the transpose.
EMat adjoint(const EMat& m);
EMat conj(const EMat& m);
EVec conj(const EVec& v);

EMat power(const EMat& m, unsigned k);

std::string to_string(const EVec& v);
std::string to_string(const EMat& m);

}  // namespace eislat
