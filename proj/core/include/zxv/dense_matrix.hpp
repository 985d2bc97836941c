// Copyright 2026 The zxverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "zxv/cyclotomic.hpp"
#include "zxv/errors.hpp"

namespace zxv {

/// Row-major dense matrix over a scalar type S (Cyclotomic or complex<double>).
template <typename S>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error("matrix entry count does not match shape");
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<S>& data() const { return data_; }
  std::vector<S>& data() { return data_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  DenseMatrix column(std::size_t c) const {
    DenseMatrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
    return v;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw ArityMismatch(a.cols_, b.rows_, "matrix product");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(i, k);
        if (is_zero_entry(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& y = b(k, j);
          if (is_zero_entry(y)) continue;
          out(i, j) += x * y;
        }
      }
    return out;
  }

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    check_same_shape(a, b);
    DenseMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    check_same_shape(a, b);
    DenseMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend DenseMatrix operator*(const S& s, const DenseMatrix& a) {
    DenseMatrix out = a;
    for (auto& v : out.data_) v = s * v;
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

 private:
  static bool is_zero_entry(const S& v) {
    if constexpr (std::is_same_v<S, Cyclotomic>)
      return v.is_zero();
    else
      return v == S(0);
  }
  static void check_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using ExactMatrix = DenseMatrix<Cyclotomic>;
using FloatMatrix = DenseMatrix<std::complex<double>>;

/// Kronecker product; the left factor indexes the most significant bits.
template <typename S>
DenseMatrix<S> kron(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  DenseMatrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const S& x = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return out;
}

/// Exact rank by Gaussian elimination over the cyclotomic field.
std::size_t rank(const ExactMatrix& m);
/// Numerical rank: pivots below `tol` (relative to the largest entry) count as zero.
std::size_t rank(const FloatMatrix& m, double tol = 1e-9);

FloatMatrix to_float(const ExactMatrix& m);
double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b);

/// Exact matrices whose entries are all rational (0/1 indicator style).
ExactMatrix rational_matrix(std::size_t rows, std::size_t cols,
                            const std::vector<Rational>& entries);

/// Row-major printing, one row per line, entries separated by ", ".
std::string to_string(const ExactMatrix& m);
std::string to_string(const FloatMatrix& m);
/// "a+bi" form with 12 significant digits.
std::string format_complex(std::complex<double> z);

}  // namespace zxv
