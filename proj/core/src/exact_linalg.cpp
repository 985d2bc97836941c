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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "zxv/dense_matrix.hpp"

namespace zxv {

std::size_t rank(const ExactMatrix& m) {
  // Plain elimination: entries are field elements, so division is exact and
  // zero entries below the pivot need no update at all.
  ExactMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    const Cyclotomic inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      const Cyclotomic f = a(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const FloatMatrix& m, double tol) {
  FloatMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  double scale = 0;
  for (const auto& v : a.data()) scale = std::max(scale, std::abs(v));
  if (scale == 0) return 0;
  const double thresh = tol * scale;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (std::abs(a(i, c)) > std::abs(a(piv, c))) piv = i;
    if (std::abs(a(piv, c)) <= thresh) continue;
    for (std::size_t j = c; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      const auto f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = m.data()[i].to_complex();
  return out;
}

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix shapes differ");
  double d = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

ExactMatrix rational_matrix(std::size_t rows, std::size_t cols,
                            const std::vector<Rational>& entries) {
  std::vector<Cyclotomic> data;
  data.reserve(entries.size());
  for (const auto& e : entries) data.emplace_back(e);
  return ExactMatrix(rows, cols, std::move(data));
}

std::string format_complex(std::complex<double> z) {
  auto clean = [](double v) { return std::abs(v) < 5e-13 ? 0.0 : v; };
  const double re = clean(z.real()), im = clean(z.imag());
  char buf[64];
  if (im == 0) {
    std::snprintf(buf, sizeof buf, "%.12g", re);
  } else if (re == 0) {
    std::snprintf(buf, sizeof buf, "%.12gi", im);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
  }
  return buf;
}

namespace {

template <typename M, typename F>
std::string print_rows(const M& m, F fmt) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << fmt(m(i, j));
    os << "]\n";
  }
  return os.str();
}

}  // namespace

std::string to_string(const ExactMatrix& m) {
  return print_rows(m, [](const Cyclotomic& c) { return c.to_string(); });
}

std::string to_string(const FloatMatrix& m) { return print_rows(m, format_complex); }

}  // namespace zxv
