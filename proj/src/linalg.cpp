// Copyright 2026 The Authors.
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

#include "pgd/linalg.hpp"

#include <algorithm>

namespace pgd::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<std::size_t> rref(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != r) std::swap_ranges(m.row(sel), m.row(sel) + m.cols, m.row(r));
    const Code s = f.inv(m.at(r, c));
    if (s != 1) {
      for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const Code factor = m.at(i, c);
      if (factor == 0) continue;
      const Code nf = f.neg(factor);
      for (std::size_t j = c; j < m.cols; ++j) {
        m.at(i, j) = f.add(m.at(i, j), f.mul(nf, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.rows = r;
  m.data.resize(r * m.cols);
  return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rref(f, m).size(); }

Matrix nullspace(const Field& f, const Matrix& m) {
  Matrix red = m;
  const auto pivots = rref(f, red);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix out(m.cols - pivots.size(), m.cols);
  std::size_t r = 0;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    out.at(r, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      out.at(r, pivots[i]) = f.neg(red.at(i, free));
    }
    ++r;
  }
  rref(f, out);
  return out;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Code x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
      }
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  }
  return out;
}

Matrix inverse(const Field& f, const Matrix& m) {
  const std::size_t n = m.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = rref(f, aug);
  if (pivots.size() != n || pivots.back() != n - 1) {
    throw Error(Errc::NotASimplex, "matrix is singular");
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  }
  return out;
}

}  // namespace pgd::linalg
