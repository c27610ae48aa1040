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

#pragma once

#include <cstddef>
#include <vector>

#include "pgd/field.hpp"

namespace pgd::linalg {

/// Dense row-major matrix of field codes.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Code> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Code& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Code at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  Code* row(std::size_t r) { return data.data() + r * cols; }
  const Code* row(std::size_t r) const { return data.data() + r * cols; }

  static Matrix identity(std::size_t n);
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Reduces `m` in place to reduced row-echelon form, drops zero rows and
/// returns the pivot column of each remaining row.
std::vector<std::size_t> rref(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Rows form a basis of { x : m x = 0 }, itself in RREF.
Matrix nullspace(const Field& f, const Matrix& m);

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
/// Throws NotASimplex if singular.
Matrix inverse(const Field& f, const Matrix& m);

}  // namespace pgd::linalg
