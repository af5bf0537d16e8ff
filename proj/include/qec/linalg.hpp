// Copyright 2026 The qec Authors
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

#ifndef QEC_LINALG_HPP_
#define QEC_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace qec {

// Dense row-major matrix of doubles. Only what the engine needs.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) noexcept {
    return a_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return a_[i * cols_ + j];
  }

  std::vector<double> column(std::size_t j) const;
  double frobenius_norm() const noexcept;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

std::vector<double> multiply(const Matrix& a, std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);

// Eigenpairs of a symmetric matrix, eigenvalues in descending order;
// vectors(:, k) belongs to values[k].
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
  int sweeps = 0;
};

// Cyclic Jacobi rotations. Stops once every off-diagonal entry is at most
// 1e-13 times the Frobenius norm of the input (or after max_sweeps).
EigenDecomposition jacobi_eigen(Matrix a, int max_sweeps = 100);

}  // namespace qec

#endif  // QEC_LINALG_HPP_
