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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qec/engine.hpp"
#include "qec/linalg.hpp"

namespace {

qec::Matrix random_symmetric(std::size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  qec::Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
  return a;
}

}  // namespace

TEST_CASE("jacobi on closed-form spectra") {
  qec::Matrix diag(3, 3);
  diag(0, 0) = -1.0;
  diag(1, 1) = 4.0;
  diag(2, 2) = 2.0;
  const auto e = qec::jacobi_eigen(diag);
  CHECK(e.values == std::vector<double>{4.0, 2.0, -1.0});

  qec::Matrix two(2, 2);
  two(0, 0) = 2.0;
  two(0, 1) = two(1, 0) = 1.0;
  two(1, 1) = 2.0;
  const auto t = qec::jacobi_eigen(two);
  CHECK(t.values[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(t.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(t.vectors(0, 0)) == doctest::Approx(std::sqrt(0.5)));

  // J_n has spectrum {n, 0, ..., 0}
  const qec::Matrix j(6, 6, 1.0);
  const auto jj = qec::jacobi_eigen(j);
  CHECK(jj.values[0] == doctest::Approx(6.0));
  for (std::size_t k = 1; k < 6; ++k) CHECK(std::abs(jj.values[k]) < 1e-12);
}

TEST_CASE("jacobi on random symmetric matrices") {
  std::mt19937 rng(7);
  for (std::size_t n : {1u, 2u, 3u, 5u, 9u, 16u, 31u}) {
    const qec::Matrix a = random_symmetric(n, rng);
    const auto e = qec::jacobi_eigen(a);
    REQUIRE(e.values.size() == n);
    CHECK(std::is_sorted(e.values.rbegin(), e.values.rend()));
    double trace = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += a(i, i);
    for (double v : e.values) sum += v;
    CHECK(sum == doctest::Approx(trace).epsilon(1e-12));
    const double scale = a.frobenius_norm();
    for (std::size_t k = 0; k < n; ++k) {
      const auto v = e.vectors.column(k);
      const auto av = qec::multiply(a, v);
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(av[i] - e.values[k] * v[i]));
      CHECK(worst < 1e-11 * scale);
      for (std::size_t l = 0; l < n; ++l) {
        const double ip = qec::dot(v, e.vectors.column(l));
        CHECK(std::abs(ip - (k == l ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("matrix helpers") {
  qec::Matrix a(2, 3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
  a(1, 0) = 4; a(1, 1) = 5; a(1, 2) = 6;
  const qec::Matrix p = a * a.transpose();
  CHECK(p(0, 0) == 14);
  CHECK(p(0, 1) == 32);
  CHECK(p(1, 1) == 77);
  CHECK(qec::Matrix::identity(3).frobenius_norm() == doctest::Approx(std::sqrt(3.0)));
  const std::vector<double> x{1, 1, 1};
  CHECK(qec::multiply(a, x) == std::vector<double>{6, 15});
}

TEST_CASE("ones complement basis is orthonormal and orthogonal to 1") {
  for (int n = 2; n <= 40; n += (n < 10 ? 1 : 7)) {
    const qec::Matrix b = qec::ones_complement_basis(n);
    REQUIRE(b.rows() == static_cast<std::size_t>(n));
    REQUIRE(b.cols() == static_cast<std::size_t>(n - 1));
    const qec::Matrix g = b.transpose() * b;
    double worst = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j)
        worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    CHECK(worst < 1e-14);
    for (std::size_t k = 0; k < b.cols(); ++k) {
      double s = 0.0;
      for (double x : b.column(k)) s += x;
      CHECK(std::abs(s) < 1e-14);
    }
  }
}
