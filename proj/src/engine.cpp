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

#include "qec/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qec/error.hpp"

namespace qec {
namespace {

constexpr double kZeroCoordinate = 1e-12;

void require_order(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kTooSmall,
                "n >= 2 required, got n=" + std::to_string(n));
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidParameter, message);
}

void normalize_sign(std::vector<double>& f) {
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (std::abs(*it) > kZeroCoordinate) {
      if (*it < 0) {
        for (double& x : f) x = -x;
      }
      return;
    }
  }
}

}  // namespace

Matrix ones_complement_basis(int n) {
  const auto size = static_cast<std::size_t>(n);
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  // Householder vector v = e1 - 1/sqrt(n); H = I - 2 v v^T / <v, v> maps e1 to
  // 1/sqrt(n), so the remaining columns of H span 1^perp.
  std::vector<double> v(size, -inv_sqrt_n);
  v[0] += 1.0;
  const double vv = dot(v, v);
  Matrix basis(size, size - 1);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 1; j < size; ++j) {
      basis(i, j - 1) = (i == j ? 1.0 : 0.0) - 2.0 * v[i] * v[j] / vv;
    }
  }
  return basis;
}

Matrix to_matrix(const DistanceMatrix& d) {
  const auto n = static_cast<std::size_t>(d.order());
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = d(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return m;
}

QecResult qec(const Graph& g) {
  require_order(g.order());
  return qec(distance_matrix(g));
}

QecResult qec(const DistanceMatrix& d) {
  const int n = d.order();
  require_order(n);
  const Matrix dm = to_matrix(d);
  const Matrix basis = ones_complement_basis(n);
  const Matrix compressed = basis.transpose() * dm * basis;
  const EigenDecomposition eig = jacobi_eigen(compressed);

  QecResult r;
  r.value = eig.values[0];
  r.eigengap = eig.values.size() > 1
                   ? eig.values[0] - eig.values[1]
                   : std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] < r.value - kEigenspaceGap) break;
    r.top_eigenspace.push_back(multiply(basis, eig.vectors.column(k)));
  }
  r.maximizer = r.top_eigenspace.front();
  normalize_sign(r.maximizer);

  const auto df = multiply(dm, r.maximizer);
  double sum = 0.0;
  for (std::size_t i = 0; i < df.size(); ++i) sum += df[i] - r.value * r.maximizer[i];
  r.multiplier = 2.0 * sum / n;
  for (std::size_t i = 0; i < df.size(); ++i) {
    r.residual = std::max(
        r.residual,
        std::abs(df[i] - r.value * r.maximizer[i] - r.multiplier / 2.0));
  }
  return r;
}

SpectrumSummary distance_spectrum(const Graph& g) {
  require_order(g.order());
  const auto eig = jacobi_eigen(to_matrix(distance_matrix(g)));
  return {eig.values[0], eig.values[1], eig.values};
}

Certificate certify(const Graph& g, const QecResult& r, double tol) {
  Certificate c;
  const auto d = distance_matrix(g);
  const auto n = static_cast<std::size_t>(d.order());
  if (r.maximizer.size() != n) {
    c.residual = c.norm_error = c.sum_error = std::numeric_limits<double>::infinity();
    return c;
  }
  const Matrix dm = to_matrix(d);
  const auto df = multiply(dm, r.maximizer);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c.residual = std::max(
        c.residual,
        std::abs(df[i] - r.value * r.maximizer[i] - r.multiplier / 2.0));
    sum += r.maximizer[i];
  }
  c.norm_error = std::abs(dot(r.maximizer, r.maximizer) - 1.0);
  c.sum_error = std::abs(sum);
  c.value_error = std::abs(dot(r.maximizer, df) - r.value);
  c.ok = c.residual <= tol && c.norm_error <= tol && c.sum_error <= tol;
  return c;
}

bool certify_stationary(const Graph& g, const QecResult& r, double tol) {
  return certify(g, r, tol).ok;
}

QeClass qe_class(const Graph& g, double tol) {
  return qec(g).value <= tol ? QeClass::kQE : QeClass::kNotQE;
}

Embedding embed(const Graph& g, double tol) {
  require_order(g.order());
  const auto d = distance_matrix(g);
  const auto n = static_cast<std::size_t>(d.order());
  // Gram matrix K = -1/2 C D C with the centring C = I - J / n.
  const Matrix dm = to_matrix(d);
  std::vector<double> row_mean(n, 0.0);
  double total_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_mean[i] += dm(i, j);
    total_mean += row_mean[i];
    row_mean[i] /= static_cast<double>(n);
  }
  total_mean /= static_cast<double>(n * n);
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      gram(i, j) = -0.5 * (dm(i, j) - row_mean[i] - row_mean[j] + total_mean);
    }
  }
  const auto eig = jacobi_eigen(gram);
  const double smallest = eig.values.back();
  if (smallest < -tol) {
    throw Error(ErrorCode::kNotQEClass,
                "centred Gram matrix has eigenvalue " + std::to_string(smallest),
                std::nullopt, smallest);
  }
  Embedding e;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] > tol) kept.push_back(k);
  }
  e.dim = static_cast<int>(kept.size());
  e.points.assign(n, std::vector<double>(kept.size()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < kept.size(); ++c) {
      e.points[i][c] = eig.vectors(i, kept[c]) * std::sqrt(eig.values[kept[c]]);
    }
  }
  return e;
}

double qec_formula_complete(int n) {
  require(n >= 2, "QEC(K_n) needs n >= 2");
  return -1.0;
}

double qec_formula_cycle(int n) {
  require(n >= 3, "QEC(C_n) needs n >= 3");
  if (n % 2 == 0) return 0.0;
  const double c = std::cos(std::numbers::pi / n);
  return -1.0 / (4.0 * c * c);
}

double qec_formula_star_kk(int n, int m) {
  require(n >= 1 && m >= 1 && n + m >= 3, "QEC(K_n star K_m) needs n, m >= 1, n + m >= 3");
  return -1.0 / (1.0 + std::sqrt((1.0 - 1.0 / m) * (1.0 - 1.0 / n)));
}

double qec_formula_bearded(int n, int m) {
  require(1 <= m && m <= n, "QEC(BK_{n,m}) needs 1 <= m <= n");
  if (m == 1) return n == 1 ? -1.0 : qec_formula_star_kk(n, 2);
  return -(2.0 - std::numbers::sqrt2);
}

double tree_bound(int n) {
  require(n >= 3, "tree bound needs n >= 3");
  return -2.0 / (2.0 * n - 3.0);
}

double star_product_bound(double q1, double q2) {
  if (!(q1 < 0.0) || !(q2 < 0.0)) {
    throw Error(ErrorCode::kNonNegativeInput,
                "star product bound needs negative QE constants");
  }
  return q1 * q2 / (q1 + q2);
}

double joint_projection_norm(const QecResult& r, Vertex joint) {
  double s = 0.0;
  for (const auto& b : r.top_eigenspace) {
    const double x = b.at(static_cast<std::size_t>(joint - 1));
    s += x * x;
  }
  return std::sqrt(s);
}

bool star_strictness_hypothesis(const Graph& g, Vertex joint, double tol) {
  if (joint < 1 || joint > g.order()) {
    throw Error(ErrorCode::kInvalidVertex, "joint vertex out of range");
  }
  const auto r = qec(g);
  // a value within tol of zero is zero for this purpose
  if (r.value >= -tol) {
    throw Error(ErrorCode::kNonNegativeQec,
                "strictness criterion needs QEC(G) < 0, got " +
                    std::to_string(r.value),
                std::nullopt, r.value);
  }
  return joint_projection_norm(r, joint) > tol;
}

}  // namespace qec
