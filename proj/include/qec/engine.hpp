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

// Quadratic embedding constants.
//
// QEC(G) = max { <f, D f> : <f, f> = 1, <1, f> = 0 } for the distance matrix D
// of a connected graph G on n >= 2 vertices. The engine compresses D onto the
// hyperplane 1^perp with an orthonormal basis B (the last n - 1 columns of the
// Householder reflection sending e_1 to 1/sqrt(n)) and takes the top eigenpair
// of B^T D B. The Lagrange system (D - lambda) f = (mu / 2) 1 is then checked
// a posteriori as a certificate.

#ifndef QEC_ENGINE_HPP_
#define QEC_ENGINE_HPP_

#include <vector>

#include "qec/graph.hpp"
#include "qec/linalg.hpp"

namespace qec {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kDefaultCertificateTolerance = 1e-8;
// Projected eigenvalues closer than this to the top one span the maximizer
// eigenspace.
inline constexpr double kEigenspaceGap = 1e-10;

struct QecResult {
  double value = 0.0;
  std::vector<double> maximizer;  // f0: unit norm, zero sum, 0-based
  double multiplier = 0.0;        // mu
  double residual = 0.0;          // max |(D - value) f0 - (mu / 2) 1|
  double eigengap = 0.0;          // value - next projected eigenvalue; +inf if n = 2
  // Orthonormal basis (columns, in R^n) of the top projected eigenspace.
  std::vector<std::vector<double>> top_eigenspace;
};

struct SpectrumSummary {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::vector<double> full;  // descending
};

struct Embedding {
  int dim = 0;
  std::vector<std::vector<double>> points;  // points[i] has dim coordinates
};

// Orthonormal basis of 1^perp in R^n, as an n x (n - 1) matrix.
Matrix ones_complement_basis(int n);

Matrix to_matrix(const DistanceMatrix& d);

// Throws kTooSmall (n < 2) and kDisconnectedGraph.
QecResult qec(const Graph& g);
QecResult qec(const DistanceMatrix& d);

SpectrumSummary distance_spectrum(const Graph& g);

struct Certificate {
  bool ok = false;
  double residual = 0.0;    // max-norm of (D - lambda) f - (mu / 2) 1
  double norm_error = 0.0;  // |<f, f> - 1|
  double sum_error = 0.0;   // |<1, f>|
  double value_error = 0.0; // |<f, D f> - lambda|, informational
};

// Recomputes every quantity from g; never throws for a well-formed result.
Certificate certify(const Graph& g, const QecResult& r, double tol);
bool certify_stationary(const Graph& g, const QecResult& r, double tol);

enum class QeClass { kQE, kNotQE };
QeClass qe_class(const Graph& g, double tol = kDefaultTolerance);

// Classical scaling of D. Throws kNotQEClass (with the offending eigenvalue
// of -1/2 C D C as Error::value) when the graph has no quadratic embedding.
Embedding embed(const Graph& g, double tol = kDefaultCertificateTolerance);

// Closed forms. All throw kInvalidParameter outside their range.
double qec_formula_complete(int n);        // n >= 2
double qec_formula_cycle(int n);           // n >= 3
double qec_formula_star_kk(int n, int m);  // n, m >= 1, n + m >= 3
double qec_formula_bearded(int n, int m);  // 1 <= m <= n
double tree_bound(int n);                  // n >= 3

// (1/q1 + 1/q2)^{-1}; throws kNonNegativeInput unless q1, q2 < 0.
double star_product_bound(double q1, double q2);

// True iff some maximizer f0 of g has f0(joint) != 0, i.e. the joint indicator
// has a projection of norm > tol onto the top eigenspace. Throws
// kNonNegativeQec when QEC(g) >= 0.
bool star_strictness_hypothesis(const Graph& g, Vertex joint,
                                double tol = kDefaultTolerance);
double joint_projection_norm(const QecResult& r, Vertex joint);

}  // namespace qec

#endif  // QEC_ENGINE_HPP_
