// Copyright 2026 The wigner-codes Authors
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
#include <cstdint>
#include <random>

#include <Eigen/Dense>
#include <json.hpp>

namespace wigner_codes {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Global comparison tolerance for operator and state identities.
inline constexpr double kDefaultTolerance = 1e-9;

/// Tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// A (x) B with row index i_a * rows(B) + i_b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Traces out the first tensor factor of a (q^2 x q^2) operator on C^q (x) C^q.
ComplexMatrix partial_trace_first(const ComplexMatrix& m);

/// |v><v|.
ComplexMatrix projector(const ComplexVector& v);

/// (1/sqrt(q)) sum_k |k>|k>.
ComplexVector max_entangled(int q);

/// Haar-random unit vector: i.i.d. standard complex Gaussians, normalised.
ComplexVector random_pure_state(int q, std::mt19937_64& rng);
ComplexVector random_pure_state(int q, std::uint64_t seed);

/// Hermitian matrix with i.i.d. Gaussian entries (GUE-like), not normalised.
ComplexMatrix random_hermitian(int q, std::mt19937_64& rng);

/// max |M - M^dagger|, entrywise.
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTolerance);

/// max |A - B|, entrywise. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Square dim x dim check; throws std::invalid_argument naming `what`.
void require_square(const ComplexMatrix& m, Eigen::Index dim, const char* what);

// JSON wire format: {"dim": d, "entries": [[[re, im], ...], ...]} for
// matrices and {"dim": d, "entries": [[re, im], ...]} for vectors.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const nlohmann::json& j);

/// Accepts either wire format; a vector v is promoted to |v><v|.
ComplexMatrix state_from_json(const nlohmann::json& j);

}  // namespace wigner_codes
