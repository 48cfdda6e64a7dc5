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

#include <doctest.h>

#include <random>

#include "wigner_codes/qlinalg.hpp"

using namespace wigner_codes;

TEST_CASE("Hilbert-Schmidt inner product") {
  const ComplexMatrix i3 = ComplexMatrix::Identity(3, 3);
  CHECK(std::abs(hs_inner(i3, i3) - Complex(3.0)) < 1e-12);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = random_hermitian(4, rng) + Complex(0, 1) * random_hermitian(4, rng);
    const ComplexMatrix b = random_hermitian(4, rng);
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-12);
    CHECK(hs_inner(a, a).real() >= 0.0);
    CHECK(std::abs(hs_inner(a, a).imag()) < 1e-12);
  }
  CHECK_THROWS_AS(hs_inner(i3, ComplexMatrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("tensor products and partial trace") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::Identity(4, 4)) == 0.0);
  std::mt19937_64 rng(2);
  for (int q : {2, 3, 5}) {
    const ComplexMatrix s = random_hermitian(q, rng);
    const ComplexMatrix t = random_hermitian(q, rng);
    const ComplexMatrix st = kron(s, t);
    CHECK(std::abs(st.trace() - s.trace() * t.trace()) < 1e-10);
    CHECK(max_abs_diff(partial_trace_first(st), s.trace() * t) < 1e-10);
    const ComplexMatrix omega = projector(max_entangled(q));
    CHECK(max_abs_diff(partial_trace_first(omega), ComplexMatrix::Identity(q, q) / q) < 1e-12);
  }
  CHECK_THROWS_AS(partial_trace_first(ComplexMatrix::Identity(5, 5)), std::invalid_argument);
}

TEST_CASE("maximally entangled vector") {
  const ComplexVector v = max_entangled(2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(v(0) - r) < 1e-15);
  CHECK(std::abs(v(3) - r) < 1e-15);
  CHECK(std::abs(v(1)) == 0.0);
  CHECK(std::abs(max_entangled(7).norm() - 1.0) < 1e-12);
  const ComplexMatrix red = partial_trace_first(projector(max_entangled(4)));
  CHECK(std::abs((red * red).trace().real() - 0.25) < 1e-12);
}

TEST_CASE("Haar sampling is normalised, seeded and unbiased") {
  for (int q : {2, 3, 8}) {
    const ComplexVector a = random_pure_state(q, 42);
    const ComplexVector b = random_pure_state(q, 42);
    CHECK(std::abs(a.norm() - 1.0) < 1e-12);
    CHECK(a == b);
  }
  const int q = 3;
  const int n = 10'000;
  std::mt19937_64 rng(3);
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += std::norm(random_pure_state(q, rng)(0));
  mean /= n;
  // Var |<0|psi>|^2 = (q-1) / (q^2 (q+1)) for Haar states.
  const double sigma = std::sqrt((q - 1.0) / (q * q * (q + 1.0)) / n);
  CHECK(std::abs(mean - 1.0 / q) < 5 * sigma);
}

TEST_CASE("state json round trip and validation") {
  std::mt19937_64 rng(4);
  const ComplexMatrix m = random_hermitian(3, rng);
  CHECK(max_abs_diff(matrix_from_json(nlohmann::json::parse(matrix_to_json(m).dump())), m) < 1e-12);
  const ComplexVector v = random_pure_state(3, rng);
  CHECK((vector_from_json(nlohmann::json::parse(vector_to_json(v).dump())) - v).norm() < 1e-12);
  CHECK(max_abs_diff(state_from_json(vector_to_json(v)), projector(v)) < 1e-12);
  CHECK(max_abs_diff(state_from_json(matrix_to_json(m)), m) == 0.0);
  CHECK_THROWS_AS(state_from_json(nlohmann::json::parse(R"({"dim": 2})")), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"dim": 2, "entries": [[[1,0],[0,0]]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(vector_from_json(nlohmann::json::parse(R"({"dim": 1, "entries": [[1]]})")), std::invalid_argument);
}

TEST_CASE("hermiticity checks") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  CHECK(is_hermitian(m));
  m(0, 1) = Complex(0, 1);
  CHECK_FALSE(is_hermitian(m));
  CHECK(hermiticity_defect(m) == doctest::Approx(1.0));
}
