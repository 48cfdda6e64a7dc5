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

#include "wigner_codes/qlinalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wigner_codes {

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("hs_inner: operands must be square matrices of equal size");
  // Tr(A^dagger B) = sum_ij conj(A_ij) B_ij
  return (a.conjugate().array() * b.array()).sum();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("partial_trace_first: matrix must be square");
  const auto q = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(m.rows()))));
  if (q * q != m.rows())
    throw std::invalid_argument("partial_trace_first: dimension " + std::to_string(m.rows()) + " is not a square");
  ComplexMatrix out = ComplexMatrix::Zero(q, q);
  for (Eigen::Index k = 0; k < q; ++k) out += m.block(k * q, k * q, q, q);
  return out;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexVector max_entangled(int q) {
  if (q < 1) throw std::invalid_argument("max_entangled: q must be positive");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(q) * q);
  const double amp = 1.0 / std::sqrt(static_cast<double>(q));
  for (int k = 0; k < q; ++k) v(static_cast<Eigen::Index>(k) * q + k) = amp;
  return v;
}

ComplexVector random_pure_state(int q, std::mt19937_64& rng) {
  if (q < 1) throw std::invalid_argument("random_pure_state: q must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(q);
  for (int k = 0; k < q; ++k) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(k) = Complex(re, im);
  }
  return v / v.norm();
}

ComplexVector random_pure_state(int q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_pure_state(q, rng);
}

ComplexMatrix random_hermitian(int q, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = Complex(re, im);
    }
  return (m + m.adjoint()) / 2.0;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermiticity_defect: matrix must be square");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_defect(m) <= tol; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& m, Eigen::Index dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(dim) + "x" +
                                std::to_string(dim) + " matrix, got " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
}

namespace {

nlohmann::json complex_to_json(const Complex& c) { return nlohmann::json::array({c.real(), c.imag()}); }

Complex complex_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("state json: " + where + " must be a [re, im] pair of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

int read_dim(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw std::invalid_argument("state json: expected an object with \"dim\" and \"entries\"");
  if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
    throw std::invalid_argument("state json: \"dim\" must be a positive integer");
  if (!j["entries"].is_array()) throw std::invalid_argument("state json: \"entries\" must be an array");
  return j["dim"].get<int>();
}

bool looks_like_matrix(const nlohmann::json& entries) {
  // A matrix row is an array of pairs; a vector entry is a pair of numbers.
  return !entries.empty() && entries[0].is_array() && !entries[0].empty() && entries[0][0].is_array();
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_to_json: matrix must be square");
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const int dim = read_dim(j);
  const auto& rows = j["entries"];
  if (static_cast<int>(rows.size()) != dim)
    throw std::invalid_argument("state json: expected " + std::to_string(dim) + " rows, got " +
                                std::to_string(rows.size()));
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != dim)
      throw std::invalid_argument("state json: row " + std::to_string(i) + " must hold " + std::to_string(dim) +
                                  " entries");
    for (int k = 0; k < dim; ++k)
      m(i, k) = complex_from_json(rows[i][k], "entry (" + std::to_string(i) + "," + std::to_string(k) + ")");
  }
  return m;
}

nlohmann::json vector_to_json(const ComplexVector& v) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) entries.push_back(complex_to_json(v(i)));
  return {{"dim", v.size()}, {"entries", std::move(entries)}};
}

ComplexVector vector_from_json(const nlohmann::json& j) {
  const int dim = read_dim(j);
  const auto& entries = j["entries"];
  if (static_cast<int>(entries.size()) != dim)
    throw std::invalid_argument("state json: expected " + std::to_string(dim) + " entries, got " +
                                std::to_string(entries.size()));
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = complex_from_json(entries[i], "entry " + std::to_string(i));
  return v;
}

ComplexMatrix state_from_json(const nlohmann::json& j) {
  read_dim(j);
  if (looks_like_matrix(j["entries"])) return matrix_from_json(j);
  return projector(vector_from_json(j));
}

}  // namespace wigner_codes
