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

#include "wigner_codes/faceops.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace wigner_codes {

namespace {

constexpr double kOrbitMatchThreshold = 1.0 - 1e-6;

ComplexMatrix projector_sum(const MubSet& mubs, const FaceLabel& label) {
  const int q = mubs.q();
  ComplexMatrix sum = ComplexMatrix::Zero(q, q);
  for (int i = 0; i < label.size(); ++i) {
    const auto& v = mubs.vector(label.bases[i], label.values[i]);
    sum.noalias() += v * v.adjoint();
  }
  return sum;
}

void require_facet(const MubSet& mubs, const FaceLabel& label, const char* what) {
  validate_label(mubs, label);
  if (!label.is_facet(mubs.q()))
    throw std::invalid_argument(std::string(what) + ": expected a facet label with q+1 = " +
                                std::to_string(mubs.q() + 1) + " entries, got " + std::to_string(label.size()));
}

}  // namespace

FaceLabel FaceLabel::facet(std::vector<Elem> values) {
  FaceLabel label;
  label.bases.reserve(values.size());
  for (std::size_t s = 0; s < values.size(); ++s) label.bases.push_back({static_cast<int>(s)});
  label.values = std::move(values);
  return label;
}

FaceLabel FaceLabel::facet(const Word& word) { return facet(word.symbols()); }

void validate_label(const MubSet& mubs, const FaceLabel& label) {
  const int q = mubs.q();
  if (label.bases.size() != label.values.size())
    throw std::invalid_argument("face label: " + std::to_string(label.bases.size()) + " bases but " +
                                std::to_string(label.values.size()) + " values");
  if (label.values.empty() || label.size() > q + 1)
    throw std::invalid_argument("face label: size must satisfy 1 <= |r| <= q+1 = " + std::to_string(q + 1));
  for (int i = 0; i < label.size(); ++i) {
    const int slot = label.bases[i].slot;
    if (slot < 0 || slot > q) throw std::invalid_argument("face label: basis slot " + std::to_string(slot) + " out of range");
    if (i > 0 && slot <= label.bases[i - 1].slot)
      throw std::invalid_argument("face label: basis slots must be strictly increasing");
    if (!mubs.field().contains(label.values[i]))
      throw std::invalid_argument("face label: value " + std::to_string(label.values[i]) + " is not in GF(" +
                                  std::to_string(q) + ")");
  }
}

int hamming_distance(const FaceLabel& r, const FaceLabel& s) {
  if (r.bases != s.bases || r.values.size() != s.values.size())
    throw std::invalid_argument("face label distance: labels use different basis subsets");
  int d = 0;
  for (std::size_t i = 0; i < r.values.size(); ++i) d += r.values[i] != s.values[i];
  return d;
}

double face_identity_coefficient(int q, int size) {
  return (size - std::sqrt(static_cast<double>(q) * q - static_cast<double>(q) * size + size)) / q;
}

UnitTraceCoefficients unit_trace_coefficients(int q, int size) {
  return {std::sqrt(static_cast<double>(q + 1) / size), (std::sqrt(static_cast<double>(size) * (q + 1)) - 1.0) / q};
}

FaceOperator face_operator(const MubSet& mubs, const FaceLabel& label) {
  validate_label(mubs, label);
  const int q = mubs.q();
  const double k = face_identity_coefficient(q, label.size());
  ComplexMatrix m = projector_sum(mubs, label);
  m.diagonal().array() -= k;
  return {label, 1.0, k, std::move(m)};
}

FaceOperator face_operator_unit_trace(const MubSet& mubs, const FaceLabel& label) {
  validate_label(mubs, label);
  const auto c = unit_trace_coefficients(mubs.q(), label.size());
  ComplexMatrix m = c.projector_weight * projector_sum(mubs, label);
  m.diagonal().array() -= c.identity_coefficient;
  return {label, c.projector_weight, c.identity_coefficient, std::move(m)};
}

double overlap_predicted(int q, const FaceLabel& r, const FaceLabel& s) {
  return static_cast<double>(q) - hamming_distance(r, s);
}

double overlap_predicted_unit_trace(int q, const FaceLabel& r, const FaceLabel& s) {
  return static_cast<double>(q) - static_cast<double>(q + 1) * hamming_distance(r, s) / r.size();
}

double overlap_matrix(const FaceOperator& a, const FaceOperator& b) {
  if (a.label.bases != b.label.bases)
    throw std::invalid_argument("overlap_matrix: operators use different basis subsets");
  // Tr(AB) = sum_ij A_ij B_ji
  return (a.matrix.array() * b.matrix.transpose().array()).sum().real();
}

double hs_distance(const FaceLabel& r, const FaceLabel& s) { return std::sqrt(2.0 * hamming_distance(r, s)); }

double hs_distance(const FaceOperator& a, const FaceOperator& b) {
  if (a.label.bases != b.label.bases)
    throw std::invalid_argument("hs_distance: operators use different basis subsets");
  const ComplexMatrix diff = a.matrix - b.matrix;
  return std::sqrt(std::max(0.0, hs_inner(diff, diff).real()));
}

JamState jam_state(const FaceOperator& op) {
  const auto q = op.matrix.rows();
  ComplexVector v(q * q);
  const double amp = 1.0 / std::sqrt(static_cast<double>(q));
  for (Eigen::Index k = 0; k < q; ++k)
    for (Eigen::Index l = 0; l < q; ++l) v(k * q + l) = amp * op.matrix(l, k);
  return {op.label, std::move(v)};
}

double trace_distance(int q, const FaceLabel& r, const FaceLabel& s) {
  const double d = hamming_distance(r, s);
  return std::sqrt(std::max(0.0, 2.0 * q * d - d * d)) / q;
}

double fs_distance(int q, const FaceLabel& r, const FaceLabel& s) {
  const double d = hamming_distance(r, s);
  return std::sqrt(2.0 * (1.0 - std::abs(1.0 - d / q)));
}

namespace {

/// 2 - 2|<a|b>| computed as |a - e^{i arg<a|b>} b|^2, which stays accurate
/// when the states nearly coincide.
double aligned_gap(const JamState& a, const JamState& b) {
  if (a.vector.size() != b.vector.size()) throw std::invalid_argument("jam state distance: dimension mismatch");
  const Complex overlap = a.vector.dot(b.vector);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a.vector - phase * b.vector).squaredNorm();
}

}  // namespace

double trace_distance(const JamState& a, const JamState& b) {
  // 1 - |o|^2 = g (2 - g) with g = 1 - |o|.
  const double g = aligned_gap(a, b) / 2.0;
  return std::sqrt(std::max(0.0, g * (2.0 - g)));
}

double fs_distance(const JamState& a, const JamState& b) { return std::sqrt(aligned_gap(a, b)); }

FaceLabel conjugate_label(const MubSet& mubs, const FaceLabel& facet, Elem x, Elem z) {
  require_facet(mubs, facet, "conjugate_label");
  const GaloisField& f = mubs.field();
  if (f.p() == 2) throw std::domain_error("conjugate_label: odd q only; use wh_orbit for even q");
  f.check(x);
  f.check(z);
  const Word g1 = Word(mubs.field_ptr(), simplex_code(mubs.field_ptr()).generator()[0]);
  const Word g2 = Word(mubs.field_ptr(), simplex_code(mubs.field_ptr()).generator()[1]);
  const Word r(mubs.field_ptr(), facet.values);
  return FaceLabel::facet(r + x * g1 - z * g2);
}

std::vector<FaceLabel> wh_orbit(const MubSet& mubs, const FaceLabel& facet) {
  require_facet(mubs, facet, "wh_orbit");
  const GaloisField& f = mubs.field();
  const int q = mubs.q();
  std::vector<FaceLabel> orbit;
  orbit.reserve(static_cast<std::size_t>(q) * q);
  for (Elem x = 0; x < static_cast<Elem>(q); ++x)
    for (Elem z = 0; z < static_cast<Elem>(q); ++z) {
      const ComplexMatrix d = weyl_op(f, x, z).matrix;
      FaceLabel image = facet;
      for (int i = 0; i <= q; ++i) {
        const BasisLabel b = facet.bases[i];
        const ComplexVector moved = d * mubs.vector(b, facet.values[i]);
        std::optional<Elem> hit;
        for (Elem v = 0; v < static_cast<Elem>(q) && !hit; ++v)
          if (std::norm(mubs.vector(b, v).dot(moved)) > kOrbitMatchThreshold) hit = v;
        if (!hit)
          throw std::logic_error("wh_orbit: conjugated projector in basis " + mubs.basis_name(b) +
                                 " matches no basis vector");
        image.values[i] = *hit;
      }
      orbit.push_back(std::move(image));
    }
  return orbit;
}

std::vector<int> teichmuller_coordinates(const MubSet& mubs, const FaceLabel& facet) {
  require_facet(mubs, facet, "teichmuller_coordinates");
  if (!mubs.ring()) throw std::domain_error("teichmuller_coordinates: requires even q");
  const GaloisRing& ring = *mubs.ring();
  const int q = mubs.q();
  std::vector<int> coords;
  coords.reserve(q + 1);
  coords.push_back(ring.teichmuller_index(ring.lift(facet.values[0])));
  for (const auto t : ring.teichmuller()) {
    const BasisLabel b = mubs.basis_of(ring.reduce(t));
    coords.push_back(ring.teichmuller_index(ring.lift(facet.values[b.slot])));
  }
  return coords;
}

double reduced_purity(const JamState& state) {
  const auto q = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(state.vector.size()))));
  // M(k, l) = J(k q + l); the second-factor reduced state is M^T conj(M).
  const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      state.vector.data(), q, q);
  const ComplexMatrix rho = m.transpose() * m.conjugate();
  return (rho * rho).trace().real();
}

PurityStats purity_stats(const MubSet& mubs, std::optional<PuritySample> sample) {
  const int q = mubs.q();
  PurityStats stats;
  stats.lubkin = 2.0 * q / (static_cast<double>(q) * q + 1.0);

  auto purity_of = [&](const std::vector<Elem>& values) {
    return reduced_purity(jam_state(face_operator(mubs, FaceLabel::facet(values))));
  };

  if (q <= kPurityExhaustiveMaxQ) {
    std::uint64_t total = 1;
    for (int i = 0; i <= q; ++i) total *= q;
    std::vector<Elem> values(q + 1, 0);
    double sum = 0.0;
    for (std::uint64_t m = 0; m < total; ++m) {
      sum += purity_of(values);
      for (int i = q; i >= 0; --i) {
        values[i] = (values[i] + 1) % q;
        if (values[i] != 0) break;
      }
    }
    stats.average = sum / static_cast<double>(total);
    stats.count = total;
    stats.exhaustive = true;
    return stats;
  }

  if (!sample)
    throw std::length_error("purity_stats: q = " + std::to_string(q) +
                            " exceeds the exhaustive bound; request a seeded sample");
  if (sample->count < 2) throw std::invalid_argument("purity_stats: sample count must be >= 2");
  std::mt19937_64 rng(sample->seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(q - 1));
  double sum = 0.0;
  double sum_sq = 0.0;
  std::vector<Elem> values(q + 1);
  for (std::uint64_t i = 0; i < sample->count; ++i) {
    for (auto& v : values) v = pick(rng);
    const double p = purity_of(values);
    sum += p;
    sum_sq += p * p;
  }
  const auto n = static_cast<double>(sample->count);
  stats.average = sum / n;
  const double var = std::max(0.0, (sum_sq - n * stats.average * stats.average) / (n - 1.0));
  stats.standard_error = std::sqrt(var / n);
  stats.count = sample->count;
  stats.exhaustive = false;
  return stats;
}

}  // namespace wigner_codes
