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

#include "wigner_codes/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace wigner_codes {

namespace {

void require_state(const MubSet& mubs, const ComplexMatrix& rho, double tol, const char* what) {
  require_square(rho, mubs.q(), what);
  const double defect = hermiticity_defect(rho);
  if (defect > tol)
    throw std::invalid_argument(std::string(what) + ": input is not Hermitian (max |rho - rho^dagger| = " +
                                std::to_string(defect) + ")");
}

/// <psi|rho|psi>, real for Hermitian rho.
double expectation(const ComplexVector& psi, const ComplexMatrix& rho) { return psi.dot(rho * psi).real(); }

/// Re Tr(A rho) without forming the product.
double trace_product(const ComplexMatrix& a, const ComplexMatrix& rho) {
  return (a.array() * rho.transpose().array()).sum().real();
}

}  // namespace

DwfSpec::DwfSpec(MubSet mubs, std::optional<std::vector<Elem>> leader) : mubs_(std::move(mubs)) {
  const int q = mubs_.q();
  leader_ = FaceLabel::facet(leader ? *leader : std::vector<Elem>(q + 1, 0));
  validate_label(mubs_, leader_);
  if (!leader_.is_facet(q))
    throw std::invalid_argument("dwf: coset leader must have q+1 = " + std::to_string(q + 1) + " entries");

  const LinearCode simplex = simplex_code(mubs_.field_ptr());
  const Word g1(mubs_.field_ptr(), simplex.generator()[0]);
  const Word g2(mubs_.field_ptr(), simplex.generator()[1]);
  const Word w(mubs_.field_ptr(), leader_.values);
  points_.reserve(static_cast<std::size_t>(q) * q);
  for (Elem x = 0; x < static_cast<Elem>(q); ++x)
    for (Elem z = 0; z < static_cast<Elem>(q); ++z)
      points_.push_back(face_operator(mubs_, FaceLabel::facet(w + x * g1 - z * g2)));
}

const FaceOperator& DwfSpec::phase_point(Elem x, Elem z) const {
  mubs_.field().check(x);
  mubs_.field().check(z);
  return points_[static_cast<std::size_t>(x) * q() + z];
}

double WignerTable::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

bool WignerTable::trace_warning(double tol) const { return std::abs(trace - 1.0) > tol; }

WignerTable dwf(const DwfSpec& spec, const ComplexMatrix& rho, double tol) {
  require_state(spec.mubs(), rho, tol, "dwf");
  const int q = spec.q();
  WignerTable table;
  table.q = q;
  table.trace = rho.trace().real();
  table.values.reserve(spec.phase_points().size());
  for (const auto& a : spec.phase_points()) table.values.push_back(trace_product(a.matrix, rho) / q);
  return table;
}

ComplexMatrix reconstruct(const DwfSpec& spec, const WignerTable& table) {
  const int q = spec.q();
  if (table.q != q || table.values.size() != spec.phase_points().size())
    throw std::invalid_argument("reconstruct: table is not " + std::to_string(q) + "x" + std::to_string(q));
  ComplexMatrix rho = ComplexMatrix::Zero(q, q);
  for (std::size_t i = 0; i < table.values.size(); ++i) rho += table.values[i] * spec.phase_points()[i].matrix;
  return rho;
}

double negativity(const WignerTable& table) {
  double n = 0.0;
  for (double v : table.values)
    if (v < 0.0) n -= v;
  return n;
}

double negativity(const DwfSpec& spec, const ComplexMatrix& rho, double tol) { return negativity(dwf(spec, rho, tol)); }

PolytopeReport stab_polytope_min(const MubSet& mubs, const ComplexMatrix& rho, double tol) {
  require_state(mubs, rho, tol, "stab_polytope_min");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > tol)
    throw std::invalid_argument("stab_polytope_min: state must have unit trace (got " + std::to_string(tr) + ")");

  const int q = mubs.q();
  std::vector<Elem> argmin(q + 1, 0);
  double total = 0.0;
  for (int s = 0; s <= q; ++s) {
    double best = std::numeric_limits<double>::infinity();
    for (Elem v = 0; v < static_cast<Elem>(q); ++v) {
      const double p = expectation(mubs.vector({s}, v), rho);
      if (p < best) {
        best = p;
        argmin[s] = v;
      }
    }
    total += best;
  }
  PolytopeReport report;
  report.minimum = total - 1.0;
  report.argmin = FaceLabel::facet(std::move(argmin));
  report.member = report.minimum >= -tol;
  return report;
}

PolytopeReport stab_polytope_min_exhaustive(const MubSet& mubs, const ComplexMatrix& rho, double tol) {
  require_state(mubs, rho, tol, "stab_polytope_min_exhaustive");
  const int q = mubs.q();
  std::uint64_t total = 1;
  for (int i = 0; i <= q; ++i) {
    total *= q;
    if (total > kEnumerationBound)
      throw std::length_error("stab_polytope_min_exhaustive: q^(q+1) exceeds the enumeration bound");
  }
  // Precomputed expectations; the facet value is still assembled label by label.
  std::vector<std::vector<double>> p(q + 1, std::vector<double>(q));
  for (int s = 0; s <= q; ++s)
    for (Elem v = 0; v < static_cast<Elem>(q); ++v) p[s][v] = expectation(mubs.vector({s}, v), rho);
  const double tr = rho.trace().real();

  std::vector<Elem> values(q + 1, 0);
  PolytopeReport report;
  report.minimum = std::numeric_limits<double>::infinity();
  for (std::uint64_t m = 0; m < total; ++m) {
    double value = -tr;
    for (int s = 0; s <= q; ++s) value += p[s][values[s]];
    if (value < report.minimum) {
      report.minimum = value;
      report.argmin = FaceLabel::facet(values);
    }
    for (int i = q; i >= 0; --i) {
      values[i] = (values[i] + 1) % q;
      if (values[i] != 0) break;
    }
  }
  report.member = report.minimum >= -tol;
  return report;
}

ComplexMatrix parity_operator(const GaloisField& field) {
  const int q = field.q();
  ComplexMatrix m = ComplexMatrix::Zero(q, q);
  for (Elem k = 0; k < static_cast<Elem>(q); ++k) m(k, field.neg(k)) = 1.0;
  return m;
}

double parity_check(const MubSet& mubs) {
  if (mubs.field().p() == 2) throw std::domain_error("parity_check: defined for odd q only");
  const auto a = face_operator(mubs, FaceLabel::facet(std::vector<Elem>(mubs.q() + 1, 0)));
  return max_abs_diff(a.matrix, parity_operator(mubs.field()));
}

HudsonReport hudson_suite(const MubSet& mubs, std::uint64_t samples, std::uint64_t seed, double tol) {
  const GaloisField& f = mubs.field();
  if (f.n() != 1)
    throw std::domain_error("hudson_suite: single-particle prime dimension required (q = " + std::to_string(f.q()) +
                            " = " + std::to_string(f.p()) + "^" + std::to_string(f.n()) + ")");
  const int q = mubs.q();
  const DwfSpec spec(mubs);

  HudsonReport report;
  report.q = q;
  for (int s = 0; s <= q; ++s)
    for (Elem v = 0; v < static_cast<Elem>(q); ++v) {
      const double n = negativity(spec, mubs.projector({s}, v), tol);
      ++report.mub_states;
      if (n < tol) ++report.mub_nonnegative;
      report.mub_max_negativity = std::max(report.mub_max_negativity, n);
    }

  std::mt19937_64 rng(seed);
  report.samples = samples;
  report.min_sample_negativity = samples ? std::numeric_limits<double>::infinity() : 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const ComplexVector psi = random_pure_state(q, rng);
    bool near_mub = false;
    for (int s = 0; s <= q && !near_mub; ++s)
      for (Elem v = 0; v < static_cast<Elem>(q) && !near_mub; ++v)
        near_mub = std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(mubs.vector({s}, v).dot(psi)))) < 1e-6;
    if (near_mub) {
      ++report.sampled_near_mub;
      continue;
    }
    const double n = negativity(spec, projector(psi), tol);
    report.min_sample_negativity = std::min(report.min_sample_negativity, n);
    if (n > kHudsonNegativeThreshold) {
      ++report.sampled_negative;
    } else if (n < tol) {
      ++report.sampled_nonnegative_non_mub;
      if (!report.nonnegative_witness) report.nonnegative_witness = psi;
    }
  }
  return report;
}

std::uint64_t stabilizer_count(int p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("stabilizer_count: p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("stabilizer_count: n must be >= 1");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const auto up = static_cast<std::uint64_t>(p);
  std::uint64_t result = 1;
  std::uint64_t power = 1;
  for (int i = 1; i <= n; ++i) {
    if (power > kMax / up) throw std::overflow_error("stabilizer_count: result exceeds 64 bits");
    power *= up;
    if (result > kMax / up || result * up > kMax / (power + 1))
      throw std::overflow_error("stabilizer_count: result exceeds 64 bits");
    result = result * up * (power + 1);
  }
  return result;
}

}  // namespace wigner_codes
