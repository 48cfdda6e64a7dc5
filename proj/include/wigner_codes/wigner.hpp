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

// Discrete Wigner functions built from facet operators.
//
// A coset leader w fixes q^2 phase-point operators A_{x,z} = A^{w + x g1 - z g2}
// (g1, g2 the simplex generators). They are pairwise Hilbert-Schmidt
// orthogonal, so W_{x,z}(rho) = Tr(A_{x,z} rho) / q inverts as
// rho = sum W_{x,z} A_{x,z}.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wigner_codes/faceops.hpp"

namespace wigner_codes {

class DwfSpec {
 public:
  /// Leader defaults to the all-zero facet label.
  explicit DwfSpec(MubSet mubs, std::optional<std::vector<Elem>> leader = std::nullopt);

  const MubSet& mubs() const { return mubs_; }
  int q() const { return mubs_.q(); }
  const FaceLabel& leader() const { return leader_; }

  const FaceOperator& phase_point(Elem x, Elem z) const;
  /// Entry x*q + z.
  const std::vector<FaceOperator>& phase_points() const { return points_; }

 private:
  MubSet mubs_;
  FaceLabel leader_;
  std::vector<FaceOperator> points_;
};

struct WignerTable {
  int q = 0;
  std::vector<double> values;  // entry x*q + z
  double trace = 0.0;          // Re Tr(rho) of the input

  double at(Elem x, Elem z) const { return values[static_cast<std::size_t>(x) * q + z]; }
  double sum() const;
  /// True when the input trace differs from 1 by more than tol.
  bool trace_warning(double tol = kDefaultTolerance) const;
};

/// Throws std::invalid_argument for a non-square or non-Hermitian rho.
WignerTable dwf(const DwfSpec& spec, const ComplexMatrix& rho, double tol = kDefaultTolerance);
ComplexMatrix reconstruct(const DwfSpec& spec, const WignerTable& table);

/// Sum of the magnitudes of the negative entries.
double negativity(const WignerTable& table);
double negativity(const DwfSpec& spec, const ComplexMatrix& rho, double tol = kDefaultTolerance);

struct PolytopeReport {
  double minimum = 0.0;
  FaceLabel argmin;
  bool member = false;
};

/// min_r Tr(rho A^r) over all facet labels. Separates per basis:
/// Tr(rho A^r) = sum_B p(B, r_B) - 1 with p(B, V) = <psi_B^V|rho|psi_B^V>.
/// Ties pick the smallest V. Requires Hermitian rho with unit trace.
PolytopeReport stab_polytope_min(const MubSet& mubs, const ComplexMatrix& rho, double tol = kDefaultTolerance);

/// Same quantity by visiting all q^(q+1) facet labels; limited to
/// q^(q+1) <= kEnumerationBound.
PolytopeReport stab_polytope_min_exhaustive(const MubSet& mubs, const ComplexMatrix& rho,
                                            double tol = kDefaultTolerance);

/// sum_k |k><-k|.
ComplexMatrix parity_operator(const GaloisField& field);
/// max |A^{0...0} - parity|. Odd q only.
double parity_check(const MubSet& mubs);

struct HudsonReport {
  int q = 0;
  int mub_states = 0;
  int mub_nonnegative = 0;            // negativity < tol
  double mub_max_negativity = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t sampled_negative = 0;  // negativity > negative_threshold
  std::uint64_t sampled_near_mub = 0;  // skipped: within 1e-6 of an MUB vector
  std::uint64_t sampled_nonnegative_non_mub = 0;
  double min_sample_negativity = 0.0;
  std::optional<ComplexVector> nonnegative_witness;
};

inline constexpr double kHudsonNegativeThreshold = 1e-6;

/// Negativity census at w = 0 over the MUB states and `samples` seeded Haar
/// states. Odd primes run the stabilizer-only check. q = 2 is accepted as the qubit
/// contrast case; prime powers with n > 1 throw std::domain_error.
HudsonReport hudson_suite(const MubSet& mubs, std::uint64_t samples, std::uint64_t seed,
                          double tol = kDefaultTolerance);

/// p^n prod_{i=1..n} (p^i + 1). Throws on non-prime p, n < 1 or overflow.
std::uint64_t stabilizer_count(int p, int n);

}  // namespace wigner_codes
