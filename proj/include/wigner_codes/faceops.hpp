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

// Face and facet operators: Hermitian operators labelled by words over GF(q)
// whose Hilbert-Schmidt geometry mirrors the Hamming geometry of the labels.
//
// A face label picks one vector |psi_B^{r_B}> from each basis B of a chosen
// subset of the q+1 MUBs. The operator
//
//     A^r = J sum_B |psi_B^{r_B}><psi_B^{r_B}| - K I
//
// has Tr((A^r)^2) = q, and for two labels over the same subset
// Tr(A^r A^s) = q - Delta(r, s) (J = 1) or q - (q+1) Delta / |r| (unit trace).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wigner_codes/codes.hpp"
#include "wigner_codes/mub.hpp"

namespace wigner_codes {

/// Basis subset plus one value per basis. Slots are strictly increasing, i.e.
/// ordered as [inf, 0, a, ..., a^(q-1)].
struct FaceLabel {
  std::vector<BasisLabel> bases;
  std::vector<Elem> values;

  /// Facet label over all q+1 bases; values[0] is the computational-basis value.
  static FaceLabel facet(std::vector<Elem> values);
  static FaceLabel facet(const Word& word);

  int size() const { return static_cast<int>(values.size()); }
  bool is_facet(int q) const { return size() == q + 1; }
  bool operator==(const FaceLabel&) const = default;
};

/// Throws std::invalid_argument if the label does not fit the MUB set.
void validate_label(const MubSet& mubs, const FaceLabel& label);

/// Hamming distance over a shared basis subset; throws on subset mismatch.
int hamming_distance(const FaceLabel& r, const FaceLabel& s);

struct FaceOperator {
  FaceLabel label;
  double projector_weight = 1.0;      // J
  double identity_coefficient = 0.0;  // K
  ComplexMatrix matrix;
};

/// K = (|r| - sqrt(q^2 - q|r| + |r|)) / q.
double face_identity_coefficient(int q, int size);

struct UnitTraceCoefficients {
  double projector_weight;      // J = sqrt((q+1)/|r|)
  double identity_coefficient;  // K = (sqrt(|r|(q+1)) - 1) / q
};
UnitTraceCoefficients unit_trace_coefficients(int q, int size);

FaceOperator face_operator(const MubSet& mubs, const FaceLabel& label);
FaceOperator face_operator_unit_trace(const MubSet& mubs, const FaceLabel& label);

/// q - Delta(r, s).
double overlap_predicted(int q, const FaceLabel& r, const FaceLabel& s);
/// q - (q+1) Delta(r, s) / |r|.
double overlap_predicted_unit_trace(int q, const FaceLabel& r, const FaceLabel& s);
/// Re Tr(A B); the imaginary part vanishes for Hermitian operands.
double overlap_matrix(const FaceOperator& a, const FaceOperator& b);

/// sqrt(2 Delta).
double hs_distance(const FaceLabel& r, const FaceLabel& s);
/// sqrt(Tr((A - B)^dagger (A - B))).
double hs_distance(const FaceOperator& a, const FaceOperator& b);

struct JamState {
  FaceLabel label;
  ComplexVector vector;  // dimension q^2, index k*q + l
};

/// (I (x) A) sum_k |kk> / sqrt(q).
JamState jam_state(const FaceOperator& op);

/// (1/q) sqrt(2 q Delta - Delta^2).
double trace_distance(int q, const FaceLabel& r, const FaceLabel& s);
/// sqrt(2 (1 - |1 - Delta/q|)).
double fs_distance(int q, const FaceLabel& r, const FaceLabel& s);
/// sqrt(1 - |<a|b>|^2).
double trace_distance(const JamState& a, const JamState& b);
/// sqrt(2 - 2 |<a|b>|).
double fs_distance(const JamState& a, const JamState& b);

/// r + x g1 - z g2 for a facet label, g1/g2 the simplex generators. Odd q only.
FaceLabel conjugate_label(const MubSet& mubs, const FaceLabel& facet, Elem x, Elem z);

/// Weyl-Heisenberg orbit of a facet label, found at the matrix level: each
/// constituent vector is conjugated and located in its basis by overlap.
/// Entry x*q + z is the image under (x, z). Works for every q.
std::vector<FaceLabel> wh_orbit(const MubSet& mubs, const FaceLabel& facet);

/// Per-coordinate Teichmuller indices in Teichmuller column order
/// [inf, 0, 1, xi, ..., xi^(q-2)]: the coordinates in which even-q orbit
/// tables are conventionally printed. Requires even q and a facet label.
std::vector<int> teichmuller_coordinates(const MubSet& mubs, const FaceLabel& facet);

struct PurityStats {
  double average = 0.0;         // mean Tr(rho_1^2) over Jamiolkowski states
  double lubkin = 0.0;          // 2q / (q^2 + 1)
  double standard_error = 0.0;  // zero when exhaustive
  std::uint64_t count = 0;
  bool exhaustive = true;
};

/// Largest q for which purity_stats enumerates every facet label.
inline constexpr int kPurityExhaustiveMaxQ = 4;

/// Exhaustive for q <= 4. Larger q need a sample request (count, seed);
/// without one std::length_error is thrown.
struct PuritySample {
  std::uint64_t count = 100'000;
  std::uint64_t seed = 0;
};
PurityStats purity_stats(const MubSet& mubs, std::optional<PuritySample> sample = std::nullopt);

/// Purity Tr(rho^2) of the reduced state of a Jamiolkowski vector.
double reduced_purity(const JamState& state);

}  // namespace wigner_codes
