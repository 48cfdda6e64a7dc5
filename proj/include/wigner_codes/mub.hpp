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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wigner_codes/gfield.hpp"
#include "wigner_codes/qlinalg.hpp"

namespace wigner_codes {

/// One of the q+1 bases, identified by its slot in the canonical order
/// [inf, 0, a, a^2, ..., a^(q-1)]: slot 0 is the computational basis and
/// slot s >= 1 carries the field element basis_order()[s].
struct BasisLabel {
  int slot = 0;

  static BasisLabel infinity() { return {0}; }
  bool is_infinity() const { return slot == 0; }
  auto operator<=>(const BasisLabel&) const = default;
};

/// Complete set of q+1 mutually unbiased bases in C^q.
///
/// Odd q (Ivanovic): |psi_B^V> = q^{-1/2} sum_k w^{tr(B k^2 / 2 - V k)} |k>.
/// Even q (Galois ring GR(4,n)): |psi_B^V> = q^{-1/2} sum_{k in T} i^{tr(B k^2) + 2 tr(V k)} |k>,
/// with B, V, k the Teichmuller lifts of field elements and |k> the
/// computational vector of k's residue. Vectors within a basis are indexed by
/// the canonical index of V.
class MubSet {
 public:
  const FieldPtr& field_ptr() const { return impl_->field; }
  const GaloisField& field() const { return *impl_->field; }
  /// Galois ring used by the even-q construction; null for odd q.
  const RingPtr& ring() const { return impl_->ring; }
  int q() const { return impl_->field->q(); }
  int num_bases() const { return q() + 1; }

  /// Field element of each slot; element 0 (infinity) is unused.
  const std::vector<Elem>& basis_order() const { return impl_->basis_order; }
  /// Field element labelling a finite basis. Throws for infinity.
  Elem basis_element(BasisLabel b) const;
  BasisLabel basis_of(Elem b) const;
  std::string basis_name(BasisLabel b) const;

  const ComplexVector& vector(BasisLabel b, Elem v) const;
  ComplexMatrix projector(BasisLabel b, Elem v) const;

  /// Copy with one vector replaced; used to probe verify_mub.
  MubSet with_vector(BasisLabel b, Elem v, ComplexVector replacement) const;

 private:
  friend MubSet mub_build(const FieldPtr& field);

  struct Impl {
    FieldPtr field;
    RingPtr ring;
    std::vector<Elem> basis_order;
    std::vector<int> slot_of;
    std::vector<std::vector<ComplexVector>> vectors;  // [slot][V]
  };

  explicit MubSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void check(BasisLabel b, Elem v) const;

  std::shared_ptr<const Impl> impl_;
};

MubSet mub_build(const FieldPtr& field);

/// max over all vector pairs of | |<psi|phi>| - target |, target in {1, 0, 1/sqrt(q)}.
double verify_mub(const MubSet& mubs);

/// Weyl-Heisenberg operator. Odd q carries the group phase
/// D_{x,z} = w^{tr(xz/2)} X(x) Z(z); the phaseless product X(x) Z(z) is used
/// for even q.
struct WeylOp {
  Elem x = 0;
  Elem z = 0;
  bool phased = false;
  ComplexMatrix matrix;
};

enum class WeylPhase { kAuto, kPhased, kPhaseless };

/// X(x)|k> = |k+x>, Z(z)|k> = w^{tr(kz)}|k>. kAuto selects the phased form
/// for odd p; kPhased with p = 2 throws std::domain_error.
WeylOp weyl_op(const GaloisField& field, Elem x, Elem z, WeylPhase phase = WeylPhase::kAuto);

ComplexMatrix shift_operator(const GaloisField& field, Elem x);
ComplexMatrix clock_operator(const GaloisField& field, Elem z);

/// (1/q) sum_k w^{tr(-kV)} D_{k, kB}. Odd q only.
ComplexMatrix stabilizer_projector(const GaloisField& field, Elem b, Elem v);

/// Label of D_{x,z} |psi_B^V><psi_B^V| D^dagger: V + x for the computational
/// basis, V - z + xB otherwise. Odd q only.
Elem conjugate_projector(const MubSet& mubs, Elem x, Elem z, BasisLabel b, Elem v);

}  // namespace wigner_codes
