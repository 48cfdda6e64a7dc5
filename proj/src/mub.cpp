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

#include "wigner_codes/mub.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wigner_codes {

namespace {

/// exp(2 pi i t / m).
Complex root_of_unity(int t, int m) {
  static const Complex kFourth[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  t = ((t % m) + m) % m;
  if (t == 0) return {1.0, 0.0};
  if (m == 2) return {-1.0, 0.0};
  if (m == 4) return kFourth[t];
  return std::polar(1.0, 2.0 * std::numbers::pi * t / m);
}

void require_odd(const GaloisField& f, const char* what) {
  if (f.p() == 2)
    throw std::domain_error(std::string(what) + ": defined for odd characteristic only (q = " +
                            std::to_string(f.q()) + ")");
}

}  // namespace

Elem MubSet::basis_element(BasisLabel b) const {
  if (b.slot <= 0 || b.slot > q()) throw std::out_of_range("mub: basis slot has no field element");
  return impl_->basis_order[b.slot];
}

BasisLabel MubSet::basis_of(Elem b) const {
  field().check(b);
  return {impl_->slot_of[b]};
}

std::string MubSet::basis_name(BasisLabel b) const {
  if (b.is_infinity()) return "inf";
  return field().power_name(basis_element(b));
}

void MubSet::check(BasisLabel b, Elem v) const {
  if (b.slot < 0 || b.slot > q()) throw std::out_of_range("mub: basis slot " + std::to_string(b.slot) + " out of range");
  field().check(v);
}

const ComplexVector& MubSet::vector(BasisLabel b, Elem v) const {
  check(b, v);
  return impl_->vectors[b.slot][v];
}

ComplexMatrix MubSet::projector(BasisLabel b, Elem v) const { return wigner_codes::projector(vector(b, v)); }

MubSet MubSet::with_vector(BasisLabel b, Elem v, ComplexVector replacement) const {
  check(b, v);
  if (replacement.size() != q()) throw std::invalid_argument("mub: replacement vector has wrong dimension");
  auto impl = std::make_shared<Impl>(*impl_);
  impl->vectors[b.slot][v] = std::move(replacement);
  return MubSet(std::move(impl));
}

MubSet mub_build(const FieldPtr& field) {
  if (!field) throw std::invalid_argument("mub_build: null field");
  const GaloisField& f = *field;
  const int q = f.q();
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));

  auto impl = std::make_shared<MubSet::Impl>();
  impl->field = field;
  impl->basis_order.assign(q + 1, 0);
  impl->slot_of.assign(q, 0);
  impl->basis_order[1] = 0;
  for (int j = 1; j <= q - 1; ++j) impl->basis_order[j + 1] = f.alpha_pow(j);
  for (int s = 1; s <= q; ++s) impl->slot_of[impl->basis_order[s]] = s;

  impl->vectors.assign(q + 1, std::vector<ComplexVector>(q, ComplexVector::Zero(q)));
  for (int v = 0; v < q; ++v) impl->vectors[0][v](v) = 1.0;

  if (f.p() != 2) {
    const Elem half = f.half();
    for (int s = 1; s <= q; ++s) {
      const Elem b = impl->basis_order[s];
      for (Elem v = 0; v < static_cast<Elem>(q); ++v)
        for (Elem k = 0; k < static_cast<Elem>(q); ++k) {
          const Elem quad = f.mul(half, f.mul(b, f.mul(k, k)));
          const Elem arg = f.sub(quad, f.mul(v, k));
          impl->vectors[s][v](k) = norm * root_of_unity(f.trace(arg), f.p());
        }
    }
  } else {
    impl->ring = GaloisRing::over(field);
    const GaloisRing& ring = *impl->ring;
    for (int s = 1; s <= q; ++s) {
      const auto b = ring.lift(impl->basis_order[s]);
      for (Elem v = 0; v < static_cast<Elem>(q); ++v) {
        const auto vt = ring.lift(v);
        for (Elem k = 0; k < static_cast<Elem>(q); ++k) {
          const auto kt = ring.lift(k);
          const int e = ring.trace(ring.mul(b, ring.mul(kt, kt))) + 2 * ring.trace(ring.mul(vt, kt));
          impl->vectors[s][v](k) = norm * root_of_unity(e, 4);
        }
      }
    }
  }
  return MubSet(std::move(impl));
}

double verify_mub(const MubSet& mubs) {
  const int q = mubs.q();
  const double unbiased = 1.0 / std::sqrt(static_cast<double>(q));
  double worst = 0.0;
  for (int s = 0; s <= q; ++s)
    for (int t = s; t <= q; ++t)
      for (Elem v = 0; v < static_cast<Elem>(q); ++v)
        for (Elem w = 0; w < static_cast<Elem>(q); ++w) {
          const double overlap = std::abs(mubs.vector({s}, v).dot(mubs.vector({t}, w)));
          const double target = s != t ? unbiased : (v == w ? 1.0 : 0.0);
          worst = std::max(worst, std::abs(overlap - target));
        }
  return worst;
}

ComplexMatrix shift_operator(const GaloisField& field, Elem x) {
  field.check(x);
  const int q = field.q();
  ComplexMatrix m = ComplexMatrix::Zero(q, q);
  for (Elem k = 0; k < static_cast<Elem>(q); ++k) m(field.add(k, x), k) = 1.0;
  return m;
}

ComplexMatrix clock_operator(const GaloisField& field, Elem z) {
  field.check(z);
  const int q = field.q();
  ComplexMatrix m = ComplexMatrix::Zero(q, q);
  for (Elem k = 0; k < static_cast<Elem>(q); ++k) m(k, k) = root_of_unity(field.trace(field.mul(k, z)), field.p());
  return m;
}

WeylOp weyl_op(const GaloisField& field, Elem x, Elem z, WeylPhase phase) {
  field.check(x);
  field.check(z);
  bool phased = phase == WeylPhase::kPhased || (phase == WeylPhase::kAuto && field.p() != 2);
  if (phased) require_odd(field, "weyl_op (phased)");

  const int q = field.q();
  Complex global = 1.0;
  if (phased) global = root_of_unity(field.trace(field.mul(field.half(), field.mul(x, z))), field.p());

  WeylOp op{x, z, phased, ComplexMatrix::Zero(q, q)};
  for (Elem k = 0; k < static_cast<Elem>(q); ++k)
    op.matrix(field.add(k, x), k) = global * root_of_unity(field.trace(field.mul(k, z)), field.p());
  return op;
}

ComplexMatrix stabilizer_projector(const GaloisField& field, Elem b, Elem v) {
  require_odd(field, "stabilizer_projector");
  field.check(b);
  field.check(v);
  const int q = field.q();
  ComplexMatrix p = ComplexMatrix::Zero(q, q);
  for (Elem k = 0; k < static_cast<Elem>(q); ++k) {
    const Complex c = root_of_unity(field.trace(field.neg(field.mul(k, v))), field.p());
    p += c * weyl_op(field, k, field.mul(k, b), WeylPhase::kPhased).matrix;
  }
  return p / static_cast<double>(q);
}

Elem conjugate_projector(const MubSet& mubs, Elem x, Elem z, BasisLabel b, Elem v) {
  const GaloisField& f = mubs.field();
  require_odd(f, "conjugate_projector");
  f.check(x);
  f.check(z);
  f.check(v);
  if (b.is_infinity()) return f.add(v, x);
  return f.add(f.sub(v, z), f.mul(x, mubs.basis_element(b)));
}

}  // namespace wigner_codes
