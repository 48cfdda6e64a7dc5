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

#include <cmath>

#include "oracles.hpp"
#include "wigner_codes/mub.hpp"

using namespace wigner_codes;

namespace {

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 16};

/// |<a|b>|^2 == 1 up to phase.
bool same_ray(const ComplexVector& a, const ComplexVector& b) { return std::abs(std::norm(a.dot(b)) - 1.0) < 1e-12; }

}  // namespace

TEST_CASE("constructed sets are mutually unbiased") {
  for (int q : kOrders) {
    CAPTURE(q);
    const MubSet m = mub_build(GaloisField::of_order(q));
    CHECK(m.num_bases() == q + 1);
    CHECK(verify_mub(m) < 1e-9);
    const ComplexMatrix id = ComplexMatrix::Identity(q, q);
    ComplexMatrix all = ComplexMatrix::Zero(q, q);
    for (int s = 0; s <= q; ++s) {
      ComplexMatrix basis_sum = ComplexMatrix::Zero(q, q);
      for (Elem v = 0; v < static_cast<Elem>(q); ++v) basis_sum += m.projector({s}, v);
      CHECK(max_abs_diff(basis_sum, id) < 1e-9);
      all += basis_sum;
    }
    CHECK(max_abs_diff(all, (q + 1.0) * id) < 1e-9);
  }
}

TEST_CASE("odd-q vectors match the direct quadratic-phase formula") {
  for (int q : {3, 5, 7, 9}) {
    CAPTURE(q);
    const auto f = GaloisField::of_order(q);
    const MubSet m = mub_build(f);
    const oracle::PolyField o{f->p(), f->n(), f->spec().modulus};
    const auto order = oracle::basis_order(o);
    for (int s = 1; s <= q; ++s) {
      CHECK(m.basis_element({s}) == static_cast<Elem>(order[s]));
      for (int v = 0; v < q; ++v) CHECK((m.vector({s}, v) - oracle::ivanovic_vector(o, order[s], v)).norm() < 1e-12);
    }
  }
  const MubSet m3 = mub_build(GaloisField::of_order(3));
  const ComplexVector flat = ComplexVector::Constant(3, 1.0 / std::sqrt(3.0));
  CHECK((m3.vector(m3.basis_of(0), 0) - flat).norm() < 1e-15);
}

TEST_CASE("qubit bases are the Pauli eigenbases") {
  const MubSet m = mub_build(GaloisField::of_order(2));
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  // Each basis must diagonalise exactly one Pauli operator.
  int hits[3] = {0, 0, 0};
  for (int s = 0; s <= 2; ++s) {
    const ComplexMatrix* paulis[3] = {&x, &y, &z};
    for (int k = 0; k < 3; ++k) {
      bool eigen = true;
      for (Elem v = 0; v < 2; ++v) {
        const ComplexVector psi = m.vector({s}, v);
        const ComplexVector image = *paulis[k] * psi;
        eigen = eigen && same_ray(psi, image);
      }
      hits[k] += eigen;
    }
  }
  CHECK(hits[0] == 1);
  CHECK(hits[1] == 1);
  CHECK(hits[2] == 1);
  CHECK(verify_mub(m) < 1e-12);
}

TEST_CASE("overlap probe detects a corrupted set") {
  for (int q : {2, 3, 5}) {
    const MubSet m = mub_build(GaloisField::of_order(q));
    ComplexVector zero = ComplexVector::Zero(q);
    zero(0) = 1.0;
    const MubSet bad = m.with_vector({1}, 0, zero);
    CHECK(verify_mub(bad) >= 1.0 / std::sqrt(q) - 1.0 / q - 1e-12);
  }
}

TEST_CASE("the MUB projectors form a 2-design") {
  for (int q : {2, 3, 4, 5}) {
    CAPTURE(q);
    const MubSet m = mub_build(GaloisField::of_order(q));
    ComplexMatrix second = ComplexMatrix::Zero(q * q, q * q);
    for (int s = 0; s <= q; ++s)
      for (Elem v = 0; v < static_cast<Elem>(q); ++v) {
        const ComplexMatrix p = m.projector({s}, v);
        second += kron(p, p);
      }
    ComplexMatrix swap = ComplexMatrix::Zero(q * q, q * q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) swap(i * q + j, j * q + i) = 1.0;
    CHECK(max_abs_diff(second, ComplexMatrix::Identity(q * q, q * q) + swap) < 1e-9);
  }
}

TEST_CASE("Weyl operators: unitarity, composition, commutation") {
  for (int q : {2, 3, 4, 5}) {
    CAPTURE(q);
    const auto f = GaloisField::of_order(q);
    const ComplexMatrix id = ComplexMatrix::Identity(q, q);
    CHECK(max_abs_diff(weyl_op(*f, 0, 0).matrix, id) < 1e-15);
    for (Elem x = 0; x < static_cast<Elem>(q); ++x)
      for (Elem z = 0; z < static_cast<Elem>(q); ++z) {
        const ComplexMatrix d = weyl_op(*f, x, z).matrix;
        CHECK(max_abs_diff(d * d.adjoint(), id) < 1e-12);
        const ComplexMatrix xz = shift_operator(*f, x) * clock_operator(*f, z);
        for (Elem x2 = 0; x2 < static_cast<Elem>(q); ++x2)
          for (Elem z2 = 0; z2 < static_cast<Elem>(q); ++z2) {
            const ComplexMatrix xz2 = shift_operator(*f, x2) * clock_operator(*f, z2);
            const ComplexMatrix lhs = xz * xz2;
            const ComplexMatrix rhs = oracle::omega_pow(f->trace(f->mul(x2, z)), f->p()) *
                                      shift_operator(*f, f->add(x, x2)) * clock_operator(*f, f->add(z, z2));
            CHECK(max_abs_diff(lhs, rhs) < 1e-12);
            const ComplexMatrix d2 = weyl_op(*f, x2, z2).matrix;
            const bool commute = max_abs_diff(d * d2, d2 * d) < 1e-9;
            const int symp = f->trace(f->sub(f->mul(x, z2), f->mul(x2, z)));
            CHECK(commute == (symp == 0));
          }
      }
  }
  const auto f2 = GaloisField::of_order(2);
  CHECK_THROWS_AS(weyl_op(*f2, 1, 1, WeylPhase::kPhased), std::domain_error);
  CHECK_FALSE(weyl_op(*f2, 1, 1).phased);
  CHECK(weyl_op(*GaloisField::of_order(3), 1, 1).phased);
}

TEST_CASE("stabilizer projectors reproduce the Ivanovic vectors") {
  for (int q : {3, 5, 7, 9}) {
    CAPTURE(q);
    const auto f = GaloisField::of_order(q);
    const MubSet m = mub_build(f);
    for (Elem b = 0; b < static_cast<Elem>(q); ++b)
      for (Elem v = 0; v < static_cast<Elem>(q); ++v) {
        const ComplexMatrix p = stabilizer_projector(*f, b, v);
        const ComplexMatrix expected = m.projector(m.basis_of(b), v);
        CHECK(max_abs_diff(p, expected) < 1e-9);
        CHECK(max_abs_diff(p * p, p) < 1e-9);
        CHECK(std::abs(p.trace() - Complex(1.0)) < 1e-9);
        if (q == 3) {
          const ComplexVector psi = m.vector(m.basis_of(b), v);
          const ComplexVector image = weyl_op(*f, 1, b).matrix * psi;
          CHECK((image - oracle::omega_pow(f->trace(v), f->p()) * psi).norm() < 1e-9);
        }
      }
  }
  CHECK_THROWS_AS(stabilizer_projector(*GaloisField::of_order(4), 0, 0), std::domain_error);
}

TEST_CASE("label-level conjugation matches the matrix action") {
  for (int q : {3, 5, 7}) {
    CAPTURE(q);
    const auto f = GaloisField::of_order(q);
    const MubSet m = mub_build(f);
    for (Elem x = 0; x < static_cast<Elem>(q); ++x)
      for (Elem z = 0; z < static_cast<Elem>(q); ++z) {
        const ComplexMatrix d = weyl_op(*f, x, z).matrix;
        for (int s = 0; s <= q; ++s)
          for (Elem v = 0; v < static_cast<Elem>(q); ++v) {
            const Elem v2 = conjugate_projector(m, x, z, {s}, v);
            CHECK(max_abs_diff(d * m.projector({s}, v) * d.adjoint(), m.projector({s}, v2)) < 1e-9);
          }
      }
  }
  const MubSet m3 = mub_build(GaloisField::of_order(3));
  CHECK(conjugate_projector(m3, 1, 2, m3.basis_of(1), 0) == 2);
  CHECK(conjugate_projector(m3, 2, 1, BasisLabel::infinity(), 2) == 1);
  CHECK(conjugate_projector(m3, 0, 0, m3.basis_of(2), 1) == 1);
  CHECK_THROWS_AS(conjugate_projector(mub_build(GaloisField::of_order(4)), 1, 0, {1}, 0), std::domain_error);
}

TEST_CASE("basis naming and bounds") {
  const MubSet m = mub_build(GaloisField::of_order(4));
  CHECK(m.basis_name(BasisLabel::infinity()) == "inf");
  CHECK(m.basis_name({1}) == "0");
  CHECK(m.basis_element({1}) == 0);
  CHECK(m.basis_element({2}) == 2);
  CHECK_THROWS_AS(m.vector({5}, 0), std::out_of_range);
  CHECK_THROWS_AS(m.vector({0}, 4), std::out_of_range);
  CHECK_THROWS_AS(m.basis_element(BasisLabel::infinity()), std::out_of_range);
}
