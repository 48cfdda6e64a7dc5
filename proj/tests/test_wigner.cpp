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
#include <random>

#include "oracles.hpp"
#include "wigner_codes/wigner.hpp"

using namespace wigner_codes;

namespace {

ComplexMatrix random_density(int q, std::mt19937_64& rng) {
  // Mixture of three random pure states.
  ComplexMatrix rho = ComplexMatrix::Zero(q, q);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double w = u(rng);
    rho += w * projector(random_pure_state(q, rng));
    total += w;
  }
  return rho / total;
}

}  // namespace

TEST_CASE("phase points are orthogonal and built from the simplex coset") {
  for (int q : {2, 3, 4, 5}) {
    CAPTURE(q);
    const MubSet m = mub_build(GaloisField::of_order(q));
    const DwfSpec spec(m);
    const auto& pts = spec.phase_points();
    REQUIRE(pts.size() == static_cast<std::size_t>(q * q));
    ComplexMatrix sum = ComplexMatrix::Zero(q, q);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      sum += pts[i].matrix;
      for (std::size_t j = 0; j < pts.size(); ++j)
        CHECK(std::abs(hs_inner(pts[i].matrix, pts[j].matrix) - Complex(i == j ? q : 0.0)) < 1e-9);
    }
    CHECK(max_abs_diff(sum, q * ComplexMatrix::Identity(q, q)) < 1e-9);
    CHECK(&spec.phase_point(1, 0) == &pts[q]);
  }
}

TEST_CASE("maximally mixed state is flat") {
  for (int q : {2, 3, 5}) {
    const DwfSpec spec(mub_build(GaloisField::of_order(q)));
    const auto t = dwf(spec, ComplexMatrix::Identity(q, q) / double(q));
    for (double v : t.values) CHECK(v == doctest::Approx(1.0 / (q * q)));
    CHECK(t.sum() == doctest::Approx(1.0));
    CHECK_FALSE(t.trace_warning());
    CHECK(negativity(t) == doctest::Approx(0.0));
  }
}

TEST_CASE("reconstruction round trip") {
  for (int q : {2, 3, 4, 5, 7}) {
    CAPTURE(q);
    const MubSet m = mub_build(GaloisField::of_order(q));
    std::mt19937_64 rng(q);
    std::uniform_int_distribution<Elem> v(0, q - 1);
    std::vector<Elem> leader(q + 1);
    for (auto& e : leader) e = v(rng);
    for (const DwfSpec& spec : {DwfSpec(m), DwfSpec(m, leader)}) {
      const ComplexMatrix rho = random_density(q, rng);
      const auto t = dwf(spec, rho);
      CHECK(t.sum() == doctest::Approx(1.0));
      CHECK(max_abs_diff(reconstruct(spec, t), rho) < 1e-9);
    }
  }
}

TEST_CASE("DWF input validation") {
  const DwfSpec spec(mub_build(GaloisField::of_order(3)));
  ComplexMatrix bad = ComplexMatrix::Identity(3, 3) / 3.0;
  bad(0, 1) = Complex(0.0, 0.3);
  CHECK_THROWS_AS(dwf(spec, bad), std::invalid_argument);
  CHECK_THROWS_AS(dwf(spec, ComplexMatrix::Identity(2, 2)), std::invalid_argument);
  CHECK(dwf(spec, ComplexMatrix::Identity(3, 3)).trace_warning());
  CHECK_THROWS_AS(DwfSpec(mub_build(GaloisField::of_order(3)), std::vector<Elem>{0, 0}), std::invalid_argument);
}

TEST_CASE("polytope minimum matches brute force over every facet") {
  for (int q : {3, 5}) {
    CAPTURE(q);
    const auto f = GaloisField::of_order(q);
    const MubSet m = mub_build(f);
    const oracle::PolyField o{f->p(), f->n(), f->spec().modulus};
    std::mt19937_64 rng(q);
    for (int i = 0; i < 4; ++i) {
      const ComplexMatrix rho = random_density(q, rng);
      const double brute =
          oracle::polytope_min_brute(q, rho, [&](const std::vector<int>& r) { return oracle::facet_operator(o, r); });
      const auto fast = stab_polytope_min(m, rho);
      CHECK(fast.minimum == doctest::Approx(brute).epsilon(1e-10));
      CHECK(fast.member == (fast.minimum >= -1e-9));
      CHECK((rho * face_operator(m, fast.argmin).matrix).trace().real() == doctest::Approx(fast.minimum));
    }
  }
  for (int q : {2, 4}) {
    const MubSet m = mub_build(GaloisField::of_order(q));
    std::mt19937_64 rng(q);
    const ComplexMatrix rho = random_density(q, rng);
    CHECK(stab_polytope_min(m, rho).minimum == doctest::Approx(stab_polytope_min_exhaustive(m, rho).minimum));
  }
}

TEST_CASE("polytope membership") {
  const MubSet m = mub_build(GaloisField::of_order(3));
  // Stabilizer states are inside; the strange state (|1> - |2>)/sqrt 2 is not.
  CHECK(stab_polytope_min(m, m.projector({2}, 1)).member);
  ComplexVector strange = ComplexVector::Zero(3);
  strange(1) = 1.0 / std::sqrt(2.0);
  strange(2) = -1.0 / std::sqrt(2.0);
  const auto rep = stab_polytope_min(m, projector(strange));
  CHECK_FALSE(rep.member);
  CHECK(rep.minimum == doctest::Approx(-1.0));
  CHECK_THROWS_AS(stab_polytope_min(m, ComplexMatrix::Identity(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(stab_polytope_min_exhaustive(mub_build(GaloisField::of_order(8)), ComplexMatrix::Identity(8, 8) / 8.0),
                  std::length_error);
}

TEST_CASE("zero facet operator is the parity operator for odd q") {
  for (int q : {3, 5, 7, 9, 11}) {
    CAPTURE(q);
    const auto f = GaloisField::of_order(q);
    CHECK(parity_check(mub_build(f)) < 1e-12);
    const ComplexMatrix par = parity_operator(*f);
    CHECK(max_abs_diff(par * par, ComplexMatrix::Identity(q, q)) < 1e-15);
    CHECK(std::abs(par.trace().real() - 1.0) < 1e-15);
  }
  CHECK_THROWS(parity_check(mub_build(GaloisField::of_order(2))));
}

TEST_CASE("Hudson census") {
  SUBCASE("odd primes") {
    for (int q : {3, 5}) {
      CAPTURE(q);
      const auto rep = hudson_suite(mub_build(GaloisField::of_order(q)), 300, 11);
      CHECK(rep.mub_states == q * (q + 1));
      CHECK(rep.mub_nonnegative == rep.mub_states);
      CHECK(rep.sampled_nonnegative_non_mub == 0);
      CHECK(rep.sampled_negative + rep.sampled_near_mub == rep.samples);
      CHECK_FALSE(rep.nonnegative_witness.has_value());
    }
  }
  SUBCASE("qubit contrast case") {
    const auto rep = hudson_suite(mub_build(GaloisField::of_order(2)), 300, 11);
    CHECK(rep.q == 2);
    CHECK(rep.samples == 300);
    CHECK(rep.sampled_nonnegative_non_mub > 0);
    CHECK(rep.nonnegative_witness.has_value());
  }
  SUBCASE("prime powers are rejected") {
    CHECK_THROWS_AS(hudson_suite(mub_build(GaloisField::of_order(9)), 10, 0), std::domain_error);
  }
}

TEST_CASE("stabilizer state counts") {
  CHECK(stabilizer_count(2, 1) == 6);
  CHECK(stabilizer_count(3, 1) == 12);
  CHECK(stabilizer_count(2, 2) == 60);
  CHECK(stabilizer_count(2, 3) == 1080);
  CHECK(stabilizer_count(5, 1) == 30);
  CHECK_THROWS(stabilizer_count(4, 1));
  CHECK_THROWS(stabilizer_count(2, 0));
  CHECK_THROWS(stabilizer_count(2, 40));
}
