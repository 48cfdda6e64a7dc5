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
#include <set>

#include "oracles.hpp"
#include "wigner_codes/gfield.hpp"

using namespace wigner_codes;

namespace {

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};

oracle::PolyField oracle_for(const GaloisField& f) { return {f.p(), f.n(), f.spec().modulus}; }

}  // namespace

TEST_CASE("field construction picks documented moduli") {
  CHECK(GaloisField::make(2, 1)->spec().modulus == std::vector<int>{1, 1});
  CHECK(GaloisField::make(2, 2)->spec().modulus == std::vector<int>{1, 1, 1});
  CHECK(GaloisField::make(2, 1)->q() == 2);
  CHECK(GaloisField::make(2, 2)->q() == 4);

  const auto f9 = GaloisField::make(3, 2);
  CHECK(f9->q() == 9);
  CHECK(f9->pow(f9->alpha(), 8) == 1);
  for (int k = 1; k < 8; ++k) CHECK(f9->pow(f9->alpha(), k) != 1);
  CHECK(f9->alpha() == 3);  // index p for n > 1
}

TEST_CASE("every supported order builds a primitive alpha") {
  for (int q : kOrders) {
    CAPTURE(q);
    const auto f = GaloisField::of_order(q);
    std::set<Elem> seen;
    for (int k = 0; k < q - 1; ++k) seen.insert(f->alpha_pow(k));
    CHECK(seen.size() == static_cast<std::size_t>(q - 1));
    CHECK(seen.count(0) == 0);
  }
}

TEST_CASE("invalid field requests are rejected") {
  CHECK_THROWS_AS(GaloisField::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField::make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField::of_order(6), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField::of_order(128), std::invalid_argument);
  // x^2 + 1 is reducible over Z_2.
  CHECK_THROWS_AS(GaloisField::make(2, 2, std::vector<int>{1, 0, 1}), std::invalid_argument);
  // x^4 + x^3 + x^2 + x + 1 is irreducible but not primitive.
  CHECK_THROWS_AS(GaloisField::make(2, 4, std::vector<int>{1, 1, 1, 1, 1}), std::invalid_argument);
  // Not monic.
  CHECK_THROWS_AS(GaloisField::make(3, 2, std::vector<int>{2, 2, 2}), std::invalid_argument);
}

TEST_CASE("modulus override is honoured") {
  // x^4 + x^3 + 1 is primitive over GF(2).
  const auto f = GaloisField::make(2, 4, std::vector<int>{1, 0, 0, 1, 1});
  CHECK(f->spec().modulus == std::vector<int>{1, 0, 0, 1, 1});
  const auto o = oracle_for(*f);
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) CHECK(f->mul(a, b) == static_cast<Elem>(o.mul(a, b)));
}

TEST_CASE("arithmetic tables match schoolbook polynomial arithmetic") {
  for (int q : kOrders) {
    if (q > 27) continue;
    CAPTURE(q);
    const auto f = GaloisField::of_order(q);
    const auto o = oracle_for(*f);
    for (int a = 0; a < q; ++a) {
      CHECK(f->neg(a) == static_cast<Elem>(o.neg(a)));
      CHECK(f->trace(a) == o.trace(a));
      if (a != 0) CHECK(f->inv(a) == static_cast<Elem>(o.inv(a)));
      for (int b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == static_cast<Elem>(o.add(a, b)));
        CHECK(f->mul(a, b) == static_cast<Elem>(o.mul(a, b)));
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    CAPTURE(q);
    const auto f = GaloisField::of_order(q);
    bool ok = true;
    for (Elem a = 0; a < static_cast<Elem>(q); ++a) {
      ok = ok && f->mul(a, 1) == a && f->add(a, 0) == a && f->add(a, f->neg(a)) == 0;
      if (a != 0) ok = ok && f->mul(a, f->inv(a)) == 1;
      for (Elem b = 0; b < static_cast<Elem>(q); ++b)
        for (Elem c = 0; c < static_cast<Elem>(q); ++c) {
          ok = ok && f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c));
          ok = ok && f->add(f->add(a, b), c) == f->add(a, f->add(b, c));
          ok = ok && f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
        }
    }
    CHECK(ok);
  }
}

TEST_CASE("small worked products") {
  const auto f4 = GaloisField::of_order(4);
  const Elem a = f4->alpha();
  CHECK(f4->mul(a, a) == f4->add(a, 1));
  const auto f3 = GaloisField::of_order(3);
  CHECK(f3->inv(2) == 2);
  CHECK_THROWS_AS(f3->inv(0), std::domain_error);
  CHECK_THROWS_AS(f4->half(), std::domain_error);
  CHECK(f3->half() == 2);
}

TEST_CASE("trace is linear over the prime field and balanced") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    CAPTURE(q);
    const auto f = GaloisField::of_order(q);
    const int p = f->p();
    std::vector<int> counts(p, 0);
    for (Elem a = 0; a < static_cast<Elem>(q); ++a) {
      ++counts[f->trace(a)];
      for (Elem b = 0; b < static_cast<Elem>(q); ++b)
        CHECK(f->trace(f->add(a, b)) == (f->trace(a) + f->trace(b)) % p);
      for (int c = 0; c < p; ++c) CHECK(f->trace(f->mul(f->from_int(c), a)) == (c * f->trace(a)) % p);
    }
    for (int v = 0; v < p; ++v) CHECK(counts[v] == q / p);
  }
  CHECK(GaloisField::of_order(4)->trace(2) == 1);
  for (Elem b = 0; b < 7; ++b) CHECK(GaloisField::of_order(7)->trace(b) == static_cast<int>(b));
}

TEST_CASE("character sums vanish off zero") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    CAPTURE(q);
    const auto f = GaloisField::of_order(q);
    for (Elem g = 0; g < static_cast<Elem>(q); ++g) {
      const auto s = character_sum(FieldElement(f, g));
      CHECK(std::abs(s - std::complex<double>(g == 0 ? q : 0, 0)) < 1e-9);
    }
  }
}

TEST_CASE("field elements refuse to mix fields") {
  const auto f3 = GaloisField::of_order(3);
  const auto f9 = GaloisField::of_order(9);
  const FieldElement a(f3, 1);
  const FieldElement b(f9, 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(FieldElement(f3, 3), std::out_of_range);
  CHECK((FieldElement(f3, 2) * FieldElement(f3, 2)).index() == 1);
  CHECK((-FieldElement(f3, 1)).index() == 2);
  CHECK(FieldElement(f9, 5).inverse() * FieldElement(f9, 5) == FieldElement::one(f9));
}

TEST_CASE("field spec json round trip") {
  const auto f = GaloisField::of_order(8);
  const nlohmann::json j = f->spec();
  CHECK(j.at("p") == 2);
  CHECK(j.at("n") == 3);
  CHECK(j.at("modulus") == std::vector<int>{1, 1, 0, 1});
  CHECK(j.get<FieldSpec>() == f->spec());
}

TEST_CASE("Galois ring GR(4,n) structure") {
  const auto z4 = GaloisRing::make(1);
  CHECK(z4->size() == 4);
  CHECK(z4->teichmuller() == std::vector<GaloisRing::RElem>{0, 1});
  CHECK(z4->decompose(0) == std::pair<GaloisRing::RElem, GaloisRing::RElem>{0, 0});
  CHECK(z4->decompose(2) == std::pair<GaloisRing::RElem, GaloisRing::RElem>{0, 1});
  CHECK(z4->decompose(3) == std::pair<GaloisRing::RElem, GaloisRing::RElem>{1, 1});
  for (GaloisRing::RElem g = 0; g < 4; ++g) CHECK(z4->trace(g) == static_cast<int>(g));

  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const auto ring = GaloisRing::make(n);
    const int q = 1 << n;
    CHECK(ring->size() == q * q);
    CHECK(ring->teichmuller().size() == static_cast<std::size_t>(q));
    CHECK(ring->pow(ring->xi(), q - 1) == ring->one());
    for (int k = 1; k < q - 1; ++k) CHECK(ring->pow(ring->xi(), k) != ring->one());

    // Lifted modulus reduces to the field modulus.
    const auto& h = ring->modulus();
    const auto& f = ring->residue_field()->spec().modulus;
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i] % 2 == f[i]);

    // Reduction is a bijection T -> GF(2^n); T is closed under products.
    std::set<Elem> images;
    std::set<GaloisRing::RElem> tset(ring->teichmuller().begin(), ring->teichmuller().end());
    for (auto t : ring->teichmuller()) {
      images.insert(ring->reduce(t));
      CHECK(ring->lift(ring->reduce(t)) == t);
      for (auto u : ring->teichmuller()) CHECK(tset.count(ring->mul(t, u)) == 1);
    }
    CHECK(images.size() == static_cast<std::size_t>(q));

    // g = a + 2b round trip and the trace lands in Z_4 additively.
    for (GaloisRing::RElem g = 0; g < static_cast<GaloisRing::RElem>(ring->size()); ++g) {
      const auto [a, b] = ring->decompose(g);
      CHECK(tset.count(a) == 1);
      CHECK(tset.count(b) == 1);
      CHECK(ring->add(a, ring->times_two(b)) == g);
      GaloisRing::RElem sum = 0;
      for (int k = 0; k < n; ++k)
        sum = ring->add(sum, ring->add(ring->pow(a, 1LL << k), ring->times_two(ring->pow(b, 1LL << k))));
      auto coeffs = ring->coefficients(sum);
      CHECK(coeffs[0] == ring->trace(g));
      for (int i = 1; i < n; ++i) CHECK(coeffs[i] == 0);
      for (GaloisRing::RElem h2 = 0; h2 < static_cast<GaloisRing::RElem>(ring->size()); ++h2)
        CHECK(ring->trace(ring->add(g, h2)) == (ring->trace(g) + ring->trace(h2)) % 4);
    }
  }
}

TEST_CASE("GR(4,2) lift satisfies xi^3 = 1") {
  const auto ring = GaloisRing::make(2);
  const auto xi = ring->xi();
  CHECK(ring->mul(xi, ring->mul(xi, xi)) == 1);
  const std::vector<int> lifted = hensel_lift(std::vector<int>{1, 1, 1});
  CHECK(lifted == ring->modulus());
}

TEST_CASE("ring element wrappers") {
  const auto ring = GaloisRing::make(2);
  const RingElement x(ring, ring->xi());
  const auto [a, b] = decompose(x + x);
  CHECK(a.index() == 0);
  CHECK(b.index() == ring->xi());
  CHECK(trace(RingElement(ring, 0)) == 0);
}
