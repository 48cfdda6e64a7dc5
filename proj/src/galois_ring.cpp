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

#include <stdexcept>
#include <string>

#include "poly.hpp"
#include "wigner_codes/gfield.hpp"

namespace wigner_codes {

std::vector<int> hensel_lift(std::span<const int> binary_modulus) {
  const int n = static_cast<int>(binary_modulus.size()) - 1;
  if (n < 1 || binary_modulus.back() != 1)
    throw std::invalid_argument("hensel_lift: modulus must be monic of degree >= 1");
  std::vector<int> even(n + 1, 0), odd(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    if (binary_modulus[i] != 0 && binary_modulus[i] != 1)
      throw std::invalid_argument("hensel_lift: modulus must be binary");
    (i % 2 == 0 ? even : odd)[i] = binary_modulus[i];
  }
  std::vector<int> sq(2 * n + 1, 0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) sq[i + j] += even[i] * even[j] - odd[i] * odd[j];
  const int sign = (n % 2 == 0) ? 1 : -1;
  std::vector<int> lifted(n + 1);
  // e^2 - o^2 has only even-degree terms.
  for (int i = 0; i <= n; ++i) lifted[i] = (((sign * sq[2 * i]) % 4) + 4) % 4;
  return lifted;
}

std::shared_ptr<const GaloisRing> GaloisRing::make(int n, int max_order) {
  return over(GaloisField::make(2, n, std::nullopt, max_order));
}

std::shared_ptr<const GaloisRing> GaloisRing::over(const FieldPtr& residue_field) {
  if (!residue_field || residue_field->p() != 2)
    throw std::invalid_argument("galois ring: residue field must have characteristic 2");
  auto lifted = hensel_lift(residue_field->spec().modulus);
  return std::shared_ptr<const GaloisRing>(new GaloisRing(residue_field, std::move(lifted)));
}

GaloisRing::GaloisRing(FieldPtr field, std::vector<int> modulus)
    : field_(std::move(field)), n_(field_->n()), modulus_(std::move(modulus)) {
  size_ = 1;
  for (int i = 0; i < n_; ++i) size_ *= 4;
  const int q = field_->q();

  for (int i = 0; i <= n_; ++i)
    if (modulus_[i] % 2 != field_->spec().modulus[i])
      throw std::logic_error("galois ring: lifted modulus does not reduce to the field modulus");

  xi_ = static_cast<RElem>(poly::undigits(poly::reduce({0, 1}, modulus_, 4), 4));

  teichmuller_.reserve(q);
  teichmuller_.push_back(0);
  RElem cur = 1;
  for (int k = 0; k < q - 1; ++k) {
    teichmuller_.push_back(cur);
    cur = mul(cur, xi_);
  }
  if (cur != 1) throw std::logic_error("galois ring: xi^(2^n - 1) != 1");

  teich_index_.assign(size_, -1);
  for (int i = 0; i < q; ++i) {
    if (teich_index_[teichmuller_[i]] != -1)
      throw std::logic_error("galois ring: xi has order below 2^n - 1");
    teich_index_[teichmuller_[i]] = i;
  }

  lift_.assign(q, 0);
  std::vector<bool> hit(q, false);
  for (RElem t : teichmuller_) {
    Elem r = reduce(t);
    if (hit[r]) throw std::logic_error("galois ring: Teichmuller reduction is not injective");
    hit[r] = true;
    lift_[r] = t;
  }

  decomposition_.assign(size_, {0, 0});
  std::vector<bool> seen(size_, false);
  for (RElem a : teichmuller_)
    for (RElem b : teichmuller_) {
      RElem g = add(a, times_two(b));
      if (seen[g]) throw std::logic_error("galois ring: 2-adic decomposition is not unique");
      seen[g] = true;
      decomposition_[g] = {a, b};
    }

  // tr(a + 2b) = sum_k a^(2^k) + 2 b^(2^k); the Frobenius on T is squaring.
  trace_.assign(size_, 0);
  for (int g = 0; g < size_; ++g) {
    auto [a, b] = decomposition_[g];
    RElem s = 0;
    for (int k = 0; k < n_; ++k) {
      s = add(s, add(a, times_two(b)));
      a = mul(a, a);
      b = mul(b, b);
    }
    auto c = coefficients(s);
    for (int i = 1; i < n_; ++i)
      if (c[i] != 0) throw std::logic_error("galois ring: trace left Z_4");
    trace_[g] = c[0];
  }
}

GaloisRing::RElem GaloisRing::add(RElem a, RElem b) const {
  auto ca = coefficients(a);
  auto cb = coefficients(b);
  for (int i = 0; i < n_; ++i) ca[i] = (ca[i] + cb[i]) % 4;
  return static_cast<RElem>(poly::undigits(ca, 4));
}

GaloisRing::RElem GaloisRing::neg(RElem a) const {
  auto ca = coefficients(a);
  for (int& c : ca) c = (4 - c) % 4;
  return static_cast<RElem>(poly::undigits(ca, 4));
}

GaloisRing::RElem GaloisRing::mul(RElem a, RElem b) const {
  return static_cast<RElem>(poly::undigits(poly::mulmod(coefficients(a), coefficients(b), modulus_, 4), 4));
}

GaloisRing::RElem GaloisRing::pow(RElem a, long long e) const {
  if (e < 0) throw std::domain_error("galois ring: negative exponent");
  RElem r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<int> GaloisRing::coefficients(RElem a) const {
  if (a >= static_cast<RElem>(size_))
    throw std::out_of_range("galois ring: index " + std::to_string(a) + " out of range");
  return poly::digits(a, 4, n_);
}

GaloisRing::RElem GaloisRing::from_coefficients(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != n_) throw std::invalid_argument("galois ring: wrong coefficient count");
  std::vector<int> c(coeffs.begin(), coeffs.end());
  for (int& x : c) x = ((x % 4) + 4) % 4;
  return static_cast<RElem>(poly::undigits(c, 4));
}

Elem GaloisRing::reduce(RElem a) const {
  auto c = coefficients(a);
  for (int& x : c) x %= 2;
  return field_->from_coefficients(c);
}

RingElement::RingElement(RingPtr ring, GaloisRing::RElem index) : ring_(std::move(ring)), index_(index) {
  if (!ring_) throw std::invalid_argument("ring element: null ring");
  ring_->coefficients(index_);
}

namespace {
void check_same(const RingElement& a, const RingElement& b) {
  if (&a.ring() != &b.ring() && a.ring().modulus() != b.ring().modulus())
    throw std::invalid_argument("ring element: operands belong to different rings");
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  return {a.ring_, a.ring_->add(a.index_, b.index_)};
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  return {a.ring_, a.ring_->mul(a.index_, b.index_)};
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring().modulus() == b.ring().modulus() && a.index_ == b.index_;
}

std::pair<RingElement, RingElement> decompose(const RingElement& g) {
  auto [a, b] = g.ring().decompose(g.index());
  return {RingElement(g.ring_ptr(), a), RingElement(g.ring_ptr(), b)};
}

int trace(const RingElement& g) { return g.ring().trace(g.index()); }

}  // namespace wigner_codes
