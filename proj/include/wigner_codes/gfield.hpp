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

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace wigner_codes {

/// Largest field (and Galois-ring residue field) order supported out of the box.
inline constexpr int kMaxFieldOrder = 64;

/// Canonical index of a field element: sum of coeffs[i] * p^i over the
/// polynomial basis. Indices are a bijection onto [0, q).
using Elem = std::uint32_t;

/// Parameters of GF(p^n). The modulus is stored low-order first and is monic.
struct FieldSpec {
  int p = 0;
  int n = 0;
  std::vector<int> modulus;

  int q() const;
  bool operator==(const FieldSpec&) const = default;
};

void to_json(nlohmann::json& j, const FieldSpec& spec);
void from_json(const nlohmann::json& j, FieldSpec& spec);

bool is_prime(int p);

/// Conway polynomial for GF(p^n), q <= 64. Throws std::invalid_argument for
/// orders outside the built-in table.
std::vector<int> conway_polynomial(int p, int n);

/// Arithmetic in GF(p^n) over precomputed tables. Immutable once built and
/// shared through std::shared_ptr; every member is safe to call concurrently.
class GaloisField {
 public:
  /// Builds GF(p^n). Without an explicit modulus the Conway polynomial is
  /// used. The modulus must be monic, irreducible and primitive.
  static std::shared_ptr<const GaloisField> make(
      int p, int n, std::optional<std::vector<int>> modulus = std::nullopt,
      int max_order = kMaxFieldOrder);

  /// Builds the field of order q (a prime power).
  static std::shared_ptr<const GaloisField> of_order(
      int q, std::optional<std::vector<int>> modulus = std::nullopt,
      int max_order = kMaxFieldOrder);

  const FieldSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int n() const { return spec_.n; }
  int q() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Residue class of the indeterminate; a generator of the multiplicative group.
  Elem alpha() const { return alpha_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;

  /// Absolute trace onto the prime subfield, returned as an integer in [0, p).
  int trace(Elem a) const { return trace_[a]; }

  /// alpha^k for any integer k.
  Elem alpha_pow(long long k) const;
  /// Discrete logarithm base alpha, in [0, q-1). Undefined for zero.
  int log(Elem a) const;

  /// Embeds c mod p into the prime subfield.
  Elem from_int(long long c) const;
  /// 2^{-1}, the element halving the odd-characteristic phase. Requires odd p.
  Elem half() const;

  std::vector<int> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const int> coeffs) const;

  bool contains(Elem a) const { return a < static_cast<Elem>(q_); }
  /// Throws std::out_of_range if a is not an index of this field.
  void check(Elem a) const;

  /// Renders an element as "0", "1", "a", "a^k".
  std::string power_name(Elem a) const;

  bool same_field(const GaloisField& other) const {
    return this == &other || spec_ == other.spec_;
  }

 private:
  explicit GaloisField(FieldSpec spec);

  FieldSpec spec_;
  int q_ = 0;
  Elem alpha_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> exp_;  // exp_[k] = alpha^k, k in [0, q-1)
  std::vector<int> log_;
  std::vector<int> trace_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Value-semantic field element that remembers its field. Mixing elements of
/// different fields throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem index);

  static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
  static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }

  Elem index() const { return index_; }
  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::vector<int> coefficients() const { return field_->coefficients(index_); }

  FieldElement inverse() const;
  FieldElement pow(long long e) const;
  int trace() const { return field_->trace(index_); }
  bool is_zero() const { return index_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Elem index_;
};

/// Absolute trace of b, an integer in [0, p).
int trace(const FieldElement& b);

/// Sum over beta in GF(q) of omega^{tr(beta * g)}, omega = exp(2 pi i / p).
std::complex<double> character_sum(const FieldElement& g);

/// Galois ring GR(4, n) = Z_4[x] / (h), with h the Hensel lift of a binary
/// primitive polynomial. Elements are indexed by sum c_i 4^i.
class GaloisRing {
 public:
  using RElem = std::uint32_t;

  /// Lifts the modulus of GF(2^n) (Conway by default).
  static std::shared_ptr<const GaloisRing> make(int n, int max_order = kMaxFieldOrder);
  /// Lifts the modulus of the given binary field.
  static std::shared_ptr<const GaloisRing> over(const FieldPtr& residue_field);

  int n() const { return n_; }
  int size() const { return size_; }
  const std::vector<int>& modulus() const { return modulus_; }
  const FieldPtr& residue_field() const { return field_; }

  RElem add(RElem a, RElem b) const;
  RElem neg(RElem a) const;
  RElem mul(RElem a, RElem b) const;
  RElem pow(RElem a, long long e) const;
  RElem times_two(RElem a) const { return add(a, a); }
  RElem one() const { return 1; }
  /// Residue class of the indeterminate.
  RElem xi() const { return xi_; }

  std::vector<int> coefficients(RElem a) const;
  RElem from_coefficients(std::span<const int> coeffs) const;

  /// [0, 1, xi, xi^2, ..., xi^(2^n - 2)].
  const std::vector<RElem>& teichmuller() const { return teichmuller_; }
  /// Position of a Teichmuller element in teichmuller(); -1 otherwise.
  int teichmuller_index(RElem a) const { return teich_index_[a]; }

  /// Unique (a, b) in T x T with g = a + 2b.
  std::pair<RElem, RElem> decompose(RElem g) const { return decomposition_[g]; }
  /// Ring trace onto Z_4, an integer in [0, 4).
  int trace(RElem g) const { return trace_[g]; }

  /// Coefficient-wise reduction mod 2, as an index of residue_field().
  Elem reduce(RElem a) const;
  /// Teichmuller representative of a residue field element.
  RElem lift(Elem a) const { return lift_[a]; }

 private:
  GaloisRing(FieldPtr field, std::vector<int> modulus);

  FieldPtr field_;
  int n_ = 0;
  int size_ = 0;
  std::vector<int> modulus_;
  RElem xi_ = 0;
  std::vector<RElem> teichmuller_;
  std::vector<int> teich_index_;
  std::vector<std::pair<RElem, RElem>> decomposition_;
  std::vector<int> trace_;
  std::vector<RElem> lift_;
};

using RingPtr = std::shared_ptr<const GaloisRing>;

/// Hensel lift to Z_4 of a monic binary polynomial via one root-squaring step:
/// h(x^2) = (-1)^n (e(x)^2 - o(x)^2) mod 4 for f = e + o split by parity.
std::vector<int> hensel_lift(std::span<const int> binary_modulus);

/// Value-semantic element of GR(4, n).
class RingElement {
 public:
  RingElement(RingPtr ring, GaloisRing::RElem index);

  GaloisRing::RElem index() const { return index_; }
  const GaloisRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingPtr ring_;
  GaloisRing::RElem index_;
};

/// g = a + 2b with a, b Teichmuller.
std::pair<RingElement, RingElement> decompose(const RingElement& g);
int trace(const RingElement& g);

}  // namespace wigner_codes
