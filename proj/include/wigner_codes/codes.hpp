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

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "wigner_codes/gfield.hpp"

namespace wigner_codes {

/// Largest codeword list (or coset count) materialised in memory.
inline constexpr std::uint64_t kEnumerationBound = 1'000'000;
/// Largest codebook walked by streaming enumerations (weights, distance).
inline constexpr std::uint64_t kStreamingBound = 100'000'000;

/// A length-N word over GF(q).
class Word {
 public:
  Word(FieldPtr field, std::vector<Elem> symbols);
  static Word zeros(FieldPtr field, int length);

  int length() const { return static_cast<int>(symbols_.size()); }
  const std::vector<Elem>& symbols() const { return symbols_; }
  Elem operator[](int i) const { return symbols_[i]; }
  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  int weight() const;
  /// Big-endian radix-q value: the first coordinate is most significant.
  std::uint64_t encoding() const;

  friend Word operator+(const Word& a, const Word& b);
  friend Word operator-(const Word& a, const Word& b);
  /// Scalar multiple c * w.
  friend Word operator*(Elem c, const Word& w);
  friend bool operator==(const Word& a, const Word& b);

 private:
  FieldPtr field_;
  std::vector<Elem> symbols_;
};

/// Number of positions where v and w differ. Throws on length or field mismatch.
int hamming_distance(const Word& v, const Word& w);

/// (weight, encoding) order used for coset-leader selection.
bool leader_less(const Word& a, const Word& b);

/// Linear [N, k] code given by a full-rank generator matrix.
class LinearCode {
 public:
  /// Rows must be linearly independent and of the given length; an empty
  /// generator describes the zero code.
  LinearCode(FieldPtr field, int length, std::vector<std::vector<Elem>> generator);

  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int length() const { return length_; }
  int dimension() const { return static_cast<int>(generator_.size()); }
  const std::vector<std::vector<Elem>>& generator() const { return generator_; }

  /// q^k; throws std::overflow_error beyond 64 bits.
  std::uint64_t size() const;

  /// sum_j m_j g_j with message digits m_j = (index / q^j) mod q: the first
  /// generator row varies fastest.
  Word codeword(std::uint64_t message) const;

  /// All codewords in message order. Throws std::length_error past `bound`.
  std::vector<Word> codewords(std::uint64_t bound = kEnumerationBound) const;

  /// Streams codeword symbol vectors in message order without materialising
  /// the codebook. Throws std::length_error past `bound`.
  void for_each_codeword(const std::function<void(std::span<const Elem>)>& visit,
                         std::uint64_t bound = kStreamingBound) const;

  /// Minimum nonzero weight, computed once and cached. Throws std::domain_error
  /// for the zero code, std::length_error past the streaming bound.
  int min_distance() const;

  /// Membership by rank test against the generator rows.
  bool contains(const Word& word) const;

 private:
  struct Cache;

  FieldPtr field_;
  int length_ = 0;
  std::vector<std::vector<Elem>> generator_;
  std::shared_ptr<Cache> cache_;
};

/// [q+1, 2, q] simplex (doubly extended Reed-Solomon) code with
/// g1 = [1, 0, a, a^2, ..., a^(q-1)] and g2 = [0, 1, 1, ..., 1].
LinearCode simplex_code(const FieldPtr& field);

/// [q+1, q-1, 3] Hamming code, built as the dual of simplex_code.
LinearCode hamming_code(const FieldPtr& field);

/// Orthogonal complement under sum_i u_i v_i.
LinearCode dual(const LinearCode& code);

/// Standard (Slepian) array: leaders sorted by (weight, encoding); row i is
/// leader_i + C in codeword message order.
class CosetTable {
 public:
  CosetTable(LinearCode code, std::vector<Word> leaders);

  const LinearCode& code() const { return code_; }
  const std::vector<Word>& leaders() const { return leaders_; }
  std::size_t num_rows() const { return leaders_.size(); }
  std::vector<Word> row(std::size_t i) const;

 private:
  LinearCode code_;
  std::vector<Word> leaders_;
  std::vector<Word> codewords_;
};

/// Throws std::length_error when q^(N-k) exceeds `bound`.
CosetTable cosets(const LinearCode& code, std::uint64_t bound = kEnumerationBound);

struct WeightDistribution {
  std::vector<std::uint64_t> counts;  // A_0 .. A_N

  std::uint64_t total() const;
};

WeightDistribution weight_distribution(const LinearCode& code, std::uint64_t bound = kStreamingBound);

int min_distance(const LinearCode& code);

/// floor(q^N / sum_{i <= (d-1)/2} C(N,i)(q-1)^i).
std::uint64_t hamming_bound(int q, int length, int distance);
/// q^(N - d + 1).
std::uint64_t singleton_bound(int q, int length, int distance);
/// |C| * |Hamming ball of radius (d-1)/2| == q^N exactly.
bool is_perfect(const LinearCode& code);
/// |C| == q^(N - d + 1).
bool is_mds(const LinearCode& code);

}  // namespace wigner_codes
