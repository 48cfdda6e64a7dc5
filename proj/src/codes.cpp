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

#include "wigner_codes/codes.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wigner_codes {

namespace {

__extension__ using u128 = unsigned __int128;
constexpr u128 kU64Max = std::numeric_limits<std::uint64_t>::max();

u128 checked_pow(int base, int e, const char* what) {
  u128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= static_cast<u128>(base);
    if (r > kU64Max) throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
  }
  return r;
}

u128 binomial(int n, int k) {
  u128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
  return r;
}

/// Number of words within Hamming distance t of a fixed word.
u128 ball_volume(int q, int length, int t, const char* what) {
  u128 v = 0;
  for (int i = 0; i <= t; ++i) {
    v += binomial(length, i) * checked_pow(q - 1, i, what);
    if (v > kU64Max) throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
  }
  return v;
}

void check_bound_params(int q, int length, int distance, const char* what) {
  if (q < 2) throw std::invalid_argument(std::string(what) + ": alphabet size must be >= 2");
  if (length < 1) throw std::invalid_argument(std::string(what) + ": length must be >= 1");
  if (distance < 1 || distance > length)
    throw std::invalid_argument(std::string(what) + ": distance must satisfy 1 <= d <= N");
}

/// Row-reduces `rows` in place; returns pivot columns.
std::vector<int> rref(const GaloisField& f, std::vector<std::vector<Elem>>& rows, int length) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int col = 0; col < length && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Elem inv = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Elem c = rows[i][col];
      for (int j = 0; j < length; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

/// Visits every codeword in message order. Moving digit j from element t to
/// t+1 adds (t+1 - t) g_j; wrapping from q-1 to 0 adds -(q-1) g_j.
template <typename Visit>
void walk_codewords(const LinearCode& code, std::uint64_t bound, Visit&& visit) {
  const GaloisField& f = code.field();
  const int q = f.q();
  const int k = code.dimension();
  const int n = code.length();
  const std::uint64_t total = code.size();
  if (total > bound)
    throw std::length_error("codewords: q^k = " + std::to_string(total) + " exceeds enumeration bound " +
                            std::to_string(bound));

  // delta[j][t] = (elem(t+1 mod q) - elem(t)) * g_j
  std::vector<std::vector<std::vector<Elem>>> delta(k, std::vector<std::vector<Elem>>(q, std::vector<Elem>(n)));
  for (int j = 0; j < k; ++j)
    for (int t = 0; t < q; ++t) {
      const Elem step = f.sub(static_cast<Elem>((t + 1) % q), static_cast<Elem>(t));
      for (int i = 0; i < n; ++i) delta[j][t][i] = f.mul(step, code.generator()[j][i]);
    }

  std::vector<Elem> word(n, 0);
  std::vector<int> digits(k, 0);
  for (std::uint64_t m = 0; m < total; ++m) {
    visit(std::span<const Elem>(word));
    for (int j = 0; j < k; ++j) {
      const auto& d = delta[j][digits[j]];
      for (int i = 0; i < n; ++i) word[i] = f.add(word[i], d[i]);
      digits[j] = (digits[j] + 1) % q;
      if (digits[j] != 0) break;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Word

Word::Word(FieldPtr field, std::vector<Elem> symbols) : field_(std::move(field)), symbols_(std::move(symbols)) {
  if (!field_) throw std::invalid_argument("word: null field");
  for (Elem s : symbols_) field_->check(s);
}

Word Word::zeros(FieldPtr field, int length) {
  return Word(std::move(field), std::vector<Elem>(static_cast<std::size_t>(length), 0));
}

int Word::weight() const {
  return static_cast<int>(std::count_if(symbols_.begin(), symbols_.end(), [](Elem s) { return s != 0; }));
}

std::uint64_t Word::encoding() const {
  u128 v = 0;
  for (Elem s : symbols_) {
    v = v * static_cast<u128>(field_->q()) + s;
    if (v > kU64Max) throw std::overflow_error("word: encoding exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

namespace {
void check_compatible(const Word& a, const Word& b, const char* what) {
  if (!a.field().same_field(b.field()))
    throw std::invalid_argument(std::string(what) + ": words belong to different fields");
  if (a.length() != b.length())
    throw std::invalid_argument(std::string(what) + ": word lengths differ (" + std::to_string(a.length()) +
                                " vs " + std::to_string(b.length()) + ")");
}
}  // namespace

Word operator+(const Word& a, const Word& b) {
  check_compatible(a, b, "word +");
  std::vector<Elem> s(a.symbols_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.field_->add(a.symbols_[i], b.symbols_[i]);
  return Word(a.field_, std::move(s));
}

Word operator-(const Word& a, const Word& b) {
  check_compatible(a, b, "word -");
  std::vector<Elem> s(a.symbols_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.field_->sub(a.symbols_[i], b.symbols_[i]);
  return Word(a.field_, std::move(s));
}

Word operator*(Elem c, const Word& w) {
  w.field_->check(c);
  std::vector<Elem> s(w.symbols_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = w.field_->mul(c, w.symbols_[i]);
  return Word(w.field_, std::move(s));
}

bool operator==(const Word& a, const Word& b) {
  return a.field().same_field(b.field()) && a.symbols_ == b.symbols_;
}

int hamming_distance(const Word& v, const Word& w) {
  check_compatible(v, w, "hamming_distance");
  int d = 0;
  for (int i = 0; i < v.length(); ++i) d += v[i] != w[i];
  return d;
}

bool leader_less(const Word& a, const Word& b) {
  const int wa = a.weight();
  const int wb = b.weight();
  if (wa != wb) return wa < wb;
  return a.symbols() < b.symbols();  // lexicographic == big-endian encoding order
}

// ---------------------------------------------------------------------------
// LinearCode

struct LinearCode::Cache {
  std::once_flag once;
  int min_distance = -1;
};

LinearCode::LinearCode(FieldPtr field, int length, std::vector<std::vector<Elem>> generator)
    : field_(std::move(field)), length_(length), generator_(std::move(generator)), cache_(std::make_shared<Cache>()) {
  if (!field_) throw std::invalid_argument("linear code: null field");
  if (length_ < 1) throw std::invalid_argument("linear code: length must be >= 1");
  for (const auto& row : generator_) {
    if (static_cast<int>(row.size()) != length_)
      throw std::invalid_argument("linear code: generator row has length " + std::to_string(row.size()) +
                                  ", expected " + std::to_string(length_));
    for (Elem s : row) field_->check(s);
  }
  auto rows = generator_;
  if (rref(*field_, rows, length_).size() != generator_.size())
    throw std::invalid_argument("linear code: generator rows are linearly dependent");
}

std::uint64_t LinearCode::size() const {
  return static_cast<std::uint64_t>(checked_pow(field_->q(), dimension(), "linear code size"));
}

Word LinearCode::codeword(std::uint64_t message) const {
  if (message >= size()) throw std::out_of_range("linear code: message index out of range");
  std::vector<Elem> w(length_, 0);
  for (int j = 0; j < dimension(); ++j) {
    const auto digit = static_cast<Elem>(message % field_->q());
    message /= field_->q();
    if (digit == 0) continue;
    for (int i = 0; i < length_; ++i) w[i] = field_->add(w[i], field_->mul(digit, generator_[j][i]));
  }
  return Word(field_, std::move(w));
}

std::vector<Word> LinearCode::codewords(std::uint64_t bound) const {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(std::min(size(), bound)));
  walk_codewords(*this, bound, [&](std::span<const Elem> w) {
    out.emplace_back(field_, std::vector<Elem>(w.begin(), w.end()));
  });
  return out;
}

void LinearCode::for_each_codeword(const std::function<void(std::span<const Elem>)>& visit,
                                   std::uint64_t bound) const {
  walk_codewords(*this, bound, visit);
}

int LinearCode::min_distance() const {
  if (dimension() == 0) throw std::domain_error("min_distance: the zero code has no pair of distinct codewords");
  std::call_once(cache_->once, [this] {
    int best = length_;
    bool first = true;
    walk_codewords(*this, kStreamingBound, [&](std::span<const Elem> w) {
      if (first) {  // message 0 is the zero word
        first = false;
        return;
      }
      int wt = 0;
      for (Elem s : w) wt += s != 0;
      best = std::min(best, wt);
    });
    cache_->min_distance = best;
  });
  return cache_->min_distance;
}

bool LinearCode::contains(const Word& word) const {
  if (!word.field().same_field(*field_) || word.length() != length_) return false;
  auto rows = generator_;
  rows.push_back(word.symbols());
  return rref(*field_, rows, length_).size() == generator_.size();
}

LinearCode simplex_code(const FieldPtr& field) {
  const int q = field->q();
  std::vector<Elem> g1(q + 1), g2(q + 1, 1);
  g1[0] = 1;
  g1[1] = 0;
  for (int j = 1; j <= q - 1; ++j) g1[j + 1] = field->alpha_pow(j);
  g2[0] = 0;
  return LinearCode(field, q + 1, {std::move(g1), std::move(g2)});
}

LinearCode hamming_code(const FieldPtr& field) { return dual(simplex_code(field)); }

LinearCode dual(const LinearCode& code) {
  const GaloisField& f = code.field();
  const int n = code.length();
  auto rows = code.generator();
  const auto pivots = rref(f, rows, n);

  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;

  // One null-space vector per free column: v_free = 1, v_pivot(i) = -R[i][free].
  std::vector<std::vector<Elem>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return LinearCode(code.field_ptr(), n, std::move(basis));
}

// ---------------------------------------------------------------------------
// Cosets

CosetTable::CosetTable(LinearCode code, std::vector<Word> leaders)
    : code_(std::move(code)), leaders_(std::move(leaders)), codewords_(code_.codewords()) {}

std::vector<Word> CosetTable::row(std::size_t i) const {
  if (i >= leaders_.size()) throw std::out_of_range("coset table: row index out of range");
  std::vector<Word> out;
  out.reserve(codewords_.size());
  for (const auto& c : codewords_) out.push_back(leaders_[i] + c);
  return out;
}

CosetTable cosets(const LinearCode& code, std::uint64_t bound) {
  const GaloisField& f = code.field();
  const int q = f.q();
  const int n = code.length();
  const int r = n - code.dimension();
  const auto num_cosets = static_cast<std::uint64_t>(checked_pow(q, r, "cosets"));
  if (num_cosets > bound)
    throw std::length_error("cosets: q^(N-k) = " + std::to_string(num_cosets) + " exceeds enumeration bound " +
                            std::to_string(bound));
  const auto num_words = static_cast<std::uint64_t>(checked_pow(q, n, "cosets"));

  const LinearCode checks = dual(code);
  const auto& h = checks.generator();  // r x n parity-check matrix

  // Words are visited in lexicographic order (last coordinate fastest), so
  // within a syndrome class the first word of minimal weight is the leader.
  std::vector<int> best_weight(static_cast<std::size_t>(num_cosets), n + 1);
  std::vector<std::uint64_t> best_word(static_cast<std::size_t>(num_cosets), 0);
  std::vector<Elem> word(n, 0);
  std::vector<Elem> syndrome(r, 0);
  int weight = 0;
  for (std::uint64_t m = 0; m < num_words; ++m) {
    std::uint64_t s = 0;
    for (int i = r - 1; i >= 0; --i) s = s * q + syndrome[i];
    if (weight < best_weight[s]) {
      best_weight[s] = weight;
      best_word[s] = m;
    }
    for (int pos = n - 1; pos >= 0; --pos) {
      const Elem old = word[pos];
      const Elem next = static_cast<Elem>((old + 1) % q);
      const Elem step = f.sub(next, old);
      for (int i = 0; i < r; ++i) syndrome[i] = f.add(syndrome[i], f.mul(step, h[i][pos]));
      weight += (next != 0) - (old != 0);
      word[pos] = next;
      if (next != 0) break;
    }
  }

  std::vector<Word> leaders;
  leaders.reserve(static_cast<std::size_t>(num_cosets));
  for (std::uint64_t s = 0; s < num_cosets; ++s) {
    std::vector<Elem> sym(n);
    std::uint64_t v = best_word[s];
    for (int pos = n - 1; pos >= 0; --pos) {
      sym[pos] = static_cast<Elem>(v % q);
      v /= q;
    }
    leaders.emplace_back(code.field_ptr(), std::move(sym));
  }
  std::sort(leaders.begin(), leaders.end(), leader_less);
  return CosetTable(code, std::move(leaders));
}

// ---------------------------------------------------------------------------
// Weights and bounds

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

WeightDistribution weight_distribution(const LinearCode& code, std::uint64_t bound) {
  WeightDistribution wd;
  wd.counts.assign(code.length() + 1, 0);
  walk_codewords(code, bound, [&](std::span<const Elem> w) {
    int wt = 0;
    for (Elem s : w) wt += s != 0;
    ++wd.counts[wt];
  });
  return wd;
}

int min_distance(const LinearCode& code) { return code.min_distance(); }

std::uint64_t hamming_bound(int q, int length, int distance) {
  check_bound_params(q, length, distance, "hamming_bound");
  const u128 total = checked_pow(q, length, "hamming_bound");
  return static_cast<std::uint64_t>(total / ball_volume(q, length, (distance - 1) / 2, "hamming_bound"));
}

std::uint64_t singleton_bound(int q, int length, int distance) {
  check_bound_params(q, length, distance, "singleton_bound");
  return static_cast<std::uint64_t>(checked_pow(q, length - distance + 1, "singleton_bound"));
}

bool is_perfect(const LinearCode& code) {
  using boost::multiprecision::cpp_int;
  const int q = code.field().q();
  const int n = code.length();
  const int t = (code.min_distance() - 1) / 2;
  // |C| * ball = q^N  <=>  ball = q^(N-k).
  cpp_int ball = 0;
  cpp_int binom = 1;  // C(n, i)
  for (int i = 0; i <= t; ++i) {
    if (i > 0) binom = binom * (n - i + 1) / i;
    ball += binom * boost::multiprecision::pow(cpp_int(q - 1), static_cast<unsigned>(i));
  }
  return ball == boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(n - code.dimension()));
}

bool is_mds(const LinearCode& code) {
  // |C| = q^k equals q^(N-d+1) exactly when the exponents agree.
  return code.dimension() == code.length() - code.min_distance() + 1;
}

}  // namespace wigner_codes
