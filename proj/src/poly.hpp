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

// Dense polynomial helpers over Z_m, coefficients low-order first. Internal to
// the field and ring constructions.

#pragma once

#include <vector>

namespace wigner_codes::poly {

inline std::vector<int> digits(long long value, int base, int count) {
  std::vector<int> d(count);
  for (int i = 0; i < count; ++i) {
    d[i] = static_cast<int>(value % base);
    value /= base;
  }
  return d;
}

inline long long undigits(const std::vector<int>& d, int base) {
  long long v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * base + *it;
  return v;
}

/// Reduces a modulo the monic polynomial f (degree n) over Z_m; returns n coefficients.
inline std::vector<int> reduce(std::vector<int> a, const std::vector<int>& f, int m) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= n; --d) {
    int c = ((a[d] % m) + m) % m;
    if (c == 0) continue;
    for (int i = 0; i <= n; ++i) a[d - n + i] = (((a[d - n + i] - c * f[i]) % m) + m) % m;
  }
  a.resize(n, 0);
  for (int& c : a) c = ((c % m) + m) % m;
  return a;
}

inline std::vector<int> mulmod(const std::vector<int>& a, const std::vector<int>& b,
                               const std::vector<int>& f, int m) {
  std::vector<int> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % m;
  return reduce(std::move(prod), f, m);
}

/// True if no monic polynomial of degree 1..n/2 divides f over Z_p.
inline bool is_irreducible(const std::vector<int>& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= n; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long lower = 0; lower < count; ++lower) {
      std::vector<int> g = digits(lower, p, d);
      g.push_back(1);
      auto r = reduce(f, g, p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

/// True if the residue class of x has multiplicative order p^n - 1 mod (f, p).
inline bool is_primitive(const std::vector<int>& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  long long q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  std::vector<int> one(n, 0);
  one[0] = 1;
  auto x = reduce({0, 1}, f, p);
  auto cur = one;
  for (long long k = 1; k < q; ++k) {
    cur = mulmod(cur, x, f, p);
    if (cur == one) return k == q - 1;
  }
  return false;
}

}  // namespace wigner_codes::poly
