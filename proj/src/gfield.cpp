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

#include "wigner_codes/gfield.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "poly.hpp"

namespace wigner_codes {

namespace {

struct ConwayEntry {
  int p;
  int n;
  std::vector<int> coeffs;
};

// Low-order coefficient first. Degree-1 entries are generated from the least
// primitive root instead of being tabulated.
const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table = {
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {5, 2, {2, 4, 1}},
      {7, 2, {3, 6, 1}},
  };
  return table;
}

int least_primitive_root(int p) {
  if (p == 2) return 1;
  for (int g = 2; g < p; ++g) {
    int x = 1;
    int order = 0;
    do {
      x = (x * g) % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) return g;
  }
  throw std::logic_error("no primitive root found");
}

long long ipow(long long base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::string describe(const std::vector<int>& poly) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? "," : "") << poly[i];
  os << ']';
  return os.str();
}

}  // namespace

int FieldSpec::q() const { return static_cast<int>(ipow(p, n)); }

void to_json(nlohmann::json& j, const FieldSpec& spec) {
  j = nlohmann::json{{"p", spec.p}, {"n", spec.n}, {"q", spec.q()}, {"modulus", spec.modulus}};
}

void from_json(const nlohmann::json& j, FieldSpec& spec) {
  spec.p = j.at("p").get<int>();
  spec.n = j.at("n").get<int>();
  spec.modulus = j.at("modulus").get<std::vector<int>>();
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> conway_polynomial(int p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("conway_polynomial: p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("conway_polynomial: n must be >= 1");
  if (n == 1) {
    int g = least_primitive_root(p);
    return {(p - g) % p, 1};
  }
  for (const auto& e : conway_table())
    if (e.p == p && e.n == n) return e.coeffs;
  throw std::invalid_argument("conway_polynomial: no built-in Conway polynomial for q = " +
                              std::to_string(p) + "^" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// GaloisField

std::shared_ptr<const GaloisField> GaloisField::make(int p, int n,
                                                     std::optional<std::vector<int>> modulus,
                                                     int max_order) {
  if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("field: extension degree n must be >= 1");
  long long q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > max_order)
      throw std::invalid_argument("field: q = " + std::to_string(p) + "^" + std::to_string(n) +
                                  " exceeds the supported bound q <= " + std::to_string(max_order));
  }

  FieldSpec spec{p, n, modulus ? *modulus : conway_polynomial(p, n)};
  if (static_cast<int>(spec.modulus.size()) != n + 1)
    throw std::invalid_argument("field: modulus " + describe(spec.modulus) + " must have n+1 = " +
                                std::to_string(n + 1) + " coefficients");
  for (int c : spec.modulus)
    if (c < 0 || c >= p)
      throw std::invalid_argument("field: modulus coefficients must lie in [0, p), got " + describe(spec.modulus));
  if (spec.modulus.back() != 1)
    throw std::invalid_argument("field: modulus " + describe(spec.modulus) + " is not monic");
  if (!poly::is_irreducible(spec.modulus, p))
    throw std::invalid_argument("field: modulus " + describe(spec.modulus) + " is reducible over Z_" + std::to_string(p));
  if (!poly::is_primitive(spec.modulus, p))
    throw std::invalid_argument("field: modulus " + describe(spec.modulus) +
                                " is irreducible but not primitive; the indeterminate must generate GF(q)*");
  return std::shared_ptr<const GaloisField>(new GaloisField(std::move(spec)));
}

std::shared_ptr<const GaloisField> GaloisField::of_order(int q, std::optional<std::vector<int>> modulus,
                                                         int max_order) {
  if (q < 2) throw std::invalid_argument("field: q = " + std::to_string(q) + " is not a prime power");
  int p = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int n = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) throw std::invalid_argument("field: q = " + std::to_string(q) + " is not a prime power");
  return make(p, n, std::move(modulus), max_order);
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
  const int p = spec_.p;
  const int n = spec_.n;
  q_ = spec_.q();
  const auto uq = static_cast<std::size_t>(q_);

  std::vector<std::vector<int>> coeffs(uq);
  for (int i = 0; i < q_; ++i) coeffs[i] = poly::digits(i, p, n);
  auto index_of = [&](const std::vector<int>& c) { return static_cast<Elem>(poly::undigits(c, p)); };

  add_.resize(uq * uq);
  mul_.resize(uq * uq);
  neg_.resize(uq);
  for (int a = 0; a < q_; ++a) {
    std::vector<int> na(n);
    for (int i = 0; i < n; ++i) na[i] = (p - coeffs[a][i]) % p;
    neg_[a] = index_of(na);
    for (int b = 0; b < q_; ++b) {
      std::vector<int> s(n);
      for (int i = 0; i < n; ++i) s[i] = (coeffs[a][i] + coeffs[b][i]) % p;
      add_[a * uq + b] = index_of(s);
      mul_[a * uq + b] = index_of(poly::mulmod(coeffs[a], coeffs[b], spec_.modulus, p));
    }
  }

  // x mod f: for n > 1 this is the coefficient vector (0, 1, 0, ...); for n = 1
  // it is the root -c0 of the linear modulus.
  std::vector<int> x(n, 0);
  if (n > 1)
    x[1] = 1;
  else
    x[0] = (p - spec_.modulus[0]) % p;
  alpha_ = index_of(x);

  exp_.resize(uq - 1);
  log_.assign(uq, -1);
  Elem cur = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    exp_[k] = cur;
    if (log_[cur] != -1) throw std::logic_error("field: indeterminate is not primitive");
    log_[cur] = k;
    cur = mul(cur, alpha_);
  }
  if (cur != 1) throw std::logic_error("field: alpha^(q-1) != 1");

  inv_.assign(uq, 0);
  for (int a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];

  trace_.resize(uq);
  for (int a = 0; a < q_; ++a) {
    Elem s = 0;
    Elem term = static_cast<Elem>(a);
    for (int k = 0; k < n; ++k) {
      s = add(s, term);
      term = pow(term, p);
    }
    if (s >= static_cast<Elem>(p)) throw std::logic_error("field: trace left the prime subfield");
    trace_[a] = static_cast<int>(s);
  }
}

Elem GaloisField::inv(Elem a) const {
  check(a);
  if (a == 0) throw std::domain_error("field: inverse of zero");
  return inv_[a];
}

Elem GaloisField::pow(Elem a, long long e) const {
  check(a);
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw std::domain_error("field: negative power of zero");
    return 0;
  }
  const long long order = q_ - 1;
  long long k = (static_cast<long long>(log_[a]) * (((e % order) + order) % order)) % order;
  return exp_[static_cast<std::size_t>(k)];
}

Elem GaloisField::alpha_pow(long long k) const {
  const long long order = q_ - 1;
  return exp_[static_cast<std::size_t>(((k % order) + order) % order)];
}

int GaloisField::log(Elem a) const {
  check(a);
  if (a == 0) throw std::domain_error("field: logarithm of zero");
  return log_[a];
}

Elem GaloisField::from_int(long long c) const {
  return static_cast<Elem>(((c % spec_.p) + spec_.p) % spec_.p);
}

Elem GaloisField::half() const {
  if (spec_.p == 2) throw std::domain_error("field: 2 is not invertible in characteristic 2");
  return from_int((spec_.p + 1) / 2);
}

std::vector<int> GaloisField::coefficients(Elem a) const {
  check(a);
  return poly::digits(static_cast<long long>(a), spec_.p, spec_.n);
}

Elem GaloisField::from_coefficients(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != spec_.n)
    throw std::invalid_argument("field: expected " + std::to_string(spec_.n) + " coefficients");
  for (int c : coeffs)
    if (c < 0 || c >= spec_.p) throw std::invalid_argument("field: coefficient out of range");
  return static_cast<Elem>(poly::undigits(std::vector<int>(coeffs.begin(), coeffs.end()), spec_.p));
}

void GaloisField::check(Elem a) const {
  if (!contains(a))
    throw std::out_of_range("field: index " + std::to_string(a) + " is not an element of GF(" +
                            std::to_string(q_) + ")");
}

std::string GaloisField::power_name(Elem a) const {
  check(a);
  if (a == 0) return "0";
  if (a == 1) return "1";
  int k = log_[a];
  return k == 1 ? std::string("a") : "a^" + std::to_string(k);
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, Elem index) : field_(std::move(field)), index_(index) {
  if (!field_) throw std::invalid_argument("field element: null field");
  field_->check(index_);
}

namespace {
const FieldPtr& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_field(b.field()))
    throw std::invalid_argument("field element: operands belong to different fields");
  return a.field_ptr();
}
}  // namespace

FieldElement FieldElement::inverse() const { return {field_, field_->inv(index_)}; }
FieldElement FieldElement::pow(long long e) const { return {field_, field_->pow(index_, e)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(index_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->add(a.index_, b.index_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->sub(a.index_, b.index_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->mul(a.index_, b.index_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->div(a.index_, b.index_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field().same_field(b.field()) && a.index_ == b.index_;
}

int trace(const FieldElement& b) { return b.trace(); }

std::complex<double> character_sum(const FieldElement& g) {
  const GaloisField& f = g.field();
  const double step = 2.0 * std::numbers::pi / f.p();
  std::complex<double> s = 0.0;
  for (int beta = 0; beta < f.q(); ++beta) s += std::polar(1.0, step * f.trace(f.mul(beta, g.index())));
  return s;
}

}  // namespace wigner_codes
