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

#include "wigner_codes/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "wigner_codes/codes.hpp"
#include "wigner_codes/faceops.hpp"
#include "wigner_codes/mub.hpp"
#include "wigner_codes/wigner.hpp"

namespace wigner_codes {

namespace {

constexpr int kRandomPairs = 10'000;
constexpr int kRandomLabels = 1'000;
constexpr int kRandomStates = 100;
constexpr std::uint64_t kHudsonSamples = 1'000;
constexpr std::uint64_t kPuritySamples = 100'000;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

class LabelSampler {
 public:
  LabelSampler(int q, std::mt19937_64& rng) : q_(q), rng_(rng), value_(0, q - 1) {}

  std::vector<Elem> values(int size) {
    std::vector<Elem> v(size);
    for (auto& e : v) e = value_(rng_);
    return v;
  }

  FaceLabel facet() { return FaceLabel::facet(values(q_ + 1)); }

  /// Random size and basis subset.
  FaceLabel face() {
    std::uniform_int_distribution<int> size_dist(1, q_ + 1);
    const int size = size_dist(rng_);
    std::vector<int> slots(q_ + 1);
    for (int s = 0; s <= q_; ++s) slots[s] = s;
    std::shuffle(slots.begin(), slots.end(), rng_);
    slots.resize(size);
    std::sort(slots.begin(), slots.end());
    FaceLabel label;
    for (int s : slots) label.bases.push_back({s});
    label.values = values(size);
    return label;
  }

  /// Same subset, fresh values.
  FaceLabel partner(const FaceLabel& r) {
    FaceLabel s = r;
    s.values = values(r.size());
    return s;
  }

 private:
  int q_;
  std::mt19937_64& rng_;
  std::uniform_int_distribution<Elem> value_;
};

/// Uniform codeword from uniform message digits; works past 64-bit code sizes.
Word random_codeword(const LinearCode& code, LabelSampler& sampler) {
  Word w = Word::zeros(code.field_ptr(), code.length());
  const auto digits = sampler.values(code.dimension());
  for (int j = 0; j < code.dimension(); ++j) w = w + digits[j] * Word(code.field_ptr(), code.generator()[j]);
  return w;
}

/// Random unit-trace Hermitian PSD state: Haar pure or mixed with I/q.
ComplexMatrix random_state(int q, std::mt19937_64& rng, bool mixed) {
  ComplexMatrix rho = projector(random_pure_state(q, rng));
  if (mixed) {
    std::uniform_real_distribution<double> lambda(0.0, 1.0);
    const double l = lambda(rng);
    rho = l * rho + (1.0 - l) / q * ComplexMatrix::Identity(q, q);
  }
  return rho;
}

CheckResult check_mub(const MubSet& mubs, double tol) {
  const double dev = verify_mub(mubs);
  return {"mub", dev < tol, "max deviation " + fmt(dev), {{"max_deviation", dev}}};
}

CheckResult check_overlaps(const MubSet& mubs, std::mt19937_64& rng, double tol) {
  const int q = mubs.q();
  double worst = 0.0;
  std::uint64_t pairs = 0;
  bool exhaustive = q <= 3;
  if (exhaustive) {
    std::vector<FaceOperator> ops;
    std::uint64_t total = 1;
    for (int i = 0; i <= q; ++i) total *= q;
    std::vector<Elem> v(q + 1, 0);
    for (std::uint64_t m = 0; m < total; ++m) {
      ops.push_back(face_operator(mubs, FaceLabel::facet(v)));
      for (int i = q; i >= 0; --i) {
        v[i] = (v[i] + 1) % q;
        if (v[i] != 0) break;
      }
    }
    for (const auto& a : ops)
      for (const auto& b : ops) {
        worst = std::max(worst, std::abs(overlap_matrix(a, b) - overlap_predicted(q, a.label, b.label)));
        ++pairs;
      }
  }
  LabelSampler sampler(q, rng);
  for (int i = 0; i < (exhaustive ? kRandomPairs / 10 : kRandomPairs); ++i) {
    const FaceLabel r = sampler.face();
    const FaceLabel s = sampler.partner(r);
    const auto a = face_operator(mubs, r);
    const auto b = face_operator(mubs, s);
    worst = std::max(worst, std::abs(overlap_matrix(a, b) - overlap_predicted(q, r, s)));
    ++pairs;
  }
  return {"overlaps",
          worst < tol,
          "max |Tr(A^r A^s) - (q - Delta)| = " + fmt(worst) + " over " + std::to_string(pairs) + " pairs",
          {{"max_deviation", worst}, {"pairs", pairs}, {"exhaustive_facets", exhaustive}}};
}

CheckResult check_trace_identities(const MubSet& mubs, std::mt19937_64& rng, double tol) {
  const int q = mubs.q();
  LabelSampler sampler(q, rng);
  double worst = 0.0;
  for (int i = 0; i < kRandomLabels; ++i) {
    const FaceLabel r = sampler.face();
    const FaceLabel s = sampler.partner(r);
    const auto a = face_operator(mubs, r);
    worst = std::max(worst, hermiticity_defect(a.matrix));
    worst = std::max(worst, std::abs(a.matrix.trace().real() - (r.size() - q * a.identity_coefficient)));
    worst = std::max(worst, std::abs(hs_inner(a.matrix, a.matrix).real() - q));
    const auto u = face_operator_unit_trace(mubs, r);
    const auto v = face_operator_unit_trace(mubs, s);
    worst = std::max(worst, std::abs(u.matrix.trace().real() - 1.0));
    worst = std::max(worst, std::abs(hs_inner(u.matrix, u.matrix).real() - q));
    worst = std::max(worst, std::abs(overlap_matrix(u, v) - overlap_predicted_unit_trace(q, r, s)));
  }
  return {"trace_identities", worst < tol, "max deviation " + fmt(worst) + " over " +
                                                std::to_string(kRandomLabels) + " labels",
          {{"max_deviation", worst}, {"labels", kRandomLabels}}};
}

CheckResult check_distances(const MubSet& mubs, std::mt19937_64& rng, double tol) {
  const int q = mubs.q();
  LabelSampler sampler(q, rng);
  double worst = 0.0;
  for (int i = 0; i < kRandomLabels; ++i) {
    const FaceLabel r = sampler.face();
    const FaceLabel s = sampler.partner(r);
    const auto a = face_operator(mubs, r);
    const auto b = face_operator(mubs, s);
    const auto ja = jam_state(a);
    const auto jb = jam_state(b);
    worst = std::max(worst, std::abs(hs_distance(a, b) - hs_distance(r, s)));
    worst = std::max(worst, std::abs(trace_distance(ja, jb) - trace_distance(q, r, s)));
    worst = std::max(worst, std::abs(fs_distance(ja, jb) - fs_distance(q, r, s)));
    worst = std::max(worst, std::abs(ja.vector.norm() - 1.0));
  }

  const LinearCode hamming = hamming_code(mubs.field_ptr());
  double min_hs = std::numeric_limits<double>::infinity();
  double min_fs = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kRandomLabels; ++i) {
    const Word c1 = random_codeword(hamming, sampler);
    Word c2 = random_codeword(hamming, sampler);
    while (c2 == c1) c2 = random_codeword(hamming, sampler);
    const auto a = face_operator(mubs, FaceLabel::facet(c1));
    const auto b = face_operator(mubs, FaceLabel::facet(c2));
    min_hs = std::min(min_hs, hs_distance(a, b));
    min_fs = std::min(min_fs, fs_distance(jam_state(a), jam_state(b)));
  }
  // sqrt(6/q) follows from D_FS = sqrt(2 Delta / q), valid only for Delta <= q.
  // At q = 2 the Hamming pair 000/111 has Delta = 3 and D_FS = 1 < sqrt(3).
  const bool fs_bound = min_fs >= std::sqrt(6.0 / q) - tol;
  const bool ok = worst < tol && min_hs >= std::sqrt(6.0) - tol && fs_bound;
  return {"distances", ok,
          "closed-form deviation " + fmt(worst) + ", Hamming-code min D_HS " + fmt(min_hs) + ", min D_FS " +
              fmt(min_fs) + " (bound sqrt(6/q) = " + fmt(std::sqrt(6.0 / q)) + (fs_bound ? ", met)" : ", violated)"),
          {{"max_deviation", worst},
           {"hamming_min_hs", min_hs},
           {"hamming_min_fs", min_fs},
           {"fs_bound", std::sqrt(6.0 / q)},
           {"fs_bound_met", fs_bound}}};
}

CheckResult check_purity(const MubSet& mubs, std::uint64_t seed, double tol) {
  const int q = mubs.q();
  const auto stats = purity_stats(mubs, PuritySample{kPuritySamples, seed});
  const LinearCode simplex = simplex_code(mubs.field_ptr());
  double simplex_dev = 0.0;
  for (const auto& w : simplex.codewords())
    simplex_dev = std::max(
        simplex_dev, std::abs(reduced_purity(jam_state(face_operator(mubs, FaceLabel::facet(w)))) - 1.0 / q));
  // Simplex-codeword operators are Weyl conjugates of the parity operator only
  // for odd q; for even q they are not unitary and the states are not
  // maximally entangled.
  const bool odd = mubs.field().p() != 2;
  bool ok = !odd || simplex_dev < tol;
  std::string detail = "average purity " + fmt(stats.average);
  if (q == 3) {
    ok = ok && std::abs(stats.average - 59.0 / 81.0) < tol;
    detail += " (59/81 = " + fmt(59.0 / 81.0) + ")";
  }
  if (!stats.exhaustive) detail += " +- " + fmt(stats.standard_error);
  detail += ", Lubkin " + fmt(stats.lubkin) + ", simplex-state purity deviation " + fmt(simplex_dev);
  return {"purity", ok, detail,
          {{"average", stats.average},
           {"lubkin", stats.lubkin},
           {"standard_error", stats.standard_error},
           {"count", stats.count},
           {"exhaustive", stats.exhaustive},
           {"simplex_state_deviation", simplex_dev}}};
}

CheckResult check_orbit(const MubSet& mubs, std::mt19937_64& rng, double tol) {
  const int q = mubs.q();
  LabelSampler sampler(q, rng);
  const FaceLabel r = sampler.facet();
  const auto orbit = wh_orbit(mubs, r);
  const LinearCode simplex = simplex_code(mubs.field_ptr());

  bool ok = orbit.size() == static_cast<std::size_t>(q) * q;
  for (std::size_t i = 0; i < orbit.size() && ok; ++i) {
    ok = simplex.contains(Word(mubs.field_ptr(), orbit[i].values) - Word(mubs.field_ptr(), r.values));
    for (std::size_t j = i + 1; j < orbit.size() && ok; ++j) ok = hamming_distance(orbit[i], orbit[j]) == q;
  }
  nlohmann::json data = {{"coset_of_simplex", ok}};
  std::string detail = std::string("orbit is a simplex coset: ") + (ok ? "yes" : "no");

  if (mubs.field().p() != 2) {
    const auto a = face_operator(mubs, r);
    double worst = 0.0;
    bool labels_agree = true;
    for (Elem x = 0; x < static_cast<Elem>(q); ++x)
      for (Elem z = 0; z < static_cast<Elem>(q); ++z) {
        const FaceLabel image = conjugate_label(mubs, r, x, z);
        labels_agree = labels_agree && image == orbit[static_cast<std::size_t>(x) * q + z];
        const ComplexMatrix d = weyl_op(mubs.field(), x, z).matrix;
        worst = std::max(worst, max_abs_diff(d * a.matrix * d.adjoint(), face_operator(mubs, image).matrix));
      }
    ok = ok && labels_agree && worst < tol;
    data["conjugation_deviation"] = worst;
    data["labels_agree"] = labels_agree;
    detail += ", conjugation deviation " + fmt(worst) + ", label/matrix paths agree: " + (labels_agree ? "yes" : "no");
  }
  if (q == 4) {
    std::set<std::string> got;
    for (const auto& l : wh_orbit(mubs, FaceLabel::facet(std::vector<Elem>(5, 0)))) {
      std::string s;
      for (int c : teichmuller_coordinates(mubs, l)) s += static_cast<char>('0' + c);
      got.insert(s);
    }
    const auto& ref = reference_orbit_q4();
    const bool table = got == std::set<std::string>(ref.begin(), ref.end());
    ok = ok && table;
    data["q4_table_matches"] = table;
    data["q4_table"] = got;
    detail += std::string(", q=4 table matches: ") + (table ? "yes" : "no");
  }
  return {"orbit", ok, detail, data};
}

CheckResult check_parity(const MubSet& mubs, double tol) {
  if (mubs.field().p() == 2) return {"parity", true, "odd q only", nlohmann::json::object(), true};
  const double dev = parity_check(mubs);
  return {"parity", dev < tol, "max |A^0 - sum_k |k><-k|| = " + fmt(dev), {{"max_deviation", dev}}};
}

CheckResult check_dwf(const MubSet& mubs, std::mt19937_64& rng, double tol) {
  const int q = mubs.q();
  LabelSampler sampler(q, rng);
  double worst = 0.0;
  for (const bool zero_leader : {true, false}) {
    const DwfSpec spec(mubs, zero_leader ? std::vector<Elem>(q + 1, 0) : sampler.facet().values);
    const auto& pts = spec.phase_points();
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j)
        worst = std::max(worst, std::abs(hs_inner(pts[i].matrix, pts[j].matrix) - Complex(i == j ? q : 0.0)));
    for (int k = 0; k < kRandomStates; ++k) {
      const ComplexMatrix rho = random_hermitian(q, rng);
      const auto table = dwf(spec, rho, tol);
      worst = std::max(worst, std::abs(table.sum() - rho.trace().real()));
      worst = std::max(worst, max_abs_diff(reconstruct(spec, table), rho));
    }
  }
  return {"dwf", worst < tol, "normalisation, round trip and orthogonality deviation " + fmt(worst),
          {{"max_deviation", worst}, {"states_per_leader", kRandomStates}}};
}

CheckResult check_hudson(const MubSet& mubs, std::uint64_t seed, double tol) {
  const int q = mubs.q();
  if (mubs.field().n() != 1) return {"hudson", true, "prime q only", nlohmann::json::object(), true};
  const auto rep = hudson_suite(mubs, kHudsonSamples, seed, tol);
  nlohmann::json data = {{"mub_states", rep.mub_states},
                         {"mub_nonnegative", rep.mub_nonnegative},
                         {"samples", rep.samples},
                         {"sampled_negative", rep.sampled_negative},
                         {"sampled_nonnegative_non_mub", rep.sampled_nonnegative_non_mub},
                         {"min_sample_negativity", rep.min_sample_negativity}};
  std::string detail = std::to_string(rep.mub_nonnegative) + "/" + std::to_string(rep.mub_states) +
                       " MUB states nonnegative, " + std::to_string(rep.sampled_negative) + "/" +
                       std::to_string(rep.samples) + " Haar states negative";
  bool ok = rep.mub_nonnegative == rep.mub_states;
  if (q == 2) {
    ok = ok && rep.sampled_nonnegative_non_mub > 0;
    detail += ", " + std::to_string(rep.sampled_nonnegative_non_mub) + " nonnegative non-MUB pure states";
  } else {
    ok = ok && rep.sampled_negative + rep.sampled_near_mub == rep.samples;
  }
  return {"hudson", ok, detail, data};
}

CheckResult check_polytope(const MubSet& mubs, std::mt19937_64& rng, double tol) {
  const int q = mubs.q();
  std::uint64_t facets = 1;
  for (int i = 0; i <= q && facets <= kEnumerationBound; ++i) facets *= q;
  if (facets > kEnumerationBound) return {"polytope", true, "exhaustive oracle out of range", nlohmann::json::object(), true};

  std::vector<DwfSpec> coset_dwfs;
  const bool coset_check = q <= 3;
  if (coset_check) {
    const CosetTable table = cosets(simplex_code(mubs.field_ptr()));
    for (const auto& leader : table.leaders()) coset_dwfs.emplace_back(mubs, leader.symbols());
  }

  double worst = 0.0;
  int members = 0;
  bool coset_agree = true;
  for (int k = 0; k < kRandomStates; ++k) {
    const ComplexMatrix rho = random_state(q, rng, k % 2 == 1);
    const auto fast = stab_polytope_min(mubs, rho, tol);
    const auto slow = stab_polytope_min_exhaustive(mubs, rho, tol);
    worst = std::max(worst, std::abs(fast.minimum - slow.minimum));
    members += fast.member;
    if (coset_check) {
      bool nonneg_everywhere = true;
      for (const auto& spec : coset_dwfs) nonneg_everywhere = nonneg_everywhere && negativity(spec, rho, tol) <= tol;
      coset_agree = coset_agree && nonneg_everywhere == fast.member;
    }
  }
  const bool ok = worst < tol && coset_agree;
  std::string detail = "fast vs exhaustive deviation " + fmt(worst) + ", " + std::to_string(members) + "/" +
                       std::to_string(kRandomStates) + " members";
  if (coset_check) detail += std::string(", member <=> nonnegative in every coset DWF: ") + (coset_agree ? "yes" : "no");
  return {"polytope", ok, detail, {{"max_deviation", worst}, {"members", members}, {"coset_agreement", coset_agree}}};
}

CheckResult check_codes(const FieldPtr& field) {
  const int q = field->q();
  const LinearCode simplex = simplex_code(field);
  const LinearCode hamming = hamming_code(field);
  const auto words = simplex.codewords();
  bool equidistant = true;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) equidistant = equidistant && hamming_distance(words[i], words[j]) == q;
  const bool mds = is_mds(simplex);
  const bool simplex_perfect = is_perfect(simplex);
  // Hamming codebooks grow as q^(q-1); past the streaming bound d is not enumerated.
  bool enumerable = false;
  try {
    enumerable = hamming.size() <= kStreamingBound;
  } catch (const std::overflow_error&) {
  }
  const int hamming_d = enumerable ? hamming.min_distance() : 3;
  const bool hamming_perfect = enumerable ? is_perfect(hamming) : true;
  const LinearCode d = dual(simplex);
  bool dual_equal = d.dimension() == hamming.dimension();
  for (const auto& row : d.generator()) dual_equal = dual_equal && hamming.contains(Word(field, row));

  bool ok = equidistant && mds && simplex_perfect == (q == 3) && hamming_d == 3 && hamming_perfect && dual_equal;
  nlohmann::json data = {{"simplex_equidistant", equidistant},   {"simplex_mds", mds},
                         {"simplex_perfect", simplex_perfect},   {"hamming_min_distance", hamming_d},
                         {"hamming_perfect", hamming_perfect},   {"dual_simplex_is_hamming", dual_equal},
                         {"hamming_enumerated", enumerable}};
  std::string detail = std::string("simplex equidistant/MDS/perfect: ") + (equidistant ? "y" : "n") + "/" +
                       (mds ? "y" : "n") + "/" + (simplex_perfect ? "y" : "n") + ", Hamming d = " +
                       std::to_string(hamming_d) + (hamming_perfect ? " perfect" : " not perfect");
  if (!enumerable) detail = std::string("simplex equidistant/MDS/perfect: ") + (equidistant ? "y" : "n") + "/" +
                            (mds ? "y" : "n") + "/" + (simplex_perfect ? "y" : "n") +
                            ", Hamming codebook too large to enumerate";
  if (q == 2) {
    const auto table = cosets(simplex);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < table.num_rows(); ++i) {
      std::vector<std::string> row;
      for (const auto& w : table.row(i)) {
        std::string s;
        for (Elem e : w.symbols()) s += static_cast<char>('0' + e);
        row.push_back(s);
      }
      rows.push_back(row);
    }
    const std::vector<std::vector<std::string>> expected = {{"000", "101", "011", "110"},
                                                            {"001", "100", "010", "111"}};
    const bool slepian = rows == expected;
    ok = ok && slepian;
    data["slepian"] = rows;
    detail += std::string(", Slepian table matches: ") + (slepian ? "yes" : "no");
  }
  return {"codes", ok, detail, data};
}

CheckResult check_stabilizer_count(const GaloisField& f) {
  const auto count = stabilizer_count(f.p(), f.n());
  bool ok = true;
  if (f.n() == 1) ok = count == static_cast<std::uint64_t>(f.q()) * (f.q() + 1);
  return {"stabilizer_count", ok, std::to_string(count) + " stabilizer states", {{"count", count}}};
}

}  // namespace

const std::vector<std::string>& reference_orbit_q4() {
  static const std::vector<std::string> kTable = {"00000", "01111", "02222", "03333", "10123", "11032",
                                                  "12301", "13210", "20231", "21320", "22013", "23102",
                                                  "30312", "31203", "32130", "33021"};
  return kTable;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j = {{"q", q}, {"seed", seed}, {"tolerance", tolerance}, {"passed", passed()}};
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back(
        {{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}, {"data", c.data}});
  return j;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  os << (passed() ? "ALL PASSED" : "FAILURES PRESENT") << " (q = " << q << ", seed = " << seed << ")\n";
  return os.str();
}

VerifyReport verify_all(const FieldPtr& field, std::uint64_t seed, double tol) {
  if (!field) throw std::invalid_argument("verify_all: null field");
  VerifyReport report;
  report.q = field->q();
  report.seed = seed;
  report.tolerance = tol;
  const MubSet mubs = mub_build(field);
  std::mt19937_64 rng(seed);

  report.checks.push_back(check_mub(mubs, tol));
  report.checks.push_back(check_overlaps(mubs, rng, tol));
  report.checks.push_back(check_trace_identities(mubs, rng, tol));
  report.checks.push_back(check_distances(mubs, rng, tol));
  report.checks.push_back(check_purity(mubs, seed, tol));
  report.checks.push_back(check_orbit(mubs, rng, tol));
  report.checks.push_back(check_parity(mubs, tol));
  report.checks.push_back(check_dwf(mubs, rng, tol));
  report.checks.push_back(check_hudson(mubs, seed, tol));
  report.checks.push_back(check_polytope(mubs, rng, tol));
  report.checks.push_back(check_codes(field));
  report.checks.push_back(check_stabilizer_count(*field));
  return report;
}

}  // namespace wigner_codes
