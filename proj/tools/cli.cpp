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

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "wigner_codes/codes.hpp"
#include "wigner_codes/faceops.hpp"
#include "wigner_codes/gfield.hpp"
#include "wigner_codes/mub.hpp"
#include "wigner_codes/verify.hpp"
#include "wigner_codes/wigner.hpp"

namespace wigner_codes::cli {

namespace {

using nlohmann::json;

/// Codebooks and coset rows are printed in full only up to this many words.
constexpr std::uint64_t kListingLimit = 10'000;

/// Thrown for bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldArgs {
  int q = 0;
  std::vector<int> modulus;

  void add_to(CLI::App* app) {
    app->add_option("--q", q, "Field order (prime power <= 64)")->required();
    app->add_option("--modulus", modulus, "Primitive modulus coefficients c0,c1,...,cn (default: Conway)")
        ->delimiter(',');
  }

  FieldPtr field() const {
    std::optional<std::vector<int>> m;
    if (!modulus.empty()) m = modulus;
    return GaloisField::of_order(q, m);
  }
};

double tolerance_from_env() {
  const char* raw = std::getenv("WIGNER_CODES_TOL");
  if (!raw || !*raw) return kDefaultTolerance;
  char* end = nullptr;
  const double tol = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(tol) || tol <= 0.0)
    throw UsageError(std::string("WIGNER_CODES_TOL must be a positive number, got '") + raw + "'");
  return tol;
}

std::vector<Elem> to_elems(const std::vector<long long>& raw, const GaloisField& f, const char* what) {
  std::vector<Elem> out;
  out.reserve(raw.size());
  for (long long v : raw) {
    if (v < 0 || v >= f.q())
      throw UsageError(std::string(what) + ": value " + std::to_string(v) + " is not a field index in [0, " +
                       std::to_string(f.q()) + ")");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

FaceLabel make_label(const MubSet& mubs, const std::vector<long long>& values, const std::vector<int>& slots,
                     const char* what) {
  FaceLabel label;
  label.values = to_elems(values, mubs.field(), what);
  if (slots.empty()) {
    for (std::size_t s = 0; s < label.values.size(); ++s) label.bases.push_back({static_cast<int>(s)});
  } else {
    for (int s : slots) label.bases.push_back({s});
  }
  validate_label(mubs, label);
  return label;
}

json label_json(const MubSet& mubs, const FaceLabel& label) {
  json bases = json::array();
  for (auto b : label.bases) bases.push_back(mubs.basis_name(b));
  return {{"bases", bases}, {"values", label.values}};
}

json word_json(const Word& w) { return w.symbols(); }

json code_json(const LinearCode& code, const std::string& name) {
  json j = {{"name", name},
            {"q", code.field().q()},
            {"N", code.length()},
            {"k", code.dimension()},
            {"generator", code.generator()}};
  try {
    j["d"] = code.min_distance();
  } catch (const std::length_error&) {
    j["d"] = nullptr;  // codebook too large to stream
  }
  if (code.size() <= kListingLimit) {
    json words = json::array();
    for (const auto& w : code.codewords()) words.push_back(word_json(w));
    j["codewords"] = words;
  } else {
    j["codewords_omitted"] = true;
  }
  return j;
}

LinearCode pick_code(const FieldPtr& field, const std::string& which) {
  if (which == "simplex") return simplex_code(field);
  if (which == "hamming") return hamming_code(field);
  throw UsageError("--which must be 'simplex' or 'hamming', got '" + which + "'");
}

json field_info(const GaloisField& f) {
  json powers = json::array();
  for (int k = 0; k < f.q() - 1; ++k) {
    const Elem e = f.alpha_pow(k);
    powers.push_back({{"power", k}, {"index", e}, {"coefficients", f.coefficients(e)}});
  }
  json elements = json::array();
  for (Elem e = 0; e < static_cast<Elem>(f.q()); ++e)
    elements.push_back({{"index", e}, {"name", f.power_name(e)}, {"coefficients", f.coefficients(e)}, {"trace", f.trace(e)}});
  return {{"spec", f.spec()}, {"q", f.q()}, {"alpha", f.alpha()}, {"alpha_powers", powers}, {"elements", elements}};
}

json mub_json(const MubSet& mubs) {
  json bases = json::array();
  for (int s = 0; s <= mubs.q(); ++s) {
    json vectors = json::array();
    for (Elem v = 0; v < static_cast<Elem>(mubs.q()); ++v) vectors.push_back(vector_to_json(mubs.vector({s}, v)));
    bases.push_back({{"slot", s}, {"basis", mubs.basis_name({s})}, {"vectors", vectors}});
  }
  return {{"q", mubs.q()}, {"spec", mubs.field().spec()}, {"bases", bases}};
}

std::string mub_text(const MubSet& mubs) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6);
  os << "MUBs in dimension " << mubs.q() << " (columns: V; rows: |k>)\n";
  for (int s = 0; s <= mubs.q(); ++s) {
    os << "basis " << mubs.basis_name({s}) << '\n';
    for (Elem k = 0; k < static_cast<Elem>(mubs.q()); ++k) {
      os << "  ";
      for (Elem v = 0; v < static_cast<Elem>(mubs.q()); ++v) {
        const Complex c = mubs.vector({s}, v)(k);
        os << std::showpos << c.real() << c.imag() << 'i' << std::noshowpos << (v + 1 < static_cast<Elem>(mubs.q()) ? "  " : "");
      }
      os << '\n';
    }
  }
  return os.str();
}

ComplexMatrix read_state(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open state file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t pos = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw UsageError("state file '" + path + "': malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + " (" + e.what() + ")");
  }
  return state_from_json(j);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical codes, mutually unbiased bases and discrete Wigner functions over GF(q)", "wigner-codes"};
  app.require_subcommand(1);
  std::optional<double> tol_flag;
  app.add_option("--tol", tol_flag, "Comparison tolerance (overrides WIGNER_CODES_TOL)");

  // field info
  auto* field_cmd = app.add_subcommand("field", "Finite field tables")->require_subcommand(1);
  auto* field_info_cmd = field_cmd->add_subcommand("info", "Field spec, alpha powers and trace table");
  FieldArgs field_args;
  field_args.add_to(field_info_cmd);

  // code
  auto* code_cmd = app.add_subcommand("code", "Simplex and Hamming codes")->require_subcommand(1);
  FieldArgs code_args[4];
  std::string which_cosets = "simplex";
  std::string which_weights = "simplex";
  auto* simplex_cmd = code_cmd->add_subcommand("simplex", "[q+1, 2, q] simplex code");
  auto* hamming_cmd = code_cmd->add_subcommand("hamming", "[q+1, q-1, 3] Hamming code");
  auto* cosets_cmd = code_cmd->add_subcommand("cosets", "Standard array of a code");
  auto* weights_cmd = code_cmd->add_subcommand("weights", "Weight distribution");
  code_args[0].add_to(simplex_cmd);
  code_args[1].add_to(hamming_cmd);
  code_args[2].add_to(cosets_cmd);
  code_args[3].add_to(weights_cmd);
  cosets_cmd->add_option("--which", which_cosets, "simplex|hamming");
  weights_cmd->add_option("--which", which_weights, "simplex|hamming");

  // mub
  auto* mub_cmd = app.add_subcommand("mub", "Mutually unbiased bases")->require_subcommand(1);
  auto* mub_table_cmd = mub_cmd->add_subcommand("table", "Print every basis vector");
  auto* mub_verify_cmd = mub_cmd->add_subcommand("verify", "Check the overlap conditions");
  FieldArgs mub_args[2];
  std::string mub_format = "json";
  mub_args[0].add_to(mub_table_cmd);
  mub_args[1].add_to(mub_verify_cmd);
  mub_table_cmd->add_option("--format", mub_format, "json|text")->check(CLI::IsMember({"json", "text"}));

  // facet
  auto* facet_cmd = app.add_subcommand("facet", "Face/facet operator for a label");
  FieldArgs facet_args;
  std::vector<long long> facet_label;
  std::vector<int> facet_bases;
  bool facet_unit = false;
  facet_args.add_to(facet_cmd);
  facet_cmd->add_option("--label", facet_label, "Values v_inf,v_0,v_a,... as field indices")->required()->delimiter(',');
  facet_cmd->add_option("--bases", facet_bases, "Basis slots for a face label (default: all q+1)")->delimiter(',');
  facet_cmd->add_flag("--unit-trace", facet_unit, "Use the unit-trace normalisation");

  // distance
  auto* dist_cmd = app.add_subcommand("distance", "Distances between two labels");
  FieldArgs dist_args;
  std::vector<long long> dist_r;
  std::vector<long long> dist_s;
  std::vector<int> dist_bases;
  dist_args.add_to(dist_cmd);
  dist_cmd->add_option("--r", dist_r, "First label")->required()->delimiter(',');
  dist_cmd->add_option("--s", dist_s, "Second label")->required()->delimiter(',');
  dist_cmd->add_option("--bases", dist_bases, "Basis slots shared by both labels (default: all q+1)")->delimiter(',');

  // wigner
  auto* wigner_cmd = app.add_subcommand("wigner", "Discrete Wigner function of a state");
  FieldArgs wigner_args;
  std::string state_path;
  std::vector<long long> leader;
  bool want_negativity = false;
  bool want_polytope = false;
  wigner_args.add_to(wigner_cmd);
  wigner_cmd->add_option("--state", state_path, "State JSON file")->required();
  wigner_cmd->add_option("--w", leader, "Coset leader (default all zeros)")->delimiter(',');
  wigner_cmd->add_flag("--negativity", want_negativity, "Report the negativity");
  wigner_cmd->add_flag("--polytope", want_polytope, "Report stabilizer-polytope membership");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Invariant suite")->require_subcommand(1);
  auto* verify_all_cmd = verify_cmd->add_subcommand("all", "Run every check for one q");
  FieldArgs verify_args;
  std::uint64_t seed = 0;
  std::string verify_format = "text";
  verify_args.add_to(verify_all_cmd);
  verify_all_cmd->add_option("--seed", seed, "RNG seed");
  verify_all_cmd->add_option("--format", verify_format, "text|json")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "wigner-codes: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    double tol = tolerance_from_env();
    if (tol_flag) {
      if (!std::isfinite(*tol_flag) || *tol_flag <= 0.0) throw UsageError("--tol must be a positive number");
      tol = *tol_flag;
    }

    if (*field_info_cmd) {
      emit(out, field_info(*field_args.field()));
      return kExitOk;
    }
    if (*simplex_cmd) {
      emit(out, code_json(simplex_code(code_args[0].field()), "simplex"));
      return kExitOk;
    }
    if (*hamming_cmd) {
      emit(out, code_json(hamming_code(code_args[1].field()), "hamming"));
      return kExitOk;
    }
    if (*cosets_cmd) {
      const LinearCode code = pick_code(code_args[2].field(), which_cosets);
      const CosetTable table = cosets(code);
      json leaders = json::array();
      for (const auto& w : table.leaders()) leaders.push_back(word_json(w));
      json j = {{"name", which_cosets}, {"q", code.field().q()}, {"N", code.length()}, {"k", code.dimension()},
                {"num_cosets", table.num_rows()}, {"leaders", leaders}};
      if (table.num_rows() * code.size() <= kListingLimit) {
        json rows = json::array();
        for (std::size_t i = 0; i < table.num_rows(); ++i) {
          json row = json::array();
          for (const auto& w : table.row(i)) row.push_back(word_json(w));
          rows.push_back(row);
        }
        j["rows"] = rows;
      } else {
        j["rows_omitted"] = true;
      }
      emit(out, j);
      return kExitOk;
    }
    if (*weights_cmd) {
      const LinearCode code = pick_code(code_args[3].field(), which_weights);
      const auto wd = weight_distribution(code);
      emit(out, {{"name", which_weights}, {"q", code.field().q()}, {"N", code.length()}, {"k", code.dimension()},
                 {"weights", wd.counts}, {"total", wd.total()}});
      return kExitOk;
    }
    if (*mub_table_cmd) {
      const MubSet mubs = mub_build(mub_args[0].field());
      if (mub_format == "text")
        out << mub_text(mubs);
      else
        emit(out, mub_json(mubs));
      return kExitOk;
    }
    if (*mub_verify_cmd) {
      const MubSet mubs = mub_build(mub_args[1].field());
      const double dev = verify_mub(mubs);
      const bool ok = dev < tol;
      emit(out, {{"q", mubs.q()}, {"max_deviation", dev}, {"tolerance", tol}, {"passed", ok}});
      return ok ? kExitOk : kExitCheckFailed;
    }
    if (*facet_cmd) {
      const MubSet mubs = mub_build(facet_args.field());
      const FaceLabel label = make_label(mubs, facet_label, facet_bases, "--label");
      const FaceOperator op = facet_unit ? face_operator_unit_trace(mubs, label) : face_operator(mubs, label);
      emit(out, {{"q", mubs.q()},
                 {"label", label_json(mubs, label)},
                 {"J", op.projector_weight},
                 {"K", op.identity_coefficient},
                 {"trace", op.matrix.trace().real()},
                 {"trace_of_square", hs_inner(op.matrix, op.matrix).real()},
                 {"operator", matrix_to_json(op.matrix)}});
      return kExitOk;
    }
    if (*dist_cmd) {
      const MubSet mubs = mub_build(dist_args.field());
      const FaceLabel r = make_label(mubs, dist_r, dist_bases, "--r");
      const FaceLabel s = make_label(mubs, dist_s, dist_bases, "--s");
      if (r.size() != s.size()) throw UsageError("--r and --s must have the same length");
      const int q = mubs.q();
      emit(out, {{"q", q},
                 {"delta", hamming_distance(r, s)},
                 {"hs", hs_distance(r, s)},
                 {"trace", trace_distance(q, r, s)},
                 {"fs", fs_distance(q, r, s)}});
      return kExitOk;
    }
    if (*wigner_cmd) {
      const MubSet mubs = mub_build(wigner_args.field());
      const ComplexMatrix rho = read_state(state_path);
      std::optional<std::vector<Elem>> w;
      if (!leader.empty()) w = to_elems(leader, mubs.field(), "--w");
      const DwfSpec spec(mubs, w);
      const WignerTable table = dwf(spec, rho, tol);
      const int q = mubs.q();
      json rows = json::array();
      for (Elem x = 0; x < static_cast<Elem>(q); ++x) {
        json row = json::array();
        for (Elem z = 0; z < static_cast<Elem>(q); ++z) row.push_back(table.at(x, z));
        rows.push_back(row);
      }
      json j = {{"q", q}, {"leader", spec.leader().values}, {"table", rows}, {"sum", table.sum()}, {"trace", table.trace}};
      if (table.trace_warning(tol)) {
        j["warning"] = "input trace differs from 1";
        err << "wigner-codes: warning: state trace is " << table.trace << ", not 1\n";
      }
      if (want_negativity) j["negativity"] = negativity(table);
      if (want_polytope) {
        const auto rep = stab_polytope_min(mubs, rho, tol);
        j["polytope"] = {{"min", rep.minimum}, {"member", rep.member}, {"argmin", rep.argmin.values}};
      }
      emit(out, j);
      return kExitOk;
    }
    if (*verify_all_cmd) {
      const VerifyReport rep = verify_all(verify_args.field(), seed, tol);
      if (verify_format == "json")
        emit(out, rep.to_json());
      else
        out << rep.to_text();
      return rep.passed() ? kExitOk : kExitCheckFailed;
    }
    err << "wigner-codes: no command selected\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "wigner-codes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "wigner-codes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "wigner-codes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "wigner-codes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "wigner-codes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "wigner-codes: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace wigner_codes::cli
