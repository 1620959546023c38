// Copyright 2026 The slocc authors
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

#include "cli_core.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numbers>
#include <optional>
#include <utility>

#include <CLI11.hpp>

#include "slocc/cartan.hpp"
#include "slocc/choi.hpp"
#include "slocc/classify.hpp"
#include "slocc/gates.hpp"
#include "slocc/json_io.hpp"
#include "slocc/linalg.hpp"
#include "slocc/schmidt.hpp"

namespace slocc::cli {

namespace {

constexpr double kPi4 = std::numbers::pi / 4.0;

// All numbers in the text rendering carry 12 significant digits.
std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string num(Complex z) {
  if (z.imag() == 0.0) return num(z.real());
  return num(z.real()) + (z.imag() < 0 ? " - " : " + ") +
         num(std::abs(z.imag())) + "i";
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// FNV-1a over the canonical serializations of the parsed inputs, so the
// digest is stable against whitespace and file location.
class Digest {
 public:
  void feed(const std::string& bytes) {
    for (unsigned char c : bytes) {
      h_ ^= c;
      h_ *= 1099511628211ull;
    }
  }
  std::string hex() const {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  std::uint64_t h_ = 1469598103934665603ull;
};

GateDescriptor load_gate(const std::string& spec, Digest& digest) {
  if (auto g = gates::named_gate(spec)) {
    digest.feed(gate_to_json(*g).dump());
    return std::move(*g);
  }
  if (std::filesystem::exists(spec)) {
    nlohmann::json j = load_json_file(spec);
    digest.feed(j.dump());
    return gate_from_json(j);
  }
  throw InvalidInput("unknown gate \"" + spec +
                     "\": neither a built-in name nor an existing file");
}

PureState load_state(const std::string& spec, Digest& digest) {
  if (auto s = gates::named_state(spec)) {
    digest.feed(state_to_json(*s).dump());
    return std::move(*s);
  }
  if (std::filesystem::exists(spec)) {
    nlohmann::json j = load_json_file(spec);
    digest.feed(j.dump());
    return state_from_json(j);
  }
  throw InvalidInput("unknown state \"" + spec +
                     "\": neither a built-in name nor an existing file");
}

std::string describe_structure(const PartyStructure& s) {
  std::vector<std::string> parts;
  for (std::size_t p = 0; p < s.num_parties(); ++p) {
    std::string d;
    for (std::size_t slot : s.slots_of_party(p)) {
      if (!d.empty()) d += "x";
      d += std::to_string(s.slot_dims()[slot]);
    }
    parts.push_back(s.parties()[p] + ":" + d);
  }
  return join(parts, ", ");
}

nlohmann::json verdict_json(const SloccVerdict& v) {
  nlohmann::json j;
  j["decision"] = v.decision ? nlohmann::json(*v.decision)
                             : nlohmann::json(nullptr);
  j["method"] = to_string(v.method);
  j["witness"] = v.witness;
  return j;
}

std::string verdict_text(const SloccVerdict& v) {
  std::string d = v.decision ? (*v.decision ? "yes" : "no") : "undecided";
  return d + "  [method: " + std::string(to_string(v.method)) +
         ", witness: " + v.witness.dump() + "]";
}

nlohmann::json class_json(const ThreeQubitClass& c) {
  return {{"label", to_string(c.label)},
          {"local_ranks", c.local_ranks},
          {"tangle", c.tangle}};
}

std::string class_text(const ThreeQubitClass& c) {
  return std::string(to_string(c.label)) + " (local ranks " +
         std::to_string(c.local_ranks[0]) + std::to_string(c.local_ranks[1]) +
         std::to_string(c.local_ranks[2]) + ", tangle " + num(c.tangle) + ")";
}

struct CommandOutput {
  nlohmann::json results;
  bool pass = true;
  std::vector<std::string> lines;
};

// --- classify ----------------------------------------------------------------

CommandOutput cmd_classify(const GateDescriptor& g, const std::string& spec,
                           double tol) {
  CommandOutput out;
  ChoiState dual = choi_state(g);
  PureState nstate = dual.normalized_state();
  auto rows = first_party_slots(nstate.structure);
  SchmidtData sd = schmidt_decompose(nstate, rows, tol);

  out.results["parties"] = g.structure.parties();
  out.results["local_dims"] = g.structure.slot_dims();
  out.results["unitary"] = g.unitary;
  out.results["dual_norm"] = dual.norm;
  out.results["dual_schmidt_rank"] = sd.rank;
  out.results["dual_schmidt_coefficients"] = sd.coefficients;

  out.lines.push_back("gate: " + spec + "  (" +
                      describe_structure(g.structure) +
                      (g.unitary ? ", unitary)" : ", general operator)"));
  out.lines.push_back("dual-state norm: " + num(dual.norm));
  std::vector<std::string> coeffs;
  for (double c : sd.coefficients) coeffs.push_back(num(c));
  out.lines.push_back("dual-state Schmidt rank (" +
                      g.structure.parties()[0] + " | rest): " +
                      std::to_string(sd.rank) + "   coefficients: " +
                      join(coeffs, ", "));

  if (g.structure.num_parties() == 2) {
    std::size_t op_rank = operator_schmidt_rank(g, tol);
    out.results["operator_schmidt_rank"] = op_rank;
    out.lines.push_back("operator Schmidt rank (realignment route): " +
                        std::to_string(op_rank));
    if (!g.unitary) {
      std::size_t cls = operator_class(g, tol);
      out.results["operator_class"] = cls;
      out.lines.push_back(
          "operator class: " + std::to_string(cls) + " of " +
          std::to_string(g.structure.total_dim()) + " (dual-state rank)");
    }
  }

  bool two_qubits = g.structure.num_parties() == 2 &&
                    g.structure.total_dim() == 4;
  if (two_qubits && g.unitary) {
    auto mu = mu_invariants(g.matrix);
    TwoQubitClass cls = two_qubit_class(g.matrix, tol);
    out.results["mu"] = mu;
    out.results["two_qubit_class"] = to_string(cls);
    out.lines.push_back(std::string("two-qubit class: ") + to_string(cls));
    out.lines.push_back("mu: (" + num(mu[0]) + ", " + num(mu[1]) + ", " +
                        num(mu[2]) + ")");
  }

  if (g.structure.num_parties() == 3 && g.structure.total_dim() == 8 &&
      g.unitary) {
    if (auto eff = effective_qubit_state(dual, tol)) {
      ThreeQubitClass cls = classify_three_qubit(*eff, tol);
      out.results["three_qubit_class"] = class_json(cls);
      out.lines.push_back("three-qubit dual-state class: " + class_text(cls));
    } else {
      out.lines.push_back(
          "three-qubit dual-state class: not reducible to one qubit per "
          "party");
    }
  }
  return out;
}

// --- simulate / generate ------------------------------------------------------

CommandOutput cmd_simulate(const GateDescriptor& u, const std::string& uspec,
                           const GateDescriptor& v, const std::string& vspec,
                           const std::vector<unsigned>& copies, double tol) {
  CommandOutput out;
  SloccVerdict verdict;
  if (copies.empty()) {
    verdict = can_simulate(u, v, tol);
    out.lines.push_back("can " + uspec + " simulate " + vspec + "?");
  } else {
    verdict = can_simulate_multicopy(u, copies[0], v, copies[1], tol);
    out.results["copies"] = copies;
    auto count_of = [](auto n) {
      return std::to_string(n) + (n == 1 ? " copy of " : " copies of ");
    };
    out.lines.push_back("can " + count_of(copies[0]) + uspec + " simulate " +
                        count_of(copies[1]) + vspec + "?");
  }
  out.results.update(verdict_json(verdict));
  out.lines.push_back("  " + verdict_text(verdict));
  return out;
}

CommandOutput cmd_generate(const GateDescriptor& u, const std::string& uspec,
                           const PureState& target, const std::string& tspec,
                           double tol) {
  CommandOutput out;
  SloccVerdict verdict = can_generate(u, target, tol);
  out.results.update(verdict_json(verdict));
  out.lines.push_back("can " + uspec + " generate " + tspec + "?");
  out.lines.push_back("  " + verdict_text(verdict));
  return out;
}

// --- choi / decompose ---------------------------------------------------------

CommandOutput cmd_choi(const GateDescriptor& g, const std::string& spec,
                       double tol) {
  CommandOutput out;
  ChoiState dual = choi_state(g);
  PureState nstate = dual.normalized_state();

  out.results["state"] = choi_to_json(dual);
  out.results["norm"] = dual.norm;
  out.lines.push_back("dual state of " + spec + "  (slot order " +
                      describe_structure(dual.structure) + ")");
  out.lines.push_back("norm: " + num(dual.norm));

  std::vector<std::size_t> ranks;
  for (std::size_t p = 0; p < dual.structure.num_parties(); ++p) {
    auto slots = dual.structure.slots_of_party(p);
    ranks.push_back(schmidt_number(nstate, slots, tol));
  }
  out.results["party_marginal_ranks"] = ranks;
  std::vector<std::string> rtext;
  for (std::size_t p = 0; p < ranks.size(); ++p)
    rtext.push_back(dual.structure.parties()[p] + ":" +
                    std::to_string(ranks[p]));
  out.lines.push_back("party marginal ranks: " + join(rtext, ", "));

  if (dual.structure.num_parties() == 2) {
    auto rows = first_party_slots(nstate.structure);
    out.results["schmidt_rank"] = schmidt_number(nstate, rows, tol);
  }
  if (g.unitary) {
    double dim = static_cast<double>(g.structure.total_dim());
    double p = 1.0 / (dim * dim);
    out.results["implementation_probability"] = p;
    out.lines.push_back("probabilistic implementation succeeds with p = " +
                        num(p));
  }
  out.lines.push_back("(full state vector in --json output)");
  return out;
}

CommandOutput cmd_decompose(const GateDescriptor& g, const std::string& spec,
                            double tol) {
  CommandOutput out;
  CartanParams p = cartan_decompose(g);
  double err = max_abs_diff(reconstruct(p), g.matrix);
  TwoQubitClass cls = two_qubit_class(g.matrix, tol);

  out.results["mu"] = p.mu;
  out.results["two_qubit_class"] = to_string(cls);
  out.results["global_phase"] = {p.global_phase.real(),
                                 p.global_phase.imag()};
  out.results["left_a"] = tensor_to_json(p.left_a);
  out.results["left_b"] = tensor_to_json(p.left_b);
  out.results["right_a"] = tensor_to_json(p.right_a);
  out.results["right_b"] = tensor_to_json(p.right_b);
  out.results["reconstruction_error"] = err;
  out.pass = err < 1e-8;

  out.lines.push_back("canonical decomposition of " + spec);
  out.lines.push_back("mu: (" + num(p.mu[0]) + ", " + num(p.mu[1]) + ", " +
                      num(p.mu[2]) + ")");
  out.lines.push_back(std::string("two-qubit class: ") + to_string(cls));
  out.lines.push_back("global phase: " + num(p.global_phase));
  out.lines.push_back("reconstruction error: " + num(err));
  out.lines.push_back("(local factors in --json output)");
  return out;
}

// --- demos --------------------------------------------------------------------

CommandOutput demo_teleport(std::uint64_t seed) {
  CommandOutput out;
  const int pairs = 100;
  const double p_expected = 1.0 / 16.0;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  double max_p_err = 0.0, min_fid = 1.0;
  for (int i = 0; i < pairs; ++i) {
    ComplexTensor u = haar_random_unitary(4, seed * 1000003ull + i);
    GateDescriptor g(u, PartyStructure::qudits(2, 2));
    ComplexTensor rho = random_density_matrix(4, rng);
    ImplementResult r = implement_via_state(choi_state(g), rho);
    ComplexTensor expected = matmul(matmul(u, rho), u.dagger());
    max_p_err = std::max(max_p_err, std::abs(r.probability - p_expected));
    min_fid = std::min(min_fid, fidelity(r.rho_out, expected));
  }
  out.results["pairs"] = pairs;
  out.results["expected_probability"] = p_expected;
  out.results["max_probability_error"] = max_p_err;
  out.results["min_fidelity"] = min_fid;
  out.pass = max_p_err <= 1e-10 && min_fid >= 1.0 - 1e-9;
  out.lines.push_back(
      "probabilistic implementation via the dual state, " +
      std::to_string(pairs) + " random (gate, input) pairs:");
  out.lines.push_back("  success probability: expected " + num(p_expected) +
                      ", max deviation " + num(max_p_err));
  out.lines.push_back("  min output fidelity vs direct application: " +
                      num(min_fid));
  return out;
}

CommandOutput demo_no_rank3(std::uint64_t seed, int grid, double tol) {
  CommandOutput out;
  const int samples = 1000;
  if (grid <= 0) grid = 20;
  std::map<std::size_t, std::size_t> counts;

  for (int i = 0; i < samples; ++i) {
    ComplexTensor u = haar_random_unitary(4, seed * 2654435761ull + i);
    GateDescriptor g(u, PartyStructure::qudits(2, 2));
    ++counts[operator_schmidt_rank(g, tol)];
  }
  auto grid_value = [&](int i) {
    return grid == 1 ? 0.0 : kPi4 * double(i) / double(grid - 1);
  };
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j)
      for (int k = 0; k < grid; ++k) {
        std::array<double, 3> mu{grid_value(i), grid_value(j), grid_value(k)};
        GateDescriptor g(canonical_gate(mu), PartyStructure::qudits(2, 2));
        ++counts[operator_schmidt_rank(g, tol)];
      }

  std::size_t rank3 = counts.count(3) ? counts.at(3) : 0;
  bool only_124 = true;
  nlohmann::json jcounts = nlohmann::json::object();
  for (auto& [r, c] : counts) {
    jcounts[std::to_string(r)] = c;
    if (r != 1 && r != 2 && r != 4) only_124 = false;
  }
  out.results["haar_samples"] = samples;
  out.results["grid_points_per_axis"] = grid;
  out.results["rank_counts"] = jcounts;
  out.results["rank3_occurrences"] = rank3;
  out.pass = only_124 && rank3 == 0;
  out.lines.push_back("operator Schmidt ranks over " +
                      std::to_string(samples) + " Haar gates + " +
                      std::to_string(grid) + "^3 interaction grid:");
  out.lines.push_back("  rank counts: " + jcounts.dump());
  out.lines.push_back("  rank-3 occurrences: " + std::to_string(rank3) +
                      "  (ranks other than 1, 2, 4 are impossible)");
  return out;
}

CommandOutput demo_four_qubit_family(int grid) {
  CommandOutput out;
  if (grid <= 0) grid = 10;

  ComplexTensor h = four_qubit_family_hamiltonian();
  ComplexTensor rhs = h;
  rhs *= 2.0;
  ComplexTensor id3 = ComplexTensor::identity(16);
  id3 *= 3.0;
  rhs += id3;
  double h2_err = max_abs_diff(matmul(h, h), rhs);

  double expm_err = 0.0;
  const int expm_grid = 20;
  for (int i = 0; i < expm_grid; ++i) {
    double t = 0.075 * (i + 1);
    ComplexTensor direct = expm_hermitian(h, Complex(0.0, -t));
    expm_err = std::max(
        expm_err, max_abs_diff(direct, four_qubit_family_gate(t).matrix));
  }

  std::vector<double> ts;
  for (int i = 0; i < grid; ++i)
    ts.push_back(0.05 + 0.70 * double(i + 1) / double(grid + 1));
  auto separated = pairwise_inequivalence_demo(ts);
  double min_sep = -1.0;
  bool all_separated = true;
  std::vector<Complex> ratios;
  for (double t : ts)
    ratios.push_back(*four_qubit_invariant_ratio(four_qubit_family(t)).ratio);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (!separated[i][j]) all_separated = false;
      double s = std::abs(ratios[i] - ratios[j]);
      if (min_sep < 0 || s < min_sep) min_sep = s;
    }

  out.results["h_square_error"] = h2_err;
  out.results["expm_grid_points"] = expm_grid;
  out.results["expm_max_error"] = expm_err;
  out.results["ratio_grid_points"] = grid;
  out.results["all_pairs_separated"] = all_separated;
  out.results["min_ratio_separation"] = min_sep;
  out.pass = h2_err < 1e-12 && expm_err < 1e-12 && all_separated;
  out.lines.push_back("two-pair interaction family on four qubits:");
  out.lines.push_back("  |H^2 - 2H - 3| max error: " + num(h2_err));
  out.lines.push_back("  exp(-iHt) vs closed form, max error over " +
                      std::to_string(expm_grid) + " points: " +
                      num(expm_err));
  out.lines.push_back("  invariant ratios pairwise distinct over " +
                      std::to_string(grid) + " points: " +
                      (all_separated ? "yes" : "NO") +
                      " (min separation " + num(min_sep) + ")");
  out.lines.push_back(
      "  => " + std::to_string(grid) +
      " mutually inequivalent gates from one interaction family");
  return out;
}

CommandOutput demo_uw_generation() {
  CommandOutput out;
  const double t = 0.3;
  auto [basis_class, super_class] = uw_generation_demo(t);
  out.results["t"] = t;
  out.results["input_basis_class"] = class_json(basis_class);
  out.results["input_superposition_class"] = class_json(super_class);
  out.pass = basis_class.label == ThreeQubitLabel::W &&
             super_class.label == ThreeQubitLabel::GHZ;
  out.lines.push_back("one three-qubit gate, two inequivalent outputs (t = " +
                      num(t) + "):");
  out.lines.push_back("  from |001>:             " + class_text(basis_class));
  out.lines.push_back("  from (|001>+|011>)/v2:  " + class_text(super_class));
  return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{
      "slocc — classify non-local gates by their entanglement classes, "
      "decide simulability and entanglement generation, and run the "
      "worked demonstrations"};
  app.require_subcommand(1);

  double tol = kDefaultRankTol;
  std::uint64_t seed = 0;
  bool json_mode = false;
  int grid = 0;
  std::string gate_spec, second_spec;
  std::vector<unsigned> copies;

  auto add_common = [&](CLI::App* sc) {
    sc->add_option("--tol", tol, "relative rank tolerance")
        ->capture_default_str();
    sc->add_option("--seed", seed, "random seed")->capture_default_str();
    sc->add_flag("--json", json_mode, "emit the machine-readable report");
  };

  CLI::App* classify = app.add_subcommand(
      "classify", "entanglement class of a gate or operator");
  classify->add_option("gate", gate_spec, "built-in name or JSON file")
      ->required();
  add_common(classify);

  CLI::App* simulate =
      app.add_subcommand("simulate", "can gate A simulate gate B?");
  simulate->add_option("gate_a", gate_spec, "built-in name or JSON file")
      ->required();
  simulate->add_option("gate_b", second_spec, "built-in name or JSON file")
      ->required();
  simulate->add_option("--copies", copies, "copies of A and of B")
      ->expected(2);
  add_common(simulate);

  CLI::App* generate = app.add_subcommand(
      "generate", "can the gate create the target entangled state?");
  generate->add_option("gate", gate_spec, "built-in name or JSON file")
      ->required();
  generate->add_option("state", second_spec, "built-in name or JSON file")
      ->required();
  add_common(generate);

  CLI::App* choi =
      app.add_subcommand("choi", "dual state of a gate or operator");
  choi->add_option("gate", gate_spec, "built-in name or JSON file")
      ->required();
  add_common(choi);

  CLI::App* decompose = app.add_subcommand(
      "decompose", "canonical two-qubit decomposition");
  decompose->add_option("gate", gate_spec, "built-in name or JSON file")
      ->required();
  add_common(decompose);

  CLI::App* demo = app.add_subcommand("demo", "run a worked demonstration");
  demo->add_option("name", gate_spec,
                   "teleport | no-rank3 | four-qubit-family | uw-generation")
      ->required();
  demo->add_option("--grid", grid, "grid points (demo-specific default)");
  add_common(demo);

  std::vector<const char*> argv;
  argv.push_back("slocc");
  for (const std::string& a : args) argv.push_back(a.c_str());

  CliResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.text = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.text = std::string("error: ") + e.what();
    return result;
  }
  result.json_mode = json_mode;

  std::string command = app.get_subcommands().front()->get_name();
  auto t0 = std::chrono::steady_clock::now();
  Digest digest;
  CommandOutput out;

  try {
    if (command == "classify") {
      out = cmd_classify(load_gate(gate_spec, digest), gate_spec, tol);
    } else if (command == "simulate") {
      GateDescriptor u = load_gate(gate_spec, digest);
      GateDescriptor v = load_gate(second_spec, digest);
      out = cmd_simulate(u, gate_spec, v, second_spec, copies, tol);
    } else if (command == "generate") {
      GateDescriptor u = load_gate(gate_spec, digest);
      PureState target = load_state(second_spec, digest);
      out = cmd_generate(u, gate_spec, target, second_spec, tol);
    } else if (command == "choi") {
      out = cmd_choi(load_gate(gate_spec, digest), gate_spec, tol);
    } else if (command == "decompose") {
      out = cmd_decompose(load_gate(gate_spec, digest), gate_spec, tol);
    } else {  // demo
      digest.feed("demo:" + gate_spec + ":seed=" + std::to_string(seed) +
                  ":grid=" + std::to_string(grid));
      if (gate_spec == "teleport") {
        out = demo_teleport(seed);
      } else if (gate_spec == "no-rank3") {
        out = demo_no_rank3(seed, grid, tol);
      } else if (gate_spec == "four-qubit-family") {
        out = demo_four_qubit_family(grid);
      } else if (gate_spec == "uw-generation") {
        out = demo_uw_generation();
      } else {
        throw InvalidInput("unknown demo \"" + gate_spec +
                           "\" (teleport | no-rank3 | four-qubit-family | "
                           "uw-generation)");
      }
      out.lines.push_back(out.pass ? "demo check: PASS" : "demo check: FAIL");
    }
  } catch (const InvalidInput& e) {
    result.exit_code = 2;
    result.text = std::string("error: ") + e.what();
    return result;
  } catch (const Error& e) {
    result.exit_code = 1;
    result.text = std::string("error: ") + e.what();
    return result;
  }

  double wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  result.report = {{"command", command},     {"args", args},
                   {"inputs_digest", digest.hex()},
                   {"tol", tol},             {"seed", seed},
                   {"results", out.results}, {"pass", out.pass},
                   {"wall_time_ms", wall_ms}};
  result.text = join(out.lines, "\n");
  result.exit_code = out.pass ? 0 : 1;
  return result;
}

}  // namespace slocc::cli
