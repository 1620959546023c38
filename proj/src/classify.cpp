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

#include "slocc/classify.hpp"

#include <cmath>
#include <numbers>

#include "slocc/gates.hpp"
#include "slocc/linalg.hpp"
#include "slocc/schmidt.hpp"

namespace slocc {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi4 = std::numbers::pi / 4.0;

// Separation below which two invariant ratios are treated as "not
// distinguished" rather than as a refutation.
constexpr double kRatioSeparationTol = 1e-6;

void require_qubits(const PureState& psi, std::size_t n, const char* who) {
  if (psi.structure.num_slots() != n)
    throw InvalidInput(std::string(who) + ": expected " + std::to_string(n) +
                       " qubits");
  for (std::size_t d : psi.structure.slot_dims())
    if (d != 2) throw InvalidInput(std::string(who) + ": expected qubit slots");
}

}  // namespace

const char* to_string(ThreeQubitLabel l) {
  switch (l) {
    case ThreeQubitLabel::Product:
      return "Product";
    case ThreeQubitLabel::BisepA:
      return "BisepA";
    case ThreeQubitLabel::BisepB:
      return "BisepB";
    case ThreeQubitLabel::BisepC:
      return "BisepC";
    case ThreeQubitLabel::W:
      return "W";
    case ThreeQubitLabel::GHZ:
      return "GHZ";
  }
  return "?";
}

const char* to_string(VerdictMethod m) {
  switch (m) {
    case VerdictMethod::BipartiteRank:
      return "bipartite-rank";
    case VerdictMethod::ThreeQubitClasses:
      return "three-qubit-classes";
    case VerdictMethod::FourQubitInvariant:
      return "four-qubit-invariant";
    case VerdictMethod::Identical:
      return "identical";
    case VerdictMethod::Undecidable:
      return "undecidable";
  }
  return "?";
}

double three_tangle(const PureState& psi) {
  require_qubits(psi, 3, "three_tangle");
  const ComplexTensor& v = psi.vector;
  auto a = [&v](unsigned i, unsigned j, unsigned k) {
    return v[4 * i + 2 * j + k];
  };
  // 2x2x2 hyperdeterminant (Cayley): degree four in the amplitudes.
  Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
               a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
               a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
               a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  Complex d2 = a(0, 0, 0) * a(1, 1, 1) *
                   (a(0, 0, 1) * a(1, 1, 0) + a(0, 1, 0) * a(1, 0, 1) +
                    a(1, 0, 0) * a(0, 1, 1)) +
               a(0, 0, 1) * a(1, 1, 0) * a(0, 1, 0) * a(1, 0, 1) +
               a(0, 0, 1) * a(1, 1, 0) * a(1, 0, 0) * a(0, 1, 1) +
               a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 0) * a(0, 1, 1);
  Complex d3 = a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) +
               a(1, 1, 1) * a(1, 0, 0) * a(0, 1, 0) * a(0, 0, 1);
  Complex det = d1 - 2.0 * d2 + 4.0 * d3;
  return 4.0 * std::abs(det);
}

ThreeQubitClass classify_three_qubit(const PureState& psi, double tol,
                                     double tangle_tol) {
  require_qubits(psi, 3, "classify_three_qubit");
  ThreeQubitClass out{};
  std::size_t ones = 0;
  std::size_t rank1_slot = 3;
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t slots[] = {k};
    out.local_ranks[k] = schmidt_number(psi, slots, tol);
    if (out.local_ranks[k] == 1) {
      ++ones;
      rank1_slot = k;
    }
  }
  out.tangle = three_tangle(psi);

  if (ones >= 2) {
    // Two separable cuts already force full separability.
    out.label = ThreeQubitLabel::Product;
  } else if (ones == 1) {
    out.label = rank1_slot == 0   ? ThreeQubitLabel::BisepA
                : rank1_slot == 1 ? ThreeQubitLabel::BisepB
                                  : ThreeQubitLabel::BisepC;
  } else {
    out.label = out.tangle > tangle_tol ? ThreeQubitLabel::GHZ
                                        : ThreeQubitLabel::W;
  }
  return out;
}

bool three_qubit_reachable(ThreeQubitLabel from, ThreeQubitLabel to) {
  if (from == to) return true;
  auto is_bisep = [](ThreeQubitLabel l) {
    return l == ThreeQubitLabel::BisepA || l == ThreeQubitLabel::BisepB ||
           l == ThreeQubitLabel::BisepC;
  };
  switch (from) {
    case ThreeQubitLabel::Product:
      return false;
    case ThreeQubitLabel::BisepA:
    case ThreeQubitLabel::BisepB:
    case ThreeQubitLabel::BisepC:
      return to == ThreeQubitLabel::Product;
    case ThreeQubitLabel::W:
    case ThreeQubitLabel::GHZ:
      // The two fully entangled classes both project down to any
      // biseparable or product class, but never into each other.
      return is_bisep(to) || to == ThreeQubitLabel::Product;
  }
  return false;
}

// --- structure reductions ---------------------------------------------------

namespace {

// Contract the dual state against one orthonormal 2-vector basis per party:
// eff[j_1..j_N] = <b^1_{j_1} (x) ... (x) b^N_{j_N} | psi>.  `bases[p]` holds
// the two basis kets as columns (pair-dimension x 2).
ComplexTensor contract_party_bases(const PureState& psi,
                                   const std::vector<ComplexTensor>& bases) {
  std::size_t n = psi.structure.num_parties();
  const auto& dims = psi.structure.slot_dims();

  std::vector<std::size_t> pair_dim(n);
  for (std::size_t p = 0; p < n; ++p) {
    auto slots = psi.structure.slots_of_party(p);
    pair_dim[p] = dims[slots[0]] * dims[slots[1]];
  }

  std::size_t out_dim = std::size_t(1) << n;
  ComplexTensor eff({out_dim});
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t flat = 0; flat < psi.vector.size(); ++flat) {
    if (psi.vector[flat] == Complex{}) continue;
    unflatten_index(flat, dims, idx);
    // Party p's slot pair occupies slots (2p, 2p+1).
    std::array<std::size_t, 8> pair_idx{};
    for (std::size_t p = 0; p < n; ++p)
      pair_idx[p] = idx[2 * p] * dims[2 * p + 1] + idx[2 * p + 1];
    for (std::size_t j = 0; j < out_dim; ++j) {
      Complex w = psi.vector[flat];
      for (std::size_t p = 0; p < n; ++p) {
        std::size_t bit = (j >> (n - 1 - p)) & 1;
        w *= std::conj(bases[p][pair_idx[p] * 2 + bit]);
      }
      eff[j] += w;
    }
  }
  return eff;
}

}  // namespace

std::optional<PureState> effective_qubit_state(const ChoiState& psi,
                                               double tol) {
  PureState state = psi.normalized_state();
  std::size_t n = state.structure.num_parties();
  if (n > 8)
    throw InvalidInput("effective_qubit_state: too many parties");

  std::vector<ComplexTensor> bases;
  for (std::size_t p = 0; p < n; ++p) {
    auto slots = state.structure.slots_of_party(p);
    ComplexTensor m = bipartition_matrix(state.vector, slots,
                                         state.structure.slot_dims());
    SvdResult s = svd(m);
    if (rank_from_singular_values(s.singular_values, tol) > 2)
      return std::nullopt;
    // Top two left singular vectors span the party's support (padded with
    // the next vector when the marginal is rank one).
    std::size_t d = m.rows();
    ComplexTensor basis({d, 2});
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        basis[r * 2 + c] = s.left[r * d + c];
    bases.push_back(std::move(basis));
  }

  ComplexTensor eff = contract_party_bases(state, bases);
  return PureState::normalized(std::move(eff),
                               PartyStructure::qudits(n, 2));
}

PureState bell_subspace_state(const ChoiState& psi, double tol) {
  PureState state = psi.normalized_state();
  std::size_t n = state.structure.num_parties();
  for (std::size_t d : state.structure.slot_dims())
    if (d != 2)
      throw InvalidInput("bell_subspace_state: needs qubit slot pairs");

  // Fixed local frame |Phi_0> -> |0>, |Phi_1> -> |1> on every slot pair.
  double r = 1.0 / std::numbers::sqrt2;
  ComplexTensor basis({4, 2});
  basis[0 * 2 + 0] = r;  // Phi_0 = (|00> + |11>)/sqrt(2)
  basis[3 * 2 + 0] = r;
  basis[1 * 2 + 1] = r;  // Phi_1 = (|01> + |10>)/sqrt(2)
  basis[2 * 2 + 1] = r;
  std::vector<ComplexTensor> bases(n, basis);

  ComplexTensor eff = contract_party_bases(state, bases);
  double captured = eff.norm();
  if (std::abs(captured - 1.0) > tol)
    throw Error(
        "bell_subspace_state: support leaks outside the Bell-pair subspace");
  return PureState::normalized(std::move(eff), PartyStructure::qudits(n, 2));
}

// --- verdicts ---------------------------------------------------------------

namespace {

bool all_qubits(const PartyStructure& s) {
  for (std::size_t d : s.slot_dims())
    if (d != 2) return false;
  return true;
}

nlohmann::json class_witness(const ThreeQubitClass& c) {
  return {{"label", to_string(c.label)},
          {"local_ranks", c.local_ranks},
          {"tangle", c.tangle}};
}

SloccVerdict undecidable(std::string why) {
  SloccVerdict v;
  v.method = VerdictMethod::Undecidable;
  v.witness = {{"note", std::move(why)}};
  return v;
}

std::array<std::size_t, 4> dual_local_ranks(const ChoiState& dual,
                                            double tol) {
  PureState state = dual.normalized_state();
  std::array<std::size_t, 4> ranks{};
  for (std::size_t p = 0; p < dual.structure.num_parties(); ++p) {
    auto slots = state.structure.slots_of_party(p);
    ranks[p] = schmidt_number(state, slots, tol);
  }
  return ranks;
}

}  // namespace

SloccVerdict can_simulate(const GateDescriptor& u, const GateDescriptor& v,
                          double tol) {
  if (!u.structure.same_dims(v.structure))
    throw InvalidInput("can_simulate: gates act on different structures");

  if (equal_up_to_phase(u.matrix, v.matrix, 1e-12)) {
    SloccVerdict out;
    out.decision = true;
    out.method = VerdictMethod::Identical;
    out.witness = {{"note", "operands are equal up to a global phase"}};
    return out;
  }

  std::size_t n = u.structure.num_parties();
  if (n == 2) {
    std::size_t ru = operator_schmidt_rank(u, tol);
    std::size_t rv = operator_schmidt_rank(v, tol);
    SloccVerdict out;
    out.decision = ru >= rv;
    out.method = VerdictMethod::BipartiteRank;
    out.witness = {{"rank_u", ru}, {"rank_v", rv}};
    return out;
  }

  if (n == 3 && all_qubits(u.structure)) {
    auto eu = effective_qubit_state(choi_state(u), tol);
    auto ev = effective_qubit_state(choi_state(v), tol);
    if (eu && ev) {
      ThreeQubitClass cu = classify_three_qubit(*eu, tol);
      ThreeQubitClass cv = classify_three_qubit(*ev, tol);
      SloccVerdict out;
      out.decision = three_qubit_reachable(cu.label, cv.label);
      out.method = VerdictMethod::ThreeQubitClasses;
      out.witness = {{"class_u", class_witness(cu)},
                     {"class_v", class_witness(cv)}};
      return out;
    }
    return undecidable(
        "a dual state occupies more than one effective qubit per party");
  }

  if (n == 4 && all_qubits(u.structure)) {
    ChoiState du = choi_state(u), dv = choi_state(v);
    auto eu = effective_qubit_state(du, tol);
    auto ev = effective_qubit_state(dv, tol);
    if (!eu || !ev)
      return undecidable(
          "a dual state occupies more than one effective qubit per party");
    // Refutation by the invariant ratio needs every marginal of the target
    // dual state to be full rank; only then is any successful conversion
    // necessarily invertible, making the ratio an obstruction.
    std::array<std::size_t, 4> rv = dual_local_ranks(dv, tol);
    bool target_full = rv[0] == 2 && rv[1] == 2 && rv[2] == 2 && rv[3] == 2;
    InvariantRatio iu = four_qubit_invariant_ratio(*eu);
    InvariantRatio iv = four_qubit_invariant_ratio(*ev);
    if (target_full && iu.ratio && iv.ratio &&
        std::abs(*iu.ratio - *iv.ratio) > kRatioSeparationTol) {
      SloccVerdict out;
      out.decision = false;
      out.method = VerdictMethod::FourQubitInvariant;
      out.witness = {
          {"ratio_u", {iu.ratio->real(), iu.ratio->imag()}},
          {"ratio_v", {iv.ratio->real(), iv.ratio->imag()}},
          {"separation", std::abs(*iu.ratio - *iv.ratio)}};
      return out;
    }
    return undecidable(
        "invariant ratios do not separate the dual states (or are undefined)");
  }

  return undecidable("no implemented criterion for this structure");
}

SloccVerdict can_simulate_multicopy(const GateDescriptor& u, unsigned n,
                                    const GateDescriptor& v, unsigned m,
                                    double tol) {
  if (u.structure.num_parties() != 2 || v.structure.num_parties() != 2)
    throw InvalidInput("can_simulate_multicopy: needs two-party gates");
  if (!u.structure.same_dims(v.structure))
    throw InvalidInput("can_simulate_multicopy: gates act on different structures");
  std::uint64_t ru = multicopy_schmidt_number(u, n, tol);
  std::uint64_t rv = multicopy_schmidt_number(v, m, tol);
  SloccVerdict out;
  out.decision = ru >= rv;
  out.method = VerdictMethod::BipartiteRank;
  out.witness = {{"copies_u", n},
                 {"copies_v", m},
                 {"rank_u_copies", ru},
                 {"rank_v_copies", rv}};
  return out;
}

SloccVerdict can_generate(const GateDescriptor& u, const PureState& target,
                          double tol) {
  std::size_t n = u.structure.num_parties();

  if (n == 2) {
    if (target.structure.num_slots() != 2)
      throw InvalidInput("can_generate: bipartite gate needs a two-slot target");
    std::size_t ru = operator_schmidt_rank(u, tol);
    std::size_t slots[] = {0};
    std::size_t rt = schmidt_number(target, slots, tol);
    SloccVerdict out;
    out.decision = rt <= ru;
    out.method = VerdictMethod::BipartiteRank;
    out.witness = {{"rank_u", ru}, {"rank_target", rt}};
    return out;
  }

  if (n == 3 && all_qubits(u.structure)) {
    require_qubits(target, 3, "can_generate");
    auto eu = effective_qubit_state(choi_state(u), tol);
    if (!eu)
      return undecidable(
          "the dual state occupies more than one effective qubit per party");
    ThreeQubitClass cu = classify_three_qubit(*eu, tol);
    ThreeQubitClass ct = classify_three_qubit(target, tol);
    SloccVerdict out;
    out.decision = three_qubit_reachable(cu.label, ct.label);
    out.method = VerdictMethod::ThreeQubitClasses;
    out.witness = {{"class_u", class_witness(cu)},
                   {"class_target", class_witness(ct)}};
    return out;
  }

  return undecidable("no implemented criterion for this structure");
}

// --- worked demonstrations --------------------------------------------------

ThreeQubitClass xxx_choi_class(double t, double tol) {
  if (!(t > 0.0 && t < kPi4))
    throw InvalidInput("xxx_choi_class: t must lie in (0, pi/4)");
  ChoiState dual = choi_state(gates::xxx(t));
  PureState eff = bell_subspace_state(dual);
  return classify_three_qubit(eff, tol);
}

std::pair<ThreeQubitClass, ThreeQubitClass> uw_generation_demo(double t) {
  GateDescriptor u = gates::uw(t);
  PartyStructure qubits3 = PartyStructure::qudits(3, 2);

  ComplexTensor in1({8});
  in1[0b001] = 1.0;
  ComplexTensor in2({8});
  in2[0b001] = in2[0b011] = 1.0 / std::numbers::sqrt2;

  PureState out1 =
      PureState::normalized(apply_matrix(u.matrix, in1), qubits3);
  PureState out2 =
      PureState::normalized(apply_matrix(u.matrix, in2), qubits3);
  return {classify_three_qubit(out1), classify_three_qubit(out2)};
}

// --- the four-qubit two-pair interaction family -----------------------------

ComplexTensor four_qubit_family_hamiltonian() {
  ComplexTensor x = gates::pauli(1);
  ComplexTensor i2 = ComplexTensor::identity(2);
  ComplexTensor xxxx = kron(kron(x, x), kron(x, x));
  ComplexTensor xxii = kron(kron(x, x), kron(i2, i2));
  ComplexTensor iixx = kron(kron(i2, i2), kron(x, x));
  return xxxx + xxii + iixx;
}

std::pair<Complex, Complex> four_qubit_family_coefficients(double t) {
  Complex e3 = std::exp(-kI * (3.0 * t));
  Complex e1 = std::exp(kI * t);
  return {(e3 + 3.0 * e1) / 4.0, (e3 - e1) / 4.0};
}

GateDescriptor four_qubit_family_gate(double t) {
  auto [alpha, beta] = four_qubit_family_coefficients(t);
  ComplexTensor m = four_qubit_family_hamiltonian();
  m *= beta;
  ComplexTensor id = ComplexTensor::identity(16);
  id *= alpha;
  m += id;
  return {std::move(m), PartyStructure::qudits(4, 2)};
}

PureState four_qubit_family(double t) {
  auto [alpha, beta] = four_qubit_family_coefficients(t);
  ComplexTensor v({16});
  v[0b0000] = alpha;
  v[0b1111] = beta;
  v[0b0011] = beta;
  v[0b1100] = beta;
  return {std::move(v), PartyStructure::qudits(4, 2)};
}

InvariantRatio four_qubit_invariant_ratio(const PureState& psi,
                                          ReshapePairing pairing,
                                          double det_tol) {
  require_qubits(psi, 4, "four_qubit_invariant_ratio");

  // Bilinear form psi^T (sigma_y^(x4)) psi.
  ComplexTensor y = gates::pauli(2);
  ComplexTensor y4 = kron(kron(y, y), kron(y, y));
  Complex h = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    if (psi.vector[i] == Complex{}) continue;
    for (std::size_t j = 0; j < 16; ++j)
      h += psi.vector[i] * y4[i * 16 + j] * psi.vector[j];
  }

  std::vector<std::size_t> rows;
  switch (pairing) {
    case ReshapePairing::AB_CD:
      rows = {0, 1};
      break;
    case ReshapePairing::AC_BD:
      rows = {0, 2};
      break;
    case ReshapePairing::AD_BC:
      rows = {0, 3};
      break;
  }
  ComplexTensor m =
      bipartition_matrix(psi.vector, rows, psi.structure.slot_dims());
  Complex d = determinant(m);

  InvariantRatio out;
  out.h_inv = h;
  out.reshape_det = d;
  if (std::abs(d) > det_tol) out.ratio = h * h / d;
  return out;
}

std::vector<std::vector<bool>> pairwise_inequivalence_demo(
    std::span<const double> ts, double separation_tol) {
  std::vector<Complex> ratios;
  for (double t : ts) {
    InvariantRatio r = four_qubit_invariant_ratio(four_qubit_family(t));
    if (!r.ratio)
      throw Error(
          "pairwise_inequivalence_demo: undefined invariant ratio at t = " +
          std::to_string(t));
    ratios.push_back(*r.ratio);
  }
  std::size_t n = ratios.size();
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = std::abs(ratios[i] - ratios[j]) > separation_tol;
  return out;
}

// --- general operators ------------------------------------------------------

std::size_t operator_class(const GateDescriptor& o, double tol) {
  if (o.structure.num_parties() != 2)
    throw InvalidInput("operator_class: needs a two-party operator");
  ChoiState dual = choi_state(o);
  if (dual.norm < 1e-12)
    throw InvalidInput("operator_class: operator is (numerically) zero");
  PureState state = dual.normalized_state();
  auto rows = first_party_slots(state.structure);
  return schmidt_number(state, rows, tol);
}

}  // namespace slocc
