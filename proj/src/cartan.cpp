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

#include "slocc/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "eigen_bridge.hpp"
#include "slocc/gates.hpp"
#include "slocc/linalg.hpp"

namespace slocc {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
constexpr double kPi4 = std::numbers::pi / 4.0;

// The magic basis: four maximally entangled states in whose frame every
// product of two single-qubit unitaries becomes a real orthogonal matrix and
// every sigma_k (x) sigma_k generator becomes diagonal.  Columns:
//   m0 = (|00> + |11>)/sqrt(2)          m1 = -i(|00> - |11>)/sqrt(2)
//   m2 = (|01> - |10>)/sqrt(2)          m3 = -i(|01> + |10>)/sqrt(2)
Eigen::Matrix4cd magic_basis() {
  Eigen::Matrix4cd m;
  double r = 1.0 / std::numbers::sqrt2;
  m << Complex{r, 0}, Complex{0, -r}, Complex{0, 0}, Complex{0, 0},  //
      Complex{0, 0}, Complex{0, 0}, Complex{r, 0}, Complex{0, -r},   //
      Complex{0, 0}, Complex{0, 0}, Complex{-r, 0}, Complex{0, -r},  //
      Complex{r, 0}, Complex{0, r}, Complex{0, 0}, Complex{0, 0};
  return m;
}

// In the magic frame the interaction exp(-i sum mu_k sigma_k sigma_k) is
// diagonal with phases e^{-i h_j}, where the h_j mix the mu's as
//   h_0 = mu1 - mu2 + mu3        h_1 = -mu1 + mu2 + mu3
//   h_2 = -mu1 - mu2 - mu3       h_3 = mu1 + mu2 - mu3
// (h = L mu).  The pseudo-inverse below recovers mu from any four phases;
// the component of h along (1,1,1,1), which L cannot produce, surfaces as a
// global phase e^{i sum(h)/4} tracked by the caller.
std::array<double, 3> mu_from_phases(const std::array<double, 4>& h) {
  return {(h[0] - h[1] - h[2] + h[3]) / 4.0,
          (-h[0] + h[1] - h[2] + h[3]) / 4.0,
          (h[0] + h[1] - h[2] - h[3]) / 4.0};
}

struct MagicEigensystem {
  std::array<double, 4> h;   // interaction eigenphases (slot order arbitrary)
  Eigen::Matrix4d q;         // real orthogonal, det +1: S = q diag(e^{-2ih}) q^T
  Eigen::Matrix4cd v_magic;  // the det-normalized gate in the magic frame
  Complex det_root;          // (det U)^(1/4), divided out of the input
};

// Diagonalize S = V^T V for V unitary in the magic frame.  S is complex
// symmetric unitary, so X = Re S and Y = Im S are commuting real symmetric
// matrices (S S-bar = 1 forces X^2 + Y^2 = 1 and [X, Y] = 0); a generic real
// linear combination splits all common eigenspaces, and its eigenvectors
// form the real orthogonal diagonalizer.  Deterministically seeded mixing
// coefficients; acceptance is by the off-diagonal residual of q^T S q.
MagicEigensystem magic_eigensystem(const ComplexTensor& u4) {
  if (!u4.is_square_matrix() || u4.rows() != 4)
    throw InvalidInput("cartan: expected a 4x4 matrix");
  if (!is_unitary(u4, kUnitarityTol))
    throw InvalidInput("cartan: matrix is not unitary");

  MagicEigensystem out;
  Eigen::Matrix4cd u = detail::to_eigen(u4);
  Complex det = u.determinant();
  out.det_root = std::pow(det, 0.25);
  u /= out.det_root;

  Eigen::Matrix4cd m = magic_basis();
  out.v_magic = m.adjoint() * u * m;
  Eigen::Matrix4cd s = out.v_magic.transpose() * out.v_magic;

  Eigen::Matrix4d x = 0.5 * (s.real() + s.real().transpose());
  Eigen::Matrix4d y = 0.5 * (s.imag() + s.imag().transpose());

  std::mt19937_64 mix_seed(20260819);
  auto mix_coeff = [&mix_seed]() {
    return 0.25 + static_cast<double>(mix_seed() >> 11) * 0x1.0p-53;
  };

  Eigen::Matrix4d best_q;
  double best_off = 1e300;
  for (int attempt = 0; attempt < 64; ++attempt) {
    double a = mix_coeff(), b = mix_coeff();
    if (attempt % 2) b = -b;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(a * x + b * y);
    if (solver.info() != Eigen::Success) continue;
    Eigen::Matrix4d q = solver.eigenvectors();
    if (q.determinant() < 0) q.col(0) = -q.col(0);
    Eigen::Matrix4cd d = q.transpose() * s * q;
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) off = std::max(off, std::abs(d(i, j)));
    if (off < best_off) {
      best_off = off;
      best_q = q;
    }
    if (off < 1e-9) break;
  }
  if (best_off > 1e-7)
    throw NumericalFailure(
        "cartan: could not diagonalize the symmetric frame matrix");
  out.q = best_q;

  Eigen::Matrix4cd d = best_q.transpose() * s * best_q;
  // Eigenvalues e^{-2 i h_j}; each h_j fixed to (-pi/2, pi/2].
  for (int j = 0; j < 4; ++j) out.h[j] = -std::arg(d(j, j)) / 2.0;

  // det S = 1 makes sum(h) a multiple of pi.  An odd multiple would leave
  // det of the outer orthogonal factor at -1 — not a product of one-qubit
  // rotations — so shift one phase by pi (its eigenvalue is unchanged).
  double sum = out.h[0] + out.h[1] + out.h[2] + out.h[3];
  long multiple = std::lround(sum / kPi);
  if (multiple % 2 != 0) out.h[3] += (out.h[3] > 0.0) ? -kPi : kPi;
  return out;
}

// ---------------------------------------------------------------------------
// Canonicalization.  The raw mu vector from the eigenphases is defined only
// up to the chamber symmetries: pi/2 translations on each component, sign
// flips of any pair, and permutations.  The decision list is pure arithmetic
// so the invariants-only path and the full decomposition stay bit-identical;
// the full path replays each decision as an explicit local-unitary move.

struct CanonicalDecisions {
  std::array<long, 3> shifts{};  // mu_i -> mu_i - n_i * pi/2
  std::vector<std::array<std::size_t, 2>> swaps;
  std::vector<std::size_t> flip_axes;  // axis k: negate the other two comps
  bool boundary = false;  // mu0 = pi/4 wall: flip pair (0,2), re-shift comp 0
  std::array<double, 3> mu{};
};

CanonicalDecisions canonicalize_mu(std::array<double, 3> mu) {
  CanonicalDecisions dec;

  // Fold every component into (-pi/4, pi/4].
  for (std::size_t i = 0; i < 3; ++i) {
    double n = std::ceil(mu[i] / (kPi / 2.0) - 0.5);
    dec.shifts[i] = std::lround(n);
    mu[i] -= n * (kPi / 2.0);
  }

  // Sort by magnitude, descending (selection sort => at most two swaps).
  for (std::size_t pos = 0; pos < 2; ++pos) {
    std::size_t arg = pos;
    for (std::size_t j = pos + 1; j < 3; ++j)
      if (std::abs(mu[j]) > std::abs(mu[arg])) arg = j;
    if (arg != pos) {
      std::swap(mu[pos], mu[arg]);
      dec.swaps.push_back({pos, arg});
    }
  }

  // Make the two leading components non-negative with pair sign flips.
  auto flip = [&](std::size_t axis) {
    for (std::size_t i = 0; i < 3; ++i)
      if (i != axis) mu[i] = -mu[i];
    dec.flip_axes.push_back(axis);
  };
  if (mu[0] < 0.0 && mu[1] < 0.0) flip(2);
  if (mu[0] < 0.0) flip(1);
  if (mu[1] < 0.0) flip(0);

  // On the mu0 = pi/4 wall a further symmetry identifies (mu0, mu2) with
  // (pi/2 - mu0, -mu2); use it to pin mu2 >= 0 there, making mu unique.
  if (mu[0] >= kPi4 - 1e-10 && mu[2] < 0.0) {
    dec.boundary = true;
    mu[0] = -mu[0];
    mu[2] = -mu[2];
    mu[0] += kPi / 2.0;
  }

  for (double& m : mu)
    if (m == 0.0) m = 0.0;  // normalize -0.0 away for stable serialization

  dec.mu = mu;
  return dec;
}

// ---------------------------------------------------------------------------
// Local-factor extraction and move replay for the full decomposition.

// Split a 4x4 tensor-product unitary into 2x2 factors: the rearrangement
// F[(2i+j), (2k+l)] = k4[(2i+k), (2j+l)] of a product a (x) b is the rank-1
// outer product vec(a) vec(b)^T, recovered from the dominant singular pair.
// Returns SU(2) factors and the scalar phi with k4 = phi * a (x) b.
struct ProductFactors {
  Eigen::Matrix2cd a, b;
  Complex phase;
};

ProductFactors factor_product(const Eigen::Matrix4cd& k4) {
  Eigen::Matrix4cd f;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          f(2 * i + j, 2 * k + l) = k4(2 * i + k, 2 * j + l);

  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(
      f, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues()(1) > 1e-8)
    throw NumericalFailure("cartan: outer factor is not a tensor product");
  double root = std::sqrt(svd.singularValues()(0));
  Eigen::Vector4cd va = svd.matrixU().col(0) * root;
  Eigen::Vector4cd vb = svd.matrixV().col(0).conjugate() * root;

  ProductFactors out;
  out.a << va(0), va(1), va(2), va(3);
  out.b << vb(0), vb(1), vb(2), vb(3);
  Complex da = out.a.determinant();
  Complex db = out.b.determinant();
  if (std::abs(da) < 0.5 || std::abs(db) < 0.5)
    throw NumericalFailure("cartan: degenerate product factor");
  Complex ra = std::sqrt(da), rb = std::sqrt(db);
  out.a /= ra;
  out.b /= rb;
  out.phase = ra * rb;
  return out;
}

Eigen::Matrix2cd pauli2(std::size_t k) {
  return detail::to_eigen(gates::pauli(k)).topLeftCorner<2, 2>();
}

// exp(-i pi/4 sigma_{axis+1}), the one-qubit rotation that conjugates the
// interaction term pair {axis'} into each other (swapping two mu components).
Eigen::Matrix2cd quarter_rotation(std::size_t axis) {
  double c = std::cos(kPi4), s = std::sin(kPi4);
  return c * Eigen::Matrix2cd::Identity() - kI * s * pauli2(axis + 1);
}

struct WorkingDecomposition {
  Eigen::Matrix2cd left_a, left_b, right_a, right_b;
  Complex phase;
};

// Replay one canonicalization decision list on the local factors.  Move
// algebra (E(mu) = exp(-i sum mu_k sigma_k sigma_k)):
//  * shift mu_i by -n pi/2:   E factors as E' * (-i sigma sigma)^n, so the
//    trailing locals absorb sigma_{i+1}^n on both qubits and the phase
//    gains (-i)^n;
//  * swap (i, j):  E(mu') = (u (x) u) E(mu) (u (x) u)^dagger with
//    u = quarter_rotation(third axis) — locals absorb u on both sides;
//  * pair flip via axis k:  conjugation by sigma_{k+1} (x) 1 negates the
//    other two interaction terms — first-qubit locals absorb sigma_{k+1}.
void replay(WorkingDecomposition& w, const CanonicalDecisions& dec) {
  auto shift = [&w](std::size_t comp, long n) {
    if (n == 0) return;
    if (((n % 2) + 2) % 2 == 1) {
      Eigen::Matrix2cd s = pauli2(comp + 1);
      w.right_a = s * w.right_a;
      w.right_b = s * w.right_b;
    }
    static const Complex powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    w.phase *= powers[((n % 4) + 4) % 4];
  };
  auto swap_move = [&w](std::size_t i, std::size_t j) {
    std::size_t axis = 3 - i - j;
    Eigen::Matrix2cd u = quarter_rotation(axis);
    Eigen::Matrix2cd ud = u.adjoint();
    w.left_a = w.left_a * ud;
    w.left_b = w.left_b * ud;
    w.right_a = u * w.right_a;
    w.right_b = u * w.right_b;
  };
  auto flip_move = [&w](std::size_t axis) {
    Eigen::Matrix2cd s = pauli2(axis + 1);
    w.left_a = w.left_a * s;
    w.right_a = s * w.right_a;
  };

  for (std::size_t i = 0; i < 3; ++i) shift(i, dec.shifts[i]);
  for (const auto& sw : dec.swaps) swap_move(sw[0], sw[1]);
  for (std::size_t axis : dec.flip_axes) flip_move(axis);
  if (dec.boundary) {
    flip_move(1);
    shift(0, -1);
  }
}

}  // namespace

ComplexTensor canonical_gate(const std::array<double, 3>& mu) {
  ComplexTensor out = ComplexTensor::identity(4);
  for (std::size_t k = 0; k < 3; ++k) {
    ComplexTensor pp = kron(gates::pauli(k + 1), gates::pauli(k + 1));
    ComplexTensor factor = ComplexTensor::identity(4);
    factor *= Complex{std::cos(mu[k]), 0.0};
    pp *= -kI * std::sin(mu[k]);
    factor += pp;
    out = matmul(out, factor);
  }
  return out;
}

ComplexTensor reconstruct(const CartanParams& p) {
  ComplexTensor left = kron(p.left_a, p.left_b);
  ComplexTensor right = kron(p.right_a, p.right_b);
  ComplexTensor out = matmul(matmul(left, canonical_gate(p.mu)), right);
  out *= p.global_phase;
  return out;
}

std::array<double, 3> mu_invariants(const ComplexTensor& u4) {
  MagicEigensystem sys = magic_eigensystem(u4);
  return canonicalize_mu(mu_from_phases(sys.h)).mu;
}

CartanParams cartan_decompose(const ComplexTensor& u4) {
  MagicEigensystem sys = magic_eigensystem(u4);
  Eigen::Matrix4cd m = magic_basis();

  // v_magic = K1 diag(e^{-ih}) K2 with K2 = q^T and K1 = v_magic q e^{+ih}.
  // K1 is automatically real orthogonal: it is unitary, and
  // K1^T K1 = e^{ih} q^T S q e^{ih} = 1 (complex orthogonality), which for a
  // unitary matrix forces realness.
  Eigen::Vector4cd inv_a;
  for (int j = 0; j < 4; ++j) inv_a(j) = std::exp(kI * sys.h[j]);
  Eigen::Matrix4cd k1 = sys.v_magic * sys.q * inv_a.asDiagonal();
  if (k1.imag().cwiseAbs().maxCoeff() > 1e-7 ||
      (k1.transpose() * k1 - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() >
          1e-7)
    throw NumericalFailure("cartan: outer factor failed the realness check");

  // Back to the computational frame; the pseudo-inverse mu drops the mean
  // eigenphase, which reappears as the global phase e^{-i sum(h)/4}.
  std::array<double, 3> mu_raw = mu_from_phases(sys.h);
  double hsum = sys.h[0] + sys.h[1] + sys.h[2] + sys.h[3];

  ProductFactors lf = factor_product(m * k1 * m.adjoint());
  ProductFactors rf = factor_product(m * sys.q.transpose().cast<Complex>() *
                                     m.adjoint());

  WorkingDecomposition w;
  w.left_a = lf.a;
  w.left_b = lf.b;
  w.right_a = rf.a;
  w.right_b = rf.b;
  w.phase = sys.det_root * lf.phase * rf.phase * std::exp(-kI * (hsum / 4.0));

  CanonicalDecisions dec = canonicalize_mu(mu_raw);
  replay(w, dec);

  // The replayed moves multiply Paulis into the locals; restore SU(2)
  // normalization and push the determinants into the global phase.
  auto normalize = [&w](Eigen::Matrix2cd& f) {
    Complex root = std::sqrt(f.determinant());
    f /= root;
    w.phase *= root;
  };
  normalize(w.left_a);
  normalize(w.left_b);
  normalize(w.right_a);
  normalize(w.right_b);

  CartanParams out;
  out.mu = dec.mu;
  auto to_tensor = [](const Eigen::Matrix2cd& f) {
    return detail::from_eigen(Eigen::MatrixXcd(f));
  };
  out.left_a = to_tensor(w.left_a);
  out.left_b = to_tensor(w.left_b);
  out.right_a = to_tensor(w.right_a);
  out.right_b = to_tensor(w.right_b);
  out.global_phase = w.phase;

  if (max_abs_diff(reconstruct(out), u4) > 1e-8)
    throw NumericalFailure("cartan: reconstruction residual above 1e-8");
  return out;
}

CartanParams cartan_decompose(const GateDescriptor& g) {
  if (g.structure.num_parties() != 2 || g.structure.slot_dims()[0] != 2 ||
      g.structure.slot_dims()[1] != 2)
    throw InvalidInput("cartan_decompose: needs a two-qubit gate");
  return cartan_decompose(g.matrix);
}

std::array<Complex, 4> choi_coefficients(const std::array<double, 3>& mu) {
  double c1 = std::cos(mu[0]), s1 = std::sin(mu[0]);
  double c2 = std::cos(mu[1]), s2 = std::sin(mu[1]);
  double c3 = std::cos(mu[2]), s3 = std::sin(mu[2]);
  return {Complex{c1 * c2 * c3, -s1 * s2 * s3},
          Complex{c1 * s2 * s3, -s1 * c2 * c3},
          Complex{s1 * c2 * s3, -c1 * s2 * c3},
          Complex{s1 * s2 * c3, -c1 * c2 * s3}};
}

std::size_t rank_from_mu(const std::array<double, 3>& mu, double tol) {
  std::array<Complex, 4> a = choi_coefficients(mu);
  double amax = 0.0;
  for (const Complex& z : a) amax = std::max(amax, std::abs(z));
  std::size_t count = 0;
  for (const Complex& z : a)
    if (std::abs(z) > tol * amax) ++count;
  return count;
}

const char* to_string(TwoQubitClass c) {
  switch (c) {
    case TwoQubitClass::Local:
      return "Local";
    case TwoQubitClass::CnotClass:
      return "CnotClass";
    case TwoQubitClass::SwapClass:
      return "SwapClass";
  }
  return "?";
}

TwoQubitClass two_qubit_class(const ComplexTensor& u4, double tol) {
  std::size_t r = rank_from_mu(mu_invariants(u4), tol);
  switch (r) {
    case 1:
      return TwoQubitClass::Local;
    case 2:
      return TwoQubitClass::CnotClass;
    case 4:
      return TwoQubitClass::SwapClass;
    default:
      throw NumericalFailure(
          "two_qubit_class: coefficient count " + std::to_string(r) +
          " is outside {1, 2, 4} — rank tolerance failure");
  }
}

}  // namespace slocc
