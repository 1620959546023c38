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

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "helpers.hpp"
#include "slocc/gates.hpp"
#include "slocc/tensor.hpp"

using namespace slocc;
using slocc_test::basis_vec;
using slocc_test::check_close;
using slocc_test::naive_matmul;

namespace {

ComplexTensor random_tensor(std::vector<std::size_t> shape,
                            std::uint64_t seed) {
  Rng rng(seed);
  std::size_t total = 1;
  for (std::size_t d : shape) total *= d;
  std::vector<Complex> data(total);
  for (Complex& z : data) z = rng.normal_complex();
  return {std::move(shape), std::move(data)};
}

}  // namespace

TEST_CASE("flat index utilities follow the row-major convention") {
  std::vector<std::size_t> dims{2, 3, 4};
  CHECK(row_major_strides(dims) == std::vector<std::size_t>{12, 4, 1});

  std::vector<std::size_t> idx{1, 2, 3};
  CHECK(flatten_index(idx, dims) == 23);  // 1*12 + 2*4 + 3

  std::vector<std::size_t> out(3);
  unflatten_index(23, dims, out);
  CHECK(out == idx);

  // Round trip over the whole range.
  for (std::size_t flat = 0; flat < 24; ++flat) {
    unflatten_index(flat, dims, out);
    CHECK(flatten_index(out, dims) == flat);
  }
}

TEST_CASE("ComplexTensor shape plumbing and element access") {
  ComplexTensor t({2, 3});
  CHECK(t.size() == 6);
  CHECK(t.rows() == 2);
  CHECK(t.cols() == 3);
  t.at({1, 2}) = Complex(5.0, -1.0);
  CHECK(t[1 * 3 + 2] == Complex(5.0, -1.0));

  CHECK_THROWS_AS(t.at({2, 0}), InvalidInput);
  CHECK_THROWS_AS(t.at({0}), InvalidInput);
  CHECK_THROWS_AS(ComplexTensor({2, 2}, {Complex{1.0}}), InvalidInput);

  ComplexTensor r = t.reshaped({3, 2});
  CHECK(r[5] == Complex(5.0, -1.0));
  CHECK_THROWS_AS(t.reshaped({4, 2}), InvalidInput);

  ComplexTensor id = ComplexTensor::identity(3);
  CHECK(id.trace() == Complex(3.0, 0.0));
}

TEST_CASE("conjugate, transpose, dagger and norms") {
  ComplexTensor m({2, 2}, {Complex(1, 2), Complex(3, -4),  //
                           Complex(0, 1), Complex(-2, 0)});
  ComplexTensor mt = m.transpose();
  CHECK(mt[1] == Complex(0, 1));
  CHECK(mt[2] == Complex(3, -4));
  ComplexTensor md = m.dagger();
  CHECK(md[1] == Complex(0, -1));
  CHECK(md[2] == Complex(3, 4));
  CHECK(m.conjugate()[0] == Complex(1, -2));

  // Frobenius norm: sqrt(1+4+9+16+1+4) = sqrt(35).
  CHECK(m.norm() == doctest::Approx(std::sqrt(35.0)).epsilon(1e-14));
  CHECK(m.max_abs() == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("kron matches its defining index formula") {
  ComplexTensor a = random_tensor({2, 3}, 11);
  ComplexTensor b = random_tensor({3, 2}, 12);
  ComplexTensor k = kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q) {
          Complex want = a[i * 3 + j] * b[p * 2 + q];
          CHECK(k[(i * 3 + p) * 6 + (j * 2 + q)] == want);
        }
}

TEST_CASE("kron is associative entrywise") {
  ComplexTensor a = random_tensor({2, 2}, 21);
  ComplexTensor b = random_tensor({3, 1}, 22);
  ComplexTensor c = random_tensor({2, 4}, 23);
  // Entry products regroup as (a*b)*c vs a*(b*c): equal up to one rounding.
  check_close(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-14);
}

TEST_CASE("matmul agrees with a naive triple loop") {
  ComplexTensor a = random_tensor({5, 7}, 31);
  ComplexTensor b = random_tensor({7, 3}, 32);
  check_close(matmul(a, b), naive_matmul(a, b), 1e-13);
  CHECK_THROWS_AS(matmul(a, a), InvalidInput);
}

TEST_CASE("apply_matrix and outer products") {
  ComplexTensor m = random_tensor({3, 3}, 41);
  ComplexTensor v = random_tensor({3}, 42);
  ComplexTensor got = apply_matrix(m, v);
  for (std::size_t i = 0; i < 3; ++i) {
    Complex want = 0.0;
    for (std::size_t j = 0; j < 3; ++j) want += m[i * 3 + j] * v[j];
    CHECK(std::abs(got[i] - want) < 1e-13);
  }

  ComplexTensor w = random_tensor({2}, 43);
  ComplexTensor o = outer(v, w);
  REQUIRE(o.rows() == 3);
  REQUIRE(o.cols() == 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(o[i * 2 + j] == v[i] * std::conj(w[j]));
}

TEST_CASE("equal_up_to_phase detects global phases only") {
  ComplexTensor a = random_tensor({4}, 51);
  ComplexTensor b = a;
  b *= std::exp(Complex(0.0, 1.234));
  CHECK(equal_up_to_phase(a, b, 1e-12));
  b[2] += 0.1;
  CHECK_FALSE(equal_up_to_phase(a, b, 1e-6));
}

TEST_CASE("PartyStructure bookkeeping") {
  PartyStructure s = PartyStructure::qudits(3, 2);
  CHECK(s.num_parties() == 3);
  CHECK(s.num_slots() == 3);
  CHECK(s.total_dim() == 8);
  CHECK(s.parties() == std::vector<std::string>{"A", "B", "C"});
  CHECK(s.slot_name(2) == "C1");

  PartyStructure d = s.choi_doubled();
  CHECK(d.num_parties() == 3);
  CHECK(d.num_slots() == 6);
  CHECK(d.slot_dims() == std::vector<std::size_t>(6, 2));
  CHECK(d.slots_of_party(1) == std::vector<std::size_t>{2, 3});
  CHECK(d.slot_name(3) == "B2");
  CHECK(d.slot_party(4) == 2);

  PartyStructure mixed({"X", "Y"}, {{2, 3}, {4}});
  CHECK(mixed.total_dim() == 24);
  CHECK(mixed.slots_of_party(0) == std::vector<std::size_t>{0, 1});
  CHECK(mixed.slot_name(1) == "X2");
  CHECK_FALSE(mixed.same_dims(s));
  CHECK(mixed.same_dims(PartyStructure({"P", "Q"}, {{2, 3}, {4}})));

  CHECK_THROWS_AS(PartyStructure({"A"}, {{2}, {2}}), InvalidInput);
  CHECK_THROWS_AS(PartyStructure({"A", "A"}, {{2}, {2}}), InvalidInput);
  CHECK_THROWS_AS(PartyStructure({"A"}, {{0}}), InvalidInput);
  CHECK_THROWS_AS(PartyStructure::qudits(0, 2), InvalidInput);
}

TEST_CASE("partial_trace: hand example on a Bell pair") {
  // rho = |Phi><Phi| for Phi = (|00> + |11>)/sqrt(2); tracing either slot
  // leaves the maximally mixed qubit.
  ComplexTensor phi({4});
  phi[0] = phi[3] = 1.0 / std::numbers::sqrt2;
  ComplexTensor rho = outer(phi, phi);
  std::vector<std::size_t> dims{2, 2};

  std::vector<std::size_t> keep0{0};
  ComplexTensor r0 = partial_trace(rho, keep0, dims);
  ComplexTensor half = ComplexTensor::identity(2);
  half *= 0.5;
  check_close(r0, half, 1e-15);

  std::vector<std::size_t> keep1{1};
  check_close(partial_trace(rho, keep1, dims), half, 1e-15);
}

TEST_CASE("partial_trace agrees with a direct index-sum oracle") {
  std::vector<std::size_t> dims{2, 3, 2};
  ComplexTensor rho = random_tensor({12, 12}, 61);
  std::vector<std::size_t> keep{0, 2};
  ComplexTensor got = partial_trace(rho, keep, dims);
  REQUIRE(got.rows() == 4);

  // Oracle: out[(i0,i2),(j0,j2)] = sum_t rho[(i0,t,i2),(j0,t,j2)].
  for (std::size_t i0 = 0; i0 < 2; ++i0)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j0 = 0; j0 < 2; ++j0)
        for (std::size_t j2 = 0; j2 < 2; ++j2) {
          Complex want = 0.0;
          for (std::size_t t = 0; t < 3; ++t) {
            std::size_t r = (i0 * 3 + t) * 2 + i2;
            std::size_t c = (j0 * 3 + t) * 2 + j2;
            want += rho[r * 12 + c];
          }
          CHECK(std::abs(got[(i0 * 2 + i2) * 4 + (j0 * 2 + j2)] - want) <
                1e-13);
        }
}

TEST_CASE("partial_trace preserves the trace for every kept subset") {
  std::vector<std::size_t> dims{2, 2, 3};
  ComplexTensor rho = random_tensor({12, 12}, 62);
  std::vector<std::vector<std::size_t>> subsets{
      {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  for (const auto& keep : subsets) {
    ComplexTensor reduced = partial_trace(rho, keep, dims);
    CHECK(std::abs(reduced.trace() - rho.trace()) < 1e-12);
  }
}

TEST_CASE("apply_to_slots acts on the right slots") {
  std::vector<std::size_t> dims{2, 2};
  ComplexTensor psi00({4});
  psi00[0] = 1.0;

  std::vector<std::size_t> slot1{1};
  ComplexTensor x = gates::pauli(1);
  ComplexTensor got = apply_to_slots(x, slot1, psi00, dims);
  check_close(got, basis_vec(4, 1), 1e-15);  // |00> -> |01>

  std::vector<std::size_t> slot0{0};
  got = apply_to_slots(x, slot0, psi00, dims);
  check_close(got, basis_vec(4, 2), 1e-15);  // |00> -> |10>
}

TEST_CASE("apply_to_slots equals the kron-embedded operator") {
  std::vector<std::size_t> dims{2, 3, 2};
  ComplexTensor psi = random_tensor({12}, 71);
  ComplexTensor op = random_tensor({3, 3}, 72);
  std::vector<std::size_t> slots{1};
  ComplexTensor got = apply_to_slots(op, slots, psi, dims);
  ComplexTensor embedded =
      kron(kron(ComplexTensor::identity(2), op), ComplexTensor::identity(2));
  check_close(got, apply_matrix(embedded, psi), 1e-13);

  // Two-slot operator on slots (0, 2): compare against a permuted embedding
  // computed entrywise.
  ComplexTensor op2 = random_tensor({4, 4}, 73);
  std::vector<std::size_t> slots02{0, 2};
  ComplexTensor got2 = apply_to_slots(op2, slots02, psi, dims);
  for (std::size_t i0 = 0; i0 < 2; ++i0)
    for (std::size_t i1 = 0; i1 < 3; ++i1)
      for (std::size_t i2 = 0; i2 < 2; ++i2) {
        Complex want = 0.0;
        for (std::size_t j0 = 0; j0 < 2; ++j0)
          for (std::size_t j2 = 0; j2 < 2; ++j2)
            want += op2[(i0 * 2 + i2) * 4 + (j0 * 2 + j2)] *
                    psi[(j0 * 3 + i1) * 2 + j2];
        CHECK(std::abs(got2[(i0 * 3 + i1) * 2 + i2] - want) < 1e-13);
      }
}

TEST_CASE("bipartition_matrix lays rows over the listed slots") {
  std::vector<std::size_t> dims{2, 3, 2};
  ComplexTensor psi = random_tensor({12}, 81);
  std::vector<std::size_t> rows{0, 2};
  ComplexTensor m = bipartition_matrix(psi, rows, dims);
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 3);
  for (std::size_t i0 = 0; i0 < 2; ++i0)
    for (std::size_t i1 = 0; i1 < 3; ++i1)
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        CHECK(m[(i0 * 2 + i2) * 3 + i1] == psi[(i0 * 3 + i1) * 2 + i2]);
}

TEST_CASE("reshuffle_operator satisfies its exact index identity") {
  PartyStructure s = PartyStructure::qudits(2, 2);
  ComplexTensor u = random_tensor({4, 4}, 91);
  ComplexTensor r = reshuffle_operator(u, s);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t ap = 0; ap < 2; ++ap)
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t bp = 0; bp < 2; ++bp)
          CHECK(r[(a * 2 + ap) * 4 + (b * 2 + bp)] ==
                u[(a * 2 + b) * 4 + (ap * 2 + bp)]);

  PartyStructure bad({"A", "B"}, {{2, 2}, {2}});
  CHECK_THROWS_AS(reshuffle_operator(random_tensor({8, 8}, 92), bad),
                  InvalidInput);
}

TEST_CASE("operator_permute_slots swaps kron factors") {
  ComplexTensor a = random_tensor({2, 2}, 93);
  ComplexTensor b = random_tensor({3, 3}, 94);
  std::vector<std::size_t> dims{2, 3};
  std::vector<std::size_t> perm{1, 0};  // result slot 0 <- input slot 1
  ComplexTensor got = operator_permute_slots(kron(a, b), perm, dims);
  check_close(got, kron(b, a), 1e-15);
}

TEST_CASE("tensor arithmetic operators") {
  ComplexTensor a = random_tensor({3, 3}, 95);
  ComplexTensor b = random_tensor({3, 3}, 96);
  ComplexTensor sum = a + b;
  for (std::size_t i = 0; i < 9; ++i) CHECK(sum[i] == a[i] + b[i]);
  ComplexTensor diff = a - b;
  for (std::size_t i = 0; i < 9; ++i) CHECK(diff[i] == a[i] - b[i]);
  ComplexTensor scaled = Complex(0.0, 2.0) * a;
  for (std::size_t i = 0; i < 9; ++i) CHECK(scaled[i] == Complex(0, 2) * a[i]);
  CHECK_THROWS_AS(a += random_tensor({2, 2}, 97), InvalidInput);
}
