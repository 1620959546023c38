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

#pragma once

#include <cstddef>
#include <vector>

#include <doctest.h>

#include "slocc/linalg.hpp"
#include "slocc/state.hpp"
#include "slocc/tensor.hpp"

namespace slocc_test {

using slocc::Complex;
using slocc::ComplexTensor;

/// Matrix product by a plain triple loop — an oracle independent of the
/// library's backend.
inline ComplexTensor naive_matmul(const ComplexTensor& a,
                                  const ComplexTensor& b) {
  std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  REQUIRE(b.rows() == k);
  ComplexTensor out({n, m});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Complex s = 0.0;
      for (std::size_t l = 0; l < k; ++l) s += a[i * k + l] * b[l * m + j];
      out[i * m + j] = s;
    }
  return out;
}

/// Basis column vector |k> of the given dimension.
inline ComplexTensor basis_vec(std::size_t dim, std::size_t k) {
  ComplexTensor v({dim});
  v[k] = 1.0;
  return v;
}

/// Haar-random two-qubit gate with parties A, B.
inline slocc::GateDescriptor haar_gate2(std::uint64_t seed) {
  return {slocc::haar_random_unitary(4, seed),
          slocc::PartyStructure::qudits(2, 2)};
}

/// Random single-qubit unitary.
inline ComplexTensor haar1(std::uint64_t seed) {
  return slocc::haar_random_unitary(2, seed);
}

/// 2x2 determinant by hand.
inline Complex det2(const ComplexTensor& m) {
  return m[0] * m[3] - m[1] * m[2];
}

inline void check_close(const ComplexTensor& a, const ComplexTensor& b,
                        double tol) {
  REQUIRE(a.shape() == b.shape());
  CHECK(slocc::max_abs_diff(a, b) <= tol);
}

}  // namespace slocc_test
