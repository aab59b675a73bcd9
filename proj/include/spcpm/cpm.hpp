// Copyright 2026 The spcpm Authors
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

#include <string_view>
#include <vector>

#include "spcpm/linalg.hpp"
#include "spcpm/spaces.hpp"

namespace spcpm {

/**
 * A completely positive map Q -> sum_k V_k Q V_k^dagger.
 *
 * Every operator is target.dim() x source.dim() and finite. The list is
 * never empty; the zero map is a single zero operator.
 */
class KrausRep {
 public:
  KrausRep(
      DecomposedSpace source, DecomposedSpace target,
      std::vector<ComplexMatrix> ops);

  const DecomposedSpace& source() const noexcept { return source_; }
  const DecomposedSpace& target() const noexcept { return target_; }
  const std::vector<ComplexMatrix>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }

 private:
  DecomposedSpace source_;
  DecomposedSpace target_;
  std::vector<ComplexMatrix> ops_;
};

/// Ordering of the operator basis of L(H_S, H_T) an F-matrix refers to.
enum class OperatorBasis {
  // Index m = i * source.dim() + j is |t_i><s_j|.
  matrix_units,
};

std::string_view to_string(OperatorBasis basis) noexcept;

/// phi(Q) = sum_{m,n} F_{mn} E_m Q E_n^dagger over the declared basis.
class FMatrixRep {
 public:
  FMatrixRep(
      DecomposedSpace source, DecomposedSpace target, ComplexMatrix f,
      OperatorBasis basis = OperatorBasis::matrix_units);

  const DecomposedSpace& source() const noexcept { return source_; }
  const DecomposedSpace& target() const noexcept { return target_; }
  OperatorBasis basis() const noexcept { return basis_; }
  const ComplexMatrix& f() const noexcept { return f_; }

 private:
  DecomposedSpace source_;
  DecomposedSpace target_;
  OperatorBasis basis_;
  ComplexMatrix f_;
};

/// A Kraus operator written as sqrt(weight) * op with Tr(op^dagger op) = 1.
struct WeightedOperator {
  double weight;
  ComplexMatrix op;
};

KrausRep identity_channel(const DecomposedSpace& space);

/// Matrix units |i><j| of L(C^dim), the spanning set for all "for all Q"
/// checks.
std::vector<ComplexMatrix> spanning_inputs(Index dim);

ComplexMatrix apply(const KrausRep& rep, const ComplexMatrix& q);
ComplexMatrix apply_f(const FMatrixRep& rep, const ComplexMatrix& q);

/// Row-major coefficients of V in the matrix-unit basis.
ComplexVector basis_coefficients(const ComplexMatrix& v);

FMatrixRep kraus_to_f(const KrausRep& rep);

/**
 * Linearly independent Kraus set read off the eigendecomposition of F.
 *
 * One operator sqrt(d_n) * reshape(u_n) per eigenvalue d_n above the rank
 * threshold, in ascending eigenvalue order. Throws NotPSD when F has an
 * eigenvalue below -rtol * max(1, max |d|).
 */
KrausRep f_to_kraus(
    const FMatrixRep& rep, double rtol = linalg::kDefaultRankTol);

/// Kraus number: rank of F.
std::size_t kraus_number(
    const KrausRep& rep, double rtol = linalg::kDefaultRankTol);

/// V'_k = sum_j U_{kj} V_j.
KrausRep unitary_mix(const KrausRep& rep, const ComplexMatrix& u);

/// Kraus operators orthonormal in the Hilbert-Schmidt inner product.
std::vector<WeightedOperator> orthonormal_kraus(
    const KrausRep& rep, double rtol = linalg::kDefaultRankTol);

/// b after a.
KrausRep compose(const KrausRep& b, const KrausRep& a);

bool is_trace_preserving(
    const KrausRep& rep, double tol = linalg::kDefaultTol);

/// ||F_a - F_b||_F <= tol in the matrix-unit basis.
bool channels_equal(
    const KrausRep& a, const KrausRep& b, double tol = linalg::kDefaultTol);

}  // namespace spcpm
