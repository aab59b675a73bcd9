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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace spcpm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace linalg {

/// Relative cutoff below which an eigenvalue counts as zero.
inline constexpr double kDefaultRankTol = 1e-10;
/// Tolerance for positivity and residual checks.
inline constexpr double kDefaultTol = 1e-9;
/// Off-diagonal Frobenius mass (relative) at which Jacobi sweeps stop.
inline constexpr double kJacobiTol = 1e-14;

/**
 * Eigendecomposition M = V diag(eigenvalues) V^dagger of a Hermitian matrix.
 *
 * Eigenvalues are ascending. Each eigenvector column is phase-normalized so
 * that its first non-negligible entry is real and positive.
 */
struct HermitianEig {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

void require_finite(const ComplexMatrix& m, std::string_view what);
void require_square(const ComplexMatrix& m, std::string_view what);

/// ||M - M^dagger||_F.
double hermiticity_residual(const ComplexMatrix& m);

/**
 * Cyclic complex Jacobi eigensolver.
 *
 * The input must be square and Hermitian within
 * tol * max(1, ||M||_F); it is symmetrized as (M + M^dagger) / 2 first.
 * Output is a pure function of the input bits.
 */
HermitianEig hermitian_eig(const ComplexMatrix& m, double tol = kDefaultTol);

/// rtol * max(1, max |lambda|); eigenvalues at or below this are zero.
double zero_threshold(const RealVector& eigenvalues, double rtol);

std::size_t numerical_rank(
    const ComplexMatrix& hermitian, double rtol = kDefaultRankTol);

/// Moore-Penrose inverse of a Hermitian matrix via its eigendecomposition.
ComplexMatrix pseudo_inverse(
    const ComplexMatrix& b, double rtol = kDefaultRankTol);

/// Orthogonal projector onto the kernel of a Hermitian matrix, I - A A^+.
ComplexMatrix zero_space_projector(
    const ComplexMatrix& a, double rtol = kDefaultRankTol);

/// Hermitian within tol and min eigenvalue >= -tol * max(1, max |lambda|).
bool is_psd(const ComplexMatrix& m, double tol = kDefaultTol);

/// Which Schur-complement form the block positivity test uses.
enum class SchurSide {
  complement_of_b,  // A >= C B^+ C^dagger
  complement_of_a,  // B >= C^dagger A^+ C
};

/// [[A, C], [C^dagger, B]].
ComplexMatrix assemble_blocks(
    const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c);

/**
 * Positivity of [[A, C], [C^dagger, B]] decided from its blocks.
 *
 * True iff A and B are PSD, P_{A,0} C and C P_{B,0} vanish (relative to
 * max(1, ||C||_F)), and the chosen Schur complement is PSD.
 */
bool block_psd_check(
    const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
    double tol = kDefaultTol, SchurSide side = SchurSide::complement_of_b);

/// G_{mn} = Tr(V_m^dagger V_n).
ComplexMatrix gram_matrix(std::span<const ComplexMatrix> ops);

/// Kronecker product; the left factor carries the slow index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out the fast (right, ancilla) factor of a d_sys*d_anc matrix.
ComplexMatrix partial_trace_ancilla(
    const ComplexMatrix& m, Index d_sys, Index d_anc);

/// M^{-1/2} for Hermitian positive definite M.
ComplexMatrix inv_sqrt_psd(
    const ComplexMatrix& m, double rtol = kDefaultRankTol);

bool is_unitary(const ComplexMatrix& u, double tol);

/// |i><j| with the given shape.
ComplexMatrix matrix_unit(Index rows, Index cols, Index i, Index j);

/// Matrix with i.i.d. standard complex Gaussian entries (E|z|^2 = 1).
ComplexMatrix ginibre(Index rows, Index cols, std::mt19937_64& rng);

/// Haar-distributed unitary from the QR decomposition of a Ginibre matrix.
ComplexMatrix haar_unitary(Index n, std::mt19937_64& rng);

}  // namespace linalg
}  // namespace spcpm
