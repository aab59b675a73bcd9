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

#include <cstdint>
#include <string>
#include <vector>

#include "spcpm/cpm.hpp"

/**
 * @file sp.hpp
 * Subspace-preserving (SP) maps: those that move no weight from block 1 of
 * the source into block 2 of the target, nor from block 2 into block 1.
 *
 * Four independent verifiers are provided. For completely positive maps they
 * are equivalent; the trace-weight form additionally requires the map to be
 * trace preserving. Every "for all Q" condition is checked on the matrix
 * units of L(H_S), which suffices by linearity.
 */

namespace spcpm {

/// Outcome of one verifier: which identity failed first and by how much.
struct SpCheck {
  bool holds = true;
  std::string violated;
  double residual = 0.0;

  explicit operator bool() const noexcept { return holds; }
};

/// max(1, sum_k ||V_k||_F^2); residual tolerances are multiplied by this.
double map_scale(const KrausRep& rep);

/// Tr(P_t1 phi(Q)) = 0 on L(H_s2) and Tr(P_t2 phi(Q)) = 0 on L(H_s1).
SpCheck check_sp_definition(
    const KrausRep& rep, double tol = linalg::kDefaultTol);
bool is_sp_definition(const KrausRep& rep, double tol = linalg::kDefaultTol);

/// P_t2 V_k P_s1 = 0 and P_t1 V_k P_s2 = 0 for every Kraus operator.
SpCheck check_sp_kraus_blocks(
    const KrausRep& rep, double tol = linalg::kDefaultTol);
bool is_sp_kraus_blocks(
    const KrausRep& rep, double tol = linalg::kDefaultTol);

/// P_ti phi(Q) P_tj = phi(P_si Q P_sj) for i, j in {1, 2}, plus the
/// reconstruction phi(Q) = sum_ij P_ti phi(P_si Q P_sj) P_tj.
SpCheck check_sp_commutation(
    const KrausRep& rep, double tol = linalg::kDefaultTol);
bool is_sp_commutation(
    const KrausRep& rep, double tol = linalg::kDefaultTol);

/// Tr(P_t1 phi(Q)) = Tr(P_s1 Q) and Tr(P_t2 phi(Q)) = Tr(P_s2 Q).
/// Throws NotTracePreserving unless the map is trace preserving at tol.
SpCheck check_sp_trace(const KrausRep& rep, double tol = linalg::kDefaultTol);
bool is_sp_trace(const KrausRep& rep, double tol = linalg::kDefaultTol);

/// V_k = V_{1,k} + V_{2,k} with V_{i,k} = P_ti V_k P_si.
struct KrausBlocks {
  std::vector<ComplexMatrix> first;
  std::vector<ComplexMatrix> second;
};

/// Throws NotSP if any Kraus operator couples the blocks.
KrausBlocks split_kraus_blocks(
    const KrausRep& rep, double tol = linalg::kDefaultTol);

/**
 * An SP map as the triple (A, B, C).
 *
 * A is indexed by the matrix units of L(H_s1, H_t1) (k = i * d_s1 + j for
 * |t1_i><s1_j|), B likewise over L(H_s2, H_t2), and C couples the two:
 *
 *   phi(Q) = sum A_{kk'} V_k Q V_k'^dagger + sum B_{ll'} W_l Q W_l'^dagger
 *          + sum C_{kl} V_k Q W_l^dagger + sum conj(C_{kl}) W_l Q V_k^dagger.
 *
 * The shapes are validated on construction; the positivity conditions are
 * checked by check_sp_block_conditions.
 */
class SPBlockRep {
 public:
  SPBlockRep(
      DecomposedSpace source, DecomposedSpace target, ComplexMatrix a,
      ComplexMatrix b, ComplexMatrix c);

  const DecomposedSpace& source() const noexcept { return source_; }
  const DecomposedSpace& target() const noexcept { return target_; }
  const ComplexMatrix& a() const noexcept { return a_; }
  const ComplexMatrix& b() const noexcept { return b_; }
  const ComplexMatrix& c() const noexcept { return c_; }

 private:
  DecomposedSpace source_;
  DecomposedSpace target_;
  ComplexMatrix a_;
  ComplexMatrix b_;
  ComplexMatrix c_;
};

/// Index of the basis element |t_i><s_j| of L(H_s_block, H_t_block) inside
/// the full matrix-unit basis of L(H_S, H_T).
Index full_basis_index(
    const DecomposedSpace& source, const DecomposedSpace& target, Block block,
    Index intra_index);

/// A >= 0, B >= 0, P_{A,0} C = 0, C P_{B,0} = 0, Schur complement >= 0.
SpCheck check_sp_block_conditions(
    const SPBlockRep& blocks, double tol = linalg::kDefaultTol,
    linalg::SchurSide side = linalg::SchurSide::complement_of_b);

/// Full F-matrix of the SP map; throws ConditionsViolated naming the
/// failed condition.
FMatrixRep sp_from_blocks(
    const SPBlockRep& blocks, double tol = linalg::kDefaultTol);

/// Inverse of sp_from_blocks. Throws NotSP if a Kraus operator couples the
/// blocks, ResidualOffBlock if F has mass outside the intra-block slots.
SPBlockRep blocks_from_sp(
    const KrausRep& rep, double tol = linalg::kDefaultTol);

/// Frobenius mass of F outside the [[A, C], [C^dagger, B]] slots.
double off_block_mass(const FMatrixRep& rep);

/**
 * Random SP map with k Kraus operators V_{1,i} + V_{2,i} whose block entries
 * are i.i.d. standard complex Gaussians. With tp set, every operator is
 * right-multiplied by S^{-1/2}, S = sum_i V_i^dagger V_i, which is block
 * diagonal, so the result stays SP and becomes trace preserving. A singular
 * S is resampled up to 8 times before SingularNormalizer is thrown.
 */
KrausRep random_sp_channel(
    const DecomposedSpace& source, const DecomposedSpace& target,
    std::size_t k, bool tp, std::uint64_t seed);

/// Valid (A, B, C) sliced from G G^dagger with G a (K+L) x rank Ginibre
/// matrix.
SPBlockRep random_sp_blocks(
    const DecomposedSpace& source, const DecomposedSpace& target,
    Index rank, std::uint64_t seed);

/// d_s1 * d_t1 + d_s2 * d_t2.
std::size_t sp_kraus_bound(
    const DecomposedSpace& source, const DecomposedSpace& target);

/// kraus_number(rep) <= sp_kraus_bound; throws NotSP for non-SP input.
bool sp_kraus_bound_holds(
    const KrausRep& rep, double tol = linalg::kDefaultTol);

}  // namespace spcpm
