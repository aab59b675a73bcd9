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

#include "spcpm/cpm.hpp"

namespace spcpm {

/**
 * Unitary realization Phi(Q) = Tr_a(U (Q (x) |a_0><a_0|) U^dagger) of a
 * trace-preserving SP channel on a single decomposed space.
 *
 * U = V1 + V2 where V_i V_i^dagger = V_i^dagger V_i = P_si (x) 1_a. Joint
 * indices are system-major: (s, a) -> s * ancilla_dim + a, and the ancilla
 * reference state |a_0> is coordinate 0.
 */
struct UnitaryDilation {
  DecomposedSpace space;
  Index ancilla_dim;
  ComplexMatrix u;
  ComplexMatrix v1;
  ComplexMatrix v2;
};

/// Worst-case residuals of the structural identities a dilation must meet.
struct DilationResiduals {
  double sum = 0.0;          // ||U - V1 - V2||_F
  double unitarity = 0.0;    // max of ||U^dagger U - I||_F, ||U U^dagger - I||_F
  double isometry = 0.0;     // max_i of ||V_i V_i^dagger - P_i (x) 1||_F and
                             // ||V_i^dagger V_i - P_i (x) 1||_F
  double support = 0.0;      // max_i ||(P_i (x) 1) V_i (P_i (x) 1) - V_i||_F
};

/**
 * Builds the dilation from a minimal Kraus set of rep.
 *
 * The Kraus list is first reduced to K = K(phi) linearly independent
 * operators and split into blocks V_{i,k}; the ancilla then has dimension
 * K + 1. Throws SourceTargetMismatch, NotTracePreserving or NotSP.
 */
UnitaryDilation build_dilation(
    const KrausRep& rep, double tol = linalg::kDefaultTol);

ComplexMatrix apply_dilation(
    const UnitaryDilation& dil, const ComplexMatrix& q);

/// Kraus operators <a_k| U |a_0> of the channel the dilation induces.
KrausRep induced_channel(const UnitaryDilation& dil);

DilationResiduals dilation_residuals(const UnitaryDilation& dil);

/// All structural residuals within tol, the induced channel agrees with rep
/// on every matrix unit, and the induced channel is SP.
bool verify_dilation(
    const UnitaryDilation& dil, const KrausRep& rep,
    double tol = linalg::kDefaultTol);

}  // namespace spcpm
