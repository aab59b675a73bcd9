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

#include "spcpm/dilation.hpp"

#include <algorithm>
#include <sstream>

#include "spcpm/error.hpp"
#include "spcpm/sp.hpp"

namespace spcpm {

namespace {

// |a_i><a_j| on the ancilla.
ComplexMatrix ancilla_unit(Index dim, Index i, Index j) {
  return linalg::matrix_unit(dim, dim, i, j);
}

// P (x) 1 - P (x) |a0><a0| - sum_kk' V_k V_k'^dagger (x) |a_k><a_k'|
//   + sum_k V_k (x) |a_k><a_0| + sum_k V_k^dagger (x) |a_0><a_k|
ComplexMatrix block_partial_isometry(
    const ComplexMatrix& p, const std::vector<ComplexMatrix>& blocks,
    Index ancilla_dim) {
  const ComplexMatrix id_a = ComplexMatrix::Identity(ancilla_dim, ancilla_dim);
  ComplexMatrix v = linalg::tensor(p, id_a) -
                    linalg::tensor(p, ancilla_unit(ancilla_dim, 0, 0));
  const auto k_count = static_cast<Index>(blocks.size());
  for (Index k = 0; k < k_count; ++k) {
    const ComplexMatrix& vk = blocks[static_cast<std::size_t>(k)];
    for (Index kp = 0; kp < k_count; ++kp) {
      const ComplexMatrix& vkp = blocks[static_cast<std::size_t>(kp)];
      v -= linalg::tensor(
          vk * vkp.adjoint(), ancilla_unit(ancilla_dim, k + 1, kp + 1));
    }
    v += linalg::tensor(vk, ancilla_unit(ancilla_dim, k + 1, 0));
    v += linalg::tensor(vk.adjoint(), ancilla_unit(ancilla_dim, 0, k + 1));
  }
  return v;
}

}  // namespace

UnitaryDilation build_dilation(const KrausRep& rep, double tol) {
  if (rep.source() != rep.target()) {
    std::ostringstream os;
    os << "source (" << rep.source().d1() << ", " << rep.source().d2()
       << ") and target (" << rep.target().d1() << ", " << rep.target().d2()
       << ") decompositions differ";
    throw Error(ErrorCode::source_target_mismatch, os.str());
  }
  if (!is_trace_preserving(rep, tol)) {
    throw Error(
        ErrorCode::not_trace_preserving,
        "only trace-preserving channels admit a unitary dilation");
  }
  const SpCheck sp = check_sp_kraus_blocks(rep, tol);
  if (!sp) {
    std::ostringstream os;
    os << sp.violated << " fails with residual " << sp.residual;
    throw Error(ErrorCode::not_sp, os.str());
  }

  const KrausRep minimal = f_to_kraus(kraus_to_f(rep));
  const KrausBlocks blocks = split_kraus_blocks(minimal, tol);
  const auto ancilla_dim = static_cast<Index>(minimal.size()) + 1;
  const DecomposedSpace& space = rep.source();

  UnitaryDilation dil{space, ancilla_dim, {}, {}, {}};
  dil.v1 = block_partial_isometry(
      projector(space, Block::first), blocks.first, ancilla_dim);
  dil.v2 = block_partial_isometry(
      projector(space, Block::second), blocks.second, ancilla_dim);
  dil.u = dil.v1 + dil.v2;
  return dil;
}

ComplexMatrix apply_dilation(
    const UnitaryDilation& dil, const ComplexMatrix& q) {
  const Index d = dil.space.dim();
  if (q.rows() != d || q.cols() != d) {
    std::ostringstream os;
    os << "input is " << q.rows() << "x" << q.cols() << ", expected " << d
       << "x" << d;
    throw Error(ErrorCode::shape_mismatch, os.str());
  }
  const ComplexMatrix joint =
      linalg::tensor(q, ancilla_unit(dil.ancilla_dim, 0, 0));
  return linalg::partial_trace_ancilla(
      dil.u * joint * dil.u.adjoint(), d, dil.ancilla_dim);
}

KrausRep induced_channel(const UnitaryDilation& dil) {
  const Index d = dil.space.dim();
  std::vector<ComplexMatrix> ops;
  for (Index k = 0; k < dil.ancilla_dim; ++k) {
    ComplexMatrix op(d, d);
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        op(i, j) = dil.u(i * dil.ancilla_dim + k, j * dil.ancilla_dim);
      }
    }
    ops.push_back(std::move(op));
  }
  return KrausRep(dil.space, dil.space, std::move(ops));
}

DilationResiduals dilation_residuals(const UnitaryDilation& dil) {
  const Index n = dil.u.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix id_a =
      ComplexMatrix::Identity(dil.ancilla_dim, dil.ancilla_dim);

  DilationResiduals r;
  r.sum = (dil.u - dil.v1 - dil.v2).norm();
  r.unitarity = std::max(
      (dil.u.adjoint() * dil.u - id).norm(),
      (dil.u * dil.u.adjoint() - id).norm());
  const ComplexMatrix* parts[2] = {&dil.v1, &dil.v2};
  for (int i = 0; i < 2; ++i) {
    const ComplexMatrix& v = *parts[i];
    const ComplexMatrix p = linalg::tensor(
        projector(dil.space, i == 0 ? Block::first : Block::second), id_a);
    r.isometry = std::max(
        {r.isometry, (v * v.adjoint() - p).norm(),
         (v.adjoint() * v - p).norm()});
    r.support = std::max(r.support, (p * v * p - v).norm());
  }
  return r;
}

bool verify_dilation(
    const UnitaryDilation& dil, const KrausRep& rep, double tol) {
  const Index expected = dil.space.dim() * dil.ancilla_dim;
  if (dil.u.rows() != expected || dil.u.cols() != expected ||
      dil.v1.rows() != expected || dil.v1.cols() != expected ||
      dil.v2.rows() != expected || dil.v2.cols() != expected) {
    return false;
  }
  if (rep.source() != dil.space || rep.target() != dil.space) return false;

  const DilationResiduals r = dilation_residuals(dil);
  if (r.sum > tol || r.unitarity > tol || r.isometry > tol ||
      r.support > tol) {
    return false;
  }
  for (const ComplexMatrix& q : spanning_inputs(dil.space.dim())) {
    if ((apply_dilation(dil, q) - spcpm::apply(rep, q)).norm() > tol) return false;
  }
  return is_sp_definition(induced_channel(dil), tol);
}

}  // namespace spcpm
