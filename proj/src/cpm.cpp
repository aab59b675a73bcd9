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

#include "spcpm/cpm.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "spcpm/error.hpp"

namespace spcpm {

namespace {

void require_input_shape(const ComplexMatrix& q, Index dim) {
  if (q.rows() != dim || q.cols() != dim) {
    std::ostringstream os;
    os << "input is " << q.rows() << "x" << q.cols() << ", expected " << dim
       << "x" << dim;
    throw Error(ErrorCode::shape_mismatch, os.str());
  }
}

void require_same_dims(const KrausRep& a, const KrausRep& b) {
  if (a.source().dim() != b.source().dim() ||
      a.target().dim() != b.target().dim()) {
    std::ostringstream os;
    os << "maps " << a.source().dim() << "->" << a.target().dim() << " and "
       << b.source().dim() << "->" << b.target().dim()
       << " act between different spaces";
    throw Error(ErrorCode::dimension_mismatch, os.str());
  }
}

ComplexMatrix reshape_row_major(const ComplexVector& c, Index rows, Index cols) {
  ComplexMatrix v(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) v(i, j) = c(i * cols + j);
  }
  return v;
}

}  // namespace

KrausRep::KrausRep(
    DecomposedSpace source, DecomposedSpace target,
    std::vector<ComplexMatrix> ops)
    : source_(source), target_(target), ops_(std::move(ops)) {
  if (ops_.empty()) {
    throw Error(ErrorCode::empty_set, "a Kraus representation needs operators");
  }
  for (const ComplexMatrix& op : ops_) {
    if (op.rows() != target_.dim() || op.cols() != source_.dim()) {
      std::ostringstream os;
      os << "Kraus operator is " << op.rows() << "x" << op.cols()
         << ", expected " << target_.dim() << "x" << source_.dim();
      throw Error(ErrorCode::shape_mismatch, os.str());
    }
    linalg::require_finite(op, "Kraus operator");
  }
}

std::string_view to_string(OperatorBasis basis) noexcept {
  switch (basis) {
    case OperatorBasis::matrix_units:
      return "matrix-units";
  }
  return "unknown";
}

FMatrixRep::FMatrixRep(
    DecomposedSpace source, DecomposedSpace target, ComplexMatrix f,
    OperatorBasis basis)
    : source_(source), target_(target), basis_(basis), f_(std::move(f)) {
  const Index m = source_.dim() * target_.dim();
  if (f_.rows() != m || f_.cols() != m) {
    std::ostringstream os;
    os << "F is " << f_.rows() << "x" << f_.cols() << ", expected " << m
       << "x" << m;
    throw Error(ErrorCode::shape_mismatch, os.str());
  }
  linalg::require_finite(f_, "F");
}

KrausRep identity_channel(const DecomposedSpace& space) {
  return KrausRep(
      space, space, {ComplexMatrix::Identity(space.dim(), space.dim())});
}

std::vector<ComplexMatrix> spanning_inputs(Index dim) {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(dim * dim));
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      out.push_back(linalg::matrix_unit(dim, dim, i, j));
    }
  }
  return out;
}

ComplexMatrix apply(const KrausRep& rep, const ComplexMatrix& q) {
  require_input_shape(q, rep.source().dim());
  ComplexMatrix out = ComplexMatrix::Zero(rep.target().dim(), rep.target().dim());
  for (const ComplexMatrix& v : rep.ops()) out.noalias() += v * q * v.adjoint();
  return out;
}

ComplexMatrix apply_f(const FMatrixRep& rep, const ComplexMatrix& q) {
  const Index ds = rep.source().dim();
  const Index dt = rep.target().dim();
  require_input_shape(q, ds);
  // E_m Q E_n^dagger = Q(j, j') |t_i><t_i'| for m = (i, j), n = (i', j').
  const ComplexMatrix& f = rep.f();
  ComplexMatrix out = ComplexMatrix::Zero(dt, dt);
  for (Index i = 0; i < dt; ++i) {
    for (Index ip = 0; ip < dt; ++ip) {
      Complex sum = 0.0;
      for (Index j = 0; j < ds; ++j) {
        for (Index jp = 0; jp < ds; ++jp) {
          sum += f(i * ds + j, ip * ds + jp) * q(j, jp);
        }
      }
      out(i, ip) = sum;
    }
  }
  return out;
}

ComplexVector basis_coefficients(const ComplexMatrix& v) {
  ComplexVector c(v.rows() * v.cols());
  for (Index i = 0; i < v.rows(); ++i) {
    for (Index j = 0; j < v.cols(); ++j) c(i * v.cols() + j) = v(i, j);
  }
  return c;
}

FMatrixRep kraus_to_f(const KrausRep& rep) {
  const Index m = rep.source().dim() * rep.target().dim();
  ComplexMatrix f = ComplexMatrix::Zero(m, m);
  for (const ComplexMatrix& v : rep.ops()) {
    const ComplexVector c = basis_coefficients(v);
    f.noalias() += c * c.adjoint();
  }
  return FMatrixRep(rep.source(), rep.target(), std::move(f));
}

KrausRep f_to_kraus(const FMatrixRep& rep, double rtol) {
  const linalg::HermitianEig eig = linalg::hermitian_eig(rep.f());
  const double cut = linalg::zero_threshold(eig.eigenvalues, rtol);
  if (eig.eigenvalues(0) < -cut) {
    std::ostringstream os;
    os << "F has eigenvalue " << eig.eigenvalues(0) << " below -" << cut;
    throw Error(ErrorCode::not_psd, os.str());
  }
  const Index rows = rep.target().dim();
  const Index cols = rep.source().dim();
  std::vector<ComplexMatrix> ops;
  for (Index n = 0; n < eig.eigenvalues.size(); ++n) {
    const double d = eig.eigenvalues(n);
    if (d <= cut) continue;
    ops.push_back(
        std::sqrt(d) * reshape_row_major(eig.eigenvectors.col(n), rows, cols));
  }
  if (ops.empty()) ops.push_back(ComplexMatrix::Zero(rows, cols));
  return KrausRep(rep.source(), rep.target(), std::move(ops));
}

std::size_t kraus_number(const KrausRep& rep, double rtol) {
  return linalg::numerical_rank(kraus_to_f(rep).f(), rtol);
}

KrausRep unitary_mix(const KrausRep& rep, const ComplexMatrix& u) {
  const auto k = static_cast<Index>(rep.size());
  if (u.rows() != k || u.cols() != k) {
    std::ostringstream os;
    os << "mixing matrix is " << u.rows() << "x" << u.cols() << " for " << k
       << " operators";
    throw Error(ErrorCode::size_mismatch, os.str());
  }
  if (!linalg::is_unitary(u, 1e-10)) {
    throw Error(ErrorCode::not_unitary, "mixing matrix is not unitary");
  }
  std::vector<ComplexMatrix> mixed;
  mixed.reserve(rep.size());
  for (Index row = 0; row < k; ++row) {
    ComplexMatrix acc =
        ComplexMatrix::Zero(rep.target().dim(), rep.source().dim());
    for (Index col = 0; col < k; ++col) {
      acc += u(row, col) * rep.ops()[static_cast<std::size_t>(col)];
    }
    mixed.push_back(std::move(acc));
  }
  return KrausRep(rep.source(), rep.target(), std::move(mixed));
}

std::vector<WeightedOperator> orthonormal_kraus(
    const KrausRep& rep, double rtol) {
  if (kraus_number(rep, rtol) == 0) return {};
  const KrausRep independent = f_to_kraus(kraus_to_f(rep), rtol);
  const ComplexMatrix gram = linalg::gram_matrix(independent.ops());
  const linalg::HermitianEig eig = linalg::hermitian_eig(gram);

  std::vector<WeightedOperator> out;
  const auto k = static_cast<Index>(independent.size());
  for (Index n = 0; n < k; ++n) {
    ComplexMatrix y =
        ComplexMatrix::Zero(rep.target().dim(), rep.source().dim());
    for (Index m = 0; m < k; ++m) {
      y += eig.eigenvectors(m, n) * independent.ops()[static_cast<std::size_t>(m)];
    }
    const double r = eig.eigenvalues(n);
    out.push_back({r, y / std::sqrt(r)});
  }
  return out;
}

KrausRep compose(const KrausRep& b, const KrausRep& a) {
  if (a.target().dim() != b.source().dim()) {
    std::ostringstream os;
    os << "cannot compose: first map lands in dimension " << a.target().dim()
       << ", second map starts from " << b.source().dim();
    throw Error(ErrorCode::dimension_mismatch, os.str());
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(a.size() * b.size());
  for (const ComplexMatrix& w : b.ops()) {
    for (const ComplexMatrix& v : a.ops()) ops.push_back(w * v);
  }
  return KrausRep(a.source(), b.target(), std::move(ops));
}

bool is_trace_preserving(const KrausRep& rep, double tol) {
  const Index d = rep.source().dim();
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& v : rep.ops()) s.noalias() += v.adjoint() * v;
  return (s - ComplexMatrix::Identity(d, d)).norm() <= tol;
}

bool channels_equal(const KrausRep& a, const KrausRep& b, double tol) {
  require_same_dims(a, b);
  return (kraus_to_f(a).f() - kraus_to_f(b).f()).norm() <= tol;
}

}  // namespace spcpm
