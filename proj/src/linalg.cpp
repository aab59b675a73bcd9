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

#include "spcpm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "spcpm/error.hpp"

namespace spcpm::linalg {

namespace {

constexpr int kMaxSweeps = 100;
// Entries of a unit eigenvector below this are skipped when fixing the phase.
constexpr double kPhaseCutoff = 1e-12;

std::string shape_of(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One two-sided rotation zeroing a(p, q). The unitary J acting on (p, q) is
// diag(1, conj(e)) * [[c, s], [-s, c]] where e is the phase of a(p, q): the
// phase factor makes the pivot real, the real rotation then annihilates it.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, Index p, Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex e = apq / mag;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) /
        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(e);
  const Complex jqq = c * std::conj(e);

  const Index n = a.rows();
  for (Index r = 0; r < n; ++r) {
    const Complex ap = a(r, p);
    const Complex aq = a(r, q);
    a(r, p) = ap * jpp + aq * jqp;
    a(r, q) = ap * jpq + aq * jqq;
  }
  for (Index r = 0; r < n; ++r) {
    const Complex ap = a(p, r);
    const Complex aq = a(q, r);
    a(p, r) = std::conj(jpp) * ap + std::conj(jqp) * aq;
    a(q, r) = std::conj(jpq) * ap + std::conj(jqq) * aq;
  }
  for (Index r = 0; r < n; ++r) {
    const Complex vp = v(r, p);
    const Complex vq = v(r, q);
    v(r, p) = vp * jpp + vq * jqp;
    v(r, q) = vp * jpq + vq * jqq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

void normalize_phase(ComplexMatrix& vecs) {
  for (Index j = 0; j < vecs.cols(); ++j) {
    for (Index i = 0; i < vecs.rows(); ++i) {
      const double mag = std::abs(vecs(i, j));
      if (mag > kPhaseCutoff) {
        vecs.col(j) *= std::conj(vecs(i, j)) / mag;
        vecs(i, j) = mag;
        break;
      }
    }
  }
}

}  // namespace

void require_finite(const ComplexMatrix& m, std::string_view what) {
  if (!m.allFinite()) {
    throw Error(
        ErrorCode::non_finite,
        std::string(what) + " contains non-finite entries");
  }
}

void require_square(const ComplexMatrix& m, std::string_view what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(
        ErrorCode::not_square,
        std::string(what) + " is " + shape_of(m) + ", expected square");
  }
}

double hermiticity_residual(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm();
}

HermitianEig hermitian_eig(const ComplexMatrix& m, double tol) {
  require_square(m, "matrix");
  require_finite(m, "matrix");
  const double asym = hermiticity_residual(m);
  if (asym > tol * std::max(1.0, m.norm())) {
    std::ostringstream os;
    os << "||M - M^dagger||_F = " << asym << " exceeds tolerance";
    throw Error(ErrorCode::not_hermitian, os.str());
  }

  ComplexMatrix a = 0.5 * (m + m.adjoint());
  const Index n = a.rows();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double target = kJacobiTol * a.norm();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&a](Index x, Index y) {
    return a(x, x).real() < a(y, y).real();
  });

  HermitianEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src).real();
    out.eigenvectors.col(k) = v.col(src);
  }
  normalize_phase(out.eigenvectors);
  return out;
}

double zero_threshold(const RealVector& eigenvalues, double rtol) {
  const double largest =
      eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
  return rtol * std::max(1.0, largest);
}

std::size_t numerical_rank(const ComplexMatrix& hermitian, double rtol) {
  const HermitianEig eig = hermitian_eig(hermitian);
  const double cut = zero_threshold(eig.eigenvalues, rtol);
  std::size_t rank = 0;
  for (Index k = 0; k < eig.eigenvalues.size(); ++k) {
    if (std::abs(eig.eigenvalues(k)) > cut) ++rank;
  }
  return rank;
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& b, double rtol) {
  const HermitianEig eig = hermitian_eig(b, std::max(rtol, kDefaultTol));
  const double cut = zero_threshold(eig.eigenvalues, rtol);
  const Index n = b.rows();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues(k);
    if (std::abs(lambda) <= cut) continue;
    const ComplexVector vk = eig.eigenvectors.col(k);
    out.noalias() += (1.0 / lambda) * vk * vk.adjoint();
  }
  return out;
}

ComplexMatrix zero_space_projector(const ComplexMatrix& a, double rtol) {
  const HermitianEig eig = hermitian_eig(a, std::max(rtol, kDefaultTol));
  const double cut = zero_threshold(eig.eigenvalues, rtol);
  const Index n = a.rows();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) {
    if (std::abs(eig.eigenvalues(k)) > cut) continue;
    const ComplexVector vk = eig.eigenvectors.col(k);
    out.noalias() += vk * vk.adjoint();
  }
  return out;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  require_square(m, "matrix");
  if (!m.allFinite()) return false;
  if (hermiticity_residual(m) > tol * std::max(1.0, m.norm())) return false;
  const HermitianEig eig = hermitian_eig(m, tol);
  return eig.eigenvalues(0) >= -zero_threshold(eig.eigenvalues, tol);
}

ComplexMatrix assemble_blocks(
    const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  if (c.rows() != a.rows() || c.cols() != b.rows()) {
    throw Error(
        ErrorCode::dimension_mismatch,
        "C is " + shape_of(c) + " but A is " + shape_of(a) + " and B is " +
            shape_of(b));
  }
  const Index n = a.rows();
  const Index m = b.rows();
  ComplexMatrix f(n + m, n + m);
  f.topLeftCorner(n, n) = a;
  f.topRightCorner(n, m) = c;
  f.bottomLeftCorner(m, n) = c.adjoint();
  f.bottomRightCorner(m, m) = b;
  return f;
}

bool block_psd_check(
    const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
    double tol, SchurSide side) {
  require_square(a, "A");
  require_square(b, "B");
  if (c.rows() != a.rows() || c.cols() != b.rows()) {
    throw Error(
        ErrorCode::dimension_mismatch,
        "C is " + shape_of(c) + " but A is " + shape_of(a) + " and B is " +
            shape_of(b));
  }
  if (!is_psd(a, tol) || !is_psd(b, tol)) return false;

  const double c_scale = tol * std::max(1.0, c.norm());
  if ((zero_space_projector(a) * c).norm() > c_scale) return false;
  if ((c * zero_space_projector(b)).norm() > c_scale) return false;

  if (side == SchurSide::complement_of_b) {
    const ComplexMatrix schur = a - c * pseudo_inverse(b) * c.adjoint();
    return is_psd(schur, tol);
  }
  const ComplexMatrix schur = b - c.adjoint() * pseudo_inverse(a) * c;
  return is_psd(schur, tol);
}

ComplexMatrix gram_matrix(std::span<const ComplexMatrix> ops) {
  if (ops.empty()) throw Error(ErrorCode::empty_set, "no operators given");
  const Index rows = ops.front().rows();
  const Index cols = ops.front().cols();
  for (const ComplexMatrix& op : ops) {
    if (op.rows() != rows || op.cols() != cols) {
      throw Error(
          ErrorCode::shape_mismatch,
          "operator shapes differ: " + shape_of(ops.front()) + " vs " +
              shape_of(op));
    }
  }
  const auto n = static_cast<Index>(ops.size());
  ComplexMatrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const auto ii = static_cast<std::size_t>(i);
      const auto jj = static_cast<std::size_t>(j);
      const Complex value = (ops[ii].conjugate().cwiseProduct(ops[jj])).sum();
      g(i, j) = value;
      g(j, i) = std::conj(value);
    }
    g(i, i) = g(i, i).real();
  }
  return g;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace_ancilla(
    const ComplexMatrix& m, Index d_sys, Index d_anc) {
  if (d_sys < 1 || d_anc < 1 || m.rows() != d_sys * d_anc ||
      m.cols() != d_sys * d_anc) {
    std::ostringstream os;
    os << "matrix is " << shape_of(m) << ", expected " << d_sys * d_anc
       << "x" << d_sys * d_anc;
    throw Error(ErrorCode::dimension_mismatch, os.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(d_sys, d_sys);
  for (Index i = 0; i < d_sys; ++i) {
    for (Index j = 0; j < d_sys; ++j) {
      Complex sum = 0.0;
      for (Index k = 0; k < d_anc; ++k) sum += m(i * d_anc + k, j * d_anc + k);
      out(i, j) = sum;
    }
  }
  return out;
}

ComplexMatrix inv_sqrt_psd(const ComplexMatrix& m, double rtol) {
  const HermitianEig eig = hermitian_eig(m, std::max(rtol, kDefaultTol));
  const Index n = m.rows();
  const double smallest = eig.eigenvalues(0);
  const double largest = eig.eigenvalues(n - 1);
  if (largest <= 0.0 || smallest <= rtol * largest) {
    std::ostringstream os;
    os << "eigenvalues span [" << smallest << ", " << largest
       << "], not positive definite";
    throw Error(ErrorCode::singular_matrix, os.str());
  }
  RealVector scale = eig.eigenvalues.cwiseSqrt().cwiseInverse();
  return eig.eigenvectors * scale.cast<Complex>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const ComplexMatrix id = ComplexMatrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).norm() <= tol &&
         (u * u.adjoint() - id).norm() <= tol;
}

ComplexMatrix matrix_unit(Index rows, Index cols, Index i, Index j) {
  ComplexMatrix out = ComplexMatrix::Zero(rows, cols);
  out(i, j) = 1.0;
  return out;
}

ComplexMatrix ginibre(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix out(rows, cols);
  // Row-major fill so the stream layout does not depend on Eigen storage.
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      out(i, j) = Complex(re, im);
    }
  }
  return out;
}

ComplexMatrix haar_unitary(Index n, std::mt19937_64& rng) {
  const ComplexMatrix z = ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

}  // namespace spcpm::linalg
