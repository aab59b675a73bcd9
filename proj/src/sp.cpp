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

#include "spcpm/sp.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "spcpm/error.hpp"

namespace spcpm {

namespace {

constexpr int kNormalizerAttempts = 8;

// Tracks the worst residual of one named identity against its bound.
struct Residual {
  std::string identity;
  double bound;
  double worst = 0.0;

  void observe(double value) { worst = std::max(worst, value); }
  bool ok() const { return worst <= bound; }
};

SpCheck first_failure(std::initializer_list<const Residual*> residuals) {
  for (const Residual* r : residuals) {
    if (!r->ok()) return SpCheck{false, r->identity, r->worst};
  }
  double worst = 0.0;
  for (const Residual* r : residuals) worst = std::max(worst, r->worst);
  return SpCheck{true, "", worst};
}

// Matrix units of L(H_{s,block}) embedded into L(H_S).
std::vector<ComplexMatrix> block_inputs(
    const DecomposedSpace& space, Block block) {
  std::vector<ComplexMatrix> out;
  const Index off = space.block_offset(block);
  const Index n = space.block_dim(block);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      out.push_back(
          linalg::matrix_unit(space.dim(), space.dim(), off + i, off + j));
    }
  }
  return out;
}

Index block_basis_size(
    const DecomposedSpace& source, const DecomposedSpace& target, Block b) {
  return source.block_dim(b) * target.block_dim(b);
}

}  // namespace

double map_scale(const KrausRep& rep) {
  double total = 0.0;
  for (const ComplexMatrix& v : rep.ops()) total += v.squaredNorm();
  return std::max(1.0, total);
}

SpCheck check_sp_definition(const KrausRep& rep, double tol) {
  const double bound = tol * map_scale(rep);
  const ComplexMatrix pt1 = projector(rep.target(), Block::first);
  const ComplexMatrix pt2 = projector(rep.target(), Block::second);

  Residual into_first{"Tr(P_t1 phi(Q)) = 0 for Q in L(H_s2)", bound};
  for (const ComplexMatrix& e : block_inputs(rep.source(), Block::second)) {
    into_first.observe(std::abs((pt1 * spcpm::apply(rep, e)).trace()));
  }
  Residual into_second{"Tr(P_t2 phi(Q)) = 0 for Q in L(H_s1)", bound};
  for (const ComplexMatrix& e : block_inputs(rep.source(), Block::first)) {
    into_second.observe(std::abs((pt2 * spcpm::apply(rep, e)).trace()));
  }
  return first_failure({&into_first, &into_second});
}

bool is_sp_definition(const KrausRep& rep, double tol) {
  return check_sp_definition(rep, tol).holds;
}

SpCheck check_sp_kraus_blocks(const KrausRep& rep, double tol) {
  const ComplexMatrix ps1 = projector(rep.source(), Block::first);
  const ComplexMatrix ps2 = projector(rep.source(), Block::second);
  const ComplexMatrix pt1 = projector(rep.target(), Block::first);
  const ComplexMatrix pt2 = projector(rep.target(), Block::second);

  // Residuals are relative to max(1, ||V_k||_F), so the bound is tol itself.
  Residual lower{"P_t2 V_k P_s1 = 0", tol};
  Residual upper{"P_t1 V_k P_s2 = 0", tol};
  for (const ComplexMatrix& v : rep.ops()) {
    const double scale = std::max(1.0, v.norm());
    lower.observe((pt2 * v * ps1).norm() / scale);
    upper.observe((pt1 * v * ps2).norm() / scale);
  }
  return first_failure({&lower, &upper});
}

bool is_sp_kraus_blocks(const KrausRep& rep, double tol) {
  return check_sp_kraus_blocks(rep, tol).holds;
}

SpCheck check_sp_commutation(const KrausRep& rep, double tol) {
  const double bound = tol * map_scale(rep);
  const ComplexMatrix ps[2] = {
      projector(rep.source(), Block::first),
      projector(rep.source(), Block::second)};
  const ComplexMatrix pt[2] = {
      projector(rep.target(), Block::first),
      projector(rep.target(), Block::second)};

  Residual commute{"P_ti phi(Q) P_tj = phi(P_si Q P_sj)", bound};
  Residual rebuild{"phi(Q) = sum_ij P_ti phi(P_si Q P_sj) P_tj", bound};
  for (const ComplexMatrix& q : spanning_inputs(rep.source().dim())) {
    const ComplexMatrix image = spcpm::apply(rep, q);
    ComplexMatrix rebuilt = ComplexMatrix::Zero(image.rows(), image.cols());
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const ComplexMatrix inner = spcpm::apply(rep, ps[i] * q * ps[j]);
        commute.observe((pt[i] * image * pt[j] - inner).norm());
        rebuilt += pt[i] * inner * pt[j];
      }
    }
    rebuild.observe((image - rebuilt).norm());
  }
  return first_failure({&commute, &rebuild});
}

bool is_sp_commutation(const KrausRep& rep, double tol) {
  return check_sp_commutation(rep, tol).holds;
}

SpCheck check_sp_trace(const KrausRep& rep, double tol) {
  if (!is_trace_preserving(rep, tol)) {
    throw Error(
        ErrorCode::not_trace_preserving,
        "the trace-weight criterion only applies to trace-preserving maps");
  }
  const double bound = tol * map_scale(rep);
  const ComplexMatrix ps1 = projector(rep.source(), Block::first);
  const ComplexMatrix ps2 = projector(rep.source(), Block::second);
  const ComplexMatrix pt1 = projector(rep.target(), Block::first);
  const ComplexMatrix pt2 = projector(rep.target(), Block::second);

  Residual first{"Tr(P_t1 phi(Q)) = Tr(P_s1 Q)", bound};
  Residual second{"Tr(P_t2 phi(Q)) = Tr(P_s2 Q)", bound};
  for (const ComplexMatrix& q : spanning_inputs(rep.source().dim())) {
    const ComplexMatrix image = spcpm::apply(rep, q);
    first.observe(std::abs((pt1 * image).trace() - (ps1 * q).trace()));
    second.observe(std::abs((pt2 * image).trace() - (ps2 * q).trace()));
  }
  return first_failure({&first, &second});
}

bool is_sp_trace(const KrausRep& rep, double tol) {
  return check_sp_trace(rep, tol).holds;
}

KrausBlocks split_kraus_blocks(const KrausRep& rep, double tol) {
  const SpCheck check = check_sp_kraus_blocks(rep, tol);
  if (!check) {
    std::ostringstream os;
    os << check.violated << " fails with residual " << check.residual;
    throw Error(ErrorCode::not_sp, os.str());
  }
  const ComplexMatrix ps1 = projector(rep.source(), Block::first);
  const ComplexMatrix ps2 = projector(rep.source(), Block::second);
  const ComplexMatrix pt1 = projector(rep.target(), Block::first);
  const ComplexMatrix pt2 = projector(rep.target(), Block::second);
  KrausBlocks out;
  for (const ComplexMatrix& v : rep.ops()) {
    out.first.push_back(pt1 * v * ps1);
    out.second.push_back(pt2 * v * ps2);
  }
  return out;
}

SPBlockRep::SPBlockRep(
    DecomposedSpace source, DecomposedSpace target, ComplexMatrix a,
    ComplexMatrix b, ComplexMatrix c)
    : source_(source),
      target_(target),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)) {
  const Index k = block_basis_size(source_, target_, Block::first);
  const Index l = block_basis_size(source_, target_, Block::second);
  if (a_.rows() != k || a_.cols() != k || b_.rows() != l || b_.cols() != l ||
      c_.rows() != k || c_.cols() != l) {
    std::ostringstream os;
    os << "expected A " << k << "x" << k << ", B " << l << "x" << l << ", C "
       << k << "x" << l << "; got A " << a_.rows() << "x" << a_.cols()
       << ", B " << b_.rows() << "x" << b_.cols() << ", C " << c_.rows()
       << "x" << c_.cols();
    throw Error(ErrorCode::shape_mismatch, os.str());
  }
  linalg::require_finite(a_, "A");
  linalg::require_finite(b_, "B");
  linalg::require_finite(c_, "C");
}

Index full_basis_index(
    const DecomposedSpace& source, const DecomposedSpace& target, Block block,
    Index intra_index) {
  const Index ds = source.block_dim(block);
  const Index row = target.block_offset(block) + intra_index / ds;
  const Index col = source.block_offset(block) + intra_index % ds;
  return row * source.dim() + col;
}

SpCheck check_sp_block_conditions(
    const SPBlockRep& blocks, double tol, linalg::SchurSide side) {
  const ComplexMatrix& a = blocks.a();
  const ComplexMatrix& b = blocks.b();
  const ComplexMatrix& c = blocks.c();
  if (!linalg::is_psd(a, tol)) {
    return {false, "A >= 0", linalg::hermitian_eig(
                                 0.5 * (a + a.adjoint()))
                                 .eigenvalues(0)};
  }
  if (!linalg::is_psd(b, tol)) {
    return {false, "B >= 0", linalg::hermitian_eig(
                                 0.5 * (b + b.adjoint()))
                                 .eigenvalues(0)};
  }
  const double c_bound = tol * std::max(1.0, c.norm());
  const double left = (linalg::zero_space_projector(a) * c).norm();
  if (left > c_bound) return {false, "P_{A,0} C = 0", left};
  const double right = (c * linalg::zero_space_projector(b)).norm();
  if (right > c_bound) return {false, "C P_{B,0} = 0", right};

  ComplexMatrix schur;
  std::string name;
  if (side == linalg::SchurSide::complement_of_b) {
    schur = a - c * linalg::pseudo_inverse(b) * c.adjoint();
    name = "A >= C B^+ C^dagger";
  } else {
    schur = b - c.adjoint() * linalg::pseudo_inverse(a) * c;
    name = "B >= C^dagger A^+ C";
  }
  if (!linalg::is_psd(schur, tol)) {
    const double lowest =
        linalg::hermitian_eig(0.5 * (schur + schur.adjoint())).eigenvalues(0);
    return {false, name, lowest};
  }
  return {true, "", 0.0};
}

FMatrixRep sp_from_blocks(const SPBlockRep& blocks, double tol) {
  const SpCheck check = check_sp_block_conditions(blocks, tol);
  if (!check) {
    std::ostringstream os;
    os << check.violated << " fails (" << check.residual << ")";
    throw Error(ErrorCode::conditions_violated, os.str());
  }
  const DecomposedSpace& src = blocks.source();
  const DecomposedSpace& tgt = blocks.target();
  const Index k_size = blocks.a().rows();
  const Index l_size = blocks.b().rows();
  const Index m = src.dim() * tgt.dim();
  ComplexMatrix f = ComplexMatrix::Zero(m, m);
  for (Index k = 0; k < k_size; ++k) {
    const Index row = full_basis_index(src, tgt, Block::first, k);
    for (Index kp = 0; kp < k_size; ++kp) {
      f(row, full_basis_index(src, tgt, Block::first, kp)) = blocks.a()(k, kp);
    }
    for (Index l = 0; l < l_size; ++l) {
      const Index col = full_basis_index(src, tgt, Block::second, l);
      f(row, col) = blocks.c()(k, l);
      f(col, row) = std::conj(blocks.c()(k, l));
    }
  }
  for (Index l = 0; l < l_size; ++l) {
    const Index row = full_basis_index(src, tgt, Block::second, l);
    for (Index lp = 0; lp < l_size; ++lp) {
      f(row, full_basis_index(src, tgt, Block::second, lp)) = blocks.b()(l, lp);
    }
  }
  return FMatrixRep(src, tgt, std::move(f));
}

double off_block_mass(const FMatrixRep& rep) {
  const DecomposedSpace& src = rep.source();
  const DecomposedSpace& tgt = rep.target();
  const Index m = src.dim() * tgt.dim();
  std::vector<bool> intra(static_cast<std::size_t>(m), false);
  for (Block b : {Block::first, Block::second}) {
    for (Index k = 0; k < block_basis_size(src, tgt, b); ++k) {
      intra[static_cast<std::size_t>(full_basis_index(src, tgt, b, k))] = true;
    }
  }
  double sum = 0.0;
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (!intra[static_cast<std::size_t>(i)] ||
          !intra[static_cast<std::size_t>(j)]) {
        sum += std::norm(rep.f()(i, j));
      }
    }
  }
  return std::sqrt(sum);
}

SPBlockRep blocks_from_sp(const KrausRep& rep, double tol) {
  const SpCheck check = check_sp_kraus_blocks(rep, tol);
  if (!check) {
    std::ostringstream os;
    os << check.violated << " fails with residual " << check.residual;
    throw Error(ErrorCode::not_sp, os.str());
  }
  const FMatrixRep full = kraus_to_f(rep);
  const double leak = off_block_mass(full);
  if (leak > tol * map_scale(rep)) {
    std::ostringstream os;
    os << "F has Frobenius mass " << leak << " outside the intra-block slots";
    throw Error(ErrorCode::residual_off_block, os.str());
  }
  const DecomposedSpace& src = rep.source();
  const DecomposedSpace& tgt = rep.target();
  const Index k_size = block_basis_size(src, tgt, Block::first);
  const Index l_size = block_basis_size(src, tgt, Block::second);
  ComplexMatrix a(k_size, k_size);
  ComplexMatrix b(l_size, l_size);
  ComplexMatrix c(k_size, l_size);
  const ComplexMatrix& f = full.f();
  for (Index k = 0; k < k_size; ++k) {
    const Index row = full_basis_index(src, tgt, Block::first, k);
    for (Index kp = 0; kp < k_size; ++kp) {
      a(k, kp) = f(row, full_basis_index(src, tgt, Block::first, kp));
    }
    for (Index l = 0; l < l_size; ++l) {
      c(k, l) = f(row, full_basis_index(src, tgt, Block::second, l));
    }
  }
  for (Index l = 0; l < l_size; ++l) {
    const Index row = full_basis_index(src, tgt, Block::second, l);
    for (Index lp = 0; lp < l_size; ++lp) {
      b(l, lp) = f(row, full_basis_index(src, tgt, Block::second, lp));
    }
  }
  return SPBlockRep(src, tgt, std::move(a), std::move(b), std::move(c));
}

KrausRep random_sp_channel(
    const DecomposedSpace& source, const DecomposedSpace& target,
    std::size_t k, bool tp, std::uint64_t seed) {
  if (k < 1) {
    throw Error(
        ErrorCode::invalid_dimension, "at least one Kraus operator is needed");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kNormalizerAttempts; ++attempt) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      const ComplexMatrix g1 =
          linalg::ginibre(target.d1(), source.d1(), rng);
      const ComplexMatrix g2 =
          linalg::ginibre(target.d2(), source.d2(), rng);
      ops.push_back(
          embed_block_operator(g1, source, target, Block::first, Block::first) +
          embed_block_operator(
              g2, source, target, Block::second, Block::second));
    }
    if (!tp) return KrausRep(source, target, std::move(ops));

    ComplexMatrix s = ComplexMatrix::Zero(source.dim(), source.dim());
    for (const ComplexMatrix& v : ops) s.noalias() += v.adjoint() * v;
    ComplexMatrix normalizer;
    try {
      normalizer = linalg::inv_sqrt_psd(s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::singular_matrix) throw;
      continue;
    }
    for (ComplexMatrix& v : ops) v = v * normalizer;
    return KrausRep(source, target, std::move(ops));
  }
  std::ostringstream os;
  os << "sum of V^dagger V stayed singular after " << kNormalizerAttempts
     << " draws; " << k << " operator(s) cannot normalize blocks of sizes ("
     << source.d1() << ", " << source.d2() << ") -> (" << target.d1() << ", "
     << target.d2() << ")";
  throw Error(ErrorCode::singular_normalizer, os.str());
}

SPBlockRep random_sp_blocks(
    const DecomposedSpace& source, const DecomposedSpace& target, Index rank,
    std::uint64_t seed) {
  if (rank < 1) {
    throw Error(ErrorCode::invalid_dimension, "rank must be at least 1");
  }
  const Index k = block_basis_size(source, target, Block::first);
  const Index l = block_basis_size(source, target, Block::second);
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = linalg::ginibre(k + l, rank, rng);
  ComplexMatrix f = g * g.adjoint();
  f = (0.5 * (f + f.adjoint())).eval();
  return SPBlockRep(
      source, target, f.topLeftCorner(k, k), f.bottomRightCorner(l, l),
      f.topRightCorner(k, l));
}

std::size_t sp_kraus_bound(
    const DecomposedSpace& source, const DecomposedSpace& target) {
  return static_cast<std::size_t>(
      block_basis_size(source, target, Block::first) +
      block_basis_size(source, target, Block::second));
}

bool sp_kraus_bound_holds(const KrausRep& rep, double tol) {
  if (!is_sp_kraus_blocks(rep, tol)) {
    throw Error(ErrorCode::not_sp, "the Kraus-number bound applies to SP maps");
  }
  return kraus_number(rep) <= sp_kraus_bound(rep.source(), rep.target());
}

}  // namespace spcpm
