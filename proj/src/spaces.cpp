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

#include "spcpm/spaces.hpp"

#include <sstream>

#include "spcpm/error.hpp"

namespace spcpm {

Block block_from_index(int index) {
  if (index == 1) return Block::first;
  if (index == 2) return Block::second;
  throw Error(
      ErrorCode::invalid_block,
      "block index " + std::to_string(index) + " is not 1 or 2");
}

DecomposedSpace::DecomposedSpace(Index d1, Index d2) : d1_(d1), d2_(d2) {
  if (d1 < 1 || d2 < 1) {
    std::ostringstream os;
    os << "block dimensions (" << d1 << ", " << d2
       << ") must both be at least 1";
    throw Error(ErrorCode::invalid_dimension, os.str());
  }
}

Index DecomposedSpace::block_dim(Block block) const noexcept {
  return block == Block::first ? d1_ : d2_;
}

Index DecomposedSpace::block_offset(Block block) const noexcept {
  return block == Block::first ? 0 : d1_;
}

ComplexMatrix projector(const DecomposedSpace& space, Block block) {
  ComplexMatrix p = ComplexMatrix::Zero(space.dim(), space.dim());
  const Index offset = space.block_offset(block);
  for (Index k = 0; k < space.block_dim(block); ++k) {
    p(offset + k, offset + k) = 1.0;
  }
  return p;
}

ComplexMatrix embed_block_operator(
    const ComplexMatrix& x, const DecomposedSpace& src,
    const DecomposedSpace& tgt, Block src_block, Block tgt_block) {
  if (x.rows() != tgt.block_dim(tgt_block) ||
      x.cols() != src.block_dim(src_block)) {
    std::ostringstream os;
    os << "block operator is " << x.rows() << "x" << x.cols()
       << ", expected " << tgt.block_dim(tgt_block) << "x"
       << src.block_dim(src_block);
    throw Error(ErrorCode::shape_mismatch, os.str());
  }
  ComplexMatrix y = ComplexMatrix::Zero(tgt.dim(), src.dim());
  y.block(
      tgt.block_offset(tgt_block), src.block_offset(src_block), x.rows(),
      x.cols()) = x;
  return y;
}

ComplexMatrix extract_block_operator(
    const ComplexMatrix& y, const DecomposedSpace& src,
    const DecomposedSpace& tgt, Block src_block, Block tgt_block) {
  if (y.rows() != tgt.dim() || y.cols() != src.dim()) {
    std::ostringstream os;
    os << "operator is " << y.rows() << "x" << y.cols() << ", expected "
       << tgt.dim() << "x" << src.dim();
    throw Error(ErrorCode::shape_mismatch, os.str());
  }
  return y.block(
      tgt.block_offset(tgt_block), src.block_offset(src_block),
      tgt.block_dim(tgt_block), src.block_dim(src_block));
}

}  // namespace spcpm
