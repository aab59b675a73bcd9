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

#include "spcpm/linalg.hpp"

namespace spcpm {

enum class Block { first = 1, second = 2 };

/// Throws InvalidBlock unless index is 1 or 2.
Block block_from_index(int index);

/**
 * A finite-dimensional space split as an orthogonal sum of two blocks.
 *
 * Block 1 is spanned by the first d1 standard basis vectors and block 2 by
 * the remaining d2. Both blocks are at least one-dimensional.
 */
class DecomposedSpace {
 public:
  DecomposedSpace(Index d1, Index d2);

  Index d1() const noexcept { return d1_; }
  Index d2() const noexcept { return d2_; }
  Index dim() const noexcept { return d1_ + d2_; }
  Index block_dim(Block block) const noexcept;
  Index block_offset(Block block) const noexcept;

  friend bool operator==(const DecomposedSpace&, const DecomposedSpace&) =
      default;

 private:
  Index d1_;
  Index d2_;
};

ComplexMatrix projector(const DecomposedSpace& space, Block block);

/// Places X : H_{src_block} -> H_{tgt_block} inside L(H_S, H_T).
ComplexMatrix embed_block_operator(
    const ComplexMatrix& x, const DecomposedSpace& src,
    const DecomposedSpace& tgt, Block src_block, Block tgt_block);

/// Inverse of embed_block_operator: reads the (tgt_block, src_block) block.
ComplexMatrix extract_block_operator(
    const ComplexMatrix& y, const DecomposedSpace& src,
    const DecomposedSpace& tgt, Block src_block, Block tgt_block);

}  // namespace spcpm
