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

#include <catch_amalgamated.hpp>

#include "spcpm/error.hpp"
#include "spcpm/spaces.hpp"

namespace spcpm {
namespace test_spaces {

SCENARIO("Decomposed spaces and their projectors") {
  GIVEN("The smallest split") {
    const DecomposedSpace s(1, 1);
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    REQUIRE(projector(s, Block::first) == expected);
  }
  GIVEN("A (2, 3) split") {
    const DecomposedSpace s(2, 3);
    REQUIRE(s.dim() == 5);
    ComplexMatrix expected = ComplexMatrix::Zero(5, 5);
    for (Index k = 2; k < 5; ++k) expected(k, k) = 1.0;
    REQUIRE(projector(s, Block::second) == expected);
  }
  GIVEN("Any split") {
    for (Index d1 = 1; d1 <= 4; ++d1) {
      for (Index d2 = 1; d2 <= 4; ++d2) {
        const DecomposedSpace s(d1, d2);
        const ComplexMatrix p1 = projector(s, Block::first);
        const ComplexMatrix p2 = projector(s, Block::second);
        CHECK(p1 + p2 == ComplexMatrix::Identity(s.dim(), s.dim()));
        CHECK(p1 * p2 == ComplexMatrix::Zero(s.dim(), s.dim()));
        CHECK(p1 * p1 == p1);
        CHECK(p2 == p2.adjoint());
      }
    }
  }
  GIVEN("Empty blocks or bad block indices") {
    REQUIRE_THROWS_AS(DecomposedSpace(0, 1), Error);
    REQUIRE_THROWS_AS(DecomposedSpace(2, 0), Error);
    REQUIRE(block_from_index(2) == Block::second);
    try {
      block_from_index(3);
      FAIL("expected InvalidBlock");
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::invalid_block);
    }
  }
}

SCENARIO("Embedding block operators") {
  GIVEN("A scalar into the (1,1)->(1,1) top-left slot") {
    const DecomposedSpace s(1, 1);
    const ComplexMatrix y = embed_block_operator(
        ComplexMatrix::Constant(1, 1, 1.0), s, s, Block::first, Block::first);
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    REQUIRE(y == expected);
  }
  GIVEN("The identity into the lower-right block") {
    const DecomposedSpace s(2, 2);
    const ComplexMatrix y = embed_block_operator(
        ComplexMatrix::Identity(2, 2), s, s, Block::second, Block::second);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(2, 2) = 1.0;
    expected(3, 3) = 1.0;
    REQUIRE(y == expected);
  }
  GIVEN("Random block operators between different spaces") {
    const DecomposedSpace src(2, 3);
    const DecomposedSpace tgt(3, 1);
    std::mt19937_64 rng(1);
    for (int sb = 1; sb <= 2; ++sb) {
      for (int tb = 1; tb <= 2; ++tb) {
        const Block s = block_from_index(sb);
        const Block t = block_from_index(tb);
        const ComplexMatrix x =
            linalg::ginibre(tgt.block_dim(t), src.block_dim(s), rng);
        const ComplexMatrix y = embed_block_operator(x, src, tgt, s, t);
        CHECK(projector(tgt, t) * y * projector(src, s) == y);
        CHECK(extract_block_operator(y, src, tgt, s, t) == x);
      }
    }
  }
  GIVEN("A wrongly shaped block") {
    const DecomposedSpace s(2, 1);
    try {
      embed_block_operator(
          ComplexMatrix::Zero(1, 1), s, s, Block::first, Block::first);
      FAIL("expected ShapeMismatch");
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::shape_mismatch);
    }
  }
}

}  // namespace test_spaces
}  // namespace spcpm
