// Copyright 2026 The qsvtkit Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsvtkit/csd.hpp"
#include "qsvtkit/errors.hpp"
#include "qsvtkit/linalg.hpp"

namespace qsvtkit {
namespace {

double reconstruction(const ComplexMatrix& u, const CSDecomposition& cs) {
  if (cs.v1.empty() && cs.w1.empty()) return max_abs_diff(u, cs.d);
  return max_abs_diff(blockdiag(cs.v1, cs.v2).adjoint() * u * blockdiag(cs.w1, cs.w2), cs.d);
}

// Singular values of the top-left block, computed directly.
std::vector<double> top_left_singular_values(const ComplexMatrix& u, std::size_t r1,
                                             std::size_t c1) {
  std::vector<double> s = svd(u.block(0, 0, r1, c1)).sigma;
  std::sort(s.begin(), s.end());
  return s;
}

TEST(Csd, IdentityIsAllOnes) {
  const ComplexMatrix u = ComplexMatrix::identity(4);
  const CSDecomposition cs = cs_decompose(u, 2, 2);
  EXPECT_EQ(cs.structure.n_one, 2u);
  EXPECT_EQ(cs.structure.n_zero, 0u);
  EXPECT_EQ(cs.structure.n_mid, 0u);
  EXPECT_LE(reconstruction(u, cs), 1e-14);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(cs.d(i, i)), 1.0, 1e-14);
}

TEST(Csd, SwapIsAllZeros) {
  const ComplexMatrix u{{0.0, 1.0}, {1.0, 0.0}};
  const CSDecomposition cs = cs_decompose(u, 1, 1);
  EXPECT_EQ(cs.structure.n_zero, 1u);
  EXPECT_EQ(cs.structure.n_mid, 0u);
  EXPECT_EQ(cs.structure.n_one, 0u);
  EXPECT_LE(reconstruction(u, cs), 1e-14);
  EXPECT_NEAR(std::abs(cs.d(0, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(cs.d(0, 1)), 1.0, 1e-14);
}

TEST(Csd, RotationHasOneCosine) {
  const ComplexMatrix u{{0.6, 0.8}, {0.8, -0.6}};
  const CSDecomposition cs = cs_decompose(u, 1, 1);
  ASSERT_EQ(cs.structure.n_mid, 1u);
  EXPECT_NEAR(cs.structure.cos_values[0], 0.6, 1e-14);
  EXPECT_NEAR(cs.structure.sin_values[0], 0.8, 1e-14);
  EXPECT_LE(reconstruction(u, cs), 1e-14);
}

TEST(Csd, RandomUnitaryUnevenSplit) {
  const ComplexMatrix u = random_unitary(8, 5);
  const CSDecomposition cs = cs_decompose(u, 3, 5);
  EXPECT_LE(reconstruction(u, cs), 1e-10);
  EXPECT_LE(unitarity_residual(cs.d), 1e-10);
  for (const ComplexMatrix* f : {&cs.v1, &cs.v2, &cs.w1, &cs.w2}) {
    EXPECT_LE(unitarity_residual(*f), 1e-12);
  }
  const CSStructure& s = cs.structure;
  EXPECT_EQ(s.n_zero + s.n_mid + s.n_one, 3u);
  for (std::size_t j = 0; j < s.n_mid; ++j) {
    EXPECT_NEAR(s.cos_values[j] * s.cos_values[j] + s.sin_values[j] * s.sin_values[j], 1.0,
                1e-12);
    EXPECT_GT(s.cos_values[j], 0.0);
    EXPECT_LT(s.cos_values[j], 1.0);
  }
  EXPECT_TRUE(std::is_sorted(s.cos_values.begin(), s.cos_values.end()));
}

TEST(Csd, CosinesAreTopLeftSingularValues) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const ComplexMatrix u = random_unitary(7, seed);
    for (auto [r1, c1] : {std::pair<std::size_t, std::size_t>{2, 3}, {4, 2}, {3, 3}, {6, 5}}) {
      const CSDecomposition cs = cs_decompose(u, r1, c1);
      std::vector<double> expect = top_left_singular_values(u, r1, c1);
      std::vector<double> got(cs.structure.n_zero, 0.0);
      got.insert(got.end(), cs.structure.cos_values.begin(), cs.structure.cos_values.end());
      got.insert(got.end(), cs.structure.n_one, 1.0);
      ASSERT_EQ(got.size(), expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expect[i], 1e-10);
    }
  }
}

TEST(Csd, AdjointSwapKeepsCosines) {
  const ComplexMatrix u = random_unitary(9, 17);
  const CSDecomposition a = cs_decompose(u, 4, 3);
  const CSDecomposition b = cs_decompose(u.adjoint(), 3, 4);
  ASSERT_EQ(a.structure.cos_values.size(), b.structure.cos_values.size());
  for (std::size_t i = 0; i < a.structure.cos_values.size(); ++i) {
    EXPECT_NEAR(a.structure.cos_values[i], b.structure.cos_values[i], 1e-10);
  }
}

TEST(Csd, DirectSumProducesExactOnesAndZeros) {
  // A permuted direct sum puts exact 0/1 singular values in the top-left block.
  const ComplexMatrix u = blockdiag(random_unitary(3, 2), random_unitary(3, 3));
  for (std::size_t r1 = 0; r1 <= 6; ++r1) {
    for (std::size_t c1 = 0; c1 <= 6; ++c1) {
      const CSDecomposition cs = cs_decompose(u, r1, c1);
      EXPECT_LE(reconstruction(u, cs), 1e-12) << r1 << "," << c1;
      EXPECT_LE(unitarity_residual(cs.d), 1e-12);
    }
  }
}

TEST(Csd, DegenerateSplitReturnsInput) {
  const ComplexMatrix u = random_unitary(4, 8);
  const CSDecomposition cs = cs_decompose(u, 0, 2);
  EXPECT_EQ(max_abs_diff(cs.d, u), 0.0);
}

TEST(Csd, RejectsNonUnitary) {
  ComplexMatrix u = random_unitary(4, 1);
  u(0, 0) += 0.01;
  EXPECT_THROW(cs_decompose(u, 2, 2), ValidationError);
  EXPECT_THROW(cs_decompose(random_unitary(4, 1), 5, 2), ValidationError);
}

TEST(PrincipalAngles, Trivial) {
  const ComplexMatrix e1{{1.0}, {0.0}};
  const ComplexMatrix e2{{0.0}, {1.0}};
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexMatrix plus{{r}, {r}};
  EXPECT_NEAR(principal_angles(e1, e1)[0], 0.0, 1e-15);
  EXPECT_NEAR(principal_angles(e1, e2)[0], std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(principal_angles(e1, plus)[0], std::numbers::pi / 4, 1e-15);
}

TEST(PrincipalAngles, LengthAndOrder) {
  const ComplexMatrix x = random_unitary(8, 3).columns(0, 3);
  const ComplexMatrix y = random_unitary(8, 4).columns(0, 5);
  const auto a = principal_angles(x, y);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  // Cosines are the singular values of X^dagger Y.
  std::vector<double> s = svd(x.adjoint() * y).sigma;
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(std::cos(a[i]), s[i], 1e-12);
}

TEST(PrincipalAngles, RejectsNonOrthonormal) {
  ComplexMatrix x{{1.0}, {1.0}};
  EXPECT_THROW(principal_angles(x, x), ValidationError);
}

TEST(PrincipalAngles, ComplementsAgreeAfterPadding) {
  const double pad = 1e-9;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const ComplexMatrix ux = random_unitary(7, seed);
    const ComplexMatrix uy = random_unitary(7, seed + 100);
    const std::size_t rx = 1 + seed % 5;
    const std::size_t ry = 1 + (seed * 3) % 5;
    auto strip = [pad](std::vector<double> a) {
      std::vector<double> out;
      for (double v : a) {
        if (v > pad && v < std::numbers::pi / 2 - pad) out.push_back(v);
      }
      return out;
    };
    const auto a = strip(principal_angles(ux.columns(0, rx), uy.columns(0, ry)));
    const auto b = strip(principal_angles(ux.columns(rx, 7 - rx), uy.columns(ry, 7 - ry)));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
  }
}

ComplexMatrix projector(const ComplexMatrix& cols) { return cols * cols.adjoint(); }

TEST(Jordan, EqualRankOneProjectors) {
  const ComplexMatrix p{{1.0, 0.0}, {0.0, 0.0}};
  const JordanBlocks jb = jordan_decompose(p, p);
  EXPECT_EQ(jb.partition.size(), 2u);
  for (const auto& s : jb.partition) EXPECT_EQ(s.size(), 1u);
  EXPECT_LE(block_offdiagonal_residual(p, jb), 1e-14);
}

TEST(Jordan, ZeroAndPlusFormOneBlock) {
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexMatrix px{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix py = projector(ComplexMatrix{{r}, {r}});
  const JordanBlocks jb = jordan_decompose(px, py);
  ASSERT_EQ(jb.partition.size(), 1u);
  EXPECT_EQ(jb.partition[0].size(), 2u);
  for (const ComplexMatrix* p : {&px, &py}) {
    const ComplexMatrix c = jb.basis.adjoint() * (*p) * jb.basis;
    EXPECT_NEAR((c(0, 0) + c(1, 1)).real(), 1.0, 1e-12);
  }
}

TEST(Jordan, RandomProjectorsAreBlockDiagonal) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ComplexMatrix px = projector(random_unitary(6, seed).columns(0, 2));
    const ComplexMatrix py = projector(random_unitary(6, seed + 50).columns(0, 2 + seed % 3));
    const JordanBlocks jb = jordan_decompose(px, py);
    EXPECT_LE(unitarity_residual(jb.basis), 1e-12);
    EXPECT_LE(block_offdiagonal_residual(px, jb), 1e-9);
    EXPECT_LE(block_offdiagonal_residual(py, jb), 1e-9);
    std::size_t covered = 0;
    double trace = 0.0;
    const ComplexMatrix c = jb.basis.adjoint() * px * jb.basis;
    for (const auto& s : jb.partition) {
      ASSERT_TRUE(s.size() == 1 || s.size() == 2);
      covered += s.size();
      double block_trace = 0.0;
      for (std::size_t i : s) block_trace += c(i, i).real();
      if (s.size() == 2) EXPECT_NEAR(block_trace, 1.0, 1e-10);
      trace += block_trace;
    }
    EXPECT_EQ(covered, 6u);
    EXPECT_NEAR(trace, 2.0, 1e-9);
  }
}

TEST(Jordan, RejectsNonProjector) {
  const ComplexMatrix p{{1.0, 0.5}, {0.5, 0.0}};
  EXPECT_THROW(jordan_decompose(p, p), ValidationError);
}

}  // namespace
}  // namespace qsvtkit
