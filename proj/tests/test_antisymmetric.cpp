#include <cmath>

#include <gtest/gtest.h>

#include "grothsp/antisymmetric.hpp"
#include "grothsp/errors.hpp"
#include "grothsp/random.hpp"
#include "grothsp/symplectic.hpp"
#include "support/corpus.hpp"

namespace grothsp {
namespace {

TEST(AntisymCanonical, SingleBlockClosedForm) {
  Matrix b(2, 2);
  b << 0, -3, 3, 0;
  const AntisymCanonicalForm f = antisym_canonical(b);
  ASSERT_EQ(f.k(), 1U);
  EXPECT_NEAR(f.mus[0], 3.0, 1e-14);
  const Vector x = f.q_rows.row(0).transpose();
  const Vector y = f.q_rows.row(1).transpose();
  EXPECT_LT((b * x - 3.0 * y).norm(), 1e-14);
  EXPECT_LT((b * y + 3.0 * x).norm(), 1e-14);
}

TEST(AntisymCanonical, RecoversPlantedSpectrum) {
  for (const auto& item : testing::antisym_corpus(120, 41)) {
    const AntisymCanonicalForm f = antisym_canonical(item.b);
    ASSERT_EQ(f.k(), item.mus.size()) << item.label;
    for (std::size_t j = 0; j < f.k(); ++j) EXPECT_NEAR(f.mus[j], item.mus[j], 1e-10) << item.label;
    const double scale = std::max(1.0, item.b.norm());
    EXPECT_LT((reconstruct(f) - item.b).norm(), 1e-10 * scale) << item.label;
    const Matrix gram = f.q_rows * f.q_rows.transpose();
    EXPECT_LT((gram - Matrix::Identity(gram.rows(), gram.cols())).norm(), 1e-12) << item.label;
    for (std::size_t j = 0; j < f.k(); ++j) {
      const auto r = static_cast<Eigen::Index>(2 * j);
      const Vector x = f.q_rows.row(r).transpose();
      const Vector y = f.q_rows.row(r + 1).transpose();
      EXPECT_LT((item.b * x - f.mus[j] * y).norm(), 1e-10 * scale);
      EXPECT_LT((item.b * y + f.mus[j] * x).norm(), 1e-10 * scale);
    }
  }
}

TEST(AntisymCanonical, MusMatchSingularValuesInPairs) {
  Engine engine = stream_engine(42, 0);
  const Matrix g = gaussian_matrix(7, 7, engine);
  const Matrix b = g - g.transpose();
  const AntisymCanonicalForm f = antisym_canonical(b);
  const Vector s = singular_values(b);
  ASSERT_EQ(f.k(), 3U);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_NEAR(f.mus[j], s(static_cast<Eigen::Index>(2 * j)), 1e-12);
    EXPECT_NEAR(f.mus[j], s(static_cast<Eigen::Index>(2 * j + 1)), 1e-12);
  }
}

TEST(AntisymCanonical, ZeroMatrixHasNoBlocks) {
  const AntisymCanonicalForm f = antisym_canonical(Matrix::Zero(4, 4));
  EXPECT_EQ(f.k(), 0U);
  EXPECT_EQ(f.q_rows.rows(), 0);
  EXPECT_LT(reconstruct(f).norm(), 1e-300);
}

TEST(AntisymCanonical, RejectsNonAntisymmetric) {
  EXPECT_THROW(antisym_canonical(Matrix::Identity(2, 2)), InputError);
  EXPECT_THROW(antisym_canonical(Matrix::Zero(2, 3)), InputError);
}

TEST(AntisymCanonical, MVectorFactorsR) {
  const auto corpus = testing::antisym_corpus(10, 43);
  for (const auto& item : corpus) {
    const AntisymCanonicalForm f = antisym_canonical(item.b);
    if (f.k() == 0) continue;
    const Matrix r0 = block_rotation_generator(f.k());
    const Vector m = f.m_vector();
    EXPECT_LT((m.asDiagonal() * r0 * m.asDiagonal() - f.r_matrix()).norm(), 1e-12);
  }
}

TEST(InterleavePermutation, ConjugatesJToBlockGenerator) {
  for (std::size_t k = 1; k <= 6; ++k) {
    const Matrix p = interleave_permutation(k);
    const Matrix j = standard_J(k).j;
    EXPECT_LT((p.transpose() * j * p - block_rotation_generator(k)).norm(), 1e-15);
    EXPECT_LT((p.transpose() * p - Matrix::Identity(p.rows(), p.cols())).norm(), 1e-15);
  }
  EXPECT_THROW(interleave_permutation(0), InputError);
}

}  // namespace
}  // namespace grothsp
