#include <cmath>

#include <gtest/gtest.h>

#include "grothsp/errors.hpp"
#include "grothsp/linalg.hpp"
#include "grothsp/random.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace grothsp {
namespace {

TEST(FromRowMajor, RoundTripsEntries) {
  const std::vector<double> data{1, 2, 3, 4, 5, 6};
  const Matrix a = from_row_major(2, 3, data);
  EXPECT_EQ(a(0, 2), 3.0);
  EXPECT_EQ(a(1, 0), 4.0);
  EXPECT_EQ(to_row_major(a), data);
}

TEST(FromRowMajor, RejectsBadCountAndNonFinite) {
  const std::vector<double> short_data{1, 2, 3};
  EXPECT_THROW(from_row_major(2, 2, short_data), InputError);
  const std::vector<double> nan_data{1, NAN, 3, 4};
  EXPECT_THROW(from_row_major(2, 2, nan_data), InputError);
}

TEST(SymEig, MatchesCharacteristicPolynomialFor2x2) {
  Engine engine = stream_engine(11, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix g = gaussian_matrix(2, 2, engine);
    const Matrix m = g + g.transpose();
    const auto [hi, lo] = testing::eig2x2(m(0, 0), m(0, 1), m(1, 1));
    const SymEig eig = sym_eig(m);
    EXPECT_NEAR(eig.values(0), hi, 1e-12);
    EXPECT_NEAR(eig.values(1), lo, 1e-12);
  }
}

TEST(SymEig, DecomposesAndSortsWithSignConvention) {
  Engine engine = stream_engine(12, 0);
  for (int n = 1; n <= 9; ++n) {
    const Matrix g = gaussian_matrix(n, n, engine);
    const Matrix m = g + g.transpose();
    const SymEig eig = sym_eig(m);
    const Matrix rebuilt = eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose();
    EXPECT_LT((rebuilt - m).norm(), 1e-11 * (1.0 + m.norm()));
    EXPECT_LT((eig.vectors.transpose() * eig.vectors - Matrix::Identity(n, n)).norm(), 1e-12);
    for (int i = 1; i < n; ++i) EXPECT_GE(eig.values(i - 1), eig.values(i));
    for (int c = 0; c < n; ++c) {
      Eigen::Index first = 0;
      while (std::abs(eig.vectors(first, c)) <= 1e-12) ++first;
      EXPECT_GT(eig.vectors(first, c), 0.0);
    }
  }
}

TEST(SymEig, RejectsAsymmetricAndNonSquare) {
  Matrix m(2, 2);
  m << 1, 2, 0, 1;
  EXPECT_THROW(sym_eig(m), InputError);
  EXPECT_THROW(sym_eig(Matrix::Zero(2, 3)), InputError);
}

TEST(SingularValues, PaddedToColumnCountAndConsistentWithNorms) {
  Engine engine = stream_engine(13, 0);
  const Matrix a = gaussian_matrix(3, 5, engine);
  const Vector s = singular_values(a);
  ASSERT_EQ(s.size(), 5);
  EXPECT_EQ(s(3), 0.0);
  EXPECT_EQ(s(4), 0.0);
  EXPECT_NEAR(s.norm(), hs_norm(a), 1e-12);
  EXPECT_NEAR(s(0), spectral_norm(a), 1e-12);
}

TEST(TopSingularPair, SatisfiesDefiningRelation) {
  Engine engine = stream_engine(14, 0);
  const Matrix a = gaussian_matrix(6, 4, engine);
  const SingularPair p = top_singular_pair(a);
  EXPECT_LT((a * p.right - p.value * p.left).norm(), 1e-12);
  EXPECT_NEAR(p.left.norm(), 1.0, 1e-12);
  const SingularPair z = top_singular_pair(Matrix::Zero(3, 2));
  EXPECT_EQ(z.value, 0.0);
  EXPECT_EQ(z.left(0), 1.0);
  EXPECT_EQ(z.right(0), 1.0);
}

TEST(NumericalRank, CountsPlantedRank) {
  for (const auto& item : testing::square_corpus(80, 15)) {
    Eigen::FullPivLU<Matrix> lu(item.a);
    lu.setThreshold(1e-10);
    EXPECT_EQ(numerical_rank(item.a), static_cast<std::size_t>(lu.rank())) << item.label;
  }
  EXPECT_EQ(numerical_rank(Matrix::Zero(4, 4)), 0U);
}

TEST(SpectrumReport, CollectsNorms) {
  Matrix a = Matrix::Zero(3, 3);
  a(0, 0) = 3.0;
  a(1, 1) = 4.0;
  const SpectrumReport r = spectrum_report(a);
  EXPECT_EQ(r.numerical_rank, 2U);
  EXPECT_DOUBLE_EQ(r.spectral_norm, 4.0);
  EXPECT_DOUBLE_EQ(r.hs_norm, 5.0);
  ASSERT_EQ(r.singular_values.size(), 3U);
}

TEST(Orthonormalize, MatchesHandGramSchmidtAndDropsDependentRows) {
  Engine engine = stream_engine(16, 0);
  const Matrix v = gaussian_matrix(5, 3, engine);
  const Matrix q = orthonormalize(v.transpose());
  const Matrix hand = testing::gram_schmidt_columns(v);
  EXPECT_LT((q.transpose() - hand).norm(), 1e-12);

  Matrix rows(3, 4);
  rows.row(0) << 1, 0, 0, 0;
  rows.row(1) << 2, 0, 0, 0;
  rows.row(2) << 0, 1, 1, 0;
  EXPECT_EQ(orthonormalize(rows).rows(), 2);
}

TEST(SolveRightFactor, ReproducesFactorAndIdentityOffRange) {
  Engine engine = stream_engine(17, 0);
  const Matrix v = gaussian_matrix(4, 2, engine) * gaussian_matrix(2, 6, engine);  // rank 2
  const Matrix s_true = gaussian_matrix(4, 4, engine);
  const Matrix w = s_true * v;
  const Matrix s = solve_right_factor(v, w);
  EXPECT_LT((s * v - w).norm(), 1e-10 * (1.0 + w.norm()));
  Eigen::JacobiSVD<Matrix> svd(v, Eigen::ComputeFullU);
  const Matrix off = svd.matrixU().rightCols(2);
  EXPECT_LT((s * off - off).norm(), 1e-10);
}

TEST(SolveRightFactor, DetectsKernelMismatch) {
  Matrix v = Matrix::Zero(2, 2);
  v(0, 0) = 1.0;
  Matrix w = Matrix::Identity(2, 2);
  EXPECT_THROW(solve_right_factor(v, w), ConsistencyError);
  EXPECT_THROW(solve_right_factor(v, Matrix::Zero(3, 3)), InputError);
}

TEST(HadamardBound, HoldsOnRandomFactors) {
  Engine engine = stream_engine(18, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index k = 1 + trial % 6;
    const Eigen::Index l = 1 + (trial / 6) % k;
    const HadamardCheck c = hadamard_bound_check(gaussian_matrix(k, l, engine), gaussian_matrix(k, l, engine));
    EXPECT_TRUE(c.holds) << c.lhs << " > " << c.rhs;
  }
  EXPECT_THROW(hadamard_bound_check(Matrix::Zero(2, 3), Matrix::Zero(2, 3)), InputError);
}

TEST(HadamardBound, TightForOrthogonalColumns) {
  const Matrix p = Matrix::Identity(3, 3) * 2.0;
  const HadamardCheck c = hadamard_bound_check(p, p);
  EXPECT_NEAR(c.lhs, 64.0, 1e-12);
  EXPECT_NEAR(c.rhs, 64.0, 1e-12);
}

TEST(MatrixExp, RotationGeneratorAndTaylorOracle) {
  Matrix g(2, 2);
  g << 0, -0.7, 0.7, 0;
  EXPECT_LT((matrix_exp(g) - Matrix(testing::rotation(0.7))).norm(), 1e-14);
  Engine engine = stream_engine(19, 0);
  const Matrix x = gaussian_matrix(5, 5, engine, 0.8);
  const Matrix e = matrix_exp(x);
  EXPECT_LT((e - testing::taylor_exp(x)).norm(), 1e-11 * e.norm());
}

TEST(InverseDiagonalScale, DividesRowsAndColumns) {
  Matrix a = Matrix::Ones(2, 2);
  const std::vector<double> lambda{0.5, 0.25};
  const Matrix b = inverse_diagonal_scale(a, lambda);
  EXPECT_DOUBLE_EQ(b(0, 0), 4.0);
  EXPECT_DOUBLE_EQ(b(0, 1), 8.0);
  EXPECT_DOUBLE_EQ(b(1, 1), 16.0);
}

TEST(Random, StreamsAreReproducibleAndDistinct) {
  Engine a = stream_engine(5, 1);
  Engine b = stream_engine(5, 1);
  Engine c = stream_engine(5, 2);
  const Matrix ma = gaussian_matrix(3, 3, a);
  EXPECT_EQ(ma, gaussian_matrix(3, 3, b));
  EXPECT_NE(ma, gaussian_matrix(3, 3, c));
  EXPECT_NE(derive_seed(1, 2), derive_seed(2, 1));
  const Matrix s = sign_matrix(4, 4, a);
  EXPECT_TRUE((s.array().abs() == 1.0).all());
}

}  // namespace
}  // namespace grothsp
