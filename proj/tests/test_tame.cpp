#include <cmath>

#include <gtest/gtest.h>

#include "grothsp/errors.hpp"
#include "grothsp/random.hpp"
#include "grothsp/tame.hpp"
#include "support/corpus.hpp"

namespace grothsp {
namespace {

double sum_norms(const Matrix& s, const Matrix& v) {
  double total = 0.0;
  for (Eigen::Index c = 0; c < v.cols(); ++c) total += (s * v.col(c)).norm();
  return total;
}

TEST(Tame, FullRankFamiliesMeetCertifiedBound) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    Engine engine = stream_engine(61, i);
    const std::size_t n = 1 + i % 4;
    const auto count = static_cast<Eigen::Index>(2 * n + i % 3);
    const VectorFamily f = make_family(gaussian_matrix(static_cast<Eigen::Index>(2 * n), count, engine));
    TameOptions options;
    options.search.seed = i;
    const TameResult r = tame(f, options);
    EXPECT_EQ(r.case_tag, TameCase::full_rank);
    EXPECT_EQ(r.k, n);
    EXPECT_EQ(r.l, 0U);
    EXPECT_LT(r.symplectic_residual, 1e-8);
    EXPECT_NEAR(r.achieved_sum, sum_norms(r.s_matrix, f.columns), 1e-9 * r.achieved_sum);
    EXPECT_LE(r.achieved_sum, r.certified_bound * (1.0 + 1e-6));
    EXPECT_LE(r.achieved_sum, r.empirical_bound * (1.0 + 1e-6));
    EXPECT_TRUE(r.certified);
  }
}

TEST(Tame, FullRankMapDoesNotDependOnEps) {
  Engine engine = stream_engine(62, 0);
  const VectorFamily f = make_family(gaussian_matrix(4, 6, engine));
  const TameResult r = tame(f);
  EXPECT_LT((r.s_at(1e-3) - r.s_matrix).norm(), 1e-12 * r.s_matrix.norm());
  EXPECT_NEAR(r.achieved_sum, r.limit_sum, 1e-9 * r.achieved_sum);
}

TEST(Tame, CorpusInvariants) {
  for (const auto& item : testing::family_corpus(60, 63)) {
    const TameResult r = tame(item.family);
    EXPECT_EQ(r.k, item.k) << item.label;
    EXPECT_EQ(r.l, item.l) << item.label;
    EXPECT_EQ(r.rank, 2 * item.k);
    EXPECT_LT(r.symplectic_residual, 1e-8) << item.label;
    if (r.rank > 0) {
      EXPECT_LE(r.achieved_sum * r.achieved_sum,
                3.0 * kKgUpper * static_cast<double>(r.rank) * r.infty_one * (1.0 + 1e-6))
          << item.label;
    }
    // The eps family converges to the reduced map as eps -> 0.
    EXPECT_NEAR(r.achieved_sum, r.limit_sum,
                r.eps * r.normalized_mass * (1.0 + 1e-6) + r.roundoff_allowance + 1e-9 * (1 + r.limit_sum))
        << item.label;
  }
}

TEST(Tame, IsotropicFamilyVanishesInTheLimit) {
  Matrix v = Matrix::Zero(6, 4);
  Engine engine = stream_engine(64, 0);
  v.bottomRows(3) = gaussian_matrix(3, 4, engine);  // span of e_4..e_6 is Lagrangian
  const VectorFamily f = make_family(random_symplectic(3, 0.3, 2) * v);
  TameOptions options;
  options.eps = 1e-4;
  const TameResult r = tame(f, options);
  EXPECT_EQ(r.case_tag, TameCase::degenerate);
  EXPECT_EQ(r.rank, 0U);
  EXPECT_EQ(r.l, 3U);
  EXPECT_EQ(r.limit_sum, 0.0);
  EXPECT_LE(r.achieved_sum, options.eps * r.normalized_mass * (1.0 + 1e-6) + r.roundoff_allowance);
  EXPECT_LT(r.roundoff_allowance, 1e-3 * options.eps * r.normalized_mass);
  const double smaller = sum_norms(r.s_at(1e-6), f.columns);
  EXPECT_LT(smaller, r.achieved_sum);
  EXPECT_TRUE(is_symplectic(r.s_at(1e-6), f.ambient, 1e-6).holds);
}

TEST(Tame, MixedFamilyScalesLikeEpsOnTheKernel) {
  for (const auto& item : testing::family_corpus(30, 65)) {
    if (item.label != "mixed") continue;
    const TameResult r = tame(item.family);
    const double gap = r.achieved_sum - r.limit_sum;
    EXPECT_LE(gap, r.eps * r.isotropic_mass + r.roundoff_allowance + 1e-9 * (1.0 + r.limit_sum)) << item.label;
  }
}

TEST(Tame, Example2FamilyRespectsLowerBound) {
  for (std::size_t m = 1; m <= 3; ++m) {
    const TameResult r = tame(example2_vectors(m, m, 2 * m + 1));
    EXPECT_GE(r.achieved_sum, 2.0 * static_cast<double>(m) - 1e-8);
    EXPECT_LE(r.achieved_sum, r.certified_bound * (1.0 + 1e-6));
  }
}

TEST(Tame, RejectsNonPositiveEps) {
  TameOptions options;
  options.eps = 0.0;
  EXPECT_THROW(tame(example2_vectors(1, 1, 2), options), InputError);
}

TEST(Tame, ZeroFamilyGivesIdentityLikeMap) {
  const TameResult r = tame(make_family(Matrix::Zero(4, 3)));
  EXPECT_EQ(r.rank, 0U);
  EXPECT_EQ(r.achieved_sum, 0.0);
  EXPECT_LT(r.symplectic_residual, 1e-12);
}

}  // namespace
}  // namespace grothsp
