#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "arw/witness.hpp"
#include "test_support.hpp"

using namespace arw;

namespace {

const double kS295 = std::sqrt(295.0);
const double kS759 = std::sqrt(759.0);

}  // namespace

TEST(WitnessOperator, IdenticalPairIsZero) {
  const WitnessPair p{HermitianMatrix::identity(3), HermitianMatrix::identity(3)};
  EXPECT_EQ(witness_operator(p).matrix().max_abs(), 0.0);
  EXPECT_EQ(min_violation(p), 0.0);
}

TEST(WitnessOperator, TwoByTwoPairs) {
  // Direct arithmetic: W00 = b^2 + d^2 - (1+x)^2 - c^2, W11 = b^2 + d^2 - (1-x)^2 - c^2, W01 = 2bd - 2c.
  const HermitianMatrix w295 = witness_operator(named_pair(PairId::pair295));
  EXPECT_NEAR(w295(0, 0).real(), (65.0 - 4.0 * kS295) / 80.0, 1e-14);
  EXPECT_NEAR(w295(1, 1).real(), (65.0 + 4.0 * kS295) / 80.0, 1e-14);
  EXPECT_NEAR(std::abs(w295(0, 1)), 0.0, 1e-15);

  const HermitianMatrix w759 = witness_operator(named_pair(PairId::pair759));
  EXPECT_NEAR(w759(0, 0).real(), (501.0 - 20.0 * kS759) / 1600.0, 1e-14);
  EXPECT_NEAR(w759(1, 1).real(), (501.0 + 20.0 * kS759) / 1600.0, 1e-14);
  EXPECT_NEAR(std::abs(w759(0, 1)), 0.0, 1e-15);
}

TEST(NamedPair, Entries) {
  EXPECT_DOUBLE_EQ(named_pair(PairId::pair295).A()(0, 0).real(), 1.0 + kS295 / 40.0);
  EXPECT_EQ(named_pair(PairId::pair759).B()(0, 1), Complex(-5.0 / 8.0));
  EXPECT_EQ(named_pair(PairId::two_qubit).A()(1, 2), Complex(-25.0 / 32.0));
  EXPECT_EQ(named_pair("two_qubit"), named_pair(PairId::two_qubit));
  EXPECT_THROW(named_pair("pair123"), std::invalid_argument);
}

TEST(MinViolation, ClosedForms) {
  EXPECT_NEAR(min_violation(named_pair(PairId::pair295)), (65.0 - 4.0 * kS295) / 80.0, 1e-12);
  EXPECT_NEAR(min_violation(named_pair(PairId::pair295)), -0.0462782, 5e-8);
  EXPECT_NEAR(min_violation(named_pair(PairId::pair759)), (501.0 - 20.0 * kS759) / 1600.0, 1e-12);
  EXPECT_NEAR(min_violation(named_pair(PairId::pair759)), -0.0312494, 5e-8);
}

TEST(VerifyAr, TwoQubitPairOnProductState) {
  const ARReport r = verify_ar(named_pair(PairId::two_qubit), PureState::basis(4, 0));
  EXPECT_NEAR(r.mean_A, 1.0 + kS295 / 40.0, 1e-12);
  EXPECT_NEAR(r.mean_B, 1.5, 1e-12);
  EXPECT_NEAR(r.mean_BmA, (20.0 - kS295) / 40.0, 1e-12);
  EXPECT_NEAR(r.mean_BmA, 0.0706109, 5e-8);
  EXPECT_NEAR(r.mean_W, (65.0 - 4.0 * kS295) / 80.0, 1e-12);
  EXPECT_TRUE(r.A_psd);
  EXPECT_TRUE(r.B_psd);
  EXPECT_TRUE(r.BmA_psd);
  EXPECT_TRUE(r.quantumness_witnessed);
}

TEST(VerifyAr, IdentityPairIsClassical) {
  std::mt19937_64 rng(1);
  const WitnessPair p{HermitianMatrix::identity(3), HermitianMatrix::identity(3)};
  const ARReport r = verify_ar(p, PureState(arw::testing::random_unit_vector(3, rng)));
  EXPECT_GE(r.mean_A, 0.0);
  EXPECT_GE(r.mean_B, 0.0);
  EXPECT_GE(r.mean_BmA, 0.0);
  EXPECT_EQ(r.mean_W, 0.0);
  EXPECT_FALSE(r.quantumness_witnessed);
}

TEST(VerifyAr, SingleQubitPair) {
  const ARReport r = verify_ar(named_pair(PairId::pair295), PureState::basis(2, 0));
  EXPECT_NEAR(r.mean_W, (65.0 - 4.0 * kS295) / 80.0, 1e-12);
  EXPECT_TRUE(r.quantumness_witnessed);
}

TEST(VerifyAr, MixedStateAndErrors) {
  const WitnessPair p = named_pair(PairId::two_qubit);
  const ARReport r = verify_ar(p, DensityMatrix::from_pure(PureState::basis(4, 0)));
  EXPECT_NEAR(r.mean_W, (65.0 - 4.0 * kS295) / 80.0, 1e-12);
  EXPECT_TRUE(r.quantumness_witnessed);
  // maximally mixed state: <W> = Tr W / 4 > 0
  EXPECT_FALSE(verify_ar(p, DensityMatrix::maximally_mixed(4)).quantumness_witnessed);
  EXPECT_THROW(verify_ar(p, PureState::basis(2, 0)), DimensionError);
}

TEST(VerifyAr, NegativeMeanWithoutPositivityIsNotWitnessed) {
  // <W> < 0 but A is not PSD: not a valid witness.
  const WitnessPair p{HermitianMatrix::diagonal({-2.0, 1.0}), HermitianMatrix::diagonal({1.0, 1.0})};
  const ARReport r = verify_ar(p, PureState::basis(2, 0));
  EXPECT_LT(r.mean_W, 0.0);
  EXPECT_FALSE(r.A_psd);
  EXPECT_FALSE(r.quantumness_witnessed);
}

TEST(WitnessPair, DimensionMismatch) {
  EXPECT_THROW(WitnessPair(HermitianMatrix::identity(2), HermitianMatrix::identity(4)), DimensionError);
}

TEST(WitnessProperty, ScalingLaw) {
  for (PairId id : {PairId::pair295, PairId::pair759, PairId::two_qubit}) {
    const WitnessPair p = named_pair(id);
    const auto base = eig_hermitian(witness_operator(p)).values;
    const auto scaled = eig_hermitian(witness_operator(p.scaled(2.0))).values;
    for (std::size_t k = 0; k < base.size(); ++k) EXPECT_NEAR(scaled[k], 4.0 * base[k], 1e-12);
  }
}

TEST(WitnessProperty, CommutingPairsAreClassical) {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 4;
    // Shared eigenbasis U, A = U diag(f) U^dagger, B = U diag(g) U^dagger with 0 <= f <= g.
    const Matrix u_basis = eig_hermitian(arw::testing::random_hermitian(n, rng)).vectors;
    std::vector<double> f(n), g(n);
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = 2.0 * u(rng);
      g[i] = f[i] + u(rng);
    }
    auto conj_by = [&](const std::vector<double>& d) {
      return HermitianMatrix(matmul(u_basis, matmul(Matrix::diagonal(d), u_basis.adjoint())), 1e-9);
    };
    ASSERT_GE(min_violation({conj_by(f), conj_by(g)}), -1e-12) << trial;
  }
}

TEST(WitnessProperty, NamedPairsStrictlyPositive) {
  for (PairId id : {PairId::pair295, PairId::pair759, PairId::two_qubit}) {
    const WitnessPair p = named_pair(id);
    EXPECT_GT(min_eigenvalue(p.A()), 0.0);
    EXPECT_GT(min_eigenvalue(p.B()), 0.0);
    EXPECT_GT(min_eigenvalue(p.B() - p.A()), 0.0084);
    EXPECT_TRUE(is_diagonal(witness_operator(p), 1e-12));
  }
  for (PairId id : {PairId::pair295, PairId::pair759}) {
    const HermitianMatrix a = named_pair(id).A();
    EXPECT_NEAR((a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real(), 0.36, 1e-14);
  }
}
