#include <gtest/gtest.h>

#include <cmath>

#include "arw/search.hpp"
#include "test_support.hpp"

using namespace arw;

namespace {

struct HandPair {
  double a = 3.0 / 10.0;
  double c = -std::sqrt(91.0) / 10.0;
  double b = 7.0 / 5.0;
  double d = (std::sqrt(7.0) - std::sqrt(91.0)) / 10.0;
};

WitnessPair hand_pair(double scale = 1.0) {
  const HandPair h;
  const HermitianMatrix a{{1.0 + h.a, h.c}, {h.c, 1.0 - h.a}};
  const HermitianMatrix b{{h.b, h.d}, {h.d, h.b}};
  return {scale * a, scale * b};
}

// lambda_min of s^2 (B^2 - A^2) for the hand pair from explicit 2x2 entries.
double hand_pair_min_w(double s) {
  const HandPair h;
  const double b2_diag = h.b * h.b + h.d * h.d, b2_off = 2.0 * h.b * h.d;
  const double w00 = b2_diag - ((1.0 + h.a) * (1.0 + h.a) + h.c * h.c);
  const double w11 = b2_diag - ((1.0 - h.a) * (1.0 - h.a) + h.c * h.c);
  const double w01 = b2_off - 2.0 * h.c;
  return s * s * arw::testing::eig2_closed_form(w00, w11, w01)[0];
}

SearchConfig quick_config() {
  SearchConfig cfg;
  cfg.restarts = 12;
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST(Feasibility, NamedPairIsFeasible) {
  const WitnessPair p = named_pair(PairId::pair295);
  EXPECT_LE(feasibility(p, Normalization::spectra_in_0_2), 0.0);
  // 2x2 oracle: lambda_max(A2) = 1 + sqrt(295/1600 + 729/1600) = 1.8, lambda_max(B2) = 3/2 + 9/20
  EXPECT_NEAR(max_eigenvalue(p.A()), 1.8, 1e-14);
  EXPECT_NEAR(max_eigenvalue(p.B()), 39.0 / 20.0, 1e-14);
  // binding constraint is B - A: lambda_min = 1/2 - sqrt((sqrt295/40)^2 + (9/40)^2) = 1/2 - sqrt(376)/40
  EXPECT_NEAR(feasibility(p, Normalization::spectra_in_0_2), -(0.5 - std::sqrt(376.0) / 40.0), 1e-14);
}

TEST(Feasibility, BelowAIsInfeasible) {
  const WitnessPair p{HermitianMatrix::identity(2), 0.5 * HermitianMatrix::identity(2)};
  EXPECT_NEAR(feasibility(p, Normalization::none), 0.5, 1e-15);
  EXPECT_NEAR(feasibility(p, Normalization::spectra_in_0_2), 0.5, 1e-15);
}

TEST(Feasibility, HandConstructedPair) {
  const HandPair h;
  const double excess = std::abs(h.d) + h.b - 2.0;
  EXPECT_NEAR(excess, 0.0894, 5e-5);
  EXPECT_NEAR(feasibility(hand_pair(), Normalization::spectra_in_0_2), excess, 1e-12);
  const double s = 2.0 / (h.b + std::abs(h.d));
  EXPECT_LE(feasibility(hand_pair(s), Normalization::spectra_in_0_2), 1e-12);
}

TEST(Feasibility, TraceNormalization) {
  const WitnessPair p{HermitianMatrix::diagonal({1.0, 2.0}), HermitianMatrix::diagonal({2.0, 2.0})};
  EXPECT_NEAR(feasibility(p, Normalization::fixed_trace_A_2), 1.0, 1e-15);
  EXPECT_LE(feasibility(named_pair(PairId::pair759), Normalization::fixed_trace_A_2), 1e-15);
}

TEST(Objective, Examples) {
  SearchConfig cfg;
  EXPECT_EQ(objective({HermitianMatrix::identity(2), HermitianMatrix::identity(2)}, cfg), 0.0);
  EXPECT_NEAR(objective(named_pair(PairId::pair295), cfg), (65.0 - 4.0 * std::sqrt(295.0)) / 80.0, 1e-12);

  const HandPair h;
  const double s = 2.0 / (h.b + std::abs(h.d));
  const double oracle = hand_pair_min_w(s);
  EXPECT_NEAR(oracle, -0.151, 1e-3);
  EXPECT_NEAR(objective(hand_pair(s), cfg), oracle, 1e-10);
}

TEST(Objective, PenaltiesApply) {
  SearchConfig cfg;
  const WitnessPair bad{HermitianMatrix::identity(2), 0.5 * HermitianMatrix::identity(2)};
  // lambda_min(W) = 1/4 - 1 = -3/4; penalty 1e3 * 0.5^2
  EXPECT_NEAR(objective(bad, cfg), -0.75 + 250.0, 1e-12);
  cfg.require_diagonal_W = true;
  const WitnessPair offdiag{HermitianMatrix::identity(2), HermitianMatrix{{1.5, 0.1}, {0.1, 1.5}}};
  const HermitianMatrix w = witness_operator(offdiag);
  const double off2 = 2.0 * std::norm(w(0, 1));
  EXPECT_NEAR(objective(offdiag, cfg), min_eigenvalue(w) + 1e3 * off2, 1e-12);
}

TEST(Search, FindsStrongViolation) {
  const SearchResult r = search(quick_config());
  EXPECT_LE(r.objective, -0.059);
  EXPECT_LE(r.feasibility_residual, kFeasibleTol);
  EXPECT_FALSE(r.unbounded);
}

TEST(Search, Deterministic) {
  const SearchResult a = search(quick_config());
  const SearchResult b = search(quick_config());
  EXPECT_EQ(a.objective, b.objective);
  EXPECT_EQ(a.restart_index, b.restart_index);
  EXPECT_EQ(a.evaluations, b.evaluations);
  EXPECT_EQ(a.best_pair, b.best_pair);
}

TEST(Search, RestartStreamsDependOnlyOnSeedAndIndex) {
  // Restart k of a 12-restart run equals restart k of a 5-restart run.
  SearchConfig small = quick_config();
  small.restarts = 5;
  const SearchResult a = search(quick_config());
  const SearchResult b = search(small);
  for (std::size_t k = 0; k < 5; ++k) {
    if (std::isnan(a.restart_objectives[k]))
      EXPECT_TRUE(std::isnan(b.restart_objectives[k]));
    else
      EXPECT_EQ(a.restart_objectives[k], b.restart_objectives[k]);
  }
}

TEST(Search, OutputIsFeasibleAndHonest) {
  const SearchResult r = search(quick_config());
  EXPECT_LE(feasibility(r.best_pair, Normalization::spectra_in_0_2), kFeasibleTol);
  const Spectrum ws = eig_hermitian(witness_operator(r.best_pair));
  const ARReport rep = verify_ar(r.best_pair, PureState(ws.vector(0)), 1e-8);
  EXPECT_TRUE(rep.A_psd);
  EXPECT_TRUE(rep.B_psd);
  EXPECT_TRUE(rep.BmA_psd);
  EXPECT_TRUE(rep.quantumness_witnessed);
  EXPECT_GE(r.objective, ws.values[0] - 1e-10);
  // minimum over the recorded per-restart values
  double best = std::numeric_limits<double>::infinity();
  for (double v : r.restart_objectives)
    if (!std::isnan(v)) best = std::min(best, v);
  EXPECT_EQ(r.objective, best);
  EXPECT_EQ(r.objective, r.restart_objectives[static_cast<std::size_t>(r.restart_index)]);
}

TEST(Search, DiagonalWitnessRestriction) {
  SearchConfig cfg = quick_config();
  cfg.require_diagonal_W = true;
  const SearchResult r = search(cfg);
  EXPECT_LE(r.objective, (65.0 - 4.0 * std::sqrt(295.0)) / 80.0);
  EXPECT_LE(r.feasibility_residual, kFeasibleTol);
}

TEST(Search, UnnormalizedProblemReportsScaling) {
  SearchConfig cfg = quick_config();
  cfg.restarts = 10;
  cfg.normalization = Normalization::none;
  const SearchResult r = search(cfg);
  EXPECT_TRUE(r.unbounded);
  EXPECT_NE(r.diagnostic.find("unbounded"), std::string::npos);
  const double base = min_violation(r.best_pair);
  EXPECT_NEAR(min_violation(r.best_pair.scaled(2.0)), 4.0 * base, 1e-12);
}

TEST(Search, TraceNormalizationAndHigherDimension) {
  SearchConfig cfg = quick_config();
  cfg.normalization = Normalization::fixed_trace_A_2;
  const SearchResult r2 = search(cfg);
  EXPECT_LT(r2.objective, 0.0);
  EXPECT_LE(r2.feasibility_residual, kFeasibleTol);

  SearchConfig c3;
  c3.dim = 3;
  c3.restarts = 3;
  c3.max_iterations_per_restart = 1500;
  const SearchResult r3 = search(c3);
  EXPECT_EQ(r3.best_pair.dim(), 3u);
  EXPECT_LE(feasibility(r3.best_pair, Normalization::spectra_in_0_2), kFeasibleTol);
  EXPECT_LT(r3.objective, 0.0);
}

TEST(Search, InvalidConfig) {
  SearchConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(search(cfg), std::invalid_argument);
  cfg.restarts = 1;
  cfg.penalty_weight = 0.0;
  EXPECT_THROW(search(cfg), std::invalid_argument);
}

TEST(SearchProperty, UnnormalizedScalingLaw) {
  // Scaling a feasible violating pair by 2 keeps cone feasibility and quadruples W's spectrum.
  for (const WitnessPair& p : {named_pair(PairId::pair295), named_pair(PairId::pair759), hand_pair()}) {
    const WitnessPair q = p.scaled(2.0);
    EXPECT_LE(feasibility(q, Normalization::none), 1e-12);
    const auto base = eig_hermitian(witness_operator(p)).values;
    const auto scaled = eig_hermitian(witness_operator(q)).values;
    for (std::size_t k = 0; k < base.size(); ++k) EXPECT_NEAR(scaled[k], 4.0 * base[k], 1e-12);
  }
}

TEST(Simplex, MinimizesRosenbrock) {
  auto rosen = [](const std::vector<double>& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  SimplexOptions o;
  o.max_iterations = 5000;
  const SimplexResult r = nelder_mead(rosen, {-1.2, 1.0}, o);
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], 1.0, 1e-5);
}
