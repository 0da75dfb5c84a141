#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "branchworlds/error.hpp"
#include "branchworlds/norm_consistency.hpp"
#include "oracles.hpp"

namespace bw = branchworlds;
using oracle::q;

TEST(Composition, PythagoreanPair) {
  const std::vector<double> v{3, 0, 0}, w{0, 4, 0};
  const auto r = bw::check_disjoint_composition(bw::p_norm(2), v, w);
  EXPECT_DOUBLE_EQ(r.combined, 5.0);
  EXPECT_LE(r.residual, 1e-12);
  EXPECT_TRUE(r.passed);
}

TEST(Composition, WeightedNormFailsTheWitness) {
  const std::vector<double> v{1, 0, 0}, w{0, 1, 0};
  const auto r = bw::check_disjoint_composition(bw::weighted_norm(), v, w);
  EXPECT_DOUBLE_EQ(r.combined, 3.0);
  EXPECT_DOUBLE_EQ(r.composed, 5.0);
  EXPECT_GE(r.residual, 1.0);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(bw::check_symmetries(bw::weighted_norm()).permutation_invariant);
}

TEST(Composition, SweepSeparatesNorms) {
  for (const char* name : {"p1", "p1.5", "p2", "p3", "max"}) {
    EXPECT_TRUE(bw::composition_sweep(bw::norm_by_name(name)).passed) << name;
  }
  EXPECT_FALSE(bw::composition_sweep(bw::weighted_norm()).passed);
  EXPECT_FALSE(bw::composition_sweep(bw::norm_by_name("p2-perturbed")).passed);
}

TEST(Composition, InputErrors) {
  const std::vector<double> v{1, 1}, w{0, 1}, x{1};
  try {
    (void)bw::check_disjoint_composition(bw::p_norm(2), v, w);
    FAIL();
  } catch (const bw::Error& e) {
    EXPECT_EQ(e.code(), bw::ErrorCode::OverlappingSupport);
  }
  try {
    (void)bw::check_disjoint_composition(bw::p_norm(2), v, x);
    FAIL();
  } catch (const bw::Error& e) {
    EXPECT_EQ(e.code(), bw::ErrorCode::IndexOutOfRange);
  }
}

TEST(FTable, PowerLaws) {
  const auto two = bw::f_table(bw::p_norm(2), 16);
  EXPECT_DOUBLE_EQ(two.direct[0], 1.0);
  EXPECT_NEAR(two.direct[3], 2.0, 1e-12);
  EXPECT_TRUE(two.agree);
  const auto three = bw::f_table(bw::p_norm(3), 8);
  EXPECT_NEAR(three.direct[7], 2.0, 1e-12);
  EXPECT_NEAR(three.recursive[7], 2.0, 1e-12);
}

TEST(EstimateP, RecoversDeclaredExponents) {
  for (auto p : {q(1), q(3, 2), q(2), q(3)}) {
    const auto e = bw::estimate_p(bw::p_norm(p));
    EXPECT_NEAR(e.p, bw::to_double(p), 1e-9);
    EXPECT_LT(e.spread, bw::kExponentSpreadTolerance);
    EXPECT_TRUE(e.multiplicative);
    EXPECT_TRUE(e.monotone);
    EXPECT_TRUE(e.passed);
  }
}

TEST(EstimateP, MaxNormIsDegenerate) {
  try {
    (void)bw::estimate_p(bw::max_norm());
    FAIL();
  } catch (const bw::Error& e) {
    EXPECT_EQ(e.code(), bw::ErrorCode::DegenerateNorm);
  }
}

TEST(EstimateP, PerturbedNormFailsTheSpreadGate) {
  const auto e = bw::estimate_p(bw::perturbed(bw::p_norm(2), 1e-3));
  EXPECT_GE(e.spread, bw::kExponentSpreadTolerance);
  EXPECT_FALSE(e.passed);
}

TEST(RationalVectors, FormulaValues) {
  const std::vector<std::vector<bw::Rational>> sample{{q(1, 2), q(1, 3)}};
  EXPECT_NEAR(bw::p_norm(1)(std::vector{0.5, 1.0 / 3.0}), 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(bw::p_norm(2)(std::vector{0.6, 0.8}), 1.0, 1e-15);
  EXPECT_NEAR(bw::p_norm(3)(std::vector{1.0, 2.0 / 3.0}), std::cbrt(35.0 / 27.0), 1e-15);
  for (auto p : {q(1), q(3, 2), q(2), q(3)}) {
    const auto r = bw::verify_rational_vectors(bw::p_norm(p), p, bw::default_rational_sample());
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.worst_rational_step, 1e-12);
  }
  EXPECT_FALSE(bw::verify_rational_vectors(bw::weighted_norm(), q(1), bw::default_rational_sample()).passed);
}

TEST(NormCheck, FullReports) {
  const auto p2 = bw::run_norm_check(bw::norm_by_name("p2"));
  EXPECT_TRUE(p2.is_p_norm);
  ASSERT_TRUE(p2.estimate.has_value());
  EXPECT_NEAR(p2.estimate->p, 2.0, 1e-9);

  const auto mx = bw::run_norm_check(bw::norm_by_name("max"));
  EXPECT_TRUE(mx.degenerate);
  EXPECT_TRUE(mx.composition.passed);
  EXPECT_FALSE(mx.is_p_norm);

  const auto wt = bw::run_norm_check(bw::norm_by_name("weighted"));
  ASSERT_TRUE(wt.documented_witness.has_value());
  EXPECT_GE(wt.documented_witness->residual, 1.0);
  EXPECT_FALSE(wt.is_p_norm);

  EXPECT_FALSE(bw::run_norm_check(bw::norm_by_name("p2-perturbed")).is_p_norm);
  EXPECT_EQ(bw::norm_by_name("p3/2").name, bw::norm_by_name("p1.5").name);
  try {
    (void)bw::norm_by_name("nope");
    FAIL();
  } catch (const bw::Error& e) {
    EXPECT_EQ(e.code(), bw::ErrorCode::UnknownNorm);
  }
}
