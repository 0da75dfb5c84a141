#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "branchworlds/axioms.hpp"
#include "branchworlds/error.hpp"
#include "branchworlds/game.hpp"
#include "oracles.hpp"

namespace bw = branchworlds;
using oracle::q;
using oracle::qs;

namespace {

const bw::Rational r1 = q(7, 3);
const bw::Rational r2 = q(-5, 2);

bw::Game game(std::vector<bw::Rational> mags, std::vector<bw::Rational> rewards, bw::Exponent e) {
  return bw::make_game(mags, rewards, e);
}

bw::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const bw::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return bw::ErrorCode::ParseError;
}

}  // namespace

TEST(PBorn, QuadraticWorkedExample) {
  // Coefficients 1 and 2e^{i theta}: |alpha|^2 = 1 and 4; the phase is irrelevant.
  std::vector<bw::GameRow> rows{{bw::ExactCoefficient(q(1)), r1},
                                {bw::ExactCoefficient(q(4), q(1, 7)), r2}};
  const bw::Game g(rows, bw::Exponent::finite(2));
  EXPECT_EQ(bw::value_p_born(g), q(1, 5) * r1 + q(4, 5) * r2);
}

TEST(PBorn, LinearWorkedExample) {
  EXPECT_EQ(bw::value_p_born(game(qs({1, 2}), {r1, r2}, bw::Exponent::finite(1))),
            q(1, 3) * r1 + q(2, 3) * r2);
}

TEST(PBorn, CubicHandValue) {
  EXPECT_EQ(bw::value_p_born(game(qs({1, 7}), qs({6, -2}), bw::Exponent::finite(3))), q(-1));
}

TEST(PBorn, ConstantRewardIsReturnedAtEveryExponent) {
  for (auto p : {q(1), q(3, 2), q(2), q(7)}) {
    EXPECT_EQ(bw::value_p_born(game({q(1, 3), q(5), q(2, 9)}, {r2, r2, r2}, bw::Exponent::finite(p))), r2);
  }
}

TEST(PBorn, PhasesNeverMatter) {
  bw::GameSampler sampler;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const bw::Game g = sampler.draw(bw::Exponent::finite(2), 5, i);
    std::vector<bw::GameRow> rows = g.rows();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      rows[k].coefficient = bw::ExactCoefficient(rows[k].coefficient.mag_p(), q(long(k) + 1, 5));
    }
    EXPECT_EQ(bw::value_p_born(bw::Game(rows, g.exponent())), bw::value_p_born(g));
  }
}

TEST(PBorn, RejectsMaxNormGames) {
  EXPECT_EQ(code_of([] { (void)bw::value_p_born(game(qs({1}), qs({1}), bw::Exponent::max())); }),
            bw::ErrorCode::MaxNormUnsupported);
}

TEST(MaxBorn, PicksTheLargestMagnitude) {
  EXPECT_EQ(bw::value_max_born(game(qs({1, 2}), {r1, r2}, bw::Exponent::max())), r2);
  EXPECT_EQ(bw::value_max_born(game(qs({5, 5}), {r1, r2}, bw::Exponent::max())), (r1 + r2) / 2);
  EXPECT_EQ(bw::value_max_born(game({q(1), q(1), q(1, 2)}, qs({3, 5, 100}), bw::Exponent::max())), q(4));
}

TEST(MaxBorn, RequiresMaxMode) {
  EXPECT_EQ(code_of([] { (void)bw::value_max_born(game(qs({1}), qs({1}), bw::Exponent::finite(1))); }),
            bw::ErrorCode::NotMaxMode);
}

TEST(SubjectiveProbabilities, WorkedExamples) {
  EXPECT_EQ(bw::subjective_probabilities(game(qs({1, 4}), qs({0, 0}), bw::Exponent::finite(2))),
            (std::vector{q(1, 5), q(4, 5)}));
  EXPECT_EQ(bw::subjective_probabilities(game(qs({1, 1, 1}), qs({1, 2, 3}), bw::Exponent::finite(1))),
            (std::vector{q(1, 3), q(1, 3), q(1, 3)}));
  // Coefficients 3 and 4 at p = 2.
  EXPECT_EQ(bw::subjective_probabilities(game(qs({9, 16}), qs({0, 0}), bw::Exponent::finite(2))),
            (std::vector{q(9, 25), q(16, 25)}));
}

TEST(SubjectiveProbabilities, DecomposeEverySampledGame) {
  bw::GameSampler sampler;
  for (auto e : {bw::Exponent::finite(1), bw::Exponent::finite(q(3, 2)), bw::Exponent::finite(3),
                 bw::Exponent::max()}) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      const bw::Game g = sampler.draw(e, 99, i);
      const auto probs = bw::subjective_probabilities(g);
      const auto rewards = g.rewards();
      bw::Rational sum = 0, recon = 0;
      for (std::size_t k = 0; k < probs.size(); ++k) {
        EXPECT_GE(probs[k], 0);
        sum += probs[k];
        recon += probs[k] * rewards[k];
      }
      EXPECT_EQ(sum, 1);
      EXPECT_EQ(recon, bw::value(g));
    }
  }
}

TEST(PBorn, AgreesWithDirectSummationOracle) {
  bw::GameSampler sampler;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const bw::Game g = sampler.draw(bw::Exponent::finite(2), 21, i);
    std::vector<bw::Rational> mags;
    for (const auto& row : g.rows()) mags.push_back(row.coefficient.mag_p());
    EXPECT_EQ(bw::value_p_born(g), oracle::weighted_mean(mags, g.rewards()));
  }
}

TEST(Scaling, LeavesValueAndProbabilitiesUnchanged) {
  const bw::Game g = game(qs({1, 2}), {r1, r2}, bw::Exponent::finite(2));
  EXPECT_EQ(bw::scale_coefficients(g, q(1)), g);
  EXPECT_EQ(bw::subjective_probabilities(bw::scale_coefficients(game(qs({1, 4}), {r1, r2}, bw::Exponent::finite(2)), q(4))),
            (std::vector{q(1, 5), q(4, 5)}));
  const bw::Game lin = game(qs({1, 2}), {r1, r2}, bw::Exponent::finite(1));
  EXPECT_EQ(bw::value_p_born(bw::scale_coefficients(lin, q(3, 7))), bw::value_p_born(lin));
  EXPECT_EQ(code_of([&] { (void)bw::scale_coefficients(g, q(0)); }), bw::ErrorCode::NonpositiveFactor);

  bw::GameSampler sampler;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const bw::Game s = sampler.draw(bw::Exponent::finite(q(3, 2)), 8, i);
    const bw::Game t = bw::scale_coefficients(s, q(long(i) + 1, 13));
    EXPECT_EQ(bw::value_p_born(t), bw::value_p_born(s));
    EXPECT_EQ(bw::subjective_probabilities(t), bw::subjective_probabilities(s));
  }
}

TEST(GameConstruction, RejectsEmptyAndZeroRows) {
  EXPECT_EQ(code_of([] { bw::Game({}, bw::Exponent::finite(1)); }), bw::ErrorCode::EmptyGame);
  EXPECT_EQ(code_of([] { (void)game(qs({1, 0}), qs({1, 2}), bw::Exponent::finite(1)); }),
            bw::ErrorCode::ZeroTotalMeasure);
  EXPECT_EQ(code_of([] { bw::ExactCoefficient(q(-1)); }), bw::ErrorCode::InvalidCoefficient);
  EXPECT_EQ(code_of([] { (void)bw::Exponent::finite(q(1, 2)); }), bw::ErrorCode::InvalidExponent);
}

TEST(Coefficient, ProductMultipliesMagnitudesAndAddsPhases) {
  const bw::ExactCoefficient a(q(2), q(3, 4)), b(q(3, 2), q(1, 2));
  const auto c = a * b;
  EXPECT_EQ(c.mag_p(), q(3));
  EXPECT_EQ(c.phase(), q(1, 4));
}

TEST(FloatRegression, DoubleEvaluationTracksExactValue) {
  bw::GameSampler sampler;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const bw::Game g = sampler.draw(bw::Exponent::finite(2), 3, i);
    std::vector<double> mags, rewards;
    for (const auto& row : g.rows()) {
      mags.push_back(bw::to_double(row.coefficient.mag_p()));
      rewards.push_back(bw::to_double(row.reward));
    }
    const double exact = bw::to_double(bw::value_p_born(g));
    const double approx = bw::value_p_born_double(mags, rewards);
    EXPECT_LE(std::abs(approx - exact), 1e-12 * std::max(1.0, std::abs(exact))) << i;
  }
}

TEST(Symmetry, DetectsIdenticalCoefficients) {
  EXPECT_TRUE(bw::is_symmetric(game(qs({2, 2, 2}), qs({1, 2, 3}), bw::Exponent::finite(1))));
  EXPECT_FALSE(bw::is_symmetric(game(qs({2, 3}), qs({1, 2}), bw::Exponent::finite(1))));
}
